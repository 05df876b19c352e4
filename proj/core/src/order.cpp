#include "rieszkit/order.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <tuple>

namespace rieszkit {

LinearFunctional::LinearFunctional(RatVec weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidArgument("functional must have dimension >= 1");
  bool nonzero = false;
  for (const auto& w : weights_) nonzero = nonzero || w != 0;
  if (!nonzero) throw InvalidArgument("functional weights must not all vanish");
}

IntVec LinearFunctional::integer_weights() const {
  Integer l = 1;
  for (const auto& w : weights_) l = boost::multiprecision::lcm(l, denominator(w));
  IntVec out(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    out[i] = numerator(weights_[i]) * (l / denominator(weights_[i]));
  }
  Integer g = 0;
  for (const auto& x : out) g = boost::multiprecision::gcd(g, x);
  for (auto& x : out) x /= g;
  return out;
}

const LinearFunctional& OrderChain::functional(std::size_t j) const {
  if (j < 1 || j > stages_.size()) throw InvalidArgument("chain stage out of range");
  return stages_[j - 1].functional;
}

const Lattice& OrderChain::subgroup(std::size_t j) const {
  if (j < 1 || j > stages_.size() + 1) throw InvalidArgument("chain stage out of range");
  return j == stages_.size() + 1 ? terminal_ : stages_[j - 1].subgroup;
}

OrderChain order_from_functionals(std::size_t dim, const std::vector<LinearFunctional>& ws) {
  if (dim == 0) throw InvalidArgument("order dimension must be >= 1");
  if (ws.empty()) throw InvalidArgument("order needs at least one functional");
  OrderChain chain;
  chain.dim_ = dim;
  Lattice current = Lattice::full(dim);
  for (std::size_t j = 0; j < ws.size(); ++j) {
    require_same_dim(ws[j].dim(), dim, "order functional");
    Lattice next = intersect(current, kernel(dim, {ws[j].integer_weights()}));
    if (next == current) {
      throw InvalidArgument("functional " + std::to_string(j + 1) +
                            " vanishes on its subgroup; chain must strictly decrease");
    }
    chain.stages_.push_back({current, ws[j]});
    current = std::move(next);
  }
  if (current.rank() != 0) {
    throw InvalidArgument("kernels of the functionals do not reach {0}; order is not total");
  }
  chain.terminal_ = std::move(current);
  return chain;
}

OrderChain lexicographic_order(std::size_t dim) {
  std::vector<LinearFunctional> ws;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec w = rational_zeros(dim);
    w[i] = 1;
    ws.emplace_back(std::move(w));
  }
  return order_from_functionals(dim, ws);
}

bool in_P(const OrderChain& chain, const IntVec& chi) {
  require_same_dim(chi.size(), chain.dim(), "in_P");
  for (const auto& stage : chain.stages()) {
    const Rational v = stage.functional(chi);
    if (v > 0) return true;
    if (v < 0) return false;
  }
  return true;
}

Block block_membership(const OrderChain& chain, std::size_t j, const IntVec& chi) {
  require_same_dim(chi.size(), chain.dim(), "block_membership");
  if (j < 1 || j > chain.length()) throw InvalidArgument("chain stage out of range");
  if (!chain.subgroup(j).contains(chi)) return Block::kOutside;
  const Rational v = chain.functional(j)(chi);
  if (v > 0) return Block::kPlus;
  if (v < 0) return Block::kMinus;
  return Block::kLower;
}

CosetSign classify_coset(const OrderChain& chain, const LatticeCoset& coset) {
  require_same_dim(coset.dim(), chain.dim(), "classify_coset");
  for (const auto& stage : chain.stages()) {
    for (const auto& b : coset.lattice.basis()) {
      if (stage.functional(b) != 0) return CosetSign::kMixed;
    }
    const Rational v = stage.functional(coset.offset);
    if (v > 0) return CosetSign::kInsideP;
    if (v < 0) return CosetSign::kInsideMinusP;
  }
  return CosetSign::kZero;
}

std::string to_string(Block b) {
  switch (b) {
    case Block::kPlus: return "S_plus";
    case Block::kMinus: return "S_minus";
    case Block::kLower: return "D";
    case Block::kOutside: return "outside";
  }
  return "?";
}

std::string to_string(CosetSign s) {
  switch (s) {
    case CosetSign::kInsideP: return "inside_P";
    case CosetSign::kInsideMinusP: return "inside_minus_P";
    case CosetSign::kMixed: return "mixed";
    case CosetSign::kZero: return "zero";
  }
  return "?";
}

namespace {

class Window {
 public:
  Window(std::size_t dim, std::size_t radius)
      : dim_(dim), radius_(static_cast<std::int64_t>(radius)), side_(2 * radius_ + 1) {
    size_ = 1;
    for (std::size_t i = 0; i < dim; ++i) size_ *= static_cast<std::size_t>(side_);
  }

  std::size_t size() const { return size_; }

  std::vector<std::int64_t> point(std::size_t index) const {
    std::vector<std::int64_t> p(dim_);
    for (std::size_t i = dim_; i-- > 0;) {
      p[i] = static_cast<std::int64_t>(index % static_cast<std::size_t>(side_)) - radius_;
      index /= static_cast<std::size_t>(side_);
    }
    return p;
  }

  // Index of p, or size() when p leaves the window.
  std::size_t index(const std::vector<std::int64_t>& p) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (p[i] < -radius_ || p[i] > radius_) return size_;
      idx = idx * static_cast<std::size_t>(side_) + static_cast<std::size_t>(p[i] + radius_);
    }
    return idx;
  }

 private:
  std::size_t dim_;
  std::int64_t radius_;
  std::int64_t side_;
  std::size_t size_;
};

std::int64_t l1(const std::vector<std::int64_t>& p) {
  std::int64_t s = 0;
  for (auto x : p) s += std::llabs(x);
  return s;
}

}  // namespace

AxiomReport validate_axioms(std::size_t dim, const PositivityPredicate& in_positive,
                            std::size_t radius) {
  if (radius < 1) throw InvalidArgument("validate_axioms: radius must be >= 1");
  const Window window(dim, radius);
  const std::size_t n = window.size();
  std::vector<std::vector<std::int64_t>> points(n);
  std::vector<std::int64_t> norms(n);
  std::vector<char> positive(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i] = window.point(i);
    norms[i] = l1(points[i]);
    positive[i] = in_positive(from_int64(points[i])) ? 1 : 0;
  }
  auto negate = [&](std::size_t i) {
    auto p = points[i];
    for (auto& x : p) x = -x;
    return window.index(p);
  };

  AxiomReport report;
  report.radius = radius;
  report.points_checked = n;

  std::optional<std::size_t> total_bad, anti_bad;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t m = negate(i);
    if (!positive[i] && !positive[m]) {
      if (!total_bad || norms[i] < norms[*total_bad]) total_bad = i;
    }
    if (positive[i] && positive[m] && norms[i] != 0) {
      if (!anti_bad || norms[i] < norms[*anti_bad]) anti_bad = i;
    }
  }

  using Key = std::tuple<std::int64_t, std::size_t, std::size_t>;
  std::optional<Key> closure_bad;
  std::vector<std::int64_t> sum(dim);
  for (std::size_t a = 0; a < n; ++a) {
    if (!positive[a]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!positive[b]) continue;
      const std::int64_t size = norms[a] + norms[b];
      if (closure_bad && std::get<0>(*closure_bad) <= size) continue;
      for (std::size_t k = 0; k < dim; ++k) sum[k] = points[a][k] + points[b][k];
      const std::size_t s = window.index(sum);
      if (s == n || positive[s]) continue;
      closure_bad = Key{size, a, b};
    }
  }

  if (closure_bad) {
    const auto [size, a, b] = *closure_bad;
    IntVec va = from_int64(points[a]);
    IntVec vb = from_int64(points[b]);
    report.violations.push_back({"closure", {va, vb, va + vb}});
  }
  if (total_bad) report.violations.push_back({"totality", {from_int64(points[*total_bad])}});
  if (anti_bad) report.violations.push_back({"antisymmetry", {from_int64(points[*anti_bad])}});
  return report;
}

AxiomReport validate_axioms(const OrderChain& chain, std::size_t radius) {
  return validate_axioms(
      chain.dim(), [&](const IntVec& chi) { return in_P(chain, chi); }, radius);
}

}  // namespace rieszkit
