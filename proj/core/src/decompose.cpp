#include "rieszkit/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rieszkit {

Measure BlockDecomposition::reconstruct() const {
  Measure out = base;
  for (const auto& b : blocks) out = out + b.part;
  return out;
}

Measure mask_block(const Measure& mu, const OrderChain& chain, std::size_t j) {
  require_same_dim(mu.dim(), chain.dim(), "mask_block");
  if (j < 1 || j > chain.length()) throw InvalidArgument("mask_block: stage out of range");
  const IntVec origin = zeros(mu.dim());
  return restrict_spectrum(mu, LatticeCoset(origin, chain.subgroup(j))) -
         restrict_spectrum(mu, LatticeCoset(origin, chain.lower(j)));
}

BlockDecomposition decompose(const Measure& mu, const OrderChain& chain) {
  require_same_dim(mu.dim(), chain.dim(), "decompose");
  BlockDecomposition dec;
  dec.base = restrict_spectrum(mu, LatticeCoset(zeros(mu.dim()), Lattice::zero(mu.dim())));
  for (std::size_t j = 1; j <= chain.length(); ++j) {
    dec.blocks.push_back({j, mask_block(mu, chain, j)});
  }
  return dec;
}

SignScanReport sign_scan(const BlockDecomposition& dec, const QuadratureOptions& options) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
    if (!dec.blocks[i].part.empty()) active.push_back(i);
  }
  if (active.size() > 20) throw InvalidArgument("sign_scan: more than 20 nonempty blocks");

  SignScanReport report;
  report.argmax_signs.assign(dec.blocks.size(), 1);
  const Measure mu = dec.reconstruct();
  const auto norm = total_variation(mu, options);
  report.input_norm = norm.value;
  report.quadrature_error = norm.error;
  report.converged = norm.converged;
  if (active.empty()) return report;

  std::vector<Measure> parts;
  for (auto i : active) parts.push_back(dec.blocks[i].part);
  const std::size_t count = std::size_t{1} << active.size();
  std::vector<std::vector<double>> combos(count, std::vector<double>(active.size()));
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t k = 0; k < active.size(); ++k) combos[p][k] = (p >> k) & 1 ? -1.0 : 1.0;
  }
  const auto tvs = total_variations(parts, combos, options);
  for (std::size_t p = 0; p < count; ++p) {
    std::vector<int> signs(dec.blocks.size(), 1);
    for (std::size_t k = 0; k < active.size(); ++k) signs[active[k]] = static_cast<int>(combos[p][k]);
    const double ratio = norm.value > 0 ? tvs[p].value / norm.value : 0.0;
    report.patterns.push_back(signs);
    report.ratios.push_back(ratio);
    report.quadrature_error = std::max(report.quadrature_error, tvs[p].error);
    report.converged = report.converged && tvs[p].converged;
    if (p == 0 || ratio > report.max_ratio) {
      report.max_ratio = ratio;
      report.argmax_signs = signs;
    }
  }
  return report;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes: return "yes";
    case Verdict::kNo: return "no";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

// Points xi + sum n_k b_k of a coset with max |n_k| == radius, in lexicographic order of n.
template <class F>
bool for_each_on_shell(const LatticeCoset& c, std::int64_t radius, F&& f) {
  const std::size_t r = c.lattice.rank();
  if (r == 0) return radius == 0 && f(c.offset);
  std::vector<std::int64_t> n(r, -radius);
  while (true) {
    std::int64_t norm = 0;
    for (auto x : n) norm = std::max<std::int64_t>(norm, std::llabs(x));
    if (norm == radius) {
      IntVec chi = c.offset;
      for (std::size_t k = 0; k < r; ++k) {
        if (n[k] == 0) continue;
        for (std::size_t i = 0; i < chi.size(); ++i) chi[i] += n[k] * c.lattice.basis()[k][i];
      }
      if (f(chi)) return true;
    }
    std::size_t k = r;
    while (k > 0) {
      --k;
      if (++n[k] <= radius) break;
      n[k] = -radius;
      if (k == 0) return false;
    }
  }
}

}  // namespace

AnalyticityReport is_analytic(const Measure& mu, const OrderChain& chain,
                              std::int64_t search_radius) {
  require_same_dim(mu.dim(), chain.dim(), "is_analytic");
  AnalyticityReport report;
  for (const auto& c : support(mu)) {
    const CosetSign s = classify_coset(chain, c);
    if (s == CosetSign::kMixed || s == CosetSign::kInsideMinusP) report.offending.push_back(c);
  }
  if (report.offending.empty()) return report;

  for (std::int64_t radius = 0; radius <= search_radius; ++radius) {
    for (const auto& c : report.offending) {
      const bool found = for_each_on_shell(c, radius, [&](const IntVec& chi) {
        if (in_P(chain, chi)) return false;
        const Complex v = fourier_at(mu, chi);
        if (std::abs(v) <= kCompareTolerance) return false;
        report.witness = chi;
        report.witness_value = v;
        return true;
      });
      if (found) {
        report.verdict = Verdict::kNo;
        return report;
      }
    }
  }
  report.verdict = Verdict::kUnknown;
  return report;
}

IdempotentReport check_idempotent(const Measure& mu, const OrderChain& chain, std::size_t j) {
  require_same_dim(mu.dim(), chain.dim(), "check_idempotent");
  const Lattice& sub = chain.subgroup(j);
  // The spectral side goes through coset restriction, the measure side through
  // convolution, so the two halves of each equivalence are computed independently.
  const Measure restricted = restrict_spectrum(mu, LatticeCoset(zeros(mu.dim()), sub));
  const Measure projected = convolve(subgroup_haar(sub), mu);
  IdempotentReport r;
  r.spectrum_inside = equivalent(restricted, mu);
  r.fixed = equivalent(projected, mu);
  r.spectrum_disjoint = restricted.empty();
  r.annihilated = projected.empty();
  return r;
}

bool check_invariance(const Measure& mu, const OrderChain& chain, std::size_t j, const RatVec& y) {
  require_same_dim(mu.dim(), chain.dim(), "check_invariance");
  if (!annihilator(chain.subgroup(j)).contains(y)) {
    throw InvalidArgument("check_invariance: y is not on the annihilator of C_j");
  }
  return equivalent(translate(mu, y), mu);
}

Complex weak_analyticity_residual(const Measure& mu, const OrderChain& chain, const TrigPoly& g,
                                  const TrigPoly& h) {
  require_same_dim(mu.dim(), chain.dim(), "weak_analyticity_residual");
  require_same_dim(g.dim(), mu.dim(), "weak_analyticity_residual g");
  require_same_dim(h.dim(), mu.dim(), "weak_analyticity_residual h");
  for (const auto& [chi, c] : g.coeffs()) {
    const IntVec v = from_int64(chi);
    if (is_zero(v) || !in_P(chain, v)) {
      throw InvalidArgument("g is not in H^1_0: its spectrum must lie in P \\ {0}");
    }
  }
  Complex s = 0.0;
  for (const auto& [chi, c] : g.coeffs()) {
    const Complex hc = h.coeff(chi);
    if (hc == Complex(0.0)) continue;
    s += c * hc * fourier_at(mu, -from_int64(chi));
  }
  return s;
}

bool RieszReport::passed() const {
  return input == Verdict::kYes && absolutely_continuous == Verdict::kYes &&
         singular == Verdict::kYes && commutation_failures == 0;
}

RieszReport fm_riesz_check(const Measure& mu, const OrderChain& chain, std::uint64_t seed,
                           std::size_t translations) {
  RieszReport report;
  report.input = is_analytic(mu, chain).verdict;
  const auto parts = lebesgue_decompose(mu);
  report.absolutely_continuous = is_analytic(parts.absolutely_continuous, chain).verdict;
  report.singular = is_analytic(parts.singular, chain).verdict;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> den(1, 64);
  for (std::size_t i = 0; i < translations; ++i) {
    RatVec t(mu.dim());
    for (auto& x : t) {
      const std::int64_t q = den(rng);
      std::uniform_int_distribution<std::int64_t> num(0, q - 1);
      x = Rational(num(rng), q);
    }
    const Measure lhs = lebesgue_decompose(translate(mu, t)).singular;
    const Measure rhs = translate(parts.singular, t);
    ++report.translations_checked;
    if (!equivalent(lhs, rhs)) ++report.commutation_failures;
  }
  return report;
}

}  // namespace rieszkit
