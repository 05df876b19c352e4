#include "rieszkit/hardy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace rieszkit {

namespace {

std::size_t node_count(std::size_t dim, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < dim; ++i) total *= n;
  return total;
}

std::vector<double> node_point(std::size_t index, std::size_t dim, std::size_t n) {
  std::vector<double> x(dim);
  for (std::size_t i = dim; i > 0; --i) {
    x[i - 1] = (static_cast<double>(index % n) + 0.5) / static_cast<double>(n);
    index /= n;
  }
  return x;
}

void require_hardy(const TrigPoly& f, const OrderChain& chain, const char* what) {
  require_same_dim(f.dim(), chain.dim(), what);
  if (!in_hardy_space(f, chain)) {
    throw InvalidArgument(std::string(what) + ": f has a frequency outside P");
  }
}

void require_exponent(double p) {
  if (p != 0.5 && p != 1.0 && p != 2.0) throw InvalidArgument("p must be 1/2, 1 or 2");
}

double power(double r, double p) {
  if (p == 1.0) return r;
  if (p == 2.0) return r * r;
  return std::sqrt(r);
}

std::size_t resolve_grid(const GridOptions& options, std::size_t dim) {
  return options.n == 0 ? default_grid(dim) : options.n;
}

// Nonempty blocks in stage order, with their stage index (0-based).
struct ActiveBlocks {
  std::vector<std::size_t> stage;
  std::vector<TrigPoly> poly;
};

ActiveBlocks active_blocks(const TrigPoly& f, const OrderChain& chain, std::size_t limit) {
  ActiveBlocks a;
  const auto blocks = martingale_blocks(f, chain);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) continue;
    a.stage.push_back(i);
    a.poly.push_back(blocks[i]);
  }
  if (a.stage.size() > limit) {
    throw InvalidArgument("more than " + std::to_string(limit) + " nonempty blocks");
  }
  return a;
}

}  // namespace

std::size_t default_grid(std::size_t dim) {
  switch (dim) {
    case 0: return 1;
    case 1: return 4096;
    case 2: return 512;
    case 3: return 64;
    default: return 16;
  }
}

std::vector<Complex> sample(const TrigPoly& f, std::size_t n) {
  const TorusSeries s = TorusSeries::from(f);
  std::vector<Complex> out;
  out.reserve(node_count(f.dim(), n));
  sample_grid(f.dim(), n, 0.5, std::span<const TorusSeries>(&s, 1),
              [&](std::span<const Complex> v) { out.push_back(v[0]); });
  return out;
}

bool in_hardy_space(const TrigPoly& f, const OrderChain& chain) {
  return std::all_of(f.coeffs().begin(), f.coeffs().end(),
                     [&](const auto& kv) { return in_P(chain, from_int64(kv.first)); });
}

TrigPoly cond_exp(const TrigPoly& f, const Lattice& lattice) {
  require_same_dim(f.dim(), lattice.dim(), "cond_exp");
  return f.filter([&](const Frequency& chi) { return lattice.contains(from_int64(chi)); });
}

std::vector<TrigPoly> martingale_blocks(const TrigPoly& f, const OrderChain& chain) {
  require_same_dim(f.dim(), chain.dim(), "martingale_blocks");
  std::vector<TrigPoly> out;
  for (std::size_t j = 1; j <= chain.length(); ++j) {
    out.push_back(cond_exp(f, chain.subgroup(j)) - cond_exp(f, chain.lower(j)));
  }
  return out;
}

QuadratureResult power_integral(const TorusSeries& g, double p, const QuadratureOptions& options) {
  const std::size_t m = g.dim;
  auto mean = [&](std::size_t n, double shift) {
    double s = 0.0;
    sample_grid(m, n, shift, std::span<const TorusSeries>(&g, 1),
                [&](std::span<const Complex> v) { s += power(std::abs(v[0]), p); });
    return s / static_cast<double>(node_count(m, n));
  };
  if (m == 0 || g.freqs.size() <= 1) return {mean(1, 0.0), 0.0, true, 1};

  double scale = 0.0;
  for (const auto& c : g.coeffs) scale += std::abs(c);
  const std::size_t n_max = max_grid(m, options.max_points);
  std::size_t n = std::min(initial_grid(g.degree(), options.min_grid), n_max);
  QuadratureResult r{mean(n, 0.0), 0.0, false, n};
  while (n < n_max) {
    // On a circle the doubled grid is the old one plus its half-step shift.
    const double cur = m == 1 ? 0.5 * (r.value + mean(n, 0.5)) : mean(2 * n, 0.0);
    n *= 2;
    const double err = std::abs(cur - r.value);
    r = {cur, err, err <= options.rel_tol * std::max(cur, 1e-12 * power(scale, p)), n};
    if (r.converged) break;
  }
  return r;
}

TorusSeries restrict_to_subtorus(const TrigPoly& f, const std::vector<double>& x,
                                 const Subtorus& h) {
  require_same_dim(x.size(), f.dim(), "restrict_to_subtorus");
  require_same_dim(h.ambient_dim(), f.dim(), "restrict_to_subtorus");
  const auto& dirs = h.directions();
  std::vector<std::vector<std::int64_t>> v(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) v[k] = to_int64(dirs[k]);

  TrigPoly g(h.dim());
  for (const auto& [chi, c] : f.coeffs()) {
    Frequency nu(h.dim());
    for (std::size_t k = 0; k < v.size(); ++k) {
      for (std::size_t i = 0; i < chi.size(); ++i) nu[k] += chi[i] * v[k][i];
    }
    double phase = 0.0;
    for (std::size_t i = 0; i < chi.size(); ++i) phase += static_cast<double>(chi[i]) * x[i];
    g.add(nu, c * std::polar(1.0, kTwoPi * (phase - std::floor(phase))));
  }
  return TorusSeries::from(g);
}

GridOrbits grid_orbits(std::size_t dim, std::size_t n, const Subtorus& h) {
  const std::size_t total = node_count(dim, n);
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  GridOrbits o;
  o.label.assign(total, kUnset);

  std::vector<std::vector<std::size_t>> steps;
  for (const auto& d : h.directions()) {
    std::vector<std::size_t> s(dim);
    for (std::size_t i = 0; i < dim; ++i) s[i] = detail::residue(to_int64(d[i]), n);
    steps.push_back(std::move(s));
  }
  auto shifted = [&](std::size_t index, const std::vector<std::size_t>& s) {
    std::size_t out = 0, stride = 1;
    for (std::size_t i = dim; i > 0; --i) {
      const std::size_t k = index % n;
      index /= n;
      out += ((k + s[i - 1]) % n) * stride;
      stride *= n;
    }
    return out;
  };

  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < total; ++start) {
    if (o.label[start] != kUnset) continue;
    const std::size_t id = o.representative.size();
    o.representative.push_back(start);
    o.label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (const auto& s : steps) {
        const std::size_t next = shifted(cur, s);
        if (o.label[next] == kUnset) {
          o.label[next] = id;
          stack.push_back(next);
        }
      }
    }
  }
  return o;
}

OrbitAverages subtorus_averages(const TrigPoly& f, const Lattice& lattice, double p, std::size_t n,
                                const QuadratureOptions& options) {
  require_same_dim(f.dim(), lattice.dim(), "subtorus_averages");
  const Subtorus h = annihilator(lattice);
  OrbitAverages out;
  out.orbits = grid_orbits(f.dim(), n, h);
  if (h.dim() == 0) {
    // Trivial subtorus: the average is |f|^p itself.
    const auto values = sample(f, n);
    out.values.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out.values[i] = power(std::abs(values[i]), p);
    return out;
  }
  out.values.resize(out.orbits.representative.size());
  for (std::size_t o = 0; o < out.values.size(); ++o) {
    const auto x = node_point(out.orbits.representative[o], f.dim(), n);
    const auto r = power_integral(restrict_to_subtorus(f, x, h), p, options);
    out.values[o] = r.value;
    out.quadrature_error = std::max(out.quadrature_error, r.error);
    out.converged = out.converged && r.converged;
  }
  return out;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::kPass: return "pass";
    case Outcome::kFail: return "fail";
    case Outcome::kInconclusive: return "inconclusive";
  }
  return "?";
}

JensenReport jensen_check(const TrigPoly& f, const OrderChain& chain,
                          const QuadratureOptions& options) {
  require_hardy(f, chain, "jensen_check");
  if (f.empty()) throw InvalidArgument("jensen_check: f is zero");
  const std::size_t d = f.dim();
  JensenReport r;
  r.lhs = std::abs(f.coeff(Frequency(d, 0)));

  const TorusSeries s = TorusSeries::from(f);
  auto level = [&](std::size_t n, std::size_t& clipped) {
    double sum = 0.0;
    clipped = 0;
    sample_grid(d, n, 0.5, std::span<const TorusSeries>(&s, 1), [&](std::span<const Complex> v) {
      const double a = std::abs(v[0]);
      const double l = a > 0.0 ? std::log(a) : kLogClip;
      if (l <= kLogClip) {
        ++clipped;
        sum += kLogClip;
      } else {
        sum += l;
      }
    });
    return sum / static_cast<double>(node_count(d, n));
  };

  std::size_t clipped = 0;
  if (s.freqs.size() <= 1) {
    r.log_integral = level(1, clipped);
    r.grid = 1;
  } else {
    const std::size_t n_max = max_grid(d, options.max_points);
    std::size_t n = std::min(initial_grid(s.degree(), options.min_grid), n_max);
    r.log_integral = level(n, clipped);
    r.grid = n;
    r.converged = false;
    while (n < n_max) {
      n *= 2;
      const double cur = level(n, clipped);
      r.quadrature_error = std::abs(cur - r.log_integral);
      r.log_integral = cur;
      r.grid = n;
      if (r.quadrature_error <= kLogIntegralTolerance) {
        r.converged = true;
        break;
      }
    }
  }
  r.clipped_fraction =
      static_cast<double>(clipped) / static_cast<double>(node_count(d, r.grid));
  r.rhs = std::exp(r.log_integral);
  if (r.clipped_fraction > kClippedFractionLimit) {
    r.outcome = Outcome::kInconclusive;
  } else if (r.lhs <= r.rhs + kJensenTolerance * std::max(1.0, r.rhs)) {
    r.outcome = Outcome::kPass;
  } else {
    r.outcome = Outcome::kFail;
  }
  return r;
}

ConditionalPowerReport conditional_power_check(const TrigPoly& f, const OrderChain& chain, std::size_t j, double p,
                            const GridOptions& options) {
  require_hardy(f, chain, "conditional_power_check");
  require_exponent(p);
  const Lattice& sub = chain.subgroup(j);
  const std::size_t n = resolve_grid(options, f.dim());

  ConditionalPowerReport r;
  r.p = p;
  r.stage = j;
  r.grid = n;
  const auto lhs = sample(cond_exp(f, sub), n);
  const auto rhs = subtorus_averages(f, sub, p, n, options.quadrature);
  r.quadrature_error = rhs.quadrature_error;
  r.converged = rhs.converged;
  r.max_excess = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double excess = power(std::abs(lhs[i]), p) - rhs.values[rhs.orbits.label[i]];
    r.max_excess = std::max(r.max_excess, excess);
    if (excess > kConditionalPowerSlack) ++r.violations;
  }
  return r;
}

DoobReport doob_check(const TrigPoly& f, const OrderChain& chain, const GridOptions& options) {
  require_hardy(f, chain, "doob_check");
  if (f.empty()) throw InvalidArgument("doob_check: f is zero");
  const std::size_t n = resolve_grid(options, f.dim());
  DoobReport r;
  r.grid = n;
  std::vector<double> best(node_count(f.dim(), n), 0.0);
  for (std::size_t j = 1; j <= chain.length() + 1; ++j) {
    const auto avg = subtorus_averages(f, chain.subgroup(j), 0.5, n, options.quadrature);
    r.quadrature_error = std::max(r.quadrature_error, avg.quadrature_error);
    r.converged = r.converged && avg.converged;
    for (std::size_t i = 0; i < best.size(); ++i) {
      best[i] = std::max(best[i], avg.values[avg.orbits.label[i]]);
    }
  }
  double sum = 0.0;
  for (double b : best) sum += b * b;
  r.lhs = sum / static_cast<double>(best.size());
  const auto norm = abs_integral(TorusSeries::from(f), options.quadrature);
  r.norm = norm.value;
  r.rhs = 4.0 * norm.value;
  r.quadrature_error = std::max(r.quadrature_error, norm.error);
  r.converged = r.converged && norm.converged;
  return r;
}

PatternScan burkholder_scan(const TrigPoly& f, const OrderChain& chain, double p,
                            const GridOptions& options) {
  require_same_dim(f.dim(), chain.dim(), "burkholder_scan");
  require_exponent(p);
  const auto active = active_blocks(f, chain, 12);
  const std::size_t n = resolve_grid(options, f.dim());
  PatternScan scan;
  scan.grid = n;
  scan.argmax.assign(chain.length(), 0);
  for (auto s : active.stage) scan.argmax[s] = 1;
  const std::size_t k = active.stage.size();
  if (k == 0) return scan;

  std::vector<std::vector<Complex>> values;
  for (const auto& b : active.poly) values.push_back(sample(b, n));
  const std::size_t nodes = values[0].size();

  // Mean over the grid of (max_n |S_n|)^p, summing from the deepest stage up.
  auto maximal_mean = [&](std::size_t pattern) {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes; ++i) {
      Complex s = 0.0;
      double best = 0.0;
      for (std::size_t b = k; b > 0; --b) {
        const Complex v = values[b - 1][i];
        s += (pattern >> (b - 1)) & 1 ? -v : v;
        best = std::max(best, std::abs(s));
      }
      sum += power(best, p);
    }
    return sum / static_cast<double>(nodes);
  };

  const std::size_t count = std::size_t{1} << k;
  const double base = maximal_mean(0);
  for (std::size_t pattern = 0; pattern < count; ++pattern) {
    std::vector<int> signs(chain.length(), 0);
    for (std::size_t b = 0; b < k; ++b) signs[active.stage[b]] = (pattern >> b) & 1 ? -1 : 1;
    const double m = pattern == 0 ? base : maximal_mean(pattern);
    const double ratio = base > 0.0 ? std::pow(m / base, 1.0 / p) : 0.0;
    scan.patterns.push_back(signs);
    scan.ratios.push_back(ratio);
    if (pattern == 0 || ratio > scan.max_ratio) {
      scan.max_ratio = ratio;
      scan.argmax = signs;
    }
  }
  return scan;
}

PatternScan h1_unconditionality_scan(const TrigPoly& f, const OrderChain& chain,
                                     const QuadratureOptions& options) {
  require_hardy(f, chain, "h1_unconditionality_scan");
  const auto active = active_blocks(f, chain, 12);
  const std::size_t k = active.stage.size();
  PatternScan scan;
  scan.argmax.assign(chain.length(), 0);

  const auto norm = abs_integral(TorusSeries::from(f), options);
  scan.quadrature_error = norm.error;
  scan.converged = norm.converged;
  scan.grid = norm.grid;
  if (k == 0) return scan;

  std::vector<TorusSeries> pieces;
  for (const auto& b : active.poly) pieces.push_back(TorusSeries::from(b));
  std::size_t count = 1;
  for (std::size_t b = 0; b < k; ++b) count *= 3;
  // Ternary digits 0, 1, 2 of block b (stage order) mean eps = 0, +1, -1.
  std::vector<std::vector<double>> combos(count, std::vector<double>(k));
  for (std::size_t c = 0; c < count; ++c) {
    std::size_t code = c;
    for (std::size_t b = 0; b < k; ++b, code /= 3) {
      combos[c][b] = code % 3 == 0 ? 0.0 : code % 3 == 1 ? 1.0 : -1.0;
    }
  }
  const auto tvs = abs_integrals(f.dim(), pieces, combos, options);
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<int> signs(chain.length(), 0);
    for (std::size_t b = 0; b < k; ++b) signs[active.stage[b]] = static_cast<int>(combos[c][b]);
    const double ratio = norm.value > 0.0 ? tvs[c].value / norm.value : 0.0;
    scan.patterns.push_back(signs);
    scan.ratios.push_back(ratio);
    scan.quadrature_error = std::max(scan.quadrature_error, tvs[c].error);
    scan.converged = scan.converged && tvs[c].converged;
    scan.grid = std::max(scan.grid, tvs[c].grid);
    if (c == 0 || ratio > scan.max_ratio) {
      scan.max_ratio = ratio;
      scan.argmax = signs;
    }
  }
  return scan;
}

}  // namespace rieszkit
