#include "rieszkit/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace rieszkit {

TorusSeries TorusSeries::from(const TrigPoly& p) {
  TorusSeries s;
  s.dim = p.dim();
  for (const auto& [chi, c] : p.coeffs()) {
    s.freqs.push_back(chi);
    s.coeffs.push_back(c);
  }
  return s;
}

std::int64_t TorusSeries::degree() const {
  std::int64_t d = 0;
  for (const auto& f : freqs) {
    for (auto x : f) d = std::max<std::int64_t>(d, std::llabs(x));
  }
  return d;
}

std::size_t initial_grid(std::int64_t degree, std::size_t min_grid) {
  const auto need = std::max<std::size_t>(min_grid, static_cast<std::size_t>(2 * degree + 1));
  std::size_t n = 1;
  while (n < need) n *= 2;
  return n;
}

std::size_t max_grid(std::size_t m, std::size_t max_points) {
  if (m == 0) return 1;
  std::size_t n = 1;
  while (true) {
    const std::size_t next = n * 2;
    double total = 1.0;
    for (std::size_t i = 0; i < m; ++i) total *= static_cast<double>(next);
    if (total > static_cast<double>(max_points)) return n;
    n = next;
  }
}

namespace detail {

std::vector<Complex> unit_roots(std::size_t n) {
  std::vector<Complex> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return r;
}

std::size_t residue(std::int64_t f, std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return static_cast<std::size_t>(((f % nn) + nn) % nn);
}

}  // namespace detail

namespace {

std::vector<double> grid_means(std::size_t m, std::size_t n, std::span<const TorusSeries> pieces,
                               const std::vector<std::vector<double>>& combos) {
  std::vector<double> sums(combos.size(), 0.0);
  sample_grid(m, n, 0.0, pieces, [&](std::span<const Complex> v) {
    for (std::size_t c = 0; c < combos.size(); ++c) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (combos[c][j] != 0.0) s += combos[c][j] * v[j];
      }
      sums[c] += std::abs(s);
    }
  });
  double nodes = 1.0;
  for (std::size_t i = 0; i < m; ++i) nodes *= static_cast<double>(n);
  for (auto& s : sums) s /= nodes;
  return sums;
}

}  // namespace

std::vector<QuadratureResult> abs_integrals(std::size_t m, std::span<const TorusSeries> pieces,
                                            const std::vector<std::vector<double>>& combos,
                                            const QuadratureOptions& options) {
  for (const auto& c : combos) require_same_dim(c.size(), pieces.size(), "abs_integrals");
  std::vector<QuadratureResult> out(combos.size());
  if (m == 0) {
    const auto v = grid_means(0, 1, pieces, combos);
    for (std::size_t c = 0; c < combos.size(); ++c) out[c] = {v[c], 0.0, true, 1};
    return out;
  }

  std::int64_t degree = 0;
  double scale = 0.0;
  std::size_t terms = 0;
  for (const auto& p : pieces) {
    degree = std::max(degree, p.degree());
    terms += p.freqs.size();
    for (const auto& c : p.coeffs) scale += std::abs(c);
  }
  // A single exponential has constant modulus: any grid is exact.
  if (terms <= 1) {
    const auto v = grid_means(m, 1, pieces, combos);
    for (std::size_t c = 0; c < combos.size(); ++c) out[c] = {v[c], 0.0, true, 1};
    return out;
  }

  const std::size_t n_max = max_grid(m, options.max_points);
  std::size_t n = std::min(initial_grid(degree, options.min_grid), n_max);
  auto prev = grid_means(m, n, pieces, combos);
  std::vector<char> done(combos.size(), 0);
  for (std::size_t c = 0; c < combos.size(); ++c) {
    out[c] = {prev[c], std::abs(prev[c]), false, n};
  }
  while (n < n_max) {
    n *= 2;
    const auto cur = grid_means(m, n, pieces, combos);
    bool all = true;
    for (std::size_t c = 0; c < combos.size(); ++c) {
      const double err = std::abs(cur[c] - prev[c]);
      const double ref = std::max(cur[c], 1e-12 * scale);
      if (!done[c]) {
        out[c] = {cur[c], err, err <= options.rel_tol * ref, n};
        if (out[c].converged) done[c] = 1;
      }
      all = all && done[c];
    }
    prev = cur;
    if (all) break;
  }
  return out;
}

QuadratureResult abs_integral(const TorusSeries& piece, const QuadratureOptions& options) {
  return abs_integrals(piece.dim, std::span<const TorusSeries>(&piece, 1), {{1.0}}, options)[0];
}

}  // namespace rieszkit
