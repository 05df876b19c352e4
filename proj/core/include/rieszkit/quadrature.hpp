#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rieszkit/numeric.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit {

// A finite Fourier series on T^m in flat form (the evaluation-side twin of TrigPoly).
struct TorusSeries {
  std::size_t dim = 0;
  std::vector<Frequency> freqs;
  std::vector<Complex> coeffs;

  static TorusSeries from(const TrigPoly& p);
  std::int64_t degree() const;
};

struct QuadratureOptions {
  double rel_tol = 1e-6;
  // Budget on the total number of grid nodes N^m of the finest grid.
  std::size_t max_points = std::size_t{1} << 22;
  std::size_t min_grid = 8;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // |I(N) - I(N/2)| at the last refinement
  bool converged = true;
  std::size_t grid = 0;  // nodes per dimension of the finest grid used
};

// Smallest power of two >= max(min_grid, 2 * degree + 1).
std::size_t initial_grid(std::int64_t degree, std::size_t min_grid);
// Largest power of two N with N^m <= max_points (1 when m == 0).
std::size_t max_grid(std::size_t m, std::size_t max_points);

/// Visits every node (k + shift) / N, k in {0..N-1}^m, of the uniform grid on
/// T^m, passing the values of all `pieces` at that node. Nodes are visited in
/// lexicographic order of k.
template <class Visitor>
void sample_grid(std::size_t m, std::size_t n, double shift, std::span<const TorusSeries> pieces,
                 Visitor&& visit);

// For each weight vector w in `combos`: integral over T^m of |sum_j w_j p_j|,
// refined by grid doubling until every combination's relative change is below
// options.rel_tol or the node budget is exhausted.
std::vector<QuadratureResult> abs_integrals(std::size_t m, std::span<const TorusSeries> pieces,
                                            const std::vector<std::vector<double>>& combos,
                                            const QuadratureOptions& options);

QuadratureResult abs_integral(const TorusSeries& piece, const QuadratureOptions& options);

// --- implementation --------------------------------------------------------

namespace detail {

struct FlatTerm {
  std::size_t piece;
  const Frequency* freq;
  Complex coeff;
};

std::vector<Complex> unit_roots(std::size_t n);
std::size_t residue(std::int64_t f, std::size_t n);

}  // namespace detail

template <class Visitor>
void sample_grid(std::size_t m, std::size_t n, double shift, std::span<const TorusSeries> pieces,
                 Visitor&& visit) {
  std::vector<Complex> values(pieces.size());
  std::vector<detail::FlatTerm> terms;
  for (std::size_t p = 0; p < pieces.size(); ++p) {
    require_same_dim(pieces[p].dim, m, "sample_grid");
    for (std::size_t t = 0; t < pieces[p].freqs.size(); ++t) {
      Complex c = pieces[p].coeffs[t];
      if (shift != 0.0) {
        double s = 0.0;
        for (auto f : pieces[p].freqs[t]) s += static_cast<double>(f);
        c *= std::polar(1.0, kTwoPi * s * shift / static_cast<double>(n));
      }
      terms.push_back({p, &pieces[p].freqs[t], c});
    }
  }
  if (m == 0) {
    for (const auto& t : terms) values[t.piece] += t.coeff;
    visit(std::span<const Complex>(values));
    return;
  }

  const auto roots = detail::unit_roots(n);
  const std::size_t nt = terms.size();
  // residues[level][t] = freq_t[level] mod n
  std::vector<std::vector<std::size_t>> residues(m, std::vector<std::size_t>(nt));
  for (std::size_t l = 0; l < m; ++l) {
    for (std::size_t t = 0; t < nt; ++t) residues[l][t] = detail::residue((*terms[t].freq)[l], n);
  }
  // partial[l][t]: term coefficient times the phases of coordinates < l.
  std::vector<std::vector<Complex>> partial(m + 1, std::vector<Complex>(nt));
  for (std::size_t t = 0; t < nt; ++t) partial[0][t] = terms[t].coeff;
  std::vector<std::size_t> k(m, 0);

  auto refresh = [&](std::size_t from) {
    for (std::size_t l = from; l < m; ++l) {
      for (std::size_t t = 0; t < nt; ++t) {
        partial[l + 1][t] = partial[l][t] * roots[(residues[l][t] * k[l]) % n];
      }
    }
  };
  refresh(0);
  while (true) {
    std::fill(values.begin(), values.end(), Complex(0.0));
    const auto& leaf = partial[m];
    for (std::size_t t = 0; t < nt; ++t) values[terms[t].piece] += leaf[t];
    visit(std::span<const Complex>(values));

    std::size_t l = m;
    while (l > 0) {
      --l;
      if (++k[l] < n) break;
      k[l] = 0;
      if (l == 0) return;
    }
    refresh(l);
  }
}

}  // namespace rieszkit
