#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rieszkit/lattice.hpp"
#include "rieszkit/order.hpp"
#include "rieszkit/quadrature.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit {

/// Pointwise checks run on the midpoint grid (k + 1/2) / n, k in {0..n-1}^d,
/// stored row-major (last coordinate fastest). n = 0 picks default_grid(d).
struct GridOptions {
  std::size_t n = 0;
  QuadratureOptions quadrature;
};

// Nodes per axis used when GridOptions::n is 0: 4096, 512, 64, then 16.
std::size_t default_grid(std::size_t dim);

std::vector<Complex> sample(const TrigPoly& f, std::size_t n);

// Every frequency of f lies in P.
bool in_hardy_space(const TrigPoly& f, const OrderChain& chain);

// mu_L * f: keeps the coefficients on L.
TrigPoly cond_exp(const TrigPoly& f, const Lattice& lattice);

// d_j * f = cond_exp(f, C_j) - cond_exp(f, D_j) for j = 1..k.
std::vector<TrigPoly> martingale_blocks(const TrigPoly& f, const OrderChain& chain);

// Integral over T^m of |g|^p, grid doubling as in abs_integrals.
QuadratureResult power_integral(const TorusSeries& g, double p, const QuadratureOptions& options);

// The restriction s -> f(x + sum_k s_k v_k) to the subtorus through x.
TorusSeries restrict_to_subtorus(const TrigPoly& f, const std::vector<double>& x,
                                 const Subtorus& h);

/// Orbits of the grid under the directions of a subtorus: two nodes share an
/// orbit iff their difference is a grid point of the subtorus. Averages over
/// the continuous subtorus are constant on orbits.
struct GridOrbits {
  std::vector<std::size_t> label;          // node -> orbit
  std::vector<std::size_t> representative; // orbit -> first node
};

GridOrbits grid_orbits(std::size_t dim, std::size_t n, const Subtorus& h);

// (mu_L * |f|^p) at each orbit representative of the grid.
struct OrbitAverages {
  GridOrbits orbits;
  std::vector<double> values;  // per orbit
  double quadrature_error = 0.0;
  bool converged = true;
};

OrbitAverages subtorus_averages(const TrigPoly& f, const Lattice& lattice, double p, std::size_t n,
                                const QuadratureOptions& options);

enum class Outcome { kPass, kFail, kInconclusive };
std::string to_string(Outcome o);

inline constexpr double kLogClip = -40.0;
inline constexpr double kClippedFractionLimit = 1e-4;
inline constexpr double kJensenTolerance = 1e-3;
// Absolute change of the log integral between two grid doublings.
inline constexpr double kLogIntegralTolerance = 1e-4;

struct JensenReport {
  double lhs = 0.0;           // |f^(0)|
  double rhs = 0.0;           // exp of the mean of log|f|
  double log_integral = 0.0;
  double clipped_fraction = 0.0;
  double quadrature_error = 0.0;
  bool converged = true;
  std::size_t grid = 0;
  Outcome outcome = Outcome::kPass;
};

// |f^(0)| <= exp(integral of log|f|). log|f| is clipped below at kLogClip; the
// result is inconclusive when more than kClippedFractionLimit of the nodes clip.
JensenReport jensen_check(const TrigPoly& f, const OrderChain& chain,
                          const QuadratureOptions& options = {});

struct ConditionalPowerReport {
  double p = 1.0;
  std::size_t stage = 0;
  std::size_t grid = 0;
  std::size_t violations = 0;  // nodes with lhs > rhs + kConditionalPowerSlack
  double max_excess = 0.0;     // max over nodes of lhs - rhs
  double quadrature_error = 0.0;
  bool converged = true;
  bool passed() const { return violations == 0; }
};

inline constexpr double kConditionalPowerSlack = 1e-9;

// |mu_j * f|^p <= mu_j * |f|^p at every grid node, for C_j with 1 <= j <= k+1
// and p in {1/2, 1, 2}.
ConditionalPowerReport conditional_power_check(const TrigPoly& f, const OrderChain& chain, std::size_t j, double p,
                            const GridOptions& options = {});

struct DoobReport {
  double lhs = 0.0;   // grid mean of (max_j mu_j * |f|^{1/2})^2
  double norm = 0.0;  // ||f||_1
  double rhs = 0.0;   // 4 ||f||_1
  double quadrature_error = 0.0;
  bool converged = true;
  std::size_t grid = 0;
  bool passed() const { return lhs <= rhs * (1.0 + 1e-6); }
};

DoobReport doob_check(const TrigPoly& f, const OrderChain& chain, const GridOptions& options = {});

struct PatternScan {
  std::vector<std::vector<int>> patterns;  // one entry per chain stage; 0 for empty blocks
  std::vector<double> ratios;
  double max_ratio = 0.0;
  std::vector<int> argmax;
  double quadrature_error = 0.0;
  bool converged = true;
  std::size_t grid = 0;
};

// ||max_n |S_n^eps| ||_p / ||max_n |S_n| ||_p on the grid, where S_n sums the
// last n blocks d_k f, ..., d_{k-n+1} f (the martingale order: coarsest block
// first). Enumerates eps in {+-1} on the nonempty blocks (at most 12).
PatternScan burkholder_scan(const TrigPoly& f, const OrderChain& chain, double p,
                            const GridOptions& options = {});

// max over eps in {0, +-1} on the nonempty blocks of ||sum eps_j d_j f||_1 / ||f||_1.
PatternScan h1_unconditionality_scan(const TrigPoly& f, const OrderChain& chain,
                                     const QuadratureOptions& options = {});

}  // namespace rieszkit
