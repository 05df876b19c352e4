#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rieszkit/measure.hpp"
#include "rieszkit/order.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit {

struct StageBlock {
  std::size_t stage;  // j, 1-based
  Measure part;       // d_j * mu
};

/// mu = base + sum_j d_j * mu, where base = mu_{alpha_0} * mu is the Haar
/// multiple carrying mu^(0) and d_j^ = 1_{C_j \ D_j}. Finite chains make the
/// sum exact.
struct BlockDecomposition {
  Measure base;
  std::vector<StageBlock> blocks;  // one per chain stage, possibly empty measures

  Measure reconstruct() const;
};

// d_j * mu: the Fourier transform of mu restricted to C_j \ D_j.
Measure mask_block(const Measure& mu, const OrderChain& chain, std::size_t j);
BlockDecomposition decompose(const Measure& mu, const OrderChain& chain);

struct SignScanReport {
  double input_norm = 0.0;
  double max_ratio = 0.0;
  std::vector<int> argmax_signs;  // one entry per stage; +1 for empty blocks
  std::vector<std::vector<int>> patterns;
  std::vector<double> ratios;  // aligned with `patterns`
  double quadrature_error = 0.0;
  bool converged = true;
};

// max over eps in {+-1}^k of ||sum_j eps_j d_j * mu|| / ||mu||, with k the
// number of nonempty blocks (at most 20). Patterns are enumerated in binary
// order with bit j-1 set meaning eps_j = -1, so the reported argmax is the
// first maximizer.
SignScanReport sign_scan(const BlockDecomposition& dec, const QuadratureOptions& options = {});

enum class Verdict { kYes, kNo, kUnknown };
std::string to_string(Verdict v);

struct AnalyticityReport {
  Verdict verdict = Verdict::kYes;
  std::optional<IntVec> witness;  // chi outside P with mu^(chi) != 0
  Complex witness_value = 0.0;
  std::vector<LatticeCoset> offending;  // cosets classified mixed or inside -P
};

// yes: every support coset lies in P. no: an explicit frequency outside P with
// |mu^| > kCompareTolerance was found on an offending coset. unknown otherwise.
AnalyticityReport is_analytic(const Measure& mu, const OrderChain& chain,
                              std::int64_t search_radius = 6);

struct IdempotentReport {
  bool spectrum_inside = false;   // spec mu ⊂ C_j
  bool fixed = false;             // mu_j * mu == mu
  bool spectrum_disjoint = false; // spec mu ∩ C_j = {}
  bool annihilated = false;       // mu_j * mu == 0
  bool holds() const { return spectrum_inside == fixed && spectrum_disjoint == annihilated; }
};

// Both equivalences for the idempotent mu_j with transform 1_{C_j}; j ranges
// over 1..k+1 (j = k+1 is the terminal subgroup {0}).
IdempotentReport check_idempotent(const Measure& mu, const OrderChain& chain, std::size_t j);

// T_y mu == mu for y on the annihilator of C_j. Throws when y is not on it.
bool check_invariance(const Measure& mu, const OrderChain& chain, std::size_t j, const RatVec& y);

// integral over t of g(t) * (integral of h d(T_t mu)) = sum_chi g^(chi) h^(chi) mu^(-chi).
// g must lie in H^1_0: its spectrum inside P \ {0}.
Complex weak_analyticity_residual(const Measure& mu, const OrderChain& chain, const TrigPoly& g,
                                  const TrigPoly& h);

struct RieszReport {
  Verdict input = Verdict::kYes;
  Verdict absolutely_continuous = Verdict::kYes;
  Verdict singular = Verdict::kYes;
  std::size_t translations_checked = 0;
  std::size_t commutation_failures = 0;
  bool passed() const;
};

// Lebesgue parts of an analytic measure and the commutation of the
// singular-part projection with translations on `translations` random points.
RieszReport fm_riesz_check(const Measure& mu, const OrderChain& chain, std::uint64_t seed = 0,
                           std::size_t translations = 20);

}  // namespace rieszkit
