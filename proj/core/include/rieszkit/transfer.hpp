#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rieszkit/lattice.hpp"
#include "rieszkit/measure.hpp"
#include "rieszkit/order.hpp"
#include "rieszkit/quadrature.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit {

/// psi: Z^{d1} -> Z^{d2}, chi -> M chi, for an integer d2 x d1 matrix M, with
/// adjoint phi: T^{d2} -> T^{d1}, t -> M^T t, so that chi . phi(t) = psi(chi) . t.
class Homomorphism {
 public:
  Homomorphism(IntMatrix matrix, std::size_t source_dim);

  std::size_t source_dim() const { return source_dim_; }  // d1
  std::size_t target_dim() const { return matrix_.size(); }  // d2
  const IntMatrix& matrix() const { return matrix_; }

  IntVec psi(const IntVec& chi) const;
  // Reduced into [0, 1)^{d1}.
  RatVec phi(const RatVec& t) const;

  static Homomorphism identity(std::size_t dim);
  // The 1 x d row of integer weights of a chain functional.
  static Homomorphism functional(const LinearFunctional& f);

 private:
  IntMatrix matrix_;
  std::size_t source_dim_;
};

// Phi(nu) on T^{d1} for nu on T^{d2}: Phi(nu)^(chi) = nu^(psi chi).
Measure pushforward(const Measure& nu, const Homomorphism& h);

// nu *_{T_phi} mu = Phi(nu) * mu.
Measure convolve_via_phi(const Measure& nu, const Measure& mu, const Homomorphism& h);

// psi(xi + L) = psi(xi) + psi(L) for every support coset of mu, deduplicated and sorted.
std::vector<LatticeCoset> spec_pushforward(const Measure& mu, const Homomorphism& h);

// The preimage psi^{-1}(c) as a coset of Z^{d1}, when nonempty.
std::optional<LatticeCoset> preimage(const LatticeCoset& c, const Homomorphism& h);

// (nu * f) for a trigonometric polynomial f on T^{d2}.
TrigPoly convolve_poly(const Measure& nu, const TrigPoly& f);

struct NormEstimate {
  double value = 0.0;  // max ||nu * f||_1 / ||f||_1 over the corpus and f = 1
  double quadrature_error = 0.0;
  bool converged = true;
};

NormEstimate empirical_norm(const Measure& nu, const std::vector<TrigPoly>& corpus,
                            const QuadratureOptions& options = {});

inline constexpr double kTransferenceTolerance = 1e-3;

struct TransferenceReport {
  double bound = 0.0;
  bool bound_supplied = false;
  std::vector<double> ratios;       // TV(Phi(nu) * mu) / TV(mu), one per corpus measure
  std::vector<bool> order_preserved;  // spec_pushforward(mu) inside the target order's P
  double max_ratio = 0.0;             // over order-preserved measures
  std::size_t violations = 0;         // order-preserved ratios above bound * (1 + tol)
  double quadrature_error = 0.0;
  bool converged = true;

  // A supplied bound is asserted; an empirical one only raises a flag.
  bool passed() const { return !bound_supplied || violations == 0; }
  bool flagged() const { return !bound_supplied && violations > 0; }
};

// Compares ||Phi(nu) * mu|| / ||mu|| on the corpus against `bound`, or against
// empirical_norm(nu, norm_corpus) when no bound is supplied. Only measures whose
// pushed spectrum lies in the target order's P count towards violations.
TransferenceReport transference_report(const Measure& nu, const Homomorphism& h,
                                       const OrderChain& target_order,
                                       const std::vector<Measure>& corpus,
                                       std::optional<double> bound,
                                       const std::vector<TrigPoly>& norm_corpus,
                                       const QuadratureOptions& options = {});

}  // namespace rieszkit
