#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rieszkit/lattice.hpp"
#include "rieszkit/numeric.hpp"

namespace rieszkit {

// chi -> w . chi with exact rational weights.
class LinearFunctional {
 public:
  explicit LinearFunctional(RatVec weights);

  std::size_t dim() const { return weights_.size(); }
  const RatVec& weights() const { return weights_; }
  Rational operator()(const IntVec& chi) const { return dot(chi, weights_); }
  // Positive integer multiple of the weights (same sign pattern, same kernel).
  IntVec integer_weights() const;

  friend bool operator==(const LinearFunctional&, const LinearFunctional&) = default;

 private:
  RatVec weights_;
};

struct ChainStage {
  Lattice subgroup;  // C_j
  LinearFunctional functional;
};

/// The order on Z^d given by the lexicographic sign of (psi_1, ..., psi_k),
/// together with its chain of principal convex subgroups
/// Z^d = C_1 > C_2 > ... > C_{k+1} = {0}, C_{j+1} = C_j ∩ ker psi_j.
class OrderChain {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t length() const { return stages_.size(); }
  const std::vector<ChainStage>& stages() const { return stages_; }
  const LinearFunctional& functional(std::size_t j) const;  // 1-based
  // C_j for 1 <= j <= k + 1.
  const Lattice& subgroup(std::size_t j) const;
  // D_j = C_{j+1}.
  const Lattice& lower(std::size_t j) const { return subgroup(j + 1); }

 private:
  friend OrderChain order_from_functionals(std::size_t, const std::vector<LinearFunctional>&);
  std::size_t dim_ = 0;
  std::vector<ChainStage> stages_;
  Lattice terminal_;
};

OrderChain order_from_functionals(std::size_t dim, const std::vector<LinearFunctional>& ws);
// Coordinate functionals e_1, ..., e_d.
OrderChain lexicographic_order(std::size_t dim);

bool in_P(const OrderChain& chain, const IntVec& chi);

enum class Block { kPlus, kMinus, kLower, kOutside };
Block block_membership(const OrderChain& chain, std::size_t j, const IntVec& chi);

enum class CosetSign { kInsideP, kInsideMinusP, kMixed, kZero };
CosetSign classify_coset(const OrderChain& chain, const LatticeCoset& coset);

std::string to_string(Block b);
std::string to_string(CosetSign s);

struct AxiomViolation {
  std::string axiom;        // "closure", "totality" or "antisymmetry"
  std::vector<IntVec> witness;  // closure: {a, b, a + b}; otherwise {chi}
};

struct AxiomReport {
  std::size_t radius = 0;
  std::size_t points_checked = 0;
  std::vector<AxiomViolation> violations;  // at most one per axiom
  bool passed() const { return violations.empty(); }
};

using PositivityPredicate = std::function<bool(const IntVec&)>;

// Exhaustive check of P + P ⊂ P, P ∪ (-P) = Γ and P ∩ (-P) = {0} on [-N, N]^d.
// Closure is only tested for pairs whose sum stays inside the window. Each
// reported counterexample minimizes the l1 size of the witness.
AxiomReport validate_axioms(std::size_t dim, const PositivityPredicate& in_positive,
                            std::size_t radius);
AxiomReport validate_axioms(const OrderChain& chain, std::size_t radius);

}  // namespace rieszkit
