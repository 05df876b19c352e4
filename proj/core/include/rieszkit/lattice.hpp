#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "rieszkit/numeric.hpp"

namespace rieszkit {

// Row Hermite normal form of an integer matrix together with the unimodular
// transform: transform * input == form. The first `rank` rows of `form` are the
// nonzero echelon rows (positive pivots, entries above each pivot reduced into
// [0, pivot)); the remaining rows are zero.
struct HermiteDecomposition {
  IntMatrix form;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

HermiteDecomposition hermite_decompose(const IntMatrix& rows, std::size_t cols);

// Diagonal of the Smith normal form (nonzero entries only, each dividing the next).
std::vector<Integer> smith_divisors(const IntMatrix& rows, std::size_t cols);

// Integer solution z of z * rows == target, if one exists.
std::optional<IntVec> solve_left(const IntMatrix& rows, std::size_t cols, const IntVec& target);

/// A sublattice of Z^d stored by its row Hermite normal form basis.
///
/// Two lattices compare equal iff their HNF bases are identical. Saturation
/// (Z^d / L torsion-free) is not enforced by the type; operations that need it
/// (annihilators, measure atoms) check `saturated()`.
class Lattice {
 public:
  Lattice() = default;

  static Lattice zero(std::size_t dim);
  static Lattice full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool saturated() const { return saturated_; }

  bool contains(const IntVec& v) const;
  // Canonical representative of v + L: the pivot coordinates land in [0, pivot).
  IntVec reduce(const IntVec& v) const;
  bool subset_of(const Lattice& other) const;

  // For saturated lattices: integer vectors w_1..w_r with basis * w_k = e_k.
  const IntMatrix& dual_section() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }
  friend std::strong_ordering operator<=>(const Lattice& a, const Lattice& b);

 private:
  friend Lattice hnf(std::size_t dim, const IntMatrix& rows);

  std::size_t dim_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
  bool saturated_ = true;
  IntMatrix section_;
};

Lattice hnf(std::size_t dim, const IntMatrix& rows);
bool member(const Lattice& lattice, const IntVec& v);
bool is_saturated(const Lattice& lattice);
Lattice intersect(const Lattice& a, const Lattice& b);
// Integer kernel {v : M v = 0} of a matrix given by rows (each of length dim).
Lattice kernel(std::size_t dim, const IntMatrix& rows);
// Image of a lattice under v -> M v (M has `out_dim` rows of length lattice.dim()).
Lattice image(const Lattice& lattice, const IntMatrix& matrix, std::size_t out_dim);

struct LatticeCoset {
  IntVec offset;  // canonical representative modulo `lattice`
  Lattice lattice;

  LatticeCoset() = default;
  LatticeCoset(IntVec offset, Lattice lattice);

  std::size_t dim() const { return lattice.dim(); }
  bool contains(const IntVec& v) const;

  friend bool operator==(const LatticeCoset&, const LatticeCoset&) = default;
  friend std::strong_ordering operator<=>(const LatticeCoset& a, const LatticeCoset& b);
};

std::optional<LatticeCoset> coset_intersect(const LatticeCoset& a, const LatticeCoset& b);

/// Connected subtorus {x in T^d : lambda . x in Z for all lambda in L} of a
/// saturated lattice L, parametrized by s -> sum_k s_k v_k (mod Z^d) for
/// s in T^{d - rank L}. The parametrization is a group isomorphism.
class Subtorus {
 public:
  std::size_t ambient_dim() const { return lattice_.dim(); }
  std::size_t dim() const { return directions_.size(); }
  const IntMatrix& directions() const { return directions_; }

  bool contains(const RatVec& point) const;
  // The lattice of characters trivial on the subtorus.
  Lattice annihilator_dual() const;

 private:
  friend Subtorus annihilator(const Lattice& lattice);
  Lattice lattice_;
  IntMatrix directions_;
};

Subtorus annihilator(const Lattice& lattice);

// Canonical representative of the class of `a` in T^d / annihilator(L).
// Points equal modulo the annihilator subtorus map to identical vectors.
RatVec reduce_phase(const Lattice& lattice, const RatVec& a);

}  // namespace rieszkit
