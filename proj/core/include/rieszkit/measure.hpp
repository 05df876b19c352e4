#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rieszkit/lattice.hpp"
#include "rieszkit/numeric.hpp"
#include "rieszkit/quadrature.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit {

inline constexpr double kPruneThreshold = 1e-12;
inline constexpr double kCompareTolerance = 1e-9;

/// c * e^{2 pi i xi.x} * (Haar measure of the subtorus coset a + annihilator(L)).
///
/// Fourier side: chi -> c * e^{-2 pi i (chi - xi).a} on xi + L, zero elsewhere.
/// `lattice` must be saturated. In canonical form `offset` is reduced modulo the
/// lattice and `phase` modulo the annihilator subtorus.
struct SpectralAtom {
  Lattice lattice;
  IntVec offset;
  RatVec phase;  // turns
  Complex coeff;

  std::size_t dim() const { return lattice.dim(); }
  LatticeCoset coset() const { return {offset, lattice}; }
  Complex fourier_at(const IntVec& chi) const;
};

/// A finite sum of spectral atoms kept in canonical form: atoms sharing
/// (lattice, offset mod lattice, phase mod annihilator) are merged, |c| below
/// kPruneThreshold is dropped, and atoms are sorted by (lattice, offset, phase).
class Measure {
 public:
  Measure() = default;
  explicit Measure(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  const std::vector<SpectralAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }

  Measure operator+(const Measure& other) const;
  Measure operator-(const Measure& other) const;
  Measure operator*(Complex s) const;
  Measure operator-() const { return *this * -1.0; }

  // Bitwise equality of canonical data (coefficients compared exactly).
  friend bool operator==(const Measure&, const Measure&);

 private:
  friend Measure canon(std::size_t dim, std::vector<SpectralAtom> raw);
  std::size_t dim_ = 0;
  std::vector<SpectralAtom> atoms_;
};

bool operator==(const SpectralAtom& a, const SpectralAtom& b);

Measure canon(std::size_t dim, std::vector<SpectralAtom> raw);
Measure canon(const Measure& m);

// a - b is the zero measure in canonical form (every merged coefficient pruned).
// Rounding in offset rebases never survives the prune threshold.
bool equivalent(const Measure& a, const Measure& b);
// Every coefficient of canon(a - b) is at most `tol` in modulus.
bool approx_equal(const Measure& a, const Measure& b, double tol = kCompareTolerance);

// Building blocks.
Measure haar(std::size_t dim);
Measure dirac(const RatVec& point);
Measure atom_measure(const Lattice& lattice, const IntVec& offset, const RatVec& phase,
                     Complex coeff);
// Haar measure of the annihilator subtorus of `lattice` (Fourier transform 1_L).
Measure subgroup_haar(const Lattice& lattice);
// f dx for a trigonometric polynomial f.
Measure density(const TrigPoly& f);

Complex fourier_at(const Measure& mu, const IntVec& chi);
// T_t mu (A) = mu(A + t); (T_t mu)^(chi) = e^{2 pi i chi.t} mu^(chi).
Measure translate(const Measure& mu, const RatVec& t);
// (mu * nu)^ = mu^ nu^.
Measure convolve(const Measure& mu, const Measure& nu);
// Restriction of the Fourier transform to a coset: (1_c mu^)^vee.
Measure restrict_spectrum(const Measure& mu, const LatticeCoset& c);

// Distinct atom cosets: an over-approximation of supp mu^.
std::vector<LatticeCoset> support(const Measure& mu);

enum class ZeroSet {
  kNone,     // mu^ never vanishes on the coset
  kPartial,  // mu^ vanishes on a proper sub-coset (two phase classes cancelling)
  kUnknown,  // three or more phase classes; not decided
};

struct CosetSupport {
  LatticeCoset coset;
  std::size_t phase_classes = 0;
  ZeroSet zeros = ZeroSet::kNone;
  // kPartial: zeros are {chi in coset : (chi - offset).shift = residue mod 1}.
  RatVec shift;
  Rational residue;
};

struct SupportAnalysis {
  std::vector<CosetSupport> cosets;
  // Every coset carries a single phase class and no two atom cosets meet, so
  // the union of cosets is exactly supp mu^.
  bool exact = true;
};

SupportAnalysis analyze_support(const Measure& mu);

QuadratureResult total_variation(const Measure& mu, const QuadratureOptions& options = {});

// One TV value per weight vector w: || sum_j w_j parts_j ||. Parts share the
// grouping by primal coset, so all combinations reuse one set of grid samples.
std::vector<QuadratureResult> total_variations(const std::vector<Measure>& parts,
                                               const std::vector<std::vector<double>>& combos,
                                               const QuadratureOptions& options = {});

struct LebesgueParts {
  Measure absolutely_continuous;
  Measure singular;
};

// Rank-0 atoms are densities against Haar; every other atom lives on a proper
// subtorus coset and is singular.
LebesgueParts lebesgue_decompose(const Measure& mu);

// Integral of h against mu: sum_chi h^(chi) mu^(-chi).
Complex pair(const Measure& mu, const TrigPoly& h);

}  // namespace rieszkit
