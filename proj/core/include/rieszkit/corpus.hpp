#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rieszkit/lattice.hpp"
#include "rieszkit/measure.hpp"
#include "rieszkit/order.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit {

/// Seeded random corpora.
///
/// Measures: 1..max_atoms atoms. Lattices are drawn uniformly from
/// lattice_pool(chain); offsets uniformly from [-offset_radius, offset_radius]^d;
/// phases coordinatewise p/q with q uniform in 1..max_denominator and p uniform
/// in 0..q-1; coefficients uniform on the closed unit disk. With `analytic` set,
/// each atom instead picks a stage j, a lattice C_m with m > j and an offset in
/// C_j with psi_j(offset) > 0, so its coset lies in S_j ⊂ P (or is the Haar atom).
struct MeasureCorpusOptions {
  std::size_t max_atoms = 8;
  std::int64_t offset_radius = 3;
  std::int64_t max_denominator = 64;
  bool analytic = false;
};

/// Polynomials: 1..max_terms frequencies uniform in [-degree, degree]^d
/// (restricted to P when `analytic`), coefficients uniform on the unit disk.
struct PolyCorpusOptions {
  std::int64_t degree = 8;
  std::size_t max_terms = 10;
  bool analytic = true;
};

// C_1..C_{k+1}, the full kernels of each functional and all pairwise
// intersections, deduplicated and sorted. Every entry is saturated.
std::vector<Lattice> lattice_pool(const OrderChain& chain);

Complex random_unit_disk(std::mt19937_64& rng);

Measure random_measure(const OrderChain& chain, std::mt19937_64& rng,
                       const MeasureCorpusOptions& options = {});
std::vector<Measure> measure_corpus(const OrderChain& chain, std::uint64_t seed, std::size_t count,
                                    const MeasureCorpusOptions& options = {});

TrigPoly random_poly(const OrderChain& chain, std::mt19937_64& rng,
                     const PolyCorpusOptions& options = {});
std::vector<TrigPoly> poly_corpus(const OrderChain& chain, std::uint64_t seed, std::size_t count,
                                  const PolyCorpusOptions& options = {});

}  // namespace rieszkit
