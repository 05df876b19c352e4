#include "rieszkit/corpus.hpp"

#include <algorithm>
#include <cmath>

namespace rieszkit {

std::vector<Lattice> lattice_pool(const OrderChain& chain) {
  const std::size_t d = chain.dim();
  std::vector<Lattice> base;
  for (std::size_t j = 1; j <= chain.length() + 1; ++j) base.push_back(chain.subgroup(j));
  for (const auto& stage : chain.stages()) {
    base.push_back(kernel(d, {stage.functional.integer_weights()}));
  }
  std::vector<Lattice> pool = base;
  for (std::size_t a = 0; a < base.size(); ++a) {
    for (std::size_t b = a + 1; b < base.size(); ++b) pool.push_back(intersect(base[a], base[b]));
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

Complex random_unit_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng));
  const double theta = kTwoPi * u(rng);
  return std::polar(r, theta);
}

namespace {

RatVec random_phase(std::size_t d, std::mt19937_64& rng, std::int64_t max_den) {
  std::uniform_int_distribution<std::int64_t> den(1, max_den);
  RatVec a(d);
  for (auto& x : a) {
    const std::int64_t q = den(rng);
    std::uniform_int_distribution<std::int64_t> num(0, q - 1);
    x = Rational(num(rng), q);
  }
  return a;
}

IntVec random_point(std::size_t d, std::mt19937_64& rng, std::int64_t radius) {
  std::uniform_int_distribution<std::int64_t> e(-radius, radius);
  IntVec v(d);
  for (auto& x : v) x = e(rng);
  return v;
}

// Random element of `lattice` with coefficients in [-radius, radius] on its basis.
IntVec random_member(const Lattice& lattice, std::mt19937_64& rng, std::int64_t radius) {
  std::uniform_int_distribution<std::int64_t> e(-radius, radius);
  IntVec v = zeros(lattice.dim());
  for (const auto& b : lattice.basis()) {
    const Integer k = e(rng);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * b[i];
  }
  return v;
}

SpectralAtom analytic_atom(const OrderChain& chain, std::mt19937_64& rng,
                           const MeasureCorpusOptions& options) {
  const std::size_t d = chain.dim();
  const std::size_t k = chain.length();
  std::uniform_int_distribution<std::size_t> stage(0, k);
  const std::size_t j = stage(rng);
  if (j == 0) {
    return {chain.subgroup(k + 1), zeros(d), rational_zeros(d), random_unit_disk(rng)};
  }
  std::uniform_int_distribution<std::size_t> lower(j + 1, k + 1);
  const Lattice& lattice = chain.subgroup(lower(rng));
  const auto& psi = chain.functional(j);
  IntVec offset;
  do {
    offset = random_member(chain.subgroup(j), rng, options.offset_radius);
  } while (psi(offset) <= 0);
  return {lattice, offset, random_phase(d, rng, options.max_denominator), random_unit_disk(rng)};
}

}  // namespace

Measure random_measure(const OrderChain& chain, std::mt19937_64& rng,
                       const MeasureCorpusOptions& options) {
  const std::size_t d = chain.dim();
  const auto pool = lattice_pool(chain);
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, options.max_atoms));
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<SpectralAtom> raw;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (options.analytic) {
      raw.push_back(analytic_atom(chain, rng, options));
    } else {
      const Lattice& lattice = pool[pick(rng)];
      IntVec offset = random_point(d, rng, options.offset_radius);
      RatVec phase = random_phase(d, rng, options.max_denominator);
      raw.push_back({lattice, std::move(offset), std::move(phase), random_unit_disk(rng)});
    }
  }
  return canon(d, std::move(raw));
}

std::vector<Measure> measure_corpus(const OrderChain& chain, std::uint64_t seed, std::size_t count,
                                    const MeasureCorpusOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Measure> out;
  out.reserve(count);
  while (out.size() < count) {
    Measure m = random_measure(chain, rng, options);
    if (!m.empty()) out.push_back(std::move(m));
  }
  return out;
}

TrigPoly random_poly(const OrderChain& chain, std::mt19937_64& rng,
                     const PolyCorpusOptions& options) {
  const std::size_t d = chain.dim();
  std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, options.max_terms));
  const std::size_t n = count(rng);
  TrigPoly f(d);
  for (std::size_t i = 0; i < n; ++i) {
    IntVec chi;
    do {
      chi = random_point(d, rng, options.degree);
    } while (options.analytic && !in_P(chain, chi));
    f.add(to_int64(chi), random_unit_disk(rng));
  }
  return f;
}

std::vector<TrigPoly> poly_corpus(const OrderChain& chain, std::uint64_t seed, std::size_t count,
                                  const PolyCorpusOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<TrigPoly> out;
  out.reserve(count);
  while (out.size() < count) {
    TrigPoly f = random_poly(chain, rng, options);
    if (!f.empty()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace rieszkit
