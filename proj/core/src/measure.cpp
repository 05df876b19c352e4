#include "rieszkit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace rieszkit {
namespace {

std::strong_ordering compare(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::strong_ordering compare(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (b[i] < a[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::strong_ordering compare_key(const SpectralAtom& a, const SpectralAtom& b) {
  if (auto c = a.lattice <=> b.lattice; c != 0) return c;
  if (auto c = compare(a.offset, b.offset); c != 0) return c;
  return compare(a.phase, b.phase);
}

// Primal grouping key: the subtorus coset a + annihilator(L).
struct PrimalKey {
  const Lattice* lattice;
  const RatVec* phase;
  bool operator<(const PrimalKey& o) const {
    if (auto c = *lattice <=> *o.lattice; c != 0) return c < 0;
    return compare(*phase, *o.phase) < 0;
  }
};

}  // namespace

Complex SpectralAtom::fourier_at(const IntVec& chi) const {
  const IntVec rel = chi - offset;
  if (!lattice.contains(rel)) return 0.0;
  return coeff * unit_phase(-dot(rel, phase));
}

bool operator==(const SpectralAtom& a, const SpectralAtom& b) {
  return a.lattice == b.lattice && a.offset == b.offset && a.phase == b.phase &&
         a.coeff == b.coeff;
}

bool operator==(const Measure& a, const Measure& b) {
  return a.dim_ == b.dim_ && a.atoms_ == b.atoms_;
}

Measure canon(std::size_t dim, std::vector<SpectralAtom> raw) {
  for (auto& atom : raw) {
    require_same_dim(atom.dim(), dim, "measure atom lattice");
    require_same_dim(atom.offset.size(), dim, "measure atom offset");
    require_same_dim(atom.phase.size(), dim, "measure atom phase");
    if (!atom.lattice.saturated()) {
      throw InvalidArgument("measure atoms require saturated lattices");
    }
    IntVec reduced = atom.lattice.reduce(atom.offset);
    if (reduced != atom.offset) {
      atom.coeff *= unit_phase(-dot(reduced - atom.offset, atom.phase));
      atom.offset = std::move(reduced);
    }
    atom.phase = reduce_phase(atom.lattice, atom.phase);
  }
  std::stable_sort(raw.begin(), raw.end(),
                   [](const SpectralAtom& a, const SpectralAtom& b) { return compare_key(a, b) < 0; });

  Measure out(dim);
  for (auto& atom : raw) {
    if (!out.atoms_.empty() && compare_key(out.atoms_.back(), atom) == 0) {
      out.atoms_.back().coeff += atom.coeff;
    } else {
      out.atoms_.push_back(std::move(atom));
    }
  }
  std::erase_if(out.atoms_, [](const SpectralAtom& a) { return std::abs(a.coeff) < kPruneThreshold; });
  return out;
}

Measure canon(const Measure& m) { return canon(m.dim(), m.atoms()); }

Measure Measure::operator+(const Measure& other) const {
  require_same_dim(dim_, other.dim_, "measure +");
  std::vector<SpectralAtom> raw = atoms_;
  raw.insert(raw.end(), other.atoms_.begin(), other.atoms_.end());
  return canon(dim_, std::move(raw));
}

Measure Measure::operator-(const Measure& other) const { return *this + other * -1.0; }

Measure Measure::operator*(Complex s) const {
  std::vector<SpectralAtom> raw = atoms_;
  for (auto& a : raw) a.coeff *= s;
  return canon(dim_, std::move(raw));
}

bool equivalent(const Measure& a, const Measure& b) {
  return a.dim() == b.dim() && (a - b).empty();
}

bool approx_equal(const Measure& a, const Measure& b, double tol) {
  if (a.dim() != b.dim()) return false;
  const Measure diff = a - b;
  return std::all_of(diff.atoms().begin(), diff.atoms().end(),
                     [&](const SpectralAtom& x) { return std::abs(x.coeff) <= tol; });
}

Measure atom_measure(const Lattice& lattice, const IntVec& offset, const RatVec& phase,
                     Complex coeff) {
  return canon(lattice.dim(), {SpectralAtom{lattice, offset, phase, coeff}});
}

Measure haar(std::size_t dim) {
  return atom_measure(Lattice::zero(dim), zeros(dim), rational_zeros(dim), 1.0);
}

Measure dirac(const RatVec& point) {
  const std::size_t d = point.size();
  return atom_measure(Lattice::full(d), zeros(d), point, 1.0);
}

Measure subgroup_haar(const Lattice& lattice) {
  const std::size_t d = lattice.dim();
  return atom_measure(lattice, zeros(d), rational_zeros(d), 1.0);
}

Measure density(const TrigPoly& f) {
  const std::size_t d = f.dim();
  const Lattice zero = Lattice::zero(d);
  std::vector<SpectralAtom> raw;
  for (const auto& [chi, c] : f.coeffs()) {
    raw.push_back({zero, from_int64(chi), rational_zeros(d), c});
  }
  return canon(d, std::move(raw));
}

Complex fourier_at(const Measure& mu, const IntVec& chi) {
  require_same_dim(chi.size(), mu.dim(), "fourier_at");
  Complex s = 0.0;
  for (const auto& a : mu.atoms()) s += a.fourier_at(chi);
  return s;
}

Measure translate(const Measure& mu, const RatVec& t) {
  require_same_dim(t.size(), mu.dim(), "translate");
  std::vector<SpectralAtom> raw = mu.atoms();
  for (auto& a : raw) {
    a.coeff *= unit_phase(dot(a.offset, t));
    a.phase = a.phase - t;
  }
  return canon(mu.dim(), std::move(raw));
}

Measure convolve(const Measure& mu, const Measure& nu) {
  require_same_dim(mu.dim(), nu.dim(), "convolve");
  std::vector<SpectralAtom> raw;
  for (const auto& a : mu.atoms()) {
    for (const auto& b : nu.atoms()) {
      auto c = coset_intersect(a.coset(), b.coset());
      if (!c) continue;
      const Rational turns = dot(c->offset - a.offset, a.phase) + dot(c->offset - b.offset, b.phase);
      raw.push_back({c->lattice, c->offset, a.phase + b.phase,
                     a.coeff * b.coeff * unit_phase(-turns)});
    }
  }
  return canon(mu.dim(), std::move(raw));
}

Measure restrict_spectrum(const Measure& mu, const LatticeCoset& mask) {
  require_same_dim(mask.dim(), mu.dim(), "restrict_spectrum");
  std::vector<SpectralAtom> raw;
  for (const auto& a : mu.atoms()) {
    auto c = coset_intersect(a.coset(), mask);
    if (!c) continue;
    raw.push_back({c->lattice, c->offset, a.phase,
                   a.coeff * unit_phase(-dot(c->offset - a.offset, a.phase))});
  }
  return canon(mu.dim(), std::move(raw));
}

std::vector<LatticeCoset> support(const Measure& mu) {
  std::vector<LatticeCoset> out;
  for (const auto& a : mu.atoms()) {
    LatticeCoset c = a.coset();
    if (out.empty() || out.back() != c) out.push_back(std::move(c));
  }
  return out;
}

SupportAnalysis analyze_support(const Measure& mu) {
  SupportAnalysis out;
  const auto& atoms = mu.atoms();
  for (std::size_t i = 0; i < atoms.size();) {
    std::size_t j = i;
    while (j < atoms.size() && atoms[j].lattice == atoms[i].lattice &&
           atoms[j].offset == atoms[i].offset) {
      ++j;
    }
    CosetSupport cs;
    cs.coset = atoms[i].coset();
    cs.phase_classes = j - i;
    if (cs.phase_classes == 2) {
      // c1 e^{-2 pi i l.a1} + c2 e^{-2 pi i l.a2} = 0  iff  e^{-2 pi i l.(a2 - a1)} = -c1/c2.
      const auto& a1 = atoms[i];
      const auto& a2 = atoms[i + 1];
      const double m1 = std::abs(a1.coeff), m2 = std::abs(a2.coeff);
      if (std::abs(m1 - m2) <= kCompareTolerance * std::max(m1, m2)) {
        const RatVec delta = a2.phase - a1.phase;
        // l.delta mod 1 ranges over (1/q)Z/Z.
        Integer q = 1;
        for (const auto& b : a1.lattice.basis()) {
          q = boost::multiprecision::lcm(q, denominator(frac(dot(b, delta))));
        }
        const double target = -std::arg(-a1.coeff / a2.coeff) / kTwoPi;  // turns
        const double scaled = target * static_cast<double>(q);
        const double nearest = std::round(scaled);
        if (std::abs(scaled - nearest) <= kCompareTolerance * static_cast<double>(q)) {
          cs.zeros = ZeroSet::kPartial;
          cs.shift = delta;
          cs.residue = frac(Rational(Integer(static_cast<long long>(nearest)), q));
        }
      }
    } else if (cs.phase_classes > 2) {
      cs.zeros = ZeroSet::kUnknown;
    }
    if (cs.phase_classes > 1) out.exact = false;
    out.cosets.push_back(std::move(cs));
    i = j;
  }
  for (std::size_t a = 0; a < out.cosets.size() && out.exact; ++a) {
    for (std::size_t b = a + 1; b < out.cosets.size(); ++b) {
      if (coset_intersect(out.cosets[a].coset, out.cosets[b].coset)) {
        out.exact = false;
        break;
      }
    }
  }
  return out;
}

std::vector<QuadratureResult> total_variations(const std::vector<Measure>& parts,
                                               const std::vector<std::vector<double>>& combos,
                                               const QuadratureOptions& options) {
  if (parts.empty()) return std::vector<QuadratureResult>(combos.size());
  const std::size_t d = parts.front().dim();
  for (const auto& p : parts) require_same_dim(p.dim(), d, "total_variations");

  // group -> per-part series on the subtorus
  std::map<PrimalKey, std::vector<std::vector<const SpectralAtom*>>> groups;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (const auto& a : parts[p].atoms()) {
      auto& slot = groups[PrimalKey{&a.lattice, &a.phase}];
      slot.resize(parts.size());
      slot[p].push_back(&a);
    }
  }

  std::vector<QuadratureResult> total(combos.size(), QuadratureResult{0.0, 0.0, true, 0});
  for (const auto& [key, members] : groups) {
    const Subtorus torus = annihilator(*key.lattice);
    const std::size_t m = torus.dim();
    std::vector<TorusSeries> pieces(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
      pieces[p].dim = m;
      for (const SpectralAtom* a : members[p]) {
        Frequency f(m);
        for (std::size_t k = 0; k < m; ++k) f[k] = to_int64(dot(a->offset, torus.directions()[k]));
        pieces[p].freqs.push_back(std::move(f));
        pieces[p].coeffs.push_back(a->coeff * unit_phase(dot(a->offset, *key.phase)));
      }
    }
    const auto res = abs_integrals(m, pieces, combos, options);
    for (std::size_t c = 0; c < combos.size(); ++c) {
      total[c].value += res[c].value;
      total[c].error += res[c].error;
      total[c].converged = total[c].converged && res[c].converged;
      total[c].grid = std::max(total[c].grid, res[c].grid);
    }
  }
  return total;
}

QuadratureResult total_variation(const Measure& mu, const QuadratureOptions& options) {
  if (mu.empty()) return {0.0, 0.0, true, 0};
  return total_variations({mu}, {{1.0}}, options)[0];
}

LebesgueParts lebesgue_decompose(const Measure& mu) {
  std::vector<SpectralAtom> ac, sing;
  for (const auto& a : mu.atoms()) (a.lattice.rank() == 0 ? ac : sing).push_back(a);
  return {canon(mu.dim(), std::move(ac)), canon(mu.dim(), std::move(sing))};
}

Complex pair(const Measure& mu, const TrigPoly& h) {
  require_same_dim(h.dim(), mu.dim(), "pair");
  Complex s = 0.0;
  for (const auto& [chi, c] : h.coeffs()) s += c * fourier_at(mu, -from_int64(chi));
  return s;
}

}  // namespace rieszkit
