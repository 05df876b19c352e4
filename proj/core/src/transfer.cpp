#include "rieszkit/transfer.hpp"

#include <algorithm>

namespace rieszkit {

Homomorphism::Homomorphism(IntMatrix matrix, std::size_t source_dim)
    : matrix_(std::move(matrix)), source_dim_(source_dim) {
  if (source_dim_ == 0 || matrix_.empty()) throw InvalidArgument("homomorphism: empty matrix");
  for (const auto& row : matrix_) require_same_dim(row.size(), source_dim_, "homomorphism row");
}

IntVec Homomorphism::psi(const IntVec& chi) const {
  require_same_dim(chi.size(), source_dim_, "psi");
  IntVec out(target_dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = dot(matrix_[i], chi);
  return out;
}

RatVec Homomorphism::phi(const RatVec& t) const {
  require_same_dim(t.size(), target_dim(), "phi");
  RatVec out = rational_zeros(source_dim_);
  for (std::size_t i = 0; i < target_dim(); ++i) {
    for (std::size_t j = 0; j < source_dim_; ++j) out[j] += Rational(matrix_[i][j]) * t[i];
  }
  return frac(out);
}

Homomorphism Homomorphism::identity(std::size_t dim) {
  IntMatrix m(dim, IntVec(dim, Integer(0)));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = 1;
  return {std::move(m), dim};
}

Homomorphism Homomorphism::functional(const LinearFunctional& f) {
  return {{f.integer_weights()}, f.dim()};
}

std::optional<LatticeCoset> preimage(const LatticeCoset& c, const Homomorphism& h) {
  require_same_dim(c.dim(), h.target_dim(), "preimage");
  if (!c.lattice.saturated()) throw InvalidArgument("preimage: lattice is not saturated");
  const std::size_t d1 = h.source_dim();
  const std::size_t d2 = h.target_dim();

  // Solve M chi + sum_k t_k b_k = xi: rows are the columns of M, then the basis of L.
  IntMatrix rows;
  for (std::size_t j = 0; j < d1; ++j) {
    IntVec col(d2);
    for (std::size_t i = 0; i < d2; ++i) col[i] = h.matrix()[i][j];
    rows.push_back(std::move(col));
  }
  for (const auto& b : c.lattice.basis()) rows.push_back(b);
  const auto z = solve_left(rows, d2, c.offset);
  if (!z) return std::nullopt;
  const IntVec chi0(z->begin(), z->begin() + static_cast<std::ptrdiff_t>(d1));

  // L is saturated, so L = {x : w . x = 0} for w in its orthogonal lattice and
  // psi^{-1}(L) is the kernel of the rows w^T M.
  const Lattice orthogonal = kernel(d2, c.lattice.basis());
  IntMatrix constraints;
  for (const auto& w : orthogonal.basis()) {
    IntVec row(d1);
    for (std::size_t j = 0; j < d1; ++j) {
      Integer s = 0;
      for (std::size_t i = 0; i < d2; ++i) s += w[i] * h.matrix()[i][j];
      row[j] = s;
    }
    constraints.push_back(std::move(row));
  }
  return LatticeCoset(chi0, kernel(d1, constraints));
}

Measure pushforward(const Measure& nu, const Homomorphism& h) {
  require_same_dim(nu.dim(), h.target_dim(), "pushforward");
  std::vector<SpectralAtom> raw;
  for (const auto& a : nu.atoms()) {
    const auto pre = preimage(a.coset(), h);
    if (!pre) continue;
    // nu^(psi chi) = c e^{-2 pi i (psi chi - xi) . a}
    //             = c e^{-2 pi i (psi chi0 - xi) . a} e^{-2 pi i (chi - chi0) . phi(a)}.
    const Complex c = a.coeff * unit_phase(-dot(h.psi(pre->offset) - a.offset, a.phase));
    raw.push_back({pre->lattice, pre->offset, h.phi(a.phase), c});
  }
  return canon(h.source_dim(), std::move(raw));
}

Measure convolve_via_phi(const Measure& nu, const Measure& mu, const Homomorphism& h) {
  require_same_dim(mu.dim(), h.source_dim(), "convolve_via_phi");
  return convolve(pushforward(nu, h), mu);
}

std::vector<LatticeCoset> spec_pushforward(const Measure& mu, const Homomorphism& h) {
  require_same_dim(mu.dim(), h.source_dim(), "spec_pushforward");
  std::vector<LatticeCoset> out;
  for (const auto& c : support(mu)) {
    out.emplace_back(h.psi(c.offset), image(c.lattice, h.matrix(), h.target_dim()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TrigPoly convolve_poly(const Measure& nu, const TrigPoly& f) {
  require_same_dim(nu.dim(), f.dim(), "convolve_poly");
  TrigPoly out(f.dim());
  for (const auto& [chi, c] : f.coeffs()) out.add(chi, c * fourier_at(nu, from_int64(chi)));
  return out;
}

NormEstimate empirical_norm(const Measure& nu, const std::vector<TrigPoly>& corpus,
                            const QuadratureOptions& options) {
  NormEstimate est;
  est.value = std::abs(fourier_at(nu, zeros(nu.dim())));
  for (const auto& f : corpus) {
    if (f.empty()) continue;
    const auto num = abs_integral(TorusSeries::from(convolve_poly(nu, f)), options);
    const auto den = abs_integral(TorusSeries::from(f), options);
    est.value = std::max(est.value, num.value / den.value);
    est.quadrature_error = std::max({est.quadrature_error, num.error, den.error});
    est.converged = est.converged && num.converged && den.converged;
  }
  return est;
}

namespace {

bool inside_target(const std::vector<LatticeCoset>& images, const OrderChain& order) {
  return std::all_of(images.begin(), images.end(), [&](const LatticeCoset& c) {
    const auto s = classify_coset(order, c);
    return s == CosetSign::kInsideP || s == CosetSign::kZero;
  });
}

}  // namespace

TransferenceReport transference_report(const Measure& nu, const Homomorphism& h,
                                       const OrderChain& target_order,
                                       const std::vector<Measure>& corpus,
                                       std::optional<double> bound,
                                       const std::vector<TrigPoly>& norm_corpus,
                                       const QuadratureOptions& options) {
  require_same_dim(nu.dim(), h.target_dim(), "transference_report");
  require_same_dim(target_order.dim(), h.target_dim(), "transference_report order");
  TransferenceReport r;
  r.bound_supplied = bound.has_value();
  if (bound) {
    r.bound = *bound;
  } else {
    const auto est = empirical_norm(nu, norm_corpus, options);
    r.bound = est.value;
    r.quadrature_error = est.quadrature_error;
    r.converged = est.converged;
  }

  const Measure pushed = pushforward(nu, h);
  for (const auto& mu : corpus) {
    const auto num = total_variation(convolve(pushed, mu), options);
    const auto den = total_variation(mu, options);
    const double ratio = den.value > 0.0 ? num.value / den.value : 0.0;
    const bool preserved = inside_target(spec_pushforward(mu, h), target_order);
    r.ratios.push_back(ratio);
    r.order_preserved.push_back(preserved);
    r.quadrature_error = std::max({r.quadrature_error, num.error, den.error});
    r.converged = r.converged && num.converged && den.converged;
    if (!preserved) continue;
    r.max_ratio = std::max(r.max_ratio, ratio);
    if (ratio > r.bound * (1.0 + kTransferenceTolerance)) ++r.violations;
  }
  return r;
}

}  // namespace rieszkit
