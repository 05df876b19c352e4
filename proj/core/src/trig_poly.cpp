#include "rieszkit/trig_poly.hpp"

#include <cstdlib>

namespace rieszkit {

TrigPoly::TrigPoly(std::size_t dim, std::map<Frequency, Complex> coeffs)
    : dim_(dim), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    require_same_dim(it->first.size(), dim_, "TrigPoly frequency");
    it = it->second == Complex(0.0) ? coeffs_.erase(it) : std::next(it);
  }
}

TrigPoly TrigPoly::constant(std::size_t dim, Complex c) {
  TrigPoly p(dim);
  p.add(Frequency(dim, 0), c);
  return p;
}

TrigPoly TrigPoly::monomial(const Frequency& chi, Complex c) {
  TrigPoly p(chi.size());
  p.add(chi, c);
  return p;
}

Complex TrigPoly::coeff(const Frequency& chi) const {
  const auto it = coeffs_.find(chi);
  return it == coeffs_.end() ? Complex(0.0) : it->second;
}

void TrigPoly::add(const Frequency& chi, Complex c) {
  require_same_dim(chi.size(), dim_, "TrigPoly frequency");
  auto [it, inserted] = coeffs_.emplace(chi, c);
  if (!inserted) it->second += c;
  if (it->second == Complex(0.0)) coeffs_.erase(it);
}

std::int64_t TrigPoly::degree() const {
  std::int64_t d = 0;
  for (const auto& [chi, c] : coeffs_) {
    for (auto x : chi) d = std::max<std::int64_t>(d, std::llabs(x));
  }
  return d;
}

Complex TrigPoly::operator()(const std::vector<double>& x) const {
  require_same_dim(x.size(), dim_, "TrigPoly evaluation");
  Complex s = 0.0;
  for (const auto& [chi, c] : coeffs_) {
    double t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += static_cast<double>(chi[i]) * x[i];
    s += c * std::polar(1.0, kTwoPi * t);
  }
  return s;
}

TrigPoly TrigPoly::operator+(const TrigPoly& other) const {
  require_same_dim(dim_, other.dim_, "TrigPoly +");
  TrigPoly out = *this;
  for (const auto& [chi, c] : other.coeffs_) out.add(chi, c);
  return out;
}

TrigPoly TrigPoly::operator-(const TrigPoly& other) const { return *this + other * -1.0; }

TrigPoly TrigPoly::operator*(Complex s) const {
  TrigPoly out(dim_);
  if (s == Complex(0.0)) return out;
  for (const auto& [chi, c] : coeffs_) out.coeffs_.emplace(chi, c * s);
  return out;
}

}  // namespace rieszkit
