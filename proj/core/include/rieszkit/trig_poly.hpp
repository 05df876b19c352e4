#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "rieszkit/numeric.hpp"

namespace rieszkit {

using Frequency = std::vector<std::int64_t>;

/// Trigonometric polynomial f(x) = sum_chi c(chi) e^{2 pi i chi . x} on T^d.
/// Zero coefficients are never stored.
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(std::size_t dim) : dim_(dim) {}
  TrigPoly(std::size_t dim, std::map<Frequency, Complex> coeffs);

  static TrigPoly constant(std::size_t dim, Complex c);
  static TrigPoly monomial(const Frequency& chi, Complex c = 1.0);

  std::size_t dim() const { return dim_; }
  const std::map<Frequency, Complex>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  Complex coeff(const Frequency& chi) const;
  void add(const Frequency& chi, Complex c);
  // Largest |chi_i| over the support.
  std::int64_t degree() const;

  Complex operator()(const std::vector<double>& x) const;

  TrigPoly operator+(const TrigPoly& other) const;
  TrigPoly operator-(const TrigPoly& other) const;
  TrigPoly operator*(Complex s) const;
  // Keeps only the coefficients whose frequency satisfies `keep`.
  template <class Pred>
  TrigPoly filter(Pred keep) const {
    TrigPoly out(dim_);
    for (const auto& [chi, c] : coeffs_) {
      if (keep(chi)) out.coeffs_.emplace(chi, c);
    }
    return out;
  }

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  std::size_t dim_ = 0;
  std::map<Frequency, Complex> coeffs_;
};

}  // namespace rieszkit
