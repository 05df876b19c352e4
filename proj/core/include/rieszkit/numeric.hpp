#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rieszkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

using IntVec = std::vector<Integer>;
using RatVec = std::vector<Rational>;
using IntMatrix = std::vector<IntVec>;  // row-major

// Thrown for malformed inputs (dimension mismatch, bad rational strings, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
// a mod b in [0, |b|).
Integer floor_mod(const Integer& a, const Integer& b);

Integer floor(const Rational& r);
// Fractional part in [0, 1).
Rational frac(const Rational& r);

// e^{2 pi i r}; r is reduced mod 1 exactly before the conversion to double.
Complex unit_phase(const Rational& turns);

Rational dot(const IntVec& a, const RatVec& b);
Integer dot(const IntVec& a, const IntVec& b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a);

bool is_zero(const IntVec& v);
IntVec zeros(std::size_t d);
RatVec rational_zeros(std::size_t d);
RatVec to_rational(const IntVec& v);
IntVec from_int64(const std::vector<std::int64_t>& v);
std::vector<std::int64_t> to_int64(const IntVec& v);
std::int64_t to_int64(const Integer& v);

// Componentwise fractional part, i.e. the canonical representative in [0,1)^d.
RatVec frac(const RatVec& v);

// "p/q" (or "p") <-> Rational. Output is always "p/q" with q >= 1 in lowest terms.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& r);

void require_same_dim(std::size_t a, std::size_t b, const char* what);

}  // namespace rieszkit
