#include "rieszkit/numeric.hpp"

#include <cmath>
#include <limits>

namespace rieszkit {

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw InvalidArgument("floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer floor_mod(const Integer& a, const Integer& b) {
  Integer m = a % b;
  if (m < 0) m += abs(b);
  return m;
}

Integer floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

Complex unit_phase(const Rational& turns) {
  const Rational f = frac(turns);
  if (f == 0) return {1.0, 0.0};
  // Exact values at quarter turns keep symmetric cancellations exact.
  if (f == Rational(1, 2)) return {-1.0, 0.0};
  if (f == Rational(1, 4)) return {0.0, 1.0};
  if (f == Rational(3, 4)) return {0.0, -1.0};
  const double x = static_cast<double>(f);
  return std::polar(1.0, kTwoPi * x);
}

Rational dot(const IntVec& a, const RatVec& b) {
  require_same_dim(a.size(), b.size(), "dot");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += Rational(a[i]) * b[i];
  }
  return s;
}

Integer dot(const IntVec& a, const IntVec& b) {
  require_same_dim(a.size(), b.size(), "dot");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  require_same_dim(a.size(), b.size(), "vector +");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  require_same_dim(a.size(), b.size(), "vector -");
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVec operator-(const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVec operator+(const RatVec& a, const RatVec& b) {
  require_same_dim(a.size(), b.size(), "vector +");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec operator-(const RatVec& a, const RatVec& b) {
  require_same_dim(a.size(), b.size(), "vector -");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec operator-(const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

bool is_zero(const IntVec& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

IntVec zeros(std::size_t d) { return IntVec(d, Integer(0)); }
RatVec rational_zeros(std::size_t d) { return RatVec(d, Rational(0)); }

RatVec to_rational(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
  return r;
}

IntVec from_int64(const std::vector<std::int64_t>& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

std::int64_t to_int64(const Integer& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidArgument("integer does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

std::vector<std::int64_t> to_int64(const IntVec& v) {
  std::vector<std::int64_t> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = to_int64(v[i]);
  return r;
}

RatVec frac(const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = frac(v[i]);
  return r;
}

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) {
    throw InvalidArgument("malformed rational: \"" + std::string(whole) + "\"");
  }
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw InvalidArgument("malformed rational: \"" + std::string(whole) + "\"");
    }
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const Integer num = parse_integer(text.substr(0, slash), text);
  const Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InvalidArgument("rational with zero denominator: \"" + std::string(text) + "\"");
  return Rational(num, den);
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

}  // namespace rieszkit
