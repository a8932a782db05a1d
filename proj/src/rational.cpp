#include "plab/rational.hpp"

#include <ostream>

#include "plab/errors.hpp"

namespace plab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  if (den < 0)
    value_ = boost::multiprecision::cpp_rational(-num, -den);
  else
    value_ = boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw InputError("malformed rational '" + std::string(text) + "' (expected \"p/q\")");
  BigInt n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InputError("rational '" + std::string(text) + "' has zero denominator");
  if (negative) n = -n;
  return Rational(n, d);
}

std::string Rational::str() const {
  return numerator().str() + "/" + denominator().str();
}

Rational Rational::pow(unsigned exponent) const {
  Rational r;
  r.value_ = boost::multiprecision::cpp_rational(
      boost::multiprecision::pow(numerator(), exponent),
      boost::multiprecision::pow(denominator(), exponent));
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw InputError("reciprocal of zero");
  return Rational(denominator(), numerator());
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw InputError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt common_denominator(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

BigInt integer_root_floor(const BigInt& n, unsigned k) {
  if (n < 0) throw InputError("integer root of a negative number");
  if (k == 0) throw InputError("zeroth root");
  if (n < 2 || k == 1) return n;
  // Binary search on [0, 2^(bits/k + 1)].
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
  BigInt lo = 0, hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    BigInt mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, k) <= n)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

bool exact_root(const Rational& value, unsigned k, Rational& root) {
  if (value.sign() < 0) return false;
  BigInt n = integer_root_floor(value.numerator(), k);
  BigInt d = integer_root_floor(value.denominator(), k);
  if (boost::multiprecision::pow(n, k) != value.numerator() ||
      boost::multiprecision::pow(d, k) != value.denominator())
    return false;
  root = Rational(n, d);
  return true;
}

}  // namespace plab
