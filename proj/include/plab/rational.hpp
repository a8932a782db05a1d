#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace plab {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT: implicit by intent
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p/q" or "p", optional leading '-', no whitespace or decimals.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  // Always "p/q", even for integers ("3/1").
  std::string str() const;

  int sign() const { return value_.sign(); }
  bool is_zero() const { return value_.is_zero(); }

  Rational pow(unsigned exponent) const;
  Rational reciprocal() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  boost::multiprecision::cpp_rational value_;
};

// Least common multiple of the denominators.
BigInt common_denominator(const BigInt& a, const BigInt& b);

// Exact k-th root when `value` is a perfect k-th power of a non-negative rational.
bool exact_root(const Rational& value, unsigned k, Rational& root);

// Largest integer r >= 0 with r^k <= n.
BigInt integer_root_floor(const BigInt& n, unsigned k);

}  // namespace plab
