#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "breakout/bigint.hpp"

namespace breakout {

/// Exact rational number, always reduced with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : value_(n) {}      // NOLINT(google-explicit-constructor)
  Rational(int n) : value_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool is_integer() const { return denominator() == 1; }
  BigInt floor() const;
  BigInt ceil() const;
  /// Nearest double; for drawing only.
  double to_double() const { return value_.convert_to<double>(); }

  Rational operator-() const { return Rational(Raw(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "num/den", or just "num" when requested for integers via to_string_compact.
  std::string to_string() const;
  std::string to_string_compact() const;

  /// Accepts "a/b" or "a"; rejects zero denominators.
  static Rational parse(std::string_view text);

 private:
  using Raw = boost::multiprecision::cpp_rational;
  explicit Rational(Raw v) : value_(std::move(v)) {}
  Raw value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

/// Open interval (lo, hi) of rationals; empty intervals are never constructed.
struct OpenInterval {
  Rational lo;
  Rational hi;

  bool contains(const Rational& v) const { return lo < v && v < hi; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

}  // namespace breakout
