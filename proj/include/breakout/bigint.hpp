#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace breakout {

using BigInt = boost::multiprecision::cpp_int;

/// Thrown for inputs that are well-formed but mathematically inadmissible
/// (degenerate slopes, lattice hits, out-of-range ordinates).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The orbit touched a point of Z^2.
class LatticeDegeneracy : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Floor of the square root of a non-negative integer (Newton iteration,
/// exact for any size).
BigInt isqrt(const BigInt& n);

BigInt parse_bigint(std::string_view text);
std::string to_string(const BigInt& v);

inline bool is_even(const BigInt& v) { return !boost::multiprecision::bit_test(abs(v), 0); }
inline bool is_odd(const BigInt& v) { return !is_even(v); }

/// (-1)^e as +1 / -1.
inline int sign_pow(const BigInt& e) { return is_even(e) ? 1 : -1; }

/// Narrowing conversion that throws when the value does not fit.
long long to_int64(const BigInt& v);

}  // namespace breakout
