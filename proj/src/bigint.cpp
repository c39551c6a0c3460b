#include "breakout/bigint.hpp"

#include <limits>

namespace breakout {

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt of a negative number");
  if (n < 2) return n;
  // Start above the root: 2^(floor(bits/2)+1) > sqrt(n).
  const auto bits = boost::multiprecision::msb(n);
  BigInt x = BigInt(1) << (bits / 2 + 1);
  while (true) {
    BigInt y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  BigInt v = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
    v = v * 10 + (c - '0');
  }
  return negative ? BigInt(-v) : v;
}

std::string to_string(const BigInt& v) { return v.str(); }

long long to_int64(const BigInt& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw DomainError("integer " + v.str() + " exceeds 64-bit range");
  return v.convert_to<long long>();
}

}  // namespace breakout
