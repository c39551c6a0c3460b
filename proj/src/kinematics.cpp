#include "breakout/kinematics.hpp"

namespace breakout {

Slope make_slope(const BigInt& p, const BigInt& q) {
  if (p <= 0 || q <= 0) throw DomainError("slope terms must be positive: " + p.str() + "/" + q.str());
  if (p >= q) throw DomainError("slope must lie in (0,1): " + p.str() + "/" + q.str());
  const BigInt g = boost::multiprecision::gcd(p, q);
  return Slope(p / g, q / g);
}

SlicingProfile slicing_profile(const Slope& slope) {
  const BigInt& p = slope.p();
  const BigInt& q = slope.q();
  SlicingProfile out;
  out.lambda0 = q / p;
  if (p == 1) {
    out.mu0 = Rational(0);
    out.leading = out.lambda0;
    return out;
  }
  // Over one period of p slices summing to q: `big` slices of lambda0+1 and
  // `small` slices of lambda0.
  const BigInt big = q - out.lambda0 * p;
  const BigInt small = p - big;
  out.mu0 = Rational(big, q);

  // Ties (small == big, e.g. 2/5) resolve to lambda0.
  if (small >= big) {
    out.leading = out.lambda0;
    out.correcting = out.lambda0 + 1;
  } else {
    out.leading = out.lambda0 + 1;
    out.correcting = out.lambda0;
  }
  const Rational ratio(small, big);
  out.s_prime = ratio < Rational(1) ? ratio : Rational(1) / ratio;
  out.lambda1 = (Rational(1) / *out.s_prime).floor();
  out.mu1 = Rational(1) - Rational(*out.lambda1) * *out.s_prime;
  return out;
}

Rational traveling_ordinate(const Slope& slope, const Rational& y0, const BigInt& n) {
  if (!phase_interval(slope).contains(y0))
    throw DomainError("initial ordinate " + y0.to_string() + " outside (0, " + slope.to_string() + ")");
  return y0 + slope.value() * Rational(n);
}

std::vector<BigInt> slicing_sequence(const Slope& slope, const Rational& y0, std::size_t count) {
  if (!phase_interval(slope).contains(y0))
    throw DomainError("initial ordinate " + y0.to_string() + " outside (0, " + slope.to_string() + ")");
  const Rational s = slope.value();
  std::vector<BigInt> out;
  out.reserve(count);
  BigInt previous = 0;
  for (std::size_t n = 0; n < count; ++n) {
    // Smallest partial sum lifting the ordinate strictly above n+1.
    const Rational level = Rational(BigInt(n + 1));
    const Rational steps = (level - y0) / s;
    if (steps.is_integer())
      throw LatticeDegeneracy("orbit crosses lattice point at horizontal distance " + steps.to_string_compact() +
                              ", ordinate " + level.to_string_compact());
    BigInt partial = steps.floor() + 1;
    out.push_back(partial - previous);
    previous = std::move(partial);
  }
  return out;
}

bool hits_lattice(const Slope& slope, const Rational& y0) { return (y0 * Rational(slope.q())).is_integer(); }

Rational default_ordinate(const Slope& slope, const OpenInterval& window) {
  Rational y = window.midpoint();
  for (int attempt = 0; attempt < 8 && hits_lattice(slope, y); ++attempt) {
    y += Rational(BigInt(1), 2 * slope.q() * y.denominator());
  }
  if (hits_lattice(slope, y) || !window.contains(y))
    throw LatticeDegeneracy("no lattice-free default ordinate in (" + window.lo.to_string() + ", " +
                            window.hi.to_string() + ")");
  return y;
}

}  // namespace breakout
