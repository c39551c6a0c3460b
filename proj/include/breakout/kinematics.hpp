#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "breakout/bigint.hpp"
#include "breakout/rational.hpp"

namespace breakout {

/// Direction of the ball at launch: the reduced fraction p/q with 0 < p < q.
class Slope {
 public:
  const BigInt& p() const { return p_; }
  const BigInt& q() const { return q_; }
  Rational value() const { return Rational(p_, q_); }
  std::string to_string() const { return p_.str() + "/" + q_.str(); }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend Slope make_slope(const BigInt& p, const BigInt& q);

 private:
  Slope(BigInt p, BigInt q) : p_(std::move(p)), q_(std::move(q)) {}
  BigInt p_;
  BigInt q_;
};

/// Reduces p/q; throws DomainError unless 0 < p/q < 1.
Slope make_slope(const BigInt& p, const BigInt& q);

/// Value distribution of the slicing sequences of a slope.
///
/// `1 = lambda0 * S + mu0` with `mu0` in (0, S); for S = 1/chi the relation is
/// exact, `mu0` is stored as 0 and only the leading slice exists. Run lengths of
/// the leading slice are `lambda1` or `lambda1 + 1` where
/// `1 = lambda1 * S' + mu1`, `mu1` in [0, S').
struct SlicingProfile {
  BigInt lambda0;
  Rational mu0;
  BigInt leading;
  std::optional<BigInt> correcting;
  std::optional<BigInt> lambda1;
  std::optional<Rational> mu1;
  std::optional<Rational> s_prime;

  bool single_slice() const { return !correcting.has_value(); }
};

SlicingProfile slicing_profile(const Slope& slope);

/// y0 + S * n.
Rational traveling_ordinate(const Slope& slope, const Rational& y0, const BigInt& n);

/// First `count` terms of the slicing sequence started at ordinate y0 in (0, S).
/// Throws LatticeDegeneracy when a crossing lands exactly on an integer ordinate.
std::vector<BigInt> slicing_sequence(const Slope& slope, const Rational& y0, std::size_t count);

/// True when the orbit launched from (0, y0) with this slope meets Z^2.
bool hits_lattice(const Slope& slope, const Rational& y0);

/// Midpoint of `window`, nudged off lattice-degenerate ordinates.
Rational default_ordinate(const Slope& slope, const OpenInterval& window);

/// The interval (0, S) of admissible slicing-sequence start ordinates.
inline OpenInterval phase_interval(const Slope& slope) { return {Rational(0), slope.value()}; }

}  // namespace breakout
