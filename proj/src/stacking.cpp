#include "breakout/stacking.hpp"

#include <stdexcept>
#include <utility>

namespace breakout {

int zeta(const TernaryBlock& lower, const TernaryBlock& upper) {
  return is_even(lower.coords[2].alpha) == is_even(upper.coords[1].alpha) ? 1 : 0;
}

BigInt stack_abscissa(const TernaryBlock& lower, const TernaryBlock& upper) {
  const BigInt& alpha2 = lower.coords[2].alpha;
  return excursion_abscissa(lower.coords[2]) + sign_pow(alpha2 + 1) * excursion_abscissa(upper.coords[1]) -
         zeta(lower, upper);
}

ForbiddenInterval forbidden_interval(const TernaryBlock& lower) {
  const BigInt& a2 = lower.coords[2].alpha;
  if (is_even(a2)) return {-a2 / 2 - 1, a2 / 2};
  return {-(a2 + 1) / 2 - 1, (a2 - 1) / 2};
}

StackVerdict stacks_on(const TernaryBlock& upper, const TernaryBlock& lower, bool raw) {
  if (!raw && (!is_elementary(upper) || !is_elementary(lower)))
    throw DomainError("stacking is defined for elementary blocks only");
  StackVerdict v;
  v.zeta = zeta(lower, upper);
  v.xbar = stack_abscissa(lower, upper);
  v.interval = forbidden_interval(lower);
  v.stackable = !v.interval.contains(v.xbar);
  return v;
}

Rho1Class rho1_class_of(const AlphaRho& a) {
  if (a.rho == 0) return Rho1Class::Zero;
  if (a.rho == a.alpha) return Rho1Class::Full;
  return Rho1Class::Interior;
}

namespace {

enum class Slot { Base, Zero, One, Two };

Slot slot_of(BlockKind k) {
  switch (k) {
    case BlockKind::Lambda: return Slot::Base;
    case BlockKind::Lambda0Minus:
    case BlockKind::Lambda0Plus: return Slot::Zero;
    case BlockKind::Lambda1Minus:
    case BlockKind::Lambda1Plus: return Slot::One;
    case BlockKind::Lambda2Minus:
    case BlockKind::Lambda2Plus: return Slot::Two;
    default: throw std::invalid_argument("no offset for block kind " + std::string(kind_name(k)));
  }
}

}  // namespace

bool is_period_pair(BlockKind lower, BlockKind upper) {
  using K = BlockKind;
  static constexpr std::pair<K, K> kPairs[] = {
      {K::Lambda0Minus, K::Lambda0Minus}, {K::Lambda1Minus, K::Lambda1Minus}, {K::Lambda2Minus, K::Lambda2Minus},
      {K::Lambda0Minus, K::Lambda},       {K::Lambda, K::Lambda0Minus},       {K::Lambda, K::Lambda},
      {K::Lambda, K::Lambda0Plus},        {K::Lambda0Plus, K::Lambda},        {K::Lambda0Plus, K::Lambda0Plus},
      {K::Lambda1Plus, K::Lambda1Plus},   {K::Lambda2Plus, K::Lambda2Plus},
  };
  for (const auto& [l, u] : kPairs)
    if (l == lower && u == upper) return true;
  return false;
}

int pair_offset(BlockKind lower, BlockKind upper, Parity alpha2, Parity alpha1, Rho1Class rho1) {
  if (!is_period_pair(lower, upper))
    throw std::invalid_argument("unknown pair (" + std::string(kind_name(lower)) + ", " +
                                std::string(kind_name(upper)) + ")");
  const int flip_lower = alpha2 == Parity::Even ? -1 : 1;        // (-1)^(alpha2+1)
  const int flip_upper = alpha2 == alpha1 ? 1 : -1;              // (-1)^(alpha2+alpha1)

  // Every adjusted block shifts |Delta| (its alpha_2 coordinate).
  int eps0 = 0;
  if (slot_of(lower) != Slot::Base) eps0 = adjustment_sign(lower) * flip_lower;

  // Only blocks whose second partial sum is adjusted move (alpha_1, rho_1);
  // when that move leaves the row the two X-bar terms cancel.
  int eps1 = 0;
  const Slot up = slot_of(upper);
  if (up == Slot::Zero || up == Slot::One) {
    const int s = adjustment_sign(upper);
    const bool in_place = s < 0 ? rho1 != Rho1Class::Zero : rho1 != Rho1Class::Full;
    if (in_place) eps1 = s * flip_upper;
  }
  return eps0 + eps1;
}

}  // namespace breakout
