#pragma once

#include "breakout/bigint.hpp"
#include "breakout/blocks.hpp"

namespace breakout {

/// Closed range [lo, hi] of brick abscissas already hollowed out by the lower
/// block; the upper block's bottom brick must not start inside it.
struct ForbiddenInterval {
  BigInt lo;
  BigInt hi;

  bool contains(const BigInt& x) const { return lo <= x && x <= hi; }
  BigInt width() const { return hi - lo + 1; }
  friend bool operator==(const ForbiddenInterval&, const ForbiddenInterval&) = default;
};

struct StackVerdict {
  BigInt xbar;
  int zeta = 0;
  ForbiddenInterval interval;
  bool stackable = false;
};

/// 1 when alpha_2 of `lower` and alpha_1 of `upper` share parity.
int zeta(const TernaryBlock& lower, const TernaryBlock& upper);

/// Abscissa of the left edge of the upper block's bottom brick, in the lower
/// block's frame.
BigInt stack_abscissa(const TernaryBlock& lower, const TernaryBlock& upper);

ForbiddenInterval forbidden_interval(const TernaryBlock& lower);

/// Overlap test used as the stacking predicate. Requires both blocks to be
/// elementary unless `raw` is set.
StackVerdict stacks_on(const TernaryBlock& upper, const TernaryBlock& lower, bool raw = false);

enum class Parity { Even, Odd };
enum class Rho1Class { Interior, Zero, Full };

inline Parity parity_of(const BigInt& v) { return is_even(v) ? Parity::Even : Parity::Odd; }
Rho1Class rho1_class_of(const AlphaRho& a);

/// Offset of X-bar for the (lower, upper) pair relative to (Lambda, Lambda),
/// expressed through Lambda's alpha_2 parity and its (alpha_1, rho_1) class.
/// Throws std::invalid_argument for pairs outside the eleven period pairs.
int pair_offset(BlockKind lower, BlockKind upper, Parity alpha2, Parity alpha1, Rho1Class rho1);

/// Whether (lower, upper) is one of the eleven pairs the offset calculus covers.
bool is_period_pair(BlockKind lower, BlockKind upper);

}  // namespace breakout
