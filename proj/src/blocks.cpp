#include "breakout/blocks.hpp"

#include <algorithm>
#include <cassert>

namespace breakout {

AlphaRho make_alpha_rho(const BigInt& alpha, const BigInt& rho) {
  if (alpha < 0 || rho < 0 || rho > alpha)
    throw DomainError("invalid (alpha, rho) = (" + alpha.str() + ", " + rho.str() + ")");
  return {alpha, rho};
}

BigInt triangular_index(const AlphaRho& a) { return a.alpha * (a.alpha + 1) / 2 + a.rho + 1; }

AlphaRho inverse_triangular(const BigInt& n) {
  if (n < 1) throw DomainError("triangular index must be >= 1, got " + n.str());
  // alpha is the largest integer with alpha(alpha+1)/2 <= n-1.
  const BigInt m = n - 1;
  const BigInt alpha = (isqrt(8 * m + 1) - 1) / 2;
  return {alpha, m - alpha * (alpha + 1) / 2};
}

BigInt excursion_abscissa(const AlphaRho& a) {
  if (is_even(a.alpha)) return a.alpha / 2 - (a.rho + 1);
  return -(a.alpha + 1) / 2 + (a.rho + 1);
}

AlphaRho step_up(const AlphaRho& a) {
  if (a.rho < a.alpha) return {a.alpha, a.rho + 1};
  return {a.alpha + 1, 0};
}

AlphaRho step_down(const AlphaRho& a) {
  if (a.rho > 0) return {a.alpha, a.rho - 1};
  if (a.alpha == 0) throw DomainError("step_down of (0, 0)");
  return {a.alpha - 1, a.alpha - 1};
}

bool steps_in_place(const AlphaRho& a, int sign) { return sign < 0 ? a.rho > 0 : a.rho < a.alpha; }

std::string_view kind_name(BlockKind kind) {
  switch (kind) {
    case BlockKind::Lambda: return "L";
    case BlockKind::Lambda0Minus: return "L0-";
    case BlockKind::Lambda0Plus: return "L0+";
    case BlockKind::Lambda1Minus: return "L1-";
    case BlockKind::Lambda1Plus: return "L1+";
    case BlockKind::Lambda2Minus: return "L2-";
    case BlockKind::Lambda2Plus: return "L2+";
    case BlockKind::Lambda02Minus: return "L02-";
    case BlockKind::Lambda02Plus: return "L02+";
  }
  return "?";
}

std::optional<BlockKind> parse_kind(std::string_view name) {
  for (BlockKind k : kAllBlockKinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

int adjustment_sign(BlockKind kind) {
  switch (kind) {
    case BlockKind::Lambda: return 0;
    case BlockKind::Lambda0Minus:
    case BlockKind::Lambda1Minus:
    case BlockKind::Lambda2Minus:
    case BlockKind::Lambda02Minus: return -1;
    default: return 1;
  }
}

std::array<BigInt, 3> family_slices(const BlockFamily& family) {
  const BigInt& c = family.chi;
  const BigInt adjusted = c + adjustment_sign(family.kind);
  switch (family.kind) {
    case BlockKind::Lambda: return {c, c, c};
    case BlockKind::Lambda0Minus:
    case BlockKind::Lambda0Plus: return {adjusted, c, c};
    case BlockKind::Lambda1Minus:
    case BlockKind::Lambda1Plus: return {c, adjusted, c};
    case BlockKind::Lambda2Minus:
    case BlockKind::Lambda2Plus: return {c, c, adjusted};
    case BlockKind::Lambda02Minus:
    case BlockKind::Lambda02Plus: return {adjusted, c, adjusted};
  }
  return {c, c, c};
}

TernaryBlock block_from_slices(const std::array<BigInt, 3>& slices) {
  TernaryBlock b;
  BigInt sum = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    if (slices[i] < 1) throw DomainError("block slice must be >= 1, got " + slices[i].str());
    sum += slices[i];
    b.coords[i] = inverse_triangular(sum);
  }
  b.slices = slices;
  return b;
}

TernaryBlock block_from_coords(const std::array<AlphaRho, 3>& coords) {
  TernaryBlock b;
  BigInt previous = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const AlphaRho c = make_alpha_rho(coords[i].alpha, coords[i].rho);
    const BigInt index = triangular_index(c);
    if (index <= previous) throw DomainError("block coordinates must be strictly increasing");
    b.coords[i] = c;
    b.slices[i] = index - previous;
    previous = index;
  }
  return b;
}

namespace {

#ifndef NDEBUG
AlphaRho step(const AlphaRho& a, int sign) { return sign < 0 ? step_down(a) : step_up(a); }

// The same block reached by stepping Lambda's coordinates.
TernaryBlock block_by_stepping(const BlockFamily& family) {
  TernaryBlock lambda = block_from_slices(family_slices({BlockKind::Lambda, family.chi}));
  const int s = adjustment_sign(family.kind);
  auto c = lambda.coords;
  switch (family.kind) {
    case BlockKind::Lambda: break;
    case BlockKind::Lambda0Minus:
    case BlockKind::Lambda0Plus:
      for (auto& x : c) x = step(x, s);
      break;
    case BlockKind::Lambda1Minus:
    case BlockKind::Lambda1Plus:
      c[1] = step(c[1], s);
      c[2] = step(c[2], s);
      break;
    case BlockKind::Lambda2Minus:
    case BlockKind::Lambda2Plus: c[2] = step(c[2], s); break;
    case BlockKind::Lambda02Minus:
    case BlockKind::Lambda02Plus:
      c[0] = step(c[0], s);
      c[1] = step(c[1], s);
      c[2] = step(step(c[2], s), s);
      break;
  }
  return block_from_coords(c);
}
#endif

}  // namespace

TernaryBlock family_block(const BlockFamily& family) {
  if (family.chi < 1) throw DomainError("leading slice must be >= 1, got " + family.chi.str());
  TernaryBlock b = block_from_slices(family_slices(family));
  assert(b == block_by_stepping(family));
  return b;
}

bool is_elementary(const TernaryBlock& block) {
  const auto& [a0, r0] = block.coords[0];
  const auto& [a2, r2] = block.coords[2];
  if (is_even(a0) == is_even(a2)) return a2 - 2 * r2 == a0 - 2 * r0;
  return a2 - 2 * r2 == -a0 + 2 * r0 + 1;
}

std::optional<OpenInterval> primary_ordinate_window(const TernaryBlock& block, const Slope& slope) {
  const Rational s = slope.value();
  Rational lo(0);
  Rational hi = s;
  BigInt partial = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    partial += block.slices[i];
    // (i+1) < y0 + partial*S < (i+1) + S
    const Rational bound = Rational(BigInt(i + 1)) - Rational(partial) * s;
    lo = std::max(lo, bound);
    hi = std::min(hi, bound + s);
  }
  if (lo < hi) return OpenInterval{lo, hi};
  return std::nullopt;
}

std::string to_string(const AlphaRho& a) { return "(" + a.alpha.str() + ", " + a.rho.str() + ")"; }

std::string to_string(const TernaryBlock& block) {
  return "(" + to_string(block.coords[0]) + ", " + to_string(block.coords[1]) + ", " + to_string(block.coords[2]) +
         ")";
}

}  // namespace breakout
