#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "breakout/bigint.hpp"
#include "breakout/kinematics.hpp"
#include "breakout/rational.hpp"

namespace breakout {

/// Position of a horizontal-edge crossing inside the zig-zag of a block:
/// `alpha` completed sweeps, then `rho + 1` further units. 0 <= rho <= alpha.
struct AlphaRho {
  BigInt alpha;
  BigInt rho;

  friend bool operator==(const AlphaRho&, const AlphaRho&) = default;
};

/// Validating constructor.
AlphaRho make_alpha_rho(const BigInt& alpha, const BigInt& rho);

/// |alpha, rho| = alpha(alpha+1)/2 + rho + 1.
BigInt triangular_index(const AlphaRho& a);

/// Unique (alpha, rho) with triangular_index == n, n >= 1.
AlphaRho inverse_triangular(const BigInt& n);

/// Abscissa reached after travelling |alpha, rho| units from the block origin.
BigInt excursion_abscissa(const AlphaRho& a);

/// Successor / predecessor in triangular order (d+ and d-).
AlphaRho step_up(const AlphaRho& a);
AlphaRho step_down(const AlphaRho& a);

/// Whether d* moves (alpha, rho) within its row, i.e. d*(a) = (alpha, rho * 1).
bool steps_in_place(const AlphaRho& a, int sign);

enum class BlockKind {
  Lambda,
  Lambda0Minus,
  Lambda0Plus,
  Lambda1Minus,
  Lambda1Plus,
  Lambda2Minus,
  Lambda2Plus,
  Lambda02Minus,
  Lambda02Plus,
};

inline constexpr std::array<BlockKind, 9> kAllBlockKinds = {
    BlockKind::Lambda,       BlockKind::Lambda0Minus, BlockKind::Lambda0Plus,
    BlockKind::Lambda1Minus, BlockKind::Lambda1Plus,  BlockKind::Lambda2Minus,
    BlockKind::Lambda2Plus,  BlockKind::Lambda02Minus, BlockKind::Lambda02Plus,
};

/// Short names: "L", "L0-", "L0+", ..., "L02+".
std::string_view kind_name(BlockKind kind);
std::optional<BlockKind> parse_kind(std::string_view name);

/// -1, 0 or +1: the sign of the slice adjustment relative to Lambda.
int adjustment_sign(BlockKind kind);

struct BlockFamily {
  BlockKind kind;
  BigInt chi;
};

/// Slice triple of a family block, e.g. Lambda1Plus -> (chi, chi+1, chi).
std::array<BigInt, 3> family_slices(const BlockFamily& family);

/// Three horizontal-edge crossings, in both coordinate and slice form.
struct TernaryBlock {
  std::array<AlphaRho, 3> coords;
  std::array<BigInt, 3> slices;

  /// |Delta| = |alpha_2, rho_2|.
  BigInt size() const { return triangular_index(coords[2]); }

  friend bool operator==(const TernaryBlock&, const TernaryBlock&) = default;
};

TernaryBlock block_from_slices(const std::array<BigInt, 3>& slices);
TernaryBlock block_from_coords(const std::array<AlphaRho, 3>& coords);

/// Throws DomainError when a slice would be < 1.
TernaryBlock family_block(const BlockFamily& family);

/// Third horizontal edge lands on the already broken top brick.
bool is_elementary(const TernaryBlock& block);

/// Initial ordinates y0 in (0, S) for which the slope is primary for `block`.
std::optional<OpenInterval> primary_ordinate_window(const TernaryBlock& block, const Slope& slope);

std::string to_string(const AlphaRho& a);
std::string to_string(const TernaryBlock& block);

}  // namespace breakout
