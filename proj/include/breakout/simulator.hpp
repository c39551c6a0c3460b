#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "breakout/classifier.hpp"
#include "breakout/kinematics.hpp"
#include "breakout/rational.hpp"

namespace breakout {

/// Lower-left corner of a unit brick.
struct BrickId {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const BrickId&, const BrickId&) = default;
  friend auto operator<=>(const BrickId&, const BrickId&) = default;
};

/// Brick present before launch only as the empty origin cell.
inline constexpr BrickId kOriginHole{-1, 0};

enum class Edge { Horizontal, Vertical };

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

/// One destroyed brick.
struct OrbitEvent {
  std::size_t index = 0;
  BrickId brick;
  Edge edge = Edge::Vertical;
  Point hit;

  friend bool operator==(const OrbitEvent&, const OrbitEvent&) = default;
};

/// Integer width used by the stepping loop. `Auto` picks 64-bit when the
/// scaled coordinates provably fit and falls back to arbitrary precision.
enum class Arithmetic { Auto, Narrow, Wide };

/// Launches a ball from (0, y0) heading north-east with the given slope over
/// the full brick plane minus the origin cell, and records the first
/// `max_events` destroyed bricks. Throws LatticeDegeneracy on a Z^2 hit.
std::vector<OrbitEvent> simulate(const Slope& slope, const Rational& y0, std::size_t max_events,
                                 Arithmetic arithmetic = Arithmetic::Auto);

/// 'a' per horizontal-edge destruction, 'b' per vertical one.
std::string symbolic_orbit(std::span<const OrbitEvent> events);

struct PeriodicityReport {
  std::size_t preperiod = 0;
  std::size_t period = 0;
  std::array<long long, 2> translation{};
  std::size_t verified_window = 0;
  /// False when the per-period translation depends on the position inside the
  /// period (orbits split over two half-strips).
  bool uniform = true;
  std::vector<std::array<long long, 2>> translations;

  friend bool operator==(const PeriodicityReport&, const PeriodicityReport&) = default;
};

/// Smallest period, then smallest preperiod, such that z[n+period] - z[n] is
/// constant from the preperiod to the end of the list and over at least
/// `min_confirm` periods. When no such period exists, retries allowing the
/// translation to depend on n mod period.
std::optional<PeriodicityReport> detect_relative_periodicity(std::span<const OrbitEvent> events,
                                                             std::size_t min_confirm);

/// Expected destruction of an elementary sequence.
struct PredictedEvent {
  BrickId brick;
  Edge edge = Edge::Vertical;
  /// Set on the first brick of each block: abscissa of the wall being hit.
  std::optional<long long> block_origin;
};

/// Destroyed bricks of `n_blocks` blocks of the periodic elementary sequence.
std::vector<PredictedEvent> predict_elementary_orbit(const Period& period, const BigInt& chi, std::size_t n_blocks);

/// Bricks destroyed over one period: sum of alpha_2 + 3 over its blocks.
std::size_t bricks_per_period(const Period& period, const BigInt& chi);

struct VerificationReport {
  bool passed = false;
  std::size_t events_checked = 0;
  std::size_t blocks_checked = 0;
  std::optional<std::size_t> first_mismatch;
  std::string detail;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport verify_elementary_sequence_report(const Slope& slope, const Rational& y0, const Period& period,
                                                     std::size_t n_periods);

/// Simulates n_periods of the claimed sequence and checks every destroyed
/// brick, edge and block origin against the prediction, continuing into the
/// next block through its bottom brick so the final stacking is confirmed.
bool verify_elementary_sequence(const Slope& slope, const Rational& y0, const Period& period, std::size_t n_periods);

}  // namespace breakout
