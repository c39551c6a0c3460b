#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "breakout/bigint.hpp"
#include "breakout/blocks.hpp"
#include "breakout/kinematics.hpp"
#include "breakout/rational.hpp"

namespace breakout {

/// The nine stacking conditions at a leading slice, declared in the order the
/// condition sets are conventionally listed.
enum class Condition : std::uint8_t {
  TwoMinus,
  OneMinus,
  ZeroMinus,
  EZeroMinus,
  E,
  EZeroPlus,
  ZeroPlus,
  OnePlus,
  TwoPlus,
};

inline constexpr std::array<Condition, 9> kAllConditions = {
    Condition::TwoMinus, Condition::OneMinus, Condition::ZeroMinus, Condition::EZeroMinus, Condition::E,
    Condition::EZeroPlus, Condition::ZeroPlus, Condition::OnePlus,  Condition::TwoPlus,
};

std::string_view condition_name(Condition c);
std::optional<Condition> parse_condition(std::string_view name);

class ConditionSet {
 public:
  ConditionSet() = default;
  ConditionSet(std::initializer_list<Condition> members) {
    for (Condition c : members) insert(c);
  }

  void insert(Condition c) { bits_ |= bit(c); }
  bool contains(Condition c) const { return (bits_ & bit(c)) != 0; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<Condition> members() const;

  friend bool operator==(const ConditionSet&, const ConditionSet&) = default;

 private:
  static std::uint16_t bit(Condition c) { return static_cast<std::uint16_t>(1u << static_cast<unsigned>(c)); }
  std::uint16_t bits_ = 0;
};

std::string to_string(const ConditionSet& set);

/// Evaluates all nine conditions at leading slice chi (chi >= 2).
ConditionSet condition_set(const BigInt& chi);

/// p = 1, or 3 | p and q = +-1 (mod p).
bool necessary_filter(const Slope& slope);

/// Repeating unit of an elementary sequence, e.g. L^2 L0- rendered "(L^2 L0-)^inf".
struct Period {
  std::vector<BlockKind> blocks;

  std::string to_string() const;
  static Period parse(std::string_view text);
  friend bool operator==(const Period&, const Period&) = default;
};

struct ElementaryPeriod {
  Period period;
  OpenInterval window;
  BigInt chi;
  Condition condition;

  friend bool operator==(const ElementaryPeriod&, const ElementaryPeriod&) = default;
};

enum class VerdictReason { FailsNecessary, NoConditionHolds, Elementary };
std::string_view reason_name(VerdictReason r);
std::optional<VerdictReason> parse_reason(std::string_view name);

struct SlopeVerdict {
  Slope slope;
  bool elementary = false;
  VerdictReason reason = VerdictReason::FailsNecessary;
  std::vector<ElementaryPeriod> periods;

  friend bool operator==(const SlopeVerdict&, const SlopeVerdict&) = default;
};

SlopeVerdict classify_slope(const Slope& slope);

/// Every elementary slope whose leading slice is chi, with denominator <= q_max.
std::vector<SlopeVerdict> elementary_slopes(const BigInt& chi, const BigInt& q_max);

using Census = std::map<BigInt, ConditionSet>;

/// Nonempty condition sets for chi in [lo, hi], split over `jobs` threads.
Census census(const BigInt& lo, const BigInt& hi, unsigned jobs = 1);

}  // namespace breakout
