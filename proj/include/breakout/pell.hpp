#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "breakout/bigint.hpp"

namespace breakout {

/// Solution of x^2 - 3y^2 = 1. When x = 2 (mod 3) and x >= 26 it encodes a
/// Lambda block with rho_0 = alpha_0 through (3 alpha_0 + 5, alpha_2 + 1) = (x, y).
struct PellSolution {
  BigInt x;
  BigInt y;
  std::optional<BigInt> alpha0;
  std::optional<BigInt> alpha2;

  friend bool operator==(const PellSolution&, const PellSolution&) = default;
};

PellSolution make_pell_solution(const BigInt& x, const BigInt& y);

/// (2, 1).
PellSolution fundamental_solution();

/// Next solution after `current`, given the one before it (x' = 4x - x_prev).
PellSolution next_solution(const PellSolution& previous, const PellSolution& current);

/// First k solutions carrying (alpha0, alpha2), ascending in x.
std::vector<PellSolution> qualifying_solutions(std::size_t k);

/// |alpha0, alpha0| = alpha0(alpha0+1)/2 + alpha0 + 1.
BigInt chi_from_solution(const PellSolution& s);

}  // namespace breakout
