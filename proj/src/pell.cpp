#include "breakout/pell.hpp"

namespace breakout {

PellSolution make_pell_solution(const BigInt& x, const BigInt& y) {
  if (x <= 0 || y <= 0 || x * x - 3 * y * y != 1)
    throw DomainError("(" + x.str() + ", " + y.str() + ") does not solve x^2 - 3y^2 = 1");
  PellSolution s{x, y, std::nullopt, std::nullopt};
  if (x % 3 == 2 && x >= 26) {
    s.alpha0 = (x - 5) / 3;
    s.alpha2 = y - 1;
  }
  return s;
}

PellSolution fundamental_solution() { return make_pell_solution(2, 1); }

PellSolution next_solution(const PellSolution& previous, const PellSolution& current) {
  return make_pell_solution(4 * current.x - previous.x, 4 * current.y - previous.y);
}

std::vector<PellSolution> qualifying_solutions(std::size_t k) {
  std::vector<PellSolution> out;
  out.reserve(k);
  // (1, 0) is the trivial solution preceding the fundamental one.
  PellSolution previous{1, 0, std::nullopt, std::nullopt};
  PellSolution current = fundamental_solution();
  while (out.size() < k) {
    if (current.alpha0) out.push_back(current);
    PellSolution next = next_solution(previous, current);
    previous = std::move(current);
    current = std::move(next);
  }
  return out;
}

BigInt chi_from_solution(const PellSolution& s) {
  if (!s.alpha0) throw DomainError("solution (" + s.x.str() + ", " + s.y.str() + ") carries no alpha0");
  const BigInt& a = *s.alpha0;
  return a * (a + 1) / 2 + a + 1;
}

}  // namespace breakout
