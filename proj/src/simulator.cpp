#include "breakout/simulator.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_set>

#include "breakout/blocks.hpp"

namespace breakout {

namespace {

struct BrickHash {
  std::size_t operator()(const BrickId& b) const noexcept {
    const auto ux = static_cast<std::uint64_t>(b.x);
    const auto uy = static_cast<std::uint64_t>(b.y);
    return std::hash<std::uint64_t>{}(ux * 0x9E3779B97F4A7C15ULL ^ (uy + 0x632BE59BD9B4E019ULL + (ux << 6)));
  }
};

template <class Int>
Int narrow(const BigInt& v) {
  if constexpr (std::is_same_v<Int, BigInt>) {
    return v;
  } else {
    return static_cast<Int>(to_int64(v));
  }
}

template <class Int>
BigInt widen(const Int& v) {
  return BigInt(v);
}

template <class Int>
Int abs_of(const Int& v) {
  return v < 0 ? Int(-v) : v;
}

// Coordinates are stored as integers over the common denominator M = p*q*d:
// vertical crossings leave y on the 1/(q d) grid and horizontal crossings
// leave x on the 1/(p d) grid.
template <class Int>
std::vector<OrbitEvent> run(const Slope& slope, const Rational& y0, std::size_t max_events) {
  const BigInt scale_big = slope.p() * slope.q() * y0.denominator();
  const Int p = narrow<Int>(slope.p());
  const Int q = narrow<Int>(slope.q());
  const Int scale = narrow<Int>(scale_big);
  Int x = 0;
  Int y = narrow<Int>(y0.numerator() * slope.p() * slope.q());

  long long cx = kOriginHole.x;
  long long cy = kOriginHole.y;
  int sx = 1;
  int sy = 1;

  std::unordered_set<BrickId, BrickHash> destroyed{kOriginHole};
  std::vector<OrbitEvent> events;
  events.reserve(max_events);

  const auto point = [&] { return Point{Rational(widen(x), scale_big), Rational(widen(y), scale_big)}; };

  while (events.size() < max_events) {
    const Int xb = Int(sx > 0 ? cx + 1 : cx) * scale;
    const Int yb = Int(sy > 0 ? cy + 1 : cy) * scale;
    const Int dx = abs_of(Int(xb - x));
    const Int dy = abs_of(Int(yb - y));
    // Horizontal distance to the vertical line is dx; to the horizontal line
    // it is dy * q / p. Compare dx * p against dy * q.
    const Int lhs = dx * p;
    const Int rhs = dy * q;
    if (lhs == rhs) {
      throw LatticeDegeneracy("orbit hits lattice point (" + std::to_string(sx > 0 ? cx + 1 : cx) + ", " +
                              std::to_string(sy > 0 ? cy + 1 : cy) + ")");
    }
    if (lhs < rhs) {
      x = xb;
      y += Int(sy) * (lhs / q);
      const BrickId next{cx + sx, cy};
      if (destroyed.insert(next).second) {
        events.push_back({events.size(), next, Edge::Vertical, point()});
        sx = -sx;
      } else {
        cx = next.x;
      }
    } else {
      y = yb;
      x += Int(sx) * (rhs / p);
      const BrickId next{cx, cy + sy};
      if (destroyed.insert(next).second) {
        events.push_back({events.size(), next, Edge::Horizontal, point()});
        sy = -sy;
      } else {
        cy = next.y;
      }
    }
  }
  return events;
}

bool fits_narrow(const Slope& slope, const Rational& y0, std::size_t max_events) {
  const BigInt scale = slope.p() * slope.q() * y0.denominator();
  const BigInt limit = BigInt(1) << 61;
  // |dx|, |dy| never exceed one cell, so products stay below scale * q;
  // positions stay within (max_events + 4) cells of the origin.
  return scale * slope.q() < limit && scale * (BigInt(max_events) + 4) < limit;
}

}  // namespace

std::vector<OrbitEvent> simulate(const Slope& slope, const Rational& y0, std::size_t max_events,
                                 Arithmetic arithmetic) {
  if (max_events == 0) throw DomainError("max_events must be positive");
  if (!(Rational(0) < y0 && y0 < Rational(1)))
    throw DomainError("initial ordinate " + y0.to_string() + " outside (0, 1)");
  switch (arithmetic) {
    case Arithmetic::Narrow:
      if (!fits_narrow(slope, y0, max_events)) throw DomainError("slope too large for 64-bit simulation");
      return run<long long>(slope, y0, max_events);
    case Arithmetic::Wide: return run<BigInt>(slope, y0, max_events);
    case Arithmetic::Auto: break;
  }
  if (fits_narrow(slope, y0, max_events)) return run<long long>(slope, y0, max_events);
  return run<BigInt>(slope, y0, max_events);
}

std::string symbolic_orbit(std::span<const OrbitEvent> events) {
  std::string word;
  word.reserve(events.size());
  for (const auto& e : events) word += e.edge == Edge::Horizontal ? 'a' : 'b';
  return word;
}

namespace {

using Vec = std::array<long long, 2>;

Vec diff(const BrickId& a, const BrickId& b) { return {a.x - b.x, a.y - b.y}; }

}  // namespace

std::optional<PeriodicityReport> detect_relative_periodicity(std::span<const OrbitEvent> events,
                                                             std::size_t min_confirm) {
  const std::size_t n = events.size();
  const std::size_t confirm = std::max<std::size_t>(min_confirm, 1);
  if (n < 3 * confirm) return std::nullopt;
  const auto shift = [&](std::size_t i, std::size_t period) {
    return diff(events[i + period].brick, events[i].brick);
  };

  // Uniform: one translation per period.
  for (std::size_t period = 1; (confirm + 1) * period < n; ++period) {
    const std::size_t last = n - period - 1;
    const Vec tail = shift(last, period);
    std::size_t start = last;
    while (start > 0 && shift(start - 1, period) == tail) --start;
    const std::size_t window = n - period - start;
    if (window >= confirm * period + 1) {
      return PeriodicityReport{start, period, tail, window, true, {tail}};
    }
  }

  // Phase-dependent: translation repeats with the period.
  for (std::size_t period = 1; (confirm + 2) * period < n; ++period) {
    const std::size_t end = n - 2 * period;  // indices i with i + 2*period < n
    std::size_t start = end;
    while (start > 0 && shift(start - 1, period) == shift(start - 1 + period, period)) --start;
    const std::size_t window = end - start;
    if (window >= confirm * period + 1) {
      std::vector<Vec> distinct;
      for (std::size_t i = start; i < start + period; ++i) distinct.push_back(shift(i, period));
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      return PeriodicityReport{start, period, shift(start, period), window, distinct.size() == 1, distinct};
    }
  }
  return std::nullopt;
}

namespace {

struct CanonicalEvent {
  BigInt key;  // twice the horizontal distance travelled
  long long column;
  long long row;
  Edge edge;
};

// Bricks of one block launched east from abscissa 0 in row 0.
std::vector<CanonicalEvent> canonical_block(const TernaryBlock& block) {
  std::vector<CanonicalEvent> out;
  const BigInt& alpha2 = block.coords[2].alpha;
  for (BigInt k = 0; k <= alpha2; ++k) {
    // Wall reached after k full sweeps; the ball heads east for even k.
    const BigInt wall = is_even(k) ? BigInt(k / 2) : BigInt(-(k + 1) / 2);
    const BigInt column = is_even(k) ? wall : BigInt(wall - 1);
    out.push_back({k * (k + 1), to_int64(column), 0, Edge::Vertical});
  }
  for (std::size_t i = 0; i < 2; ++i) {
    const AlphaRho& c = block.coords[i];
    const BigInt abscissa = excursion_abscissa(c);
    // Sweep alpha+1 heads east when alpha is odd; the edge lies in the cell
    // just behind the abscissa reached at the ceiled distance.
    const BigInt column = is_odd(c.alpha) ? BigInt(abscissa - 1) : abscissa;
    out.push_back({2 * triangular_index(c) - 1, to_int64(column), i == 0 ? 1 : -1, Edge::Horizontal});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

std::size_t checked_size(const BigInt& v) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::size_t>::max() / 4)) throw DomainError("size out of range");
  return v.convert_to<std::size_t>();
}

}  // namespace

std::size_t bricks_per_period(const Period& period, const BigInt& chi) {
  BigInt total = 0;
  for (BlockKind k : period.blocks) total += family_block({k, chi}).coords[2].alpha + 3;
  return checked_size(total);
}

std::vector<PredictedEvent> predict_elementary_orbit(const Period& period, const BigInt& chi, std::size_t n_blocks) {
  if (period.blocks.empty()) throw DomainError("empty period");
  std::vector<TernaryBlock> blocks;
  std::vector<std::vector<CanonicalEvent>> shapes;
  for (BlockKind k : period.blocks) {
    blocks.push_back(family_block({k, chi}));
    shapes.push_back(canonical_block(blocks.back()));
  }

  std::vector<PredictedEvent> out;
  long long origin = 0;  // traveling abscissa at the block start
  int mirror = 1;        // (-1)^(alpha_N)
  for (std::size_t n = 0; n < n_blocks; ++n) {
    const std::size_t slot = n % blocks.size();
    const long long row0 = static_cast<long long>(n);
    bool first = true;
    for (const CanonicalEvent& e : shapes[slot]) {
      // Cell [c, c+1] maps to [origin + m c, origin + m (c+1)].
      const long long column = mirror > 0 ? origin + e.column : origin - e.column - 1;
      PredictedEvent p{{column, row0 + e.row}, e.edge, std::nullopt};
      if (first) p.block_origin = origin;
      first = false;
      out.push_back(p);
    }
    const TernaryBlock& b = blocks[slot];
    origin += mirror * to_int64(excursion_abscissa(b.coords[2]));
    mirror *= sign_pow(b.coords[2].alpha + 1);
  }
  return out;
}

VerificationReport verify_elementary_sequence_report(const Slope& slope, const Rational& y0, const Period& period,
                                                     std::size_t n_periods) {
  VerificationReport r;
  if (period.blocks.empty() || n_periods == 0) {
    r.detail = "nothing to verify";
    return r;
  }
  const BigInt chi = slicing_profile(slope).leading;
  const std::size_t n_blocks = n_periods * period.blocks.size();
  // One more block, up to its bottom brick, confirms the last stacking.
  auto predicted = predict_elementary_orbit(period, chi, n_blocks + 1);
  std::size_t last_start = predicted.size();
  while (!predicted[last_start - 1].block_origin) --last_start;
  --last_start;
  std::size_t keep = last_start, horizontal = 0;
  while (horizontal < 2) horizontal += predicted[keep++].edge == Edge::Horizontal;
  predicted.resize(keep);
  const auto events = simulate(slope, y0, predicted.size());
  r.blocks_checked = n_blocks;

  for (std::size_t i = 0; i < predicted.size(); ++i) {
    const PredictedEvent& want = predicted[i];
    const OrbitEvent& got = events[i];
    std::string problem;
    if (got.brick != want.brick || got.edge != want.edge) {
      problem = "brick (" + std::to_string(got.brick.x) + ", " + std::to_string(got.brick.y) + ") " +
                (got.edge == Edge::Horizontal ? "h" : "v") + ", expected (" + std::to_string(want.brick.x) + ", " +
                std::to_string(want.brick.y) + ") " + (want.edge == Edge::Horizontal ? "h" : "v");
    } else if (want.block_origin && got.hit.x != Rational(*want.block_origin)) {
      problem = "block starts at x = " + got.hit.x.to_string() + ", expected " + std::to_string(*want.block_origin);
    } else if (want.edge == Edge::Horizontal &&
               !(Rational(want.brick.x) < got.hit.x && got.hit.x < Rational(want.brick.x + 1))) {
      problem = "horizontal hit at x = " + got.hit.x.to_string() + " outside its brick";
    }
    if (!problem.empty()) {
      r.first_mismatch = i;
      r.detail = "event " + std::to_string(i) + ": " + problem;
      r.events_checked = i;
      return r;
    }
  }
  r.events_checked = predicted.size();
  r.passed = true;
  return r;
}

bool verify_elementary_sequence(const Slope& slope, const Rational& y0, const Period& period, std::size_t n_periods) {
  return verify_elementary_sequence_report(slope, y0, period, n_periods).passed;
}

}  // namespace breakout
