#include <random>
#include <set>

#include <gtest/gtest.h>

#include "breakout/classifier.hpp"
#include "breakout/simulator.hpp"
#include "oracles.hpp"

using namespace breakout;

namespace {

// Horizontal distance travelled before each event.
std::vector<Rational> distances(const std::vector<OrbitEvent>& events) {
  std::vector<Rational> out;
  Rational d(0), x(0);
  for (const auto& e : events) {
    d += e.hit.x > x ? e.hit.x - x : x - e.hit.x;
    x = e.hit.x;
    out.push_back(d);
  }
  return out;
}

// Folded abscissa after travelling horizontal distance `target`.
Rational abscissa_at(const std::vector<OrbitEvent>& events, const Rational& target) {
  Rational d(0), x(0);
  int dir = 1;
  for (const auto& e : events) {
    const Rational step = e.hit.x > x ? e.hit.x - x : x - e.hit.x;
    if (d + step >= target) return x + Rational(dir) * (target - d);
    d += step;
    x = e.hit.x;
    if (e.edge == Edge::Vertical) dir = -dir;
  }
  throw std::runtime_error("orbit too short");
}

std::vector<OrbitEvent> synthetic(const std::vector<BrickId>& bricks) {
  std::vector<OrbitEvent> out;
  for (std::size_t i = 0; i < bricks.size(); ++i) out.push_back({i, bricks[i], Edge::Vertical, {Rational(0), Rational(0)}});
  return out;
}

struct TestSlope {
  Slope slope;
  Rational y0;
};

// Elementary slopes with q <= 5000 at the ordinates their windows prescribe,
// plus random slopes at random admissible ordinates.
std::vector<TestSlope> test_slopes() {
  std::vector<TestSlope> out;
  for (long long chi : {11, 138, 173, 190, 232, 370, 1828}) {
    for (const auto& v : elementary_slopes(chi, 5000))
      for (const auto& p : v.periods) out.push_back({v.slope, default_ordinate(v.slope, p.window)});
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 60; ++i) {
    const auto c = oracle::random_case(rng, 5000);
    out.push_back({make_slope(c.p, c.q), Rational(BigInt(c.a), BigInt(c.d))});
  }
  return out;
}

}  // namespace

TEST(Simulate, RejectsBadInput) {
  const Slope s = make_slope(1, 2);
  EXPECT_THROW(simulate(s, Rational(0), 10), DomainError);
  EXPECT_THROW(simulate(s, Rational(1), 10), DomainError);
  EXPECT_THROW(simulate(s, Rational(1, 5), 0), DomainError);
}

TEST(Simulate, LatticeHitNamesThePoint) {
  try {
    simulate(make_slope(1, 2), Rational(1, 2), 100);
    FAIL() << "expected a lattice hit";
  } catch (const LatticeDegeneracy& e) {
    // Back west from (0, 1/2) the line meets x = -1 at height 1.
    EXPECT_NE(std::string(e.what()).find("(-1, 1)"), std::string::npos) << e.what();
  }
}

TEST(Simulate, FirstEventIsTheWallAtDistanceZero) {
  const auto ev = simulate(make_slope(1, 138), Rational(1, 300), 5);
  EXPECT_EQ(ev[0].brick, (BrickId{0, 0}));
  EXPECT_EQ(ev[0].edge, Edge::Vertical);
  EXPECT_EQ(ev[0].hit, (Point{Rational(0), Rational(1, 300)}));
  EXPECT_EQ(symbolic_orbit(ev).front(), 'b');
  EXPECT_EQ(symbolic_orbit({}), "");
}

TEST(Simulate, NarrowAndWideArithmeticAgree) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 150; ++i) {
    const auto c = oracle::random_case(rng, 3000);
    const Slope s = make_slope(c.p, c.q);
    const Rational y0(BigInt(c.a), BigInt(c.d));
    ASSERT_EQ(simulate(s, y0, 400, Arithmetic::Narrow), simulate(s, y0, 400, Arithmetic::Wide)) << s.to_string();
  }
}

TEST(Simulate, HugeDenominatorsUseWidePath) {
  const Slope s = make_slope(3, BigInt("3000000000000000001"));
  const Rational y0(BigInt(1), BigInt("6000000000000000002"));
  EXPECT_THROW(simulate(s, y0, 10, Arithmetic::Narrow), DomainError);
  const auto ev = simulate(s, y0, 10);
  EXPECT_EQ(ev, simulate(s, y0, 10, Arithmetic::Wide));
  EXPECT_EQ(ev.size(), 10u);
}

TEST(Simulate, ConservationOverTestSlopes) {
  for (const auto& t : test_slopes()) {
    const auto ev = simulate(t.slope, t.y0, 1500);
    std::set<BrickId> seen;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      ASSERT_EQ(ev[i].index, i);
      ASSERT_NE(ev[i].brick, kOriginHole);
      ASSERT_TRUE(seen.insert(ev[i].brick).second) << t.slope.to_string() << " destroyed twice at " << i;
      // The hit point lies on the struck edge of the brick.
      const Point& h = ev[i].hit;
      if (ev[i].edge == Edge::Vertical) {
        ASSERT_TRUE(h.x == Rational(ev[i].brick.x) || h.x == Rational(ev[i].brick.x + 1));
        ASSERT_TRUE(Rational(ev[i].brick.y) < h.y && h.y < Rational(ev[i].brick.y + 1));
      } else {
        ASSERT_TRUE(h.y == Rational(ev[i].brick.y) || h.y == Rational(ev[i].brick.y + 1));
        ASSERT_TRUE(Rational(ev[i].brick.x) < h.x && h.x < Rational(ev[i].brick.x + 1));
      }
    }
  }
}

// Unfolded ordinate y0 + S d is an integer at every horizontal hit and
// strictly increases from one horizontal hit to the next.
TEST(Simulate, UnfoldedOrdinateIsIntegralAtHorizontalHits) {
  for (const auto& t : test_slopes()) {
    const auto ev = simulate(t.slope, t.y0, 1500);
    const auto d = distances(ev);
    std::optional<BigInt> last;
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ev[i].edge != Edge::Horizontal) continue;
      const Rational unfolded = t.y0 + t.slope.value() * d[i];
      ASSERT_TRUE(unfolded.is_integer()) << t.slope.to_string();
      if (last) {
        ASSERT_GE(unfolded.numerator(), *last + 1) << t.slope.to_string();
      }
      last = unfolded.numerator();
    }
  }
}

TEST(Simulate, ElementaryOrbitsHitEveryHorizontalLineOnce) {
  for (const auto& t : test_slopes()) {
    if (!classify_slope(t.slope).elementary) continue;
    const auto ev = simulate(t.slope, t.y0, 1500);
    const auto d = distances(ev);
    BigInt expected = 1;
    // In an elementary stack every third horizontal crossing passes through
    // the hollow top brick; all others are hits.
    for (std::size_t i = 0; i < ev.size(); ++i) {
      if (ev[i].edge != Edge::Horizontal) continue;
      const BigInt row = (t.y0 + t.slope.value() * d[i]).numerator();
      if (expected % 3 == 0) ++expected;
      ASSERT_EQ(row, expected) << t.slope.to_string() << " event " << i;
      ++expected;
    }
  }
}

TEST(Simulate, CuttingWordMatchesSlicingSequence) {
  for (const auto& t : test_slopes()) {
    const auto ev = simulate(t.slope, t.y0, 1500);
    const auto runs = oracle::runs_of_b(oracle::cutting_word_from_events(ev, t.y0, t.slope.value()));
    ASSERT_GT(runs.size(), 3u);
    const auto seq = slicing_sequence(t.slope, t.y0, runs.size());
    for (std::size_t k = 0; k < runs.size(); ++k) ASSERT_EQ(BigInt(runs[k]), seq[k]) << t.slope.to_string() << " " << k;
  }
}

TEST(Simulate, AbscissaAtBlockBoundariesOfFirstBlock) {
  for (const auto& t : test_slopes()) {
    const auto seq = slicing_sequence(t.slope, t.y0, 3);
    const TernaryBlock b = block_from_slices({seq[0], seq[1], seq[2]});
    const auto ev = simulate(t.slope, t.y0, 1500);
    for (const AlphaRho& c : b.coords)
      ASSERT_EQ(abscissa_at(ev, Rational(triangular_index(c))), Rational(excursion_abscissa(c)))
          << t.slope.to_string() << " " << to_string(c);
  }
}

TEST(Simulate, NonElementaryBlockBreaksFreshBrick) {
  // Slope 1/41: the third horizontal crossing strikes a new brick.
  const Slope s41 = make_slope(1, 41);
  const Rational y41(1, 100);
  const auto ev = simulate(s41, y41, 80);
  const auto d = distances(ev);
  const Rational third = (Rational(3) - y41) / s41.value();
  std::optional<std::size_t> top, at_third;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    if (ev[i].edge == Edge::Horizontal && !top) top = i;
    if (d[i] == third) at_third = i;
  }
  ASSERT_TRUE(top && at_third);
  EXPECT_EQ(ev[*at_third].edge, Edge::Horizontal);
  EXPECT_NE(ev[*at_third].brick, ev[*top].brick);

  // Slope 1/138: nothing is destroyed there.
  const Slope s138 = make_slope(1, 138);
  const auto ev138 = simulate(s138, Rational(1, 300), 40);
  const auto d138 = distances(ev138);
  const Rational third138 = (Rational(3) - Rational(1, 300)) / s138.value();
  for (const Rational& x : d138) EXPECT_NE(x, third138);
}

TEST(Periodicity, SyntheticPreperiodAndPeriod) {
  std::vector<BrickId> bricks;
  for (int i = 0; i < 5; ++i) bricks.push_back({100 + i, -50});
  const BrickId shape[] = {{0, 0}, {1, 0}, {1, 1}, {-1, 1}};
  for (int k = 0; k < 8; ++k)
    for (const auto& b : shape) bricks.push_back({b.x + 3 * k, b.y + 2 * k});
  const auto r = detect_relative_periodicity(synthetic(bricks), 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->preperiod, 5u);
  EXPECT_EQ(r->period, 4u);
  EXPECT_EQ(r->translation, (std::array<long long, 2>{3, 2}));
  EXPECT_TRUE(r->uniform);
  EXPECT_FALSE(detect_relative_periodicity(synthetic(std::vector<BrickId>(bricks.begin(), bricks.begin() + 15)), 3));
}

TEST(Periodicity, SyntheticAlternatingHalfStrips) {
  // Two mirrored runs advancing in opposite directions.
  std::vector<BrickId> bricks;
  for (int k = 0; k < 12; ++k) {
    bricks.push_back({2 * k, k});
    bricks.push_back({-2 * k - 10, -k});
  }
  const auto r = detect_relative_periodicity(synthetic(bricks), 3);
  ASSERT_TRUE(r);
  EXPECT_FALSE(r->uniform);
  EXPECT_EQ(r->period, 2u);
  EXPECT_EQ(r->translations.size(), 2u);
}

TEST(Periodicity, OneOverOneThirtyEight) {
  const auto ev = simulate(make_slope(1, 138), Rational(1, 300), 800);
  const auto r = detect_relative_periodicity(ev, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->preperiod, 0u);
  // Consecutive blocks are mirror images; two of them realign the orbit.
  EXPECT_EQ(r->period, 2 * bricks_per_period(Period{{BlockKind::Lambda}}, 138));
  EXPECT_EQ(r->translation, (std::array<long long, 2>{0, 2}));
  EXPECT_TRUE(r->uniform);
}

TEST(Periodicity, ThreeOverThirtyFour) {
  const auto ev = simulate(make_slope(3, 34), Rational(5, 68), 300);
  const auto r = detect_relative_periodicity(ev, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->preperiod, 0u);
  EXPECT_EQ(r->period, 10u);
  EXPECT_EQ(r->translation, (std::array<long long, 2>{2, 1}));
}

TEST(Periodicity, OneThirdHasPreperiod) {
  const auto ev = simulate(make_slope(1, 3), Rational(1, 7), 500);
  const auto r = detect_relative_periodicity(ev, 3);
  ASSERT_TRUE(r);
  EXPECT_GT(r->preperiod, 0u);
  EXPECT_GT(r->period, 0u);
}

TEST(Periodicity, OneHalfSplitsOverTwoHalfStrips) {
  const auto ev = simulate(make_slope(1, 2), Rational(1, 5), 400);
  const auto r = detect_relative_periodicity(ev, 3);
  ASSERT_TRUE(r);
  EXPECT_FALSE(r->uniform);
  EXPECT_EQ(r->translations.size(), 2u);
}

TEST(Prediction, BricksPerBlock) {
  EXPECT_EQ(bricks_per_period(Period{{BlockKind::Lambda}}, 138), 31u);
  EXPECT_EQ(bricks_per_period(Period{{BlockKind::Lambda, BlockKind::Lambda0Minus}}, 138), 62u);
  EXPECT_EQ(predict_elementary_orbit(Period{{BlockKind::Lambda}}, 138, 3).size(), 93u);
  EXPECT_THROW(predict_elementary_orbit(Period{}, 138, 1), DomainError);
}

TEST(Prediction, MatchesSimulationForOneThirtyEight) {
  const auto want = predict_elementary_orbit(Period{{BlockKind::Lambda}}, 138, 3);
  const auto got = simulate(make_slope(1, 138), Rational(1, 300), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(got[i].brick, want[i].brick) << i;
    EXPECT_EQ(got[i].edge, want[i].edge) << i;
  }
}

TEST(Verify, Examples) {
  EXPECT_TRUE(verify_elementary_sequence(make_slope(1, 138), Rational(1, 276), Period{{BlockKind::Lambda}}, 10));
  EXPECT_TRUE(verify_elementary_sequence(make_slope(3, 34), Rational(5, 68), Period{{BlockKind::Lambda2Plus}}, 10));
  EXPECT_TRUE(verify_elementary_sequence(make_slope(6, 827), Rational(5, 1654),
                                         Period{{BlockKind::Lambda, BlockKind::Lambda0Minus}}, 10));
  const auto bad = verify_elementary_sequence_report(make_slope(1, 3), Rational(1, 7), Period{{BlockKind::Lambda}}, 1);
  EXPECT_FALSE(bad.passed);
  EXPECT_TRUE(bad.first_mismatch.has_value());
  EXPECT_FALSE(bad.detail.empty());
}

TEST(Verify, WrongWindowFails) {
  // 3/34 from an ordinate outside the 2+ window follows another sequence.
  EXPECT_FALSE(verify_elementary_sequence(make_slope(3, 34), Rational(1, 68), Period{{BlockKind::Lambda2Plus}}, 3));
}
