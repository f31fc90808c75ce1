#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>
#include <vector>

#include "odds/errors.hpp"
#include "odds/oracle.hpp"
#include "odds/strategy.hpp"

using namespace odds;

namespace {

OddsSequence halves(int n) {
  return OddsSequence(std::vector<Rational>(static_cast<size_t>(n), Rational(1, 2)));
}

}  // namespace

TEST_CASE("counter generator is a pure function of seed and counter") {
  CounterRng a{42}, b{42}, c{43};
  for (uint64_t i = 0; i < 100; ++i) {
    CHECK(a.at(i) == b.at(i));
    CHECK(a.uniform(i) == b.uniform(i));
  }
  int diff = 0;
  for (uint64_t i = 0; i < 100; ++i) diff += a.at(i) != c.at(i);
  CHECK(diff == 100);
}

TEST_CASE("uniforms land in the half-open unit interval and spread out") {
  CounterRng rng{7};
  double lo = 1, hi = 0;
  for (uint64_t i = 0; i < 10000; ++i) {
    double u = rng.uniform(i);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo < 0.01);
  CHECK(hi > 0.99);
}

TEST_CASE("bounded draws cover their range") {
  CounterRng rng{11};
  std::set<uint64_t> seen;
  for (uint64_t i = 0; i < 300; ++i) {
    uint64_t v = rng.below(i, 6);
    CHECK(v < 6);
    seen.insert(v);
  }
  CHECK(seen.size() == 6);
}

TEST_CASE("enumeration reproduces closed-form values") {
  OracleResult res = enumerate_win_probability(halves(3), ThresholdVector{{2}});
  CHECK(res.exact);
  CHECK(res.probability == Rational(1, 2));
  CHECK(res.trials == 8);  // 2^3 outcomes walked

  OddsSequence s({{1, 3}, {2, 5}, {1, 2}, {3, 7}});
  ThresholdVector t{{2, 3}};
  CHECK(enumerate_win_probability(s, t).probability == win_probability(s, t));
}

TEST_CASE("enumeration is capped") {
  CHECK_THROWS_AS(enumerate_win_probability(halves(23), ThresholdVector{{2}}), budget_error);
}

TEST_CASE("estimates are reproducible and shard-invariant") {
  OddsSequence s = halves(6);
  ThresholdVector t{{3, 5}};
  OracleResult base = monte_carlo_win_probability(s, t, 40000, 12345, 1);
  for (int shards : {2, 3, 7, 0}) {
    OracleResult again = monte_carlo_win_probability(s, t, 40000, 12345, shards);
    CHECK(again.wins == base.wins);
    CHECK(again.estimate == base.estimate);
  }
  OracleResult other = monte_carlo_win_probability(s, t, 40000, 54321, 1);
  CHECK(other.wins != base.wins);  // astronomically unlikely to collide
}

TEST_CASE("estimates land near the exact value") {
  OddsSequence s = halves(6);
  ThresholdVector t{{3, 5}};
  double exact = rat_to_double(enumerate_win_probability(s, t).probability);
  OracleResult mc = monte_carlo_win_probability(s, t, 100000, 2024, 0);
  CHECK(mc.std_error > 0);
  CHECK(std::abs(mc.estimate - exact) <= 5 * mc.std_error);
}

TEST_CASE("standard error shrinks like the square root of the trial count") {
  OddsSequence s = halves(5);
  ThresholdVector t{{4, 5}};
  OracleResult small = monte_carlo_win_probability(s, t, 20000, 9, 1);
  OracleResult large = monte_carlo_win_probability(s, t, 80000, 9, 1);
  double ratio = small.std_error / large.std_error;
  CHECK(ratio > 1.5);
  CHECK(ratio < 2.5);
}

TEST_CASE("degenerate trial counts") {
  OddsSequence s = halves(3);
  ThresholdVector t{{2}};
  OracleResult one = monte_carlo_win_probability(s, t, 1, 5, 1);
  CHECK(one.trials == 1);
  CHECK((one.wins == 0 || one.wins == 1));
  CHECK(one.std_error == 0.0);
  CHECK_THROWS_AS(monte_carlo_win_probability(s, t, 0, 5, 1), std::invalid_argument);
}

TEST_CASE("the verification suite passes on a solid budget") {
  VerifyReport rep = verify_suite(8, 3, 25, 42);
  CHECK(rep.all_passed());
  CHECK(rep.cases == 25);
  CHECK(rep.formula_checks == 25);
  CHECK(rep.formula_failures == 0);
  CHECK(rep.pattern_checks > 500);  // every realization of every small case
  CHECK(rep.pattern_failures == 0);
  CHECK(rep.witness_failures == 0);
  CHECK(rep.optimum_checks == 25);
  CHECK(rep.optimum_failures == 0);
  CHECK(rep.failures.empty());
}

TEST_CASE("the verification suite is deterministic in its seed") {
  VerifyReport a = verify_suite(6, 2, 10, 7);
  VerifyReport b = verify_suite(6, 2, 10, 7);
  CHECK(a.pattern_checks == b.pattern_checks);
  CHECK(a.optimum_checks == b.optimum_checks);
  CHECK(a.formula_checks == b.formula_checks);
}

TEST_CASE("verify budget validation") {
  CHECK_THROWS_AS(verify_suite(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite(5, 0, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify_suite(5, 1, -1, 1), std::invalid_argument);
}
