#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "odds/errors.hpp"
#include "odds/optimizer.hpp"
#include "odds/oracle.hpp"
#include "odds/strategy.hpp"

using namespace odds;

namespace {

OddsSequence halves(int n) {
  return OddsSequence(std::vector<Rational>(static_cast<size_t>(n), Rational(1, 2)));
}

// Deterministic random instances, same distribution the verification suite
// uses: denominators up to 64.
OddsSequence random_seq(const CounterRng& rng, uint64_t base, int n) {
  std::vector<Rational> p;
  p.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    uint64_t den = 2 + rng.below(base + 2 * static_cast<uint64_t>(i), 63);
    uint64_t num = 1 + rng.below(base + 2 * static_cast<uint64_t>(i) + 1, den - 1);
    p.emplace_back(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  }
  return OddsSequence(std::move(p));
}

}  // namespace

TEST_CASE("hand examples, all three searches") {
  OddsSequence h3 = halves(3), h5 = halves(5);

  OptimalResult ex = optimal_exhaustive(h3, 1);
  CHECK(ex.value == Rational(1, 2));
  REQUIRE(ex.thresholds.has_value());
  CHECK(ex.thresholds->values == std::vector<int>{3});  // ties resolve to the latest vector

  OptimalResult ola = optimal_ola(h3, 1);
  CHECK(ola.value == Rational(1, 2));
  CHECK(ola.thresholds->values == std::vector<int>{3});

  CHECK(optimal_dp(h3, 1).value == Rational(1, 2));
  CHECK_FALSE(optimal_dp(h3, 1).thresholds.has_value());

  CHECK(optimal_exhaustive(h5, 2).value == Rational(3, 4));
  CHECK(optimal_exhaustive(h5, 2).thresholds->values == std::vector<int>{4, 5});
  CHECK(optimal_ola(h5, 2).value == Rational(3, 4));

  CHECK(optimal_exhaustive(h5, 3).value == Rational(7, 8));
  CHECK(optimal_exhaustive(h5, 3).thresholds->values == std::vector<int>{3, 4, 5});
  CHECK(optimal_ola(h5, 3).thresholds->values == std::vector<int>{3, 4, 5});
  CHECK(optimal_dp(h5, 3).value == Rational(7, 8));
}

TEST_CASE("the three searches agree exactly on random instances") {
  CounterRng rng{20240618};
  int done = 0;
  for (uint64_t c = 0; done < 40; ++c) {
    uint64_t base = c * 64;
    int n = 2 + static_cast<int>(rng.below(base + 40, 8));  // 2..9
    int m = 1 + static_cast<int>(rng.below(base + 41, 3));  // 1..3
    OddsSequence s = random_seq(rng, base, n);
    OptimalResult ex = optimal_exhaustive(s, m);
    OptimalResult dp = optimal_dp(s, m);
    OptimalResult ola = optimal_ola(s, m);
    CHECK(ex.value == dp.value);
    CHECK(ola.value == ex.value);
    CHECK(win_probability(s, *ex.thresholds) == ex.value);
    CHECK(win_probability(s, *ola.thresholds) == ola.value);
    ++done;
  }
}

TEST_CASE("an extra selection never hurts") {
  CounterRng rng{77};
  for (uint64_t c = 0; c < 8; ++c) {
    OddsSequence s = random_seq(rng, c * 64, 7);
    Rational prev = 0;
    for (int m = 1; m <= 5; ++m) {
      Rational v = optimal_dp(s, m).value;
      CHECK(v >= prev);
      prev = v;
    }
  }
}

TEST_CASE("with a selection per trial the win probability is one minus all-failure") {
  CounterRng rng{99};
  for (uint64_t c = 0; c < 6; ++c) {
    int n = 3 + static_cast<int>(c % 3);
    OddsSequence s = random_seq(rng, c * 64, n);
    Rational all_fail = 1;
    for (int i = s.first(); i <= s.last(); ++i) all_fail *= s.q(i);
    CHECK(optimal_dp(s, n).value == 1 - all_fail);
    // the all-first threshold vector achieves it
    ThresholdVector t{std::vector<int>(static_cast<size_t>(n), s.first())};
    CHECK(win_probability(s, t) == 1 - all_fail);
    // and so do the threshold searches
    CHECK(optimal_exhaustive(s, n).value == 1 - all_fail);
    CHECK(optimal_ola(s, n).value == 1 - all_fail);
  }
}

TEST_CASE("single-selection value is unimodal in the threshold") {
  for (const OddsSequence& s :
       {halves(8), random_seq(CounterRng{5}, 0, 9), random_seq(CounterRng{6}, 0, 7)}) {
    bool falling = false;
    Rational prev = -1;
    for (int i = s.first(); i <= s.last(); ++i) {
      Rational v = win_probability(s, ThresholdVector{{i}});
      if (v < prev) falling = true;
      if (falling) CHECK(v <= prev);  // once it drops it never recovers
      prev = v;
    }
  }
}

TEST_CASE("exhaustive search respects its budget") {
  OddsSequence s = halves(9);
  SearchBudget tiny{10};
  CHECK_THROWS_AS(optimal_exhaustive(s, 3, tiny), budget_error);
  // default budget admits this instance easily
  CHECK(optimal_exhaustive(s, 3).value > 0);
}

TEST_CASE("input validation") {
  OddsSequence s = halves(4);
  CHECK_THROWS_AS(optimal_exhaustive(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(optimal_dp(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(optimal_ola(s, 0), std::invalid_argument);
  CHECK_THROWS_AS(optimal_ola(s, -1), std::invalid_argument);
}

TEST_CASE("look-ahead thresholds are reported nondecreasing and in range") {
  CounterRng rng{314159};
  for (uint64_t c = 0; c < 10; ++c) {
    OddsSequence s = random_seq(rng, c * 64, 8);
    for (int m = 1; m <= 3; ++m) {
      OptimalResult r = optimal_ola(s, m);
      REQUIRE(r.thresholds.has_value());
      const std::vector<int>& v = r.thresholds->values;
      CHECK(static_cast<int>(v.size()) == m);
      for (size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i] >= s.first());
        CHECK(v[i] <= s.last());
        if (i) CHECK(v[i] >= v[i - 1]);
      }
    }
  }
}
