#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "odds/asymptotics.hpp"
#include "odds/optimizer.hpp"
#include "odds/strategy.hpp"

using namespace odds;

TEST_CASE("record sequences carry p_i = 1/i from index 2") {
  OddsSequence s = secretary_sequence(3);
  CHECK(s.first() == 2);
  CHECK(s.last() == 3);
  CHECK(s.p(2) == Rational(1, 2));
  CHECK(s.p(3) == Rational(1, 3));
  CHECK(s.r(2) == Rational(1));
  CHECK(s.r(3) == Rational(1, 2));
  OddsSequence big = secretary_sequence(100);
  CHECK(big.size() == 99);
  CHECK(big.r(100) == Rational(1, 99));
  CHECK_THROWS_AS(secretary_sequence(1), std::invalid_argument);
}

TEST_CASE("iid sequences repeat the common failure probability") {
  OddsSequence s = iid_sequence(Rational(100, 101), 5);
  CHECK(s.size() == 5);
  CHECK(s.first() == 1);
  for (int i = 1; i <= 5; ++i) {
    CHECK(s.p(i) == Rational(1, 101));
    CHECK(s.r(i) == Rational(1, 100));
  }
  CHECK_THROWS_AS(iid_sequence(Rational(1), 5), std::invalid_argument);
  CHECK_THROWS_AS(iid_sequence(Rational(0), 5), std::invalid_argument);
  CHECK_THROWS_AS(iid_sequence(Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("surrogate thresholds on a hand-checked schedule") {
  LambdaSolution sol = solve_lambda_dp(2);
  // L = 30, r = 1/10: stage sums 1 and 3/2 give wait windows 9 and 14
  ThresholdVector t = surrogate_lb_thresholds(sol, 30, Rational(1, 10));
  CHECK(t.values == std::vector<int>{16, 21});
  // minimality of each threshold against the defining inequality
  for (int k = 1; k <= 2; ++k) {
    int j = t.at_stage(k);
    Rational cs = sol.cumsum[static_cast<size_t>(k - 1)];
    CHECK(cs > Rational(30 - j) / 10);
    CHECK_FALSE(cs > Rational(30 - (j - 1)) / 10);
  }
}

TEST_CASE("surrogate thresholds at the short-sequence edge") {
  LambdaSolution sol = solve_lambda_dp(1);
  ThresholdVector t = surrogate_lb_thresholds(sol, 2, Rational(1));
  CHECK(t.values == std::vector<int>{2});
}

TEST_CASE("surrogate thresholds need enough total odds") {
  LambdaSolution sol2 = solve_lambda_dp(2);
  CHECK_THROWS_AS(surrogate_lb_thresholds(sol2, 10, Rational(1, 10)), std::invalid_argument);
  LambdaSolution sol1 = solve_lambda_dp(1);
  // equality is not enough, the inequality is strict
  CHECK_THROWS_AS(surrogate_lb_thresholds(sol1, 10, Rational(1, 10)), std::invalid_argument);
}

TEST_CASE("bound reports carry exact values and shrink with finer schedules") {
  ConvergenceReport rep = bound_convergence(2, {{1800, Rational(1, 1000)},
                                                {3600, Rational(1, 2000)}});
  CHECK(rep.m == 2);
  CHECK(rep.targets.size() == 2);
  REQUIRE(rep.rows.size() == 2);
  const ConvergenceRow& a = rep.rows[0];
  const ConvergenceRow& b = rep.rows[1];
  CHECK(a.instance == "L=1800 r=1/1000");
  CHECK(a.n == 1800);
  CHECK(a.exact);
  CHECK(a.has_surrogate);
  CHECK(a.surrogate_exact <= a.value_exact);  // optimal dominates the surrogate
  CHECK(b.surrogate_exact <= b.value_exact);
  CHECK(a.dev_value > 0);
  CHECK(b.dev_value < a.dev_value);  // halving r halves the gap, roughly
  CHECK(b.dev_surrogate < a.dev_surrogate);
  CHECK(a.dev_value < 1e-2);
  // the float columns mirror the exact ones
  CHECK(std::abs(a.value - rat_to_double(a.value_exact)) < 1e-12);
  CHECK(std::abs(a.surrogate - rat_to_double(a.surrogate_exact)) < 1e-12);
}

TEST_CASE("bound reports reject invalid schedules") {
  CHECK_THROWS_AS(bound_convergence(2, {{10, Rational(1, 10)}}), std::invalid_argument);
  CHECK_THROWS_AS(bound_convergence(0, {{100, Rational(1, 10)}}), std::invalid_argument);
}

TEST_CASE("record reports use exact evaluation on small instances") {
  ConvergenceReport rep = secretary_convergence(1, {50, 100});
  CHECK(rep.m == 1);
  REQUIRE(rep.rows.size() == 2);
  const ConvergenceRow& r50 = rep.rows[0];
  const ConvergenceRow& r100 = rep.rows[1];
  CHECK(r50.instance == "n=50");
  CHECK(r50.exact);
  CHECK(r100.exact);
  // cross-check against a direct exact optimization
  OptimalResult direct = optimal_ola(secretary_sequence(100), 1);
  CHECK(r100.value_exact == direct.value);
  CHECK(r100.thresholds == direct.thresholds->values);
  // the record value approaches the limit from above
  CHECK(r50.value_exact > r100.value_exact);
  CHECK(r100.dev_value < r50.dev_value);
  CHECK(r100.dev_ratio_sum >= 0);
  CHECK(r100.dev_ratio_sum < 0.1);
  // bound column matches an independently computed bound
  LambdaSolution sol = solve_lambda_dp(1);
  Rational gap = rep.bound_exact - lower_bound(sol, 12).value;
  if (gap < 0) gap = -gap;
  CHECK(gap < Rational(1, 1000000000000));  // both approximate e^{-1} well past 12 digits
}

TEST_CASE("record reports switch to the float path on large instances") {
  ConvergenceReport rep = secretary_convergence(1, {1600});
  REQUIRE(rep.rows.size() == 1);
  CHECK_FALSE(rep.rows[0].exact);
  CHECK(rep.rows[0].value > 0.3678);
  CHECK(rep.rows[0].value < 0.3736);  // still above but near the limit
}

TEST_CASE("float mirror agrees with the exact evaluator") {
  OddsSequence s = secretary_sequence(200);
  fastpath::SeqView v = fastpath::from(s);
  CHECK(v.first_index == 2);
  CHECK(v.size() == 199);
  for (int m = 1; m <= 3; ++m) {
    OptimalResult exact = optimal_ola(s, m);
    std::vector<int> ft = fastpath::ola_thresholds(v, m);
    CHECK(ft == exact.thresholds->values);
    double fv = fastpath::win_probability(v, ft);
    CHECK(std::abs(fv - rat_to_double(exact.value)) < 1e-9);
  }
}

TEST_CASE("fast-path secretary view matches the exact sequence") {
  fastpath::SeqView v = fastpath::secretary(2000);
  CHECK(v.first_index == 2);
  CHECK(v.last() == 2000);
  std::vector<int> t1 = fastpath::ola_thresholds(v, 1);
  REQUIRE(t1.size() == 1);
  // the single-stage cutoff ratio approaches 1/e
  double ratio = static_cast<double>(t1[0]) / 2000.0;
  CHECK(std::abs(ratio - std::exp(-1.0)) < 0.02);
  double val = fastpath::win_probability(v, t1);
  CHECK(std::abs(val - 0.3678794411) < 1e-3);
}
