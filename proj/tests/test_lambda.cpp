#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "odds/lambda.hpp"

using namespace odds;

namespace {

// Published stage constants, exact through m = 8 and rounded to six places
// through m = 10. The larger fractions are split only to stay under line
// length; they are single integers.
const std::vector<std::string> kLambdaExact = {
    "1",
    "1/2",
    "11/24",
    "505/1152",
    "209519/491520",
    "49081919440723/117413668454400",
    "79517076913242599540918747743/193003573558876719588311040000",
    "30349501532325460596234075302254005045179405811074379325249/"
    "74500758812993473612938854416966977838930799571763200000000",
};

const std::vector<std::string> kCumsumExact = {
    "1",
    "3/2",
    "47/24",
    "2761/1152",
    "4162637/1474560",
    "380537052235603/117413668454400",
    "705040594914523588948186792543/193003573558876719588311040000",
    "302500210177484374840641189918370275991590974715547528765249/"
    "74500758812993473612938854416966977838930799571763200000000",
};

const std::vector<std::string> kLambdaDec = {"1.000000", "0.500000", "0.458333", "0.438368",
                                             "0.426267", "0.418026", "0.411998", "0.407372",
                                             "0.403695", "0.400693"};

const std::vector<std::string> kCumsumDec = {"1.000000", "1.500000", "1.958333", "2.396701",
                                             "2.822969", "3.240994", "3.652992", "4.060364",
                                             "4.464059", "4.864751"};

const std::vector<std::string> kBoundDec = {
    "0.3678794411", "0.5910096013", "0.7321029820", "0.8231206726", "0.8825499145",
    "0.9216748810", "0.9475883491", "0.9648310882", "0.9763466188", "0.9840603638"};

}  // namespace

TEST_CASE("stage constants reproduce the published fractions and decimals") {
  LambdaSolution sol = solve_lambda_dp(10);
  REQUIRE(sol.m == 10);
  REQUIRE(sol.lambda.size() == 10);
  for (size_t i = 0; i < kLambdaExact.size(); ++i)
    CHECK(rat_to_string(sol.lambda[i]) == kLambdaExact[i]);
  for (size_t i = 0; i < 10; ++i) CHECK(rat_to_decimal(sol.lambda[i], 6) == kLambdaDec[i]);
}

TEST_CASE("running sums reproduce the published fractions and decimals") {
  LambdaSolution sol = solve_lambda_dp(10);
  for (size_t i = 0; i < kCumsumExact.size(); ++i)
    CHECK(rat_to_string(sol.cumsum[i]) == kCumsumExact[i]);
  for (size_t i = 0; i < 10; ++i) CHECK(rat_to_decimal(sol.cumsum[i], 6) == kCumsumDec[i]);
  for (int k = 1; k <= 10; ++k) CHECK(cumulative_lambda(sol, k) == sol.cumsum[k - 1]);
  Rational acc = 0;
  for (int k = 1; k <= 10; ++k) {
    acc += sol.lambda[k - 1];
    CHECK(acc == sol.cumsum[k - 1]);
  }
}

TEST_CASE("the bound column reproduces all ten published rows") {
  for (int m = 1; m <= 10; ++m) {
    LambdaSolution sol = solve_lambda_dp(m);
    LowerBound lb = lower_bound(sol, 10);
    CHECK(lb.decimal == kBoundDec[m - 1]);
    CHECK(lb.term_decimals.size() == static_cast<size_t>(m));
    CHECK(lb.term_decimals[0] == "0.3678794411");
    Rational sum = 0;
    for (const Rational& t : lb.terms) sum += t;
    CHECK(sum == lb.value);
    for (size_t i = 1; i < lb.terms.size(); ++i) CHECK(lb.terms[i] < lb.terms[i - 1]);
  }
}

TEST_CASE("direct per-stage solving agrees with the table recurrence") {
  LambdaSolution a = solve_lambda_dp(8);
  LambdaSolution b = solve_lambda_naive(8);
  for (int k = 1; k <= 8; ++k) CHECK(a.lambda[k - 1] == b.lambda[k - 1]);
}

TEST_CASE("the solution satisfies every stage equality exactly") {
  LambdaSolution sol = solve_lambda_dp(8);
  for (int k = 1; k <= 8; ++k) CHECK(equality_sum(sol, k) == Rational(1));
}

TEST_CASE("base row and first stage") {
  LambdaSolution sol = solve_lambda_dp(4);
  CHECK(sol.gamma[0][0] == Rational(1));
  for (size_t j = 1; j < sol.gamma[0].size(); ++j) CHECK(sol.gamma[0][j] == Rational(0));
  CHECK(sol.lambda[0] == Rational(1));
  // row 1 is 1/k'! by construction
  CHECK(sol.gamma[1][1] == Rational(1, 2));
  CHECK(sol.gamma[1][2] == Rational(1, 6));
  CHECK(sol.gamma[1][3] == Rational(1, 24));
}

TEST_CASE("table rows decrease strictly and stage constants stay positive") {
  LambdaSolution sol = solve_lambda_dp(10);
  for (int k = 0; k <= 10; ++k) {
    const auto& row = sol.gamma[static_cast<size_t>(k)];
    CHECK(row[0] == Rational(1));
    if (k == 0) continue;
    for (size_t j = 1; j < row.size(); ++j) {
      CHECK(row[j] < row[j - 1]);
      CHECK(row[j] > 0);
    }
  }
  for (const Rational& l : sol.lambda) {
    CHECK(l > 0);
    CHECK(l <= 1);
  }
}

TEST_CASE("interval certification covers the exact table") {
  CHECK(certify_gamma_monotonicity(16));
  GammaIntervals iv = gamma_intervals(10);
  CHECK(iv.certified);
  LambdaSolution sol = solve_lambda_dp(10);
  for (size_t k = 0; k < sol.gamma.size(); ++k)
    for (size_t j = 0; j < sol.gamma[k].size(); ++j) {
      CHECK(iv.lo[k][j] <= sol.gamma[k][j]);
      CHECK(sol.gamma[k][j] <= iv.hi[k][j]);
    }
  for (int k = 1; k <= 10; ++k) {
    CHECK(iv.lambda_lo[k - 1] <= sol.lambda[k - 1]);
    CHECK(sol.lambda[k - 1] <= iv.lambda_hi[k - 1]);
  }
}

TEST_CASE("certification holds far beyond the exact table's reach") {
  CHECK(certify_gamma_monotonicity(30));
}

TEST_CASE("operation counts grow cubically") {
  for (int m : {5, 10, 20, 30, 40}) {
    unsigned long long ops = solve_lambda_ops(m);
    unsigned long long bound =
        2ull * static_cast<unsigned long long>(m) * static_cast<unsigned long long>(m) *
        static_cast<unsigned long long>(m);
    CHECK(ops <= bound);
  }
  for (int m : {3, 6, 10}) CHECK(solve_lambda_dp(m).ops == solve_lambda_ops(m));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(solve_lambda_dp(0), std::invalid_argument);
  CHECK_THROWS_AS(solve_lambda_dp(-1), std::invalid_argument);
  CHECK_THROWS_AS(solve_lambda_naive(0), std::invalid_argument);
  LambdaSolution sol = solve_lambda_dp(3);
  CHECK_THROWS_AS(cumulative_lambda(sol, 0), std::invalid_argument);
  CHECK_THROWS_AS(cumulative_lambda(sol, 4), std::invalid_argument);
  CHECK_THROWS_AS(lower_bound(sol, 0), std::invalid_argument);
}
