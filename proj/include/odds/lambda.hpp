#pragma once

#include <string>
#include <vector>

#include "odds/rational.hpp"

namespace odds {

// The unique positive solution (lambda_1..lambda_m) of the stage equality
// system, together with the weighted-path table gamma and running sums.
//
// gamma[k] holds gamma(k,k') for k' = k..m, so gamma[k][j] = gamma(k, k+j).
// Row 0 is the base case: gamma(0,0) = 1 and gamma(0,k') = 0 for k' > 0
// (no edges leave level 0), which makes lambda_k = 1 - gamma(k-1,k) hold
// uniformly from k = 1 up.
struct LambdaSolution {
  int m = 0;
  std::vector<Rational> lambda;                // lambda[k-1] = lambda_k
  std::vector<Rational> cumsum;                // cumsum[k-1] = lambda_1+..+lambda_k
  std::vector<std::vector<Rational>> gamma;    // rows 0..m as described
  unsigned long long ops = 0;                  // rational mul/add count
};

// Fills the gamma table level by level:
//
//   gamma(k,k') = sum_{d=0}^{k'-k+1} (lambda_k^d / d!) * gamma(k-1, k'-d)
//
// with lambda_k = 1 - gamma(k-1,k) read off before filling row k. The
// weight lambda^d/d! belongs to the edge that drops d units of value while
// descending one level, so it pairs with gamma(k-1, k'-d), and d runs to
// k'-k+1 because the descent may land on the terminal vertex (k-1,k-1).
// An often-reprinted form of this recurrence indexes the weights against
// the undropped value and stops one term early; it fails to reproduce the
// published fraction tables from m = 3 on (11/24 becomes 5/12) and breaks
// row monotonicity, so the expansion above is the one implemented.
// Weights update incrementally: w_{d} = w_{d-1} * lambda_k / d.
LambdaSolution solve_lambda_dp(int m);

// Independent cross-solver: solves the k-th stage equality directly for
// lambda_k using the enumerated minimal patterns of order k. Every member
// except the unit vector has b_k = 0, so the equality is affine in
// lambda_k. Capped at the pattern enumeration bound.
LambdaSolution solve_lambda_naive(int m);

// Sum of lambda_1..lambda_k.
Rational cumulative_lambda(const LambdaSolution& sol, int k);

// Left side of the stage-k equality: sum over minimal patterns of order k
// of prod_j lambda_j^{b_j} / b_j!. Exactly 1 at the solution.
Rational equality_sum(const LambdaSolution& sol, int k);

struct LowerBound {
  std::vector<Rational> terms;              // e^{-cumsum_k}, k = 1..m
  Rational value;                           // their sum
  std::vector<std::string> term_decimals;   // truncated at `digits`
  std::string decimal;
  int digits = 0;
};

// Asymptotic lower bound sum_k e^{-cumsum_k} with per-term values. Each
// exponential carries four extra digits beyond the request so the printed
// truncation is reliable.
LowerBound lower_bound(const LambdaSolution& sol, int digits);

// Rational-operation count of solve_lambda_dp(m) from the loop structure
// alone, without touching big numbers. Grows as ~(2/3) m^3.
unsigned long long solve_lambda_ops(int m);

// Certifies 1 = gamma(k,k) > gamma(k,k+1) > ... > gamma(k,m) and
// lambda_k > 0 for all k, by running the same recurrence in interval
// arithmetic with dyadic outward rounding (prec_bits fractional bits per
// endpoint). Returns true only when every strict inequality holds for the
// interval endpoints, which implies it for the exact values. The exact
// table doubles its digit count per level and is out of reach long before
// m = 30; the certified intervals stay a few hundred bits wide and make the
// monotonicity check cheap at any m here.
bool certify_gamma_monotonicity(int m, int prec_bits = 320);

// Interval endpoints from the certification run, exposed so tests can
// verify containment of the exact table at small m.
struct GammaIntervals {
  int m = 0;
  std::vector<std::vector<Rational>> lo, hi;  // same layout as LambdaSolution::gamma
  std::vector<Rational> lambda_lo, lambda_hi;
  bool certified = false;
};
GammaIntervals gamma_intervals(int m, int prec_bits = 320);

}  // namespace odds
