#pragma once

#include <string>
#include <vector>

#include "odds/lambda.hpp"
#include "odds/rational.hpp"
#include "odds/sequence.hpp"

namespace odds {

// Relative-record indicators: p_i = 1/i for i = 2..n. Indices start at 2;
// trial 1 is always a record and carries no information.
OddsSequence secretary_sequence(int n);

// Constant failure probability q per trial, odds r = (1-q)/q.
OddsSequence iid_sequence(const Rational& q, int n);

// Thresholds j^(k) = min{ j in 1..L : cumsum_k > (L-j) r } for a length-L
// sequence of common odds r. Requires L*r > cumsum_m, otherwise the
// outermost threshold would want to sit before the sequence starts.
ThresholdVector surrogate_lb_thresholds(const LambdaSolution& sol, int L, const Rational& r);

struct ConvergenceRow {
  std::string instance;          // "n=10000" or "L=1200 r=1/1000"
  long long n = 0;               // instance length
  std::vector<int> thresholds;   // outer-first
  std::vector<double> ratios;    // i^(k)/n, outer-first
  double value = 0;              // observed optimal (look-ahead) win probability
  double surrogate = 0;          // surrogate-threshold value (bound reports)
  bool has_surrogate = false;
  double dev_value = 0;          // |value - bound|
  double dev_surrogate = 0;
  double dev_ratio_sum = 0;      // |sum_k ratios - value| (record reports)
  bool exact = false;            // rational evaluation used
  Rational value_exact, surrogate_exact;
};

struct ConvergenceReport {
  int m = 0;
  std::vector<double> targets;   // e^{-cumsum_k}, k = 1..m
  double bound = 0;              // their sum
  Rational bound_exact;
  std::vector<ConvergenceRow> rows;
};

// For each (L, r) in the schedule: exact win probability of the surrogate
// thresholds on the common-odds sequence, and the exact optimal value via
// the look-ahead scan; both reported against the bound.
ConvergenceReport bound_convergence(int m, const std::vector<std::pair<int, Rational>>& schedule);

// For each n: look-ahead-optimal thresholds and value on the record
// sequence, threshold ratios, and deviations from the limit constants.
// Large n runs in doubles; small n (<= 1500) is evaluated exactly and the
// row carries the rational values too.
ConvergenceReport secretary_convergence(int m, const std::vector<int>& n_schedule);

// Double-precision mirror of the exact evaluator and threshold scan, for
// sweeps where rationals would be needlessly slow. Sums of odds use
// compensated (Neumaier) accumulation so 10^5-term sums stay reliable well
// below the tolerances used anywhere near them.
namespace fastpath {

struct SeqView {
  std::vector<double> p, q, r;
  int first_index = 1;
  int size() const { return static_cast<int>(p.size()); }
  int last() const { return first_index + size() - 1; }
};

SeqView from(const OddsSequence& seq);
SeqView secretary(int n);

double win_probability(const SeqView& seq, const std::vector<int>& thresholds);
std::vector<int> ola_thresholds(const SeqView& seq, int m);

}  // namespace fastpath

}  // namespace odds
