#pragma once

#include <optional>

#include "odds/rational.hpp"
#include "odds/sequence.hpp"

namespace odds {

enum class Method { exhaustive, dp, ola };

struct OptimalResult {
  Rational value;
  std::optional<ThresholdVector> thresholds;  // absent for the value-only dp
  Method method = Method::exhaustive;
};

struct SearchBudget {
  // candidate threshold vectors = C(N+m-1, m); the default admits N = 20,
  // m = 3 and well beyond
  long long max_candidates = 2'000'000;
};

// Evaluates every monotone threshold vector. Ties break toward the
// lexicographically largest vector, which matches the convention that a
// stopping index satisfying the bound with equality is still taken as late
// as possible.
OptimalResult optimal_exhaustive(const OddsSequence& seq, int m, SearchBudget budget = {});

// Backward induction over full (not necessarily threshold) strategies.
// State: position i, selections left s, and whether the most recent
// selection is currently the last success seen (h). Recursion
//   V(i,s,h) = q_i V(i+1,s,h) + p_i max(V(i+1,s,0), [s>0] V(i+1,s-1,1))
// with V(end,s,h) = h; the answer is V(first,m,0). Value only; agreement
// with the threshold search certifies that thresholds are optimal.
OptimalResult optimal_dp(const OddsSequence& seq, int m);

// One-stage look-ahead threshold scan, innermost stage outward. For stage k
// with the inner thresholds fixed, lowering the threshold from i to i-1
// changes the win probability by a positive factor times
//
//   D(i) = 1 - S_k - sum_{i' = i}^{i^(k-1)-1} r_{i'},   i^(0) = last+1,
//
// where S_k sums the non-unit minimal patterns of order k over the inner
// blocks. D increases with i, so the maximum sits at the largest i with
// D(i) <= 0 (descending stops paying off there); when D stays positive all
// the way down the first index is optimal. A zero D is a tie and the larger
// index is kept. Taking instead the smallest i with D(i) >= 0 looks
// equivalent but lands one step high whenever D skips zero, and measurably
// loses against the exhaustive optimum on random instances.
OptimalResult optimal_ola(const OddsSequence& seq, int m);

}  // namespace odds
