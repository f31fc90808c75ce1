#pragma once

#include <optional>
#include <vector>

#include "odds/patterns.hpp"
#include "odds/rational.hpp"
#include "odds/sequence.hpp"

namespace odds {

// Elementary symmetric polynomial of degree b in the odds of block B.
// Degree 0 gives 1; a degree larger than |B| gives 0 (an empty block can
// contribute no successes). Incremental recurrence, O(|B| * b).
Rational sym_f(const OddsSequence& seq, const Block& B, int b);

// Exact win probability of the threshold strategy t on seq:
//
//   sum over stages k of  (prod of q_i for i >= i^(k))
//                       * (sum over minimal winning patterns of length k
//                          of the per-block symmetric products)
//
// Stages beyond the pattern enumeration bound are not evaluable exactly
// here; m is limited to kMaxPatternOrder.
Rational win_probability(const OddsSequence& seq, const ThresholdVector& t);

struct RunOutcome {
  bool win = false;
  std::optional<int> last;    // final accepted index, when the run ends held
  std::vector<int> accepted;  // every index accepted along the way
};

// Deterministic replay of the stopping procedure on a realized 0/1 vector.
// Walking i upward: slack grows by the number of thresholds equal to i; a
// success with positive slack is accepted (slack drops, this index becomes
// the current candidate); a success with no slack left means the candidate
// is no longer the most recent success, so the run reverts to losing until
// a later acceptance happens. The run wins iff the final candidate is the
// last success of the realization.
RunOutcome simulate_threshold_run(const std::vector<int>& x, const ThresholdVector& t,
                                  int first_index = 1);

// Per-block success counts (b_m, ..., b_1) of a realization; the leading
// block B_{m+1} is excluded (successes there never affect the outcome).
PatternVector pattern_vector(const std::vector<int>& x, const BlockPartition& part);

}  // namespace odds
