#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "odds/rational.hpp"
#include "odds/sequence.hpp"

namespace odds {

// Counter-based generator: output i is a bit-mix of (seed, i), so any
// subrange of the counter space can be drawn independently and in any
// order. Sharded consumers split by counter range and merge by summation
// without any coordination, and results never depend on the shard count.
struct CounterRng {
  uint64_t seed = 0;
  uint64_t at(uint64_t counter) const;
  double uniform(uint64_t counter) const;                 // [0, 1)
  uint64_t below(uint64_t counter, uint64_t bound) const; // [0, bound)
};

struct OracleResult {
  bool exact = false;
  Rational probability;   // exact mode
  double estimate = 0.0;  // estimate mode
  uint64_t trials = 0;
  uint64_t wins = 0;
  double std_error = 0.0;
};

// Sums the probability mass of every realization the strategy wins. Walks
// the 2^N outcomes in Gray-code order so each step flips one trial and
// updates the outcome mass by a single multiply. N is capped at 22.
OracleResult enumerate_win_probability(const OddsSequence& seq, const ThresholdVector& t);

// Seeded simulation; deterministic for a given seed regardless of shard
// count (trial i draws from counters i*N..i*N+N-1). shards = 0 picks a
// machine-suited count.
OracleResult monte_carlo_win_probability(const OddsSequence& seq, const ThresholdVector& t,
                                         uint64_t trials, uint64_t seed, int shards = 0);

struct VerifyReport {
  int cases = 0;
  long long formula_checks = 0, formula_failures = 0;
  long long pattern_checks = 0, pattern_failures = 0;
  long long witness_checks = 0, witness_failures = 0;
  long long optimum_checks = 0, optimum_failures = 0;
  std::vector<std::string> failures;
  bool all_passed() const {
    return formula_failures == 0 && pattern_failures == 0 && witness_failures == 0 &&
           optimum_failures == 0;
  }
};

// Randomized cross-module certification: random rational sequences
// (denominators <= 64), random monotone thresholds; checks the closed-form
// win probability against enumeration, the winning-pattern
// characterization and witness uniqueness against simulated runs, and the
// threshold search against backward induction.
VerifyReport verify_suite(int max_n, int m_max, int cases, uint64_t seed);

}  // namespace odds
