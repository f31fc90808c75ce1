#include "odds/strategy.hpp"

#include <stdexcept>

#include "odds/errors.hpp"

namespace odds {

namespace {

// e[d] after processing a prefix of the block holds the degree-d elementary
// symmetric polynomial of that prefix's odds.
std::vector<Rational> esf_table(const OddsSequence& seq, const Block& B, int max_degree) {
  std::vector<Rational> e(static_cast<size_t>(max_degree) + 1, Rational(0));
  e[0] = 1;
  for (int i = B.lo; i < B.hi; ++i) {
    const Rational& x = seq.r(i);
    for (int d = max_degree; d >= 1; --d) e[static_cast<size_t>(d)] += e[static_cast<size_t>(d) - 1] * x;
  }
  return e;
}

}  // namespace

Rational sym_f(const OddsSequence& seq, const Block& B, int b) {
  if (b < 0) throw std::invalid_argument("symmetric degree must be nonnegative");
  if (b == 0) return 1;
  if (b > B.size()) return 0;
  return esf_table(seq, B, b).back();
}

Rational win_probability(const OddsSequence& seq, const ThresholdVector& t) {
  validate_thresholds(t, seq);
  int m = t.m();
  if (m > kMaxPatternOrder)
    throw budget_error("win probability needs pattern sets up to order " + std::to_string(m) +
                       ", beyond the enumeration bound");
  BlockPartition part = block_partition(t, seq);

  // Stage k's pattern entries for block j are bounded by k+1-j, so degree
  // m+1-j per block covers every stage at once.
  std::vector<std::vector<Rational>> esf(static_cast<size_t>(m));
  for (int j = 1; j <= m; ++j) esf[static_cast<size_t>(j) - 1] = esf_table(seq, part.B(j), m + 1 - j);

  Rational total = 0;
  Rational tail_q = 1;  // prod of q_i for i >= i^(k), extended as k grows
  int covered_from = seq.last() + 1;
  for (int k = 1; k <= m; ++k) {
    int from = t.at_stage(k);
    for (int i = from; i < covered_from; ++i) tail_q *= seq.q(i);
    covered_from = from;

    Rational stage = 0;
    for (const PatternVector& b : enumerate_xi(k).vectors) {
      Rational term = 1;
      bool zero = false;
      for (int idx = 0; idx < k && !zero; ++idx) {
        int degree = b[static_cast<size_t>(idx)];
        if (degree == 0) continue;
        int block = k - idx;  // entries run outer block first
        const std::vector<Rational>& e = esf[static_cast<size_t>(block) - 1];
        if (degree >= static_cast<int>(e.size()) || sgn(e[static_cast<size_t>(degree)]) == 0) {
          // degree exceeds block size (table holds exact zeros there too)
          zero = true;
          break;
        }
        term *= e[static_cast<size_t>(degree)];
      }
      if (!zero) stage += term;
    }
    total += tail_q * stage;
  }
  return total;
}

RunOutcome simulate_threshold_run(const std::vector<int>& x, const ThresholdVector& t,
                                  int first_index) {
  int n = static_cast<int>(x.size());
  if (n == 0) throw std::invalid_argument("empty realization");
  int prev = first_index;
  for (int v : t.values) {
    if (v < prev) throw std::invalid_argument("thresholds must be nondecreasing and within range");
    prev = v;
  }
  if (t.values.back() > first_index + n - 1)
    throw std::invalid_argument("threshold beyond the realization length");

  RunOutcome out;
  int slack = 0;
  size_t next_threshold = 0;
  for (int j = 0; j < n; ++j) {
    int i = first_index + j;
    while (next_threshold < t.values.size() && t.values[next_threshold] == i) {
      ++slack;
      ++next_threshold;
    }
    if (x[static_cast<size_t>(j)] == 0) continue;
    if (x[static_cast<size_t>(j)] != 1) throw std::invalid_argument("realization entries must be 0 or 1");
    if (slack > 0) {
      --slack;
      out.win = true;
      out.last = i;
      out.accepted.push_back(i);
    } else {
      // this success postdates the current candidate and cannot be taken
      out.win = false;
      out.last.reset();
    }
  }
  return out;
}

PatternVector pattern_vector(const std::vector<int>& x, const BlockPartition& part) {
  int m = part.m();
  int n = part.B(1).hi - part.first_index;
  if (static_cast<int>(x.size()) != n)
    throw std::invalid_argument("realization length does not match the partition");
  PatternVector b(static_cast<size_t>(m), 0);
  for (int k = m; k >= 1; --k) {
    const Block& blk = part.B(k);
    int count = 0;
    for (int i = blk.lo; i < blk.hi; ++i) count += x[static_cast<size_t>(i - part.first_index)];
    b[static_cast<size_t>(m - k)] = count;
  }
  return b;
}

}  // namespace odds
