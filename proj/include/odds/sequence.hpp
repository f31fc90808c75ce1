#pragma once

#include <vector>

#include "odds/rational.hpp"

namespace odds {

// A finite sequence of independent success probabilities. Trials are
// addressed by logical indices first() .. last(); index_offset lets a
// sequence start at 2, which is how relative-record sequences are indexed.
class OddsSequence {
 public:
  explicit OddsSequence(std::vector<Rational> probs, int index_offset = 1);

  int size() const { return static_cast<int>(p_.size()); }
  int first() const { return offset_; }
  int last() const { return offset_ + size() - 1; }

  const Rational& p(int i) const { return p_.at(static_cast<size_t>(i - offset_)); }
  const Rational& q(int i) const { return q_.at(static_cast<size_t>(i - offset_)); }
  const Rational& r(int i) const { return r_.at(static_cast<size_t>(i - offset_)); }

  const std::vector<Rational>& probs() const { return p_; }

 private:
  std::vector<Rational> p_, q_, r_;
  int offset_;
};

// Stopping thresholds (i^(m), ..., i^(1)), outermost first, so the stored
// vector is nondecreasing. values[0] = i^(m) opens the earliest block.
struct ThresholdVector {
  std::vector<int> values;
  int m() const { return static_cast<int>(values.size()); }
  int outer() const { return values.front(); }             // i^(m)
  int inner() const { return values.back(); }              // i^(1)
  int at_stage(int k) const {                              // i^(k), 1 <= k <= m
    return values.at(static_cast<size_t>(m() - k));
  }
};

// Half-open index interval [lo, hi); empty when lo >= hi.
struct Block {
  int lo = 0, hi = 0;
  int size() const { return hi > lo ? hi - lo : 0; }
  bool empty() const { return size() == 0; }
};

// blocks[0] = B_1 = [i^(1), last], the innermost; blocks[k-1] = B_k =
// [i^(k), i^(k-1)) for 1 < k <= m; blocks[m] = B_{m+1} = [first, i^(m)),
// everything before the earliest threshold. Together they partition the
// index range; adjacent equal thresholds give empty blocks.
struct BlockPartition {
  int first_index = 1;
  std::vector<Block> blocks;
  const Block& B(int k) const { return blocks.at(static_cast<size_t>(k - 1)); }
  int m() const { return static_cast<int>(blocks.size()) - 1; }
};

// Throws std::invalid_argument unless first <= i^(m) <= ... <= i^(1) <= last.
void validate_thresholds(const ThresholdVector& t, const OddsSequence& seq);

BlockPartition block_partition(const ThresholdVector& t, const OddsSequence& seq);

}  // namespace odds
