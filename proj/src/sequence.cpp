#include "odds/sequence.hpp"

#include <stdexcept>
#include <string>

namespace odds {

OddsSequence::OddsSequence(std::vector<Rational> probs, int index_offset)
    : p_(std::move(probs)), offset_(index_offset) {
  if (p_.empty()) throw std::invalid_argument("sequence must have at least one trial");
  q_.reserve(p_.size());
  r_.reserve(p_.size());
  for (Rational& raw : p_) raw.canonicalize();  // callers may hand in unreduced fractions
  for (const Rational& pi : p_) {
    if (sgn(pi) <= 0 || pi >= 1)
      throw std::invalid_argument("success probabilities must satisfy 0 < p < 1");
    Rational qi = 1 - pi;
    r_.push_back(pi / qi);
    q_.push_back(std::move(qi));
  }
}

void validate_thresholds(const ThresholdVector& t, const OddsSequence& seq) {
  if (t.values.empty()) throw std::invalid_argument("at least one threshold required");
  int prev = seq.first();
  for (int v : t.values) {
    if (v < prev)
      throw std::invalid_argument("thresholds must be nondecreasing outer to inner and within range");
    prev = v;
  }
  if (t.values.back() > seq.last())
    throw std::invalid_argument("threshold " + std::to_string(t.values.back()) +
                                " beyond last index " + std::to_string(seq.last()));
}

BlockPartition block_partition(const ThresholdVector& t, const OddsSequence& seq) {
  validate_thresholds(t, seq);
  int m = t.m();
  BlockPartition part;
  part.first_index = seq.first();
  part.blocks.resize(static_cast<size_t>(m) + 1);
  part.blocks[0] = Block{t.at_stage(1), seq.last() + 1};
  for (int k = 2; k <= m; ++k) part.blocks[static_cast<size_t>(k) - 1] = Block{t.at_stage(k), t.at_stage(k - 1)};
  part.blocks[static_cast<size_t>(m)] = Block{seq.first(), t.at_stage(m)};
  return part;
}

}  // namespace odds
