#include "odds/optimizer.hpp"

#include <stdexcept>

#include "odds/errors.hpp"
#include "odds/patterns.hpp"
#include "odds/strategy.hpp"

namespace odds {

namespace {

long long candidate_count(int n, int m) {
  // multisets of size m from n values: C(n+m-1, m), saturating
  long long c = 1;
  for (int j = 1; j <= m; ++j) {
    c = c * (n + j - 1) / j;  // exact at each step for binomials
    if (c > (1LL << 62) / (n + m)) return 1LL << 62;
  }
  return c;
}

}  // namespace

OptimalResult optimal_exhaustive(const OddsSequence& seq, int m, SearchBudget budget) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  long long cand = candidate_count(seq.size(), m);
  if (cand > budget.max_candidates)
    throw budget_error("threshold search over " + std::to_string(cand) +
                       " candidates exceeds the budget of " + std::to_string(budget.max_candidates));

  // Odometer in ascending lexicographic order; replacing on >= leaves the
  // lexicographically largest maximizer in hand at the end.
  ThresholdVector t;
  t.values.assign(static_cast<size_t>(m), seq.first());
  OptimalResult best;
  best.method = Method::exhaustive;
  best.value = -1;
  for (;;) {
    Rational v = win_probability(seq, t);
    if (v >= best.value) {
      best.value = v;
      best.thresholds = t;
    }
    // advance: bump the last position that can still grow, reset the tail
    // to the bumped value to keep monotonicity
    int pos = m - 1;
    while (pos >= 0 && t.values[static_cast<size_t>(pos)] == seq.last()) --pos;
    if (pos < 0) break;
    int bumped = ++t.values[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < m; ++j) t.values[static_cast<size_t>(j)] = bumped;
  }
  return best;
}

OptimalResult optimal_dp(const OddsSequence& seq, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  int n = seq.size();
  // V indexed [s][h]; sweep i from past the end down to first
  std::vector<std::vector<Rational>> V(static_cast<size_t>(m) + 1,
                                       std::vector<Rational>(2, Rational(0)));
  for (int s = 0; s <= m; ++s) V[static_cast<size_t>(s)][1] = 1;  // holding the last success wins
  for (int j = n - 1; j >= 0; --j) {
    int i = seq.first() + j;
    std::vector<std::vector<Rational>> W(static_cast<size_t>(m) + 1,
                                         std::vector<Rational>(2, Rational(0)));
    for (int s = 0; s <= m; ++s) {
      for (int h = 0; h <= 1; ++h) {
        // on success: either skip it (a skipped success invalidates a held
        // candidate) or spend a selection on it
        Rational on_success = V[static_cast<size_t>(s)][0];
        if (s > 0) {
          const Rational& take = V[static_cast<size_t>(s) - 1][1];
          if (take > on_success) on_success = take;
        }
        W[static_cast<size_t>(s)][static_cast<size_t>(h)] =
            seq.q(i) * V[static_cast<size_t>(s)][static_cast<size_t>(h)] + seq.p(i) * on_success;
      }
    }
    V.swap(W);
  }
  OptimalResult out;
  out.method = Method::dp;
  out.value = V[static_cast<size_t>(m)][0];
  return out;
}

OptimalResult optimal_ola(const OddsSequence& seq, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m > kMaxPatternOrder)
    throw budget_error("look-ahead needs pattern sets up to order " + std::to_string(m));
  int first = seq.first(), last = seq.last();

  std::vector<int> inner;  // stages 1..k-1, outer-first
  for (int k = 1; k <= m; ++k) {
    // S_k over the inner blocks; the blocks come from the inner thresholds
    // with a fake outermost threshold at the scan's upper edge (it only
    // shapes B_k, whose symmetric factors have degree 0 in every non-unit
    // pattern of stage k, so its position is irrelevant).
    int upper = inner.empty() ? last + 1 : inner.front();  // i^(k-1)
    Rational S = 0;
    if (k > 1) {
      ThresholdVector walls;
      walls.values.push_back(inner.front());  // stage k placeholder at i^(k-1)
      for (int v : inner) walls.values.push_back(v);
      BlockPartition part = block_partition(walls, seq);
      // per-block symmetric tables, degrees bounded as in the evaluator
      std::vector<std::vector<Rational>> esf(static_cast<size_t>(k));
      for (int j = 1; j <= k; ++j) {
        const Block& B = part.B(j);
        int dmax = k + 1 - j;
        std::vector<Rational> e(static_cast<size_t>(dmax) + 1, Rational(0));
        e[0] = 1;
        for (int i2 = B.lo; i2 < B.hi; ++i2) {
          const Rational& x = seq.r(i2);
          for (int d = dmax; d >= 1; --d) e[static_cast<size_t>(d)] += e[static_cast<size_t>(d) - 1] * x;
        }
        esf[static_cast<size_t>(j) - 1] = std::move(e);
      }
      for (const PatternVector& b : enumerate_xi(k).vectors) {
        if (b[0] == 1) continue;  // unit vector excluded
        Rational term = 1;
        bool zero = false;
        for (int idx = 1; idx < k && !zero; ++idx) {
          int deg = b[static_cast<size_t>(idx)];
          if (deg == 0) continue;
          const auto& e = esf[static_cast<size_t>(k - idx) - 1];
          if (deg >= static_cast<int>(e.size()) || sgn(e[static_cast<size_t>(deg)]) == 0) {
            zero = true;
            break;
          }
          term *= e[static_cast<size_t>(deg)];
        }
        if (!zero) S += term;
      }
    }

    int top = std::min(upper, last);
    Rational D = 1 - S;
    for (int i2 = top; i2 < upper; ++i2) D -= seq.r(i2);  // odds between the scan top and i^(k-1)
    int pick = first;
    for (int i = top;; --i) {
      if (sgn(D) <= 0) {
        pick = i;
        break;
      }
      if (i == first) {
        pick = first;
        break;
      }
      D -= seq.r(i - 1);
    }
    inner.insert(inner.begin(), pick);
  }

  OptimalResult out;
  out.method = Method::ola;
  out.thresholds = ThresholdVector{inner};
  out.value = win_probability(seq, *out.thresholds);
  return out;
}

}  // namespace odds
