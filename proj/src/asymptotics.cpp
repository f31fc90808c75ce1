#include "odds/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "odds/errors.hpp"
#include "odds/optimizer.hpp"
#include "odds/patterns.hpp"
#include "odds/strategy.hpp"

namespace odds {

OddsSequence secretary_sequence(int n) {
  if (n < 2) throw std::invalid_argument("record sequence needs n >= 2");
  std::vector<Rational> p;
  p.reserve(static_cast<size_t>(n) - 1);
  for (int i = 2; i <= n; ++i) p.emplace_back(1, i);
  return OddsSequence(std::move(p), 2);
}

OddsSequence iid_sequence(const Rational& q, int n) {
  if (sgn(q) <= 0 || q >= 1) throw std::invalid_argument("q must lie strictly between 0 and 1");
  if (n < 1) throw std::invalid_argument("sequence length must be positive");
  return OddsSequence(std::vector<Rational>(static_cast<size_t>(n), 1 - q), 1);
}

ThresholdVector surrogate_lb_thresholds(const LambdaSolution& sol, int L, const Rational& r) {
  if (L < 1) throw std::invalid_argument("length must be positive");
  if (sgn(r) <= 0) throw std::invalid_argument("odds must be positive");
  if (!(L * r > sol.cumsum.back()))
    throw std::invalid_argument("total odds mass L*r must exceed the lambda sum");

  // j^(k) = L - w_k where w_k is the largest trial count whose odds mass
  // stays below cumsum_k: w_k = ceil(cumsum_k / r) - 1.
  ThresholdVector t;
  for (int k = sol.m; k >= 1; --k) {
    Rational ratio = sol.cumsum[static_cast<size_t>(k) - 1] / r;
    mpz_class w;
    mpz_cdiv_q(w.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
    w -= 1;
    long j = L - w.get_si();
    t.values.push_back(static_cast<int>(j));
  }
  return t;
}

namespace {

double dev(double a, double b) { return std::fabs(a - b); }

void fill_targets(ConvergenceReport& rep, const LambdaSolution& sol) {
  LowerBound lb = lower_bound(sol, 20);
  rep.bound_exact = lb.value;
  rep.bound = rat_to_double(lb.value);
  for (const Rational& term : lb.terms) rep.targets.push_back(rat_to_double(term));
}

}  // namespace

ConvergenceReport bound_convergence(int m, const std::vector<std::pair<int, Rational>>& schedule) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  LambdaSolution sol = solve_lambda_dp(m);
  ConvergenceReport rep;
  rep.m = m;
  fill_targets(rep, sol);

  for (const auto& [L, r] : schedule) {
    ThresholdVector sur = surrogate_lb_thresholds(sol, L, r);  // validates L*r
    OddsSequence seq = iid_sequence(1 / (1 + r), L);
    Rational sur_value = win_probability(seq, sur);
    OptimalResult best = optimal_ola(seq, m);

    ConvergenceRow row;
    row.instance = "L=" + std::to_string(L) + " r=" + rat_to_string(r);
    row.n = L;
    row.thresholds = sur.values;
    for (int v : sur.values) row.ratios.push_back(static_cast<double>(v) / static_cast<double>(L));
    row.exact = true;
    row.value_exact = best.value;
    row.surrogate_exact = sur_value;
    row.value = rat_to_double(best.value);
    row.surrogate = rat_to_double(sur_value);
    row.has_surrogate = true;
    row.dev_value = dev(row.value, rep.bound);
    row.dev_surrogate = dev(row.surrogate, rep.bound);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ConvergenceReport secretary_convergence(int m, const std::vector<int>& n_schedule) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  LambdaSolution sol = solve_lambda_dp(m);
  ConvergenceReport rep;
  rep.m = m;
  fill_targets(rep, sol);

  constexpr int kExactCutoff = 1500;
  for (int n : n_schedule) {
    ConvergenceRow row;
    row.instance = "n=" + std::to_string(n);
    row.n = n;
    if (n <= kExactCutoff) {
      OddsSequence seq = secretary_sequence(n);
      OptimalResult best = optimal_ola(seq, m);
      row.thresholds = best.thresholds->values;
      row.exact = true;
      row.value_exact = best.value;
      row.value = rat_to_double(best.value);
    } else {
      fastpath::SeqView view = fastpath::secretary(n);
      row.thresholds = fastpath::ola_thresholds(view, m);
      row.value = fastpath::win_probability(view, row.thresholds);
    }
    double ratio_sum = 0;
    for (int v : row.thresholds) {
      double ratio = static_cast<double>(v) / static_cast<double>(n);
      row.ratios.push_back(ratio);
      ratio_sum += ratio;
    }
    row.dev_value = dev(row.value, rep.bound);
    row.dev_ratio_sum = dev(ratio_sum, row.value);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

namespace fastpath {

namespace {

// Neumaier-compensated running sum
struct CSum {
  double s = 0, c = 0;
  void add(double x) {
    double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  double get() const { return s + c; }
};

std::vector<double> esf_of_block(const SeqView& seq, int lo, int hi, int dmax) {
  std::vector<double> e(static_cast<size_t>(dmax) + 1, 0.0);
  e[0] = 1.0;
  for (int i = lo; i < hi; ++i) {
    double x = seq.r[static_cast<size_t>(i - seq.first_index)];
    for (int d = dmax; d >= 1; --d) e[static_cast<size_t>(d)] += e[static_cast<size_t>(d) - 1] * x;
  }
  return e;
}

}  // namespace

SeqView from(const OddsSequence& seq) {
  SeqView v;
  v.first_index = seq.first();
  int n = seq.size();
  v.p.reserve(static_cast<size_t>(n));
  v.q.reserve(static_cast<size_t>(n));
  v.r.reserve(static_cast<size_t>(n));
  for (int i = seq.first(); i <= seq.last(); ++i) {
    v.p.push_back(rat_to_double(seq.p(i)));
    v.q.push_back(rat_to_double(seq.q(i)));
    v.r.push_back(rat_to_double(seq.r(i)));
  }
  return v;
}

SeqView secretary(int n) {
  if (n < 2) throw std::invalid_argument("record sequence needs n >= 2");
  SeqView v;
  v.first_index = 2;
  for (int i = 2; i <= n; ++i) {
    v.p.push_back(1.0 / static_cast<double>(i));
    v.q.push_back(static_cast<double>(i - 1) / static_cast<double>(i));
    v.r.push_back(1.0 / static_cast<double>(i - 1));
  }
  return v;
}

double win_probability(const SeqView& seq, const std::vector<int>& thresholds) {
  int m = static_cast<int>(thresholds.size());
  if (m < 1) throw std::invalid_argument("at least one threshold required");
  if (m > kMaxPatternOrder) throw budget_error("stage count beyond the pattern bound");
  int first = seq.first_index, last = seq.last();
  int prev = first;
  for (int v : thresholds) {
    if (v < prev) throw std::invalid_argument("thresholds must be nondecreasing and within range");
    prev = v;
  }
  if (thresholds.back() > last) throw std::invalid_argument("threshold beyond the sequence");

  auto stage_threshold = [&](int k) { return thresholds[static_cast<size_t>(m - k)]; };

  // per-block symmetric tables; block k spans [i^(k), i^(k-1))
  std::vector<std::vector<double>> esf(static_cast<size_t>(m));
  for (int k = 1; k <= m; ++k) {
    int lo = stage_threshold(k);
    int hi = k == 1 ? last + 1 : stage_threshold(k - 1);
    esf[static_cast<size_t>(k) - 1] = esf_of_block(seq, lo, hi, m + 1 - k);
  }

  double total = 0;
  double tail_q = 1;
  int covered_from = last + 1;
  for (int k = 1; k <= m; ++k) {
    int from = stage_threshold(k);
    for (int i = from; i < covered_from; ++i) tail_q *= seq.q[static_cast<size_t>(i - first)];
    covered_from = from;
    double stage = 0;
    for (const PatternVector& b : enumerate_xi(k).vectors) {
      double term = 1;
      bool zero = false;
      for (int idx = 0; idx < k && !zero; ++idx) {
        int deg = b[static_cast<size_t>(idx)];
        if (deg == 0) continue;
        const auto& e = esf[static_cast<size_t>(k - idx) - 1];
        if (deg >= static_cast<int>(e.size())) {
          zero = true;
          break;
        }
        term *= e[static_cast<size_t>(deg)];
      }
      if (!zero) stage += term;
    }
    total += tail_q * stage;
  }
  return total;
}

std::vector<int> ola_thresholds(const SeqView& seq, int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (m > kMaxPatternOrder) throw budget_error("stage count beyond the pattern bound");
  int first = seq.first_index, last = seq.last();

  std::vector<int> inner;
  for (int k = 1; k <= m; ++k) {
    int upper = inner.empty() ? last + 1 : inner.front();
    double S = 0;
    if (k > 1) {
      std::vector<std::vector<double>> esf(static_cast<size_t>(k));
      for (int j = 1; j < k; ++j) {
        int lo = inner[static_cast<size_t>(k - 1 - j)];
        int hi = j == 1 ? last + 1 : inner[static_cast<size_t>(k - 1 - (j - 1))];
        esf[static_cast<size_t>(j) - 1] = esf_of_block(seq, lo, hi, k + 1 - j);
      }
      for (const PatternVector& b : enumerate_xi(k).vectors) {
        if (b[0] == 1) continue;
        double term = 1;
        bool zero = false;
        for (int idx = 1; idx < k && !zero; ++idx) {
          int deg = b[static_cast<size_t>(idx)];
          if (deg == 0) continue;
          const auto& e = esf[static_cast<size_t>(k - idx) - 1];
          if (deg >= static_cast<int>(e.size())) {
            zero = true;
            break;
          }
          term *= e[static_cast<size_t>(deg)];
        }
        if (!zero) S += term;
      }
    }

    int top = std::min(upper, last);
    CSum acc;
    acc.add(1.0 - S);
    for (int i2 = top; i2 < upper; ++i2) acc.add(-seq.r[static_cast<size_t>(i2 - first)]);
    int pick = first;
    for (int i = top;; --i) {
      if (acc.get() <= 0) {
        pick = i;
        break;
      }
      if (i == first) {
        pick = first;
        break;
      }
      acc.add(-seq.r[static_cast<size_t>(i - 1 - first)]);
    }
    inner.insert(inner.begin(), pick);
  }
  return inner;
}

}  // namespace fastpath

}  // namespace odds
