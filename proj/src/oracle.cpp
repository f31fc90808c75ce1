#include "odds/oracle.hpp"

#include <bit>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "odds/errors.hpp"
#include "odds/optimizer.hpp"
#include "odds/strategy.hpp"

namespace odds {

namespace {

inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
constexpr int kEnumerationCap = 22;

}  // namespace

uint64_t CounterRng::at(uint64_t counter) const { return mix64(seed + (counter + 1) * kGolden); }

double CounterRng::uniform(uint64_t counter) const {
  return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
}

uint64_t CounterRng::below(uint64_t counter, uint64_t bound) const {
  return at(counter) % bound;  // bias is irrelevant at our bounds (<= 2^7)
}

OracleResult enumerate_win_probability(const OddsSequence& seq, const ThresholdVector& t) {
  validate_thresholds(t, seq);
  int n = seq.size();
  if (n > kEnumerationCap)
    throw budget_error("outcome enumeration capped at N = " + std::to_string(kEnumerationCap));

  std::vector<int> x(static_cast<size_t>(n), 0);
  Rational mass = 1;
  for (int i = seq.first(); i <= seq.last(); ++i) mass *= seq.q(i);

  OracleResult out;
  out.exact = true;
  out.probability = 0;
  uint64_t total = 1ULL << n;
  out.trials = total;  // outcomes walked, all of them
  if (simulate_threshold_run(x, t, seq.first()).win) out.probability += mass;
  for (uint64_t step = 1; step < total; ++step) {
    int j = std::countr_zero(step);  // Gray code: this is the bit that flips
    int i = seq.first() + j;
    if (x[static_cast<size_t>(j)] == 0) {
      x[static_cast<size_t>(j)] = 1;
      mass *= seq.r(i);
    } else {
      x[static_cast<size_t>(j)] = 0;
      mass /= seq.r(i);
    }
    if (simulate_threshold_run(x, t, seq.first()).win) out.probability += mass;
  }
  return out;
}

OracleResult monte_carlo_win_probability(const OddsSequence& seq, const ThresholdVector& t,
                                         uint64_t trials, uint64_t seed, int shards) {
  validate_thresholds(t, seq);
  if (trials < 1) throw std::invalid_argument("at least one trial required");
  int n = seq.size();
  int first = seq.first();

  std::vector<double> p(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<size_t>(j)] = rat_to_double(seq.p(first + j));

  // thresholds as per-position slack increments
  std::vector<int> bump(static_cast<size_t>(n), 0);
  for (int v : t.values) ++bump[static_cast<size_t>(v - first)];

  CounterRng rng{seed};
  auto run_range = [&](uint64_t lo, uint64_t hi) {
    uint64_t wins = 0;
    for (uint64_t trial = lo; trial < hi; ++trial) {
      int slack = 0;
      bool win = false;
      bool any = false;
      int last_success = -1, held = -2;
      for (int j = 0; j < n; ++j) {
        slack += bump[static_cast<size_t>(j)];
        bool success = rng.uniform(trial * static_cast<uint64_t>(n) + static_cast<uint64_t>(j)) <
                       p[static_cast<size_t>(j)];
        if (!success) continue;
        any = true;
        last_success = j;
        if (slack > 0) {
          --slack;
          held = j;
        }
      }
      win = any && held == last_success;
      if (win) ++wins;
    }
    return wins;
  };

  int want = shards;
  if (want <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    want = hc ? static_cast<int>(hc) : 4;
  }
  if (static_cast<uint64_t>(want) > trials) want = static_cast<int>(trials);

  uint64_t wins = 0;
  if (want <= 1) {
    wins = run_range(0, trials);
  } else {
    std::vector<std::future<uint64_t>> parts;
    uint64_t per = trials / static_cast<uint64_t>(want);
    uint64_t lo = 0;
    for (int s = 0; s < want; ++s) {
      uint64_t hi = (s == want - 1) ? trials : lo + per;
      parts.push_back(std::async(std::launch::async, run_range, lo, hi));
      lo = hi;
    }
    for (auto& f : parts) wins += f.get();
  }

  OracleResult out;
  out.exact = false;
  out.trials = trials;
  out.wins = wins;
  out.estimate = static_cast<double>(wins) / static_cast<double>(trials);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(trials));
  return out;
}

namespace {

Rational random_probability(const CounterRng& rng, uint64_t c) {
  uint64_t den = 2 + rng.below(c * 2, 63);        // 2..64
  uint64_t num = 1 + rng.below(c * 2 + 1, den - 1);  // 1..den-1
  Rational p(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  p.canonicalize();
  return p;
}

}  // namespace

VerifyReport verify_suite(int max_n, int m_max, int cases, uint64_t seed) {
  if (max_n < 1 || m_max < 1 || cases < 0) throw std::invalid_argument("bad verify budget");
  VerifyReport rep;
  rep.cases = cases;
  CounterRng rng{mix64(seed ^ 0x5eedull)};

  uint64_t c = 0;  // fresh counter per draw
  for (int case_id = 0; case_id < cases; ++case_id) {
    int n = 1 + static_cast<int>(rng.below(c++, static_cast<uint64_t>(max_n)));
    int m = 1 + static_cast<int>(rng.below(c++, static_cast<uint64_t>(m_max)));
    std::vector<Rational> probs;
    probs.reserve(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
      probs.push_back(random_probability(rng, c));
      c += 2;
    }
    OddsSequence seq(probs);

    ThresholdVector t;
    for (int k = 0; k < m; ++k)
      t.values.push_back(1 + static_cast<int>(rng.below(c++, static_cast<uint64_t>(n))));
    std::sort(t.values.begin(), t.values.end());

    // closed form vs enumeration
    ++rep.formula_checks;
    Rational formula = win_probability(seq, t);
    Rational enumerated = enumerate_win_probability(seq, t).probability;
    if (formula != enumerated) {
      ++rep.formula_failures;
      rep.failures.push_back("case " + std::to_string(case_id) + ": formula != enumeration");
    }

    // run outcome vs pattern characterization, and witness uniqueness,
    // exhaustively over realizations (kept to small n)
    if (n <= 8) {
      BlockPartition part = block_partition(t, seq);
      for (uint64_t bits = 0; bits < (1ULL << n); ++bits) {
        std::vector<int> x(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(j)] = (bits >> j) & 1 ? 1 : 0;
        bool sim_win = simulate_threshold_run(x, t, 1).win;
        PatternVector pv = pattern_vector(x, part);
        auto witness = is_winning_pattern(pv);
        ++rep.pattern_checks;
        if (sim_win != witness.has_value()) {
          ++rep.pattern_failures;
          rep.failures.push_back("case " + std::to_string(case_id) + ": run/pattern mismatch");
        }
        ++rep.witness_checks;
        int hits = 0;
        for (int k = 1; k <= m; ++k) {
          PatternVector suffix(pv.end() - k, pv.end());
          if (in_xi(suffix)) ++hits;
        }
        if (hits > 1) {
          ++rep.witness_failures;
          rep.failures.push_back("case " + std::to_string(case_id) + ": non-unique witness");
        }
      }
    }

    // threshold search vs backward induction vs look-ahead
    if (n <= 12 && m <= 3) {
      ++rep.optimum_checks;
      Rational ex = optimal_exhaustive(seq, m).value;
      Rational dp = optimal_dp(seq, m).value;
      Rational ola = optimal_ola(seq, m).value;
      if (ex != dp || ex != ola) {
        ++rep.optimum_failures;
        rep.failures.push_back("case " + std::to_string(case_id) + ": optimizer disagreement");
      }
    }
  }
  return rep;
}

}  // namespace odds
