#include "odds/lambda.hpp"

#include <stdexcept>

#include "odds/patterns.hpp"

namespace odds {

namespace {

void check_m(int m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
}

std::vector<std::vector<Rational>> base_rows(int m) {
  std::vector<std::vector<Rational>> gamma(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k)
    gamma[static_cast<size_t>(k)].assign(static_cast<size_t>(m - k) + 1, Rational(0));
  gamma[0][0] = 1;
  return gamma;
}

}  // namespace

LambdaSolution solve_lambda_dp(int m) {
  check_m(m);
  LambdaSolution sol;
  sol.m = m;
  sol.gamma = base_rows(m);
  sol.lambda.reserve(static_cast<size_t>(m));
  sol.cumsum.reserve(static_cast<size_t>(m));

  Rational running = 0;
  for (int k = 1; k <= m; ++k) {
    auto& row = sol.gamma[static_cast<size_t>(k)];
    const auto& prev = sol.gamma[static_cast<size_t>(k) - 1];
    // prev[j] = gamma(k-1, (k-1)+j); the entry at value v is prev[v-(k-1)]
    Rational lam = 1 - prev[1];  // 1 - gamma(k-1, k)
    ++sol.ops;
    sol.lambda.push_back(lam);
    running += lam;
    ++sol.ops;
    sol.cumsum.push_back(running);

    row[0] = 1;  // gamma(k,k): the recurrence reproduces it, see below
    for (int kp = k + 1; kp <= m; ++kp) {
      Rational w = 1;
      Rational acc = 0;
      for (int d = 0; d <= kp - k + 1; ++d) {
        int value = kp - d;  // target entry gamma(k-1, value)
        if (value >= k - 1) {
          acc += w * prev[static_cast<size_t>(value - (k - 1))];
          sol.ops += 2;
        }
        w *= lam;
        w /= d + 1;
        sol.ops += 2;
      }
      row[static_cast<size_t>(kp - k)] = acc;
    }
  }
  return sol;
}

unsigned long long solve_lambda_ops(int m) {
  check_m(m);
  unsigned long long ops = 0;
  for (int k = 1; k <= m; ++k) {
    ops += 2;
    for (int kp = k + 1; kp <= m; ++kp) {
      for (int d = 0; d <= kp - k + 1; ++d) {
        int value = kp - d;
        if (value >= k - 1) ops += 2;
        ops += 2;
      }
    }
  }
  return ops;
}

LambdaSolution solve_lambda_naive(int m) {
  check_m(m);
  // The stage-k equality reads lambda_k + (terms without lambda_k) = 1:
  // the unit vector contributes lambda_k^1/1! and every other minimal
  // pattern has b_k = 0. Solve stage by stage.
  LambdaSolution sol;
  sol.m = m;
  sol.gamma = base_rows(m);  // table not produced by this path
  Rational running = 0;
  for (int k = 1; k <= m; ++k) {
    Rational rest = 0;
    for (const PatternVector& b : enumerate_xi(k).vectors) {
      bool unit = b[0] == 1;
      if (unit) continue;
      Rational term = 1;
      for (int idx = 1; idx < k; ++idx) {  // idx 0 is b_k = 0 here
        int deg = b[static_cast<size_t>(idx)];
        if (deg == 0) continue;
        int stage = k - idx;  // lambda index for this entry
        term *= rat_pow_ui(sol.lambda[static_cast<size_t>(stage) - 1], static_cast<unsigned long>(deg));
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(deg));
        term /= Rational(fact);
      }
      rest += term;
    }
    Rational lam = 1 - rest;
    sol.lambda.push_back(lam);
    running += lam;
    sol.cumsum.push_back(running);
  }
  return sol;
}

Rational cumulative_lambda(const LambdaSolution& sol, int k) {
  if (k < 1 || k > sol.m) throw std::invalid_argument("stage index out of range");
  return sol.cumsum[static_cast<size_t>(k) - 1];
}

Rational equality_sum(const LambdaSolution& sol, int k) {
  if (k < 1 || k > sol.m) throw std::invalid_argument("stage index out of range");
  Rational total = 0;
  for (const PatternVector& b : enumerate_xi(k).vectors) {
    Rational term = 1;
    for (int idx = 0; idx < k; ++idx) {
      int deg = b[static_cast<size_t>(idx)];
      if (deg == 0) continue;
      int stage = k - idx;
      term *= rat_pow_ui(sol.lambda[static_cast<size_t>(stage) - 1], static_cast<unsigned long>(deg));
      mpz_class fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(deg));
      term /= Rational(fact);
    }
    total += term;
  }
  return total;
}

LowerBound lower_bound(const LambdaSolution& sol, int digits) {
  if (digits < 1) throw std::invalid_argument("digits must be >= 1");
  LowerBound out;
  out.digits = digits;
  out.value = 0;
  for (int k = 1; k <= sol.m; ++k) {
    Rational term = exp_neg(sol.cumsum[static_cast<size_t>(k) - 1], digits + 4);
    out.value += term;
    out.term_decimals.push_back(rat_to_decimal_trunc(term, digits));
    out.terms.push_back(std::move(term));
  }
  out.decimal = rat_to_decimal_trunc(out.value, digits);
  return out;
}

namespace {

// Dyadic outward rounding: lo rounds down, hi rounds up, both to prec_bits
// fractional bits. Endpoints stay small no matter how deep the recurrence
// goes, which is the whole point.
Rational round_down(const Rational& x, unsigned prec) {
  mpz_class shifted;
  mpz_mul_2exp(shifted.get_mpz_t(), x.get_num().get_mpz_t(), prec);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class unit = 1;
  mpz_mul_2exp(unit.get_mpz_t(), unit.get_mpz_t(), prec);
  Rational out(q, unit);
  out.canonicalize();
  return out;
}

Rational round_up(const Rational& x, unsigned prec) {
  mpz_class shifted;
  mpz_mul_2exp(shifted.get_mpz_t(), x.get_num().get_mpz_t(), prec);
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), shifted.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class unit = 1;
  mpz_mul_2exp(unit.get_mpz_t(), unit.get_mpz_t(), prec);
  Rational out(q, unit);
  out.canonicalize();
  return out;
}

struct Ival {
  Rational lo, hi;
};

}  // namespace

GammaIntervals gamma_intervals(int m, int prec_bits) {
  check_m(m);
  if (prec_bits < 64) throw std::invalid_argument("need at least 64 fractional bits");
  unsigned prec = static_cast<unsigned>(prec_bits);

  auto add = [&](const Ival& a, const Ival& b) {
    return Ival{round_down(a.lo + b.lo, prec), round_up(a.hi + b.hi, prec)};
  };
  // products of nonnegative intervals only
  auto mul = [&](const Ival& a, const Ival& b) {
    return Ival{round_down(a.lo * b.lo, prec), round_up(a.hi * b.hi, prec)};
  };
  auto div_ui = [&](const Ival& a, unsigned long u) {
    return Ival{round_down(a.lo / static_cast<long>(u), prec), round_up(a.hi / static_cast<long>(u), prec)};
  };

  GammaIntervals out;
  out.m = m;
  out.certified = true;

  std::vector<std::vector<Ival>> rows(static_cast<size_t>(m) + 1);
  for (int k = 0; k <= m; ++k)
    rows[static_cast<size_t>(k)].assign(static_cast<size_t>(m - k) + 1, Ival{Rational(0), Rational(0)});
  rows[0][0] = Ival{Rational(1), Rational(1)};

  for (int k = 1; k <= m; ++k) {
    const auto& prev = rows[static_cast<size_t>(k) - 1];
    auto& row = rows[static_cast<size_t>(k)];
    Ival lam{1 - prev[1].hi, 1 - prev[1].lo};  // exact endpoints, no rounding needed
    if (sgn(lam.lo) <= 0) out.certified = false;
    out.lambda_lo.push_back(lam.lo);
    out.lambda_hi.push_back(lam.hi);

    // gamma(k,k) expands to gamma(k-1,k) + lambda_k * gamma(k-1,k-1); with
    // gamma(k-1,k-1) = 1 and lambda_k = 1 - gamma(k-1,k) that is identically
    // 1, so the diagonal entry is exact by induction from gamma(0,0) = 1.
    row[0] = Ival{Rational(1), Rational(1)};
    for (int kp = k + 1; kp <= m; ++kp) {
      Ival w{Rational(1), Rational(1)};
      Ival acc{Rational(0), Rational(0)};
      for (int d = 0; d <= kp - k + 1; ++d) {
        int value = kp - d;
        if (value >= k - 1) acc = add(acc, mul(w, prev[static_cast<size_t>(value - (k - 1))]));
        w = mul(w, lam);
        w = div_ui(w, static_cast<unsigned long>(d) + 1);
      }
      row[static_cast<size_t>(kp - k)] = acc;
    }
    // strict decrease along the row, checked on the certified endpoints
    for (int kp = k; kp < m; ++kp) {
      const Ival& a = row[static_cast<size_t>(kp - k)];
      const Ival& b = row[static_cast<size_t>(kp - k) + 1];
      if (!(b.hi < a.lo)) out.certified = false;
    }
  }

  out.lo.resize(rows.size());
  out.hi.resize(rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    for (const Ival& iv : rows[k]) {
      out.lo[k].push_back(iv.lo);
      out.hi[k].push_back(iv.hi);
    }
  }
  return out;
}

bool certify_gamma_monotonicity(int m, int prec_bits) {
  return gamma_intervals(m, prec_bits).certified;
}

}  // namespace odds
