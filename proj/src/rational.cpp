#include "odds/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace odds {

Rational rat_parse(std::string_view text) {
  auto fail = [&]() -> void {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  size_t pos = 0;
  auto scan_int = [&](bool sign_ok) {
    size_t start = pos;
    if (sign_ok && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t first_digit = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == first_digit) fail();
    return std::string(text.substr(start, pos - start));
  };
  std::string num = scan_int(true);
  if (num[0] == '+') num.erase(0, 1);  // mpz rejects an explicit plus
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') fail();
    ++pos;
    den = scan_int(false);
  }
  if (pos != text.size()) fail();

  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rational out(mpz_class(num, 10), d);
  out.canonicalize();
  return out;
}

std::string rat_to_string(const Rational& x) { return x.get_str(); }

namespace {

// Shared digit machinery: q = scaled integer part, decide whether to bump
// the last digit, then place the decimal point.
std::string render_fixed(const Rational& x, int digits, bool round_half_even) {
  if (digits < 1) throw std::invalid_argument("decimal rendering needs digits >= 1");
  bool neg = sgn(x) < 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = abs(x.get_num()) * scale;
  const mpz_class& den = x.get_den();
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (round_half_even) {
    mpz_class twice = 2 * r;
    int c = cmp(twice, den);
    if (c > 0 || (c == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;
  }
  std::string s = q.get_str();
  if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  if (neg && q != 0) s.insert(0, "-");
  return s;
}

}  // namespace

std::string rat_to_decimal(const Rational& x, int digits) {
  return render_fixed(x, digits, true);
}

std::string rat_to_decimal_trunc(const Rational& x, int digits) {
  return render_fixed(x, digits, false);
}

namespace {

// Alternating series sum_{j>=0} (-t)^j / j! for t in (0,1], stopped once the
// next term falls below `eps`. That term bounds the truncation error.
Rational exp_neg_unit(const Rational& t, const Rational& eps) {
  Rational sum = 1;
  Rational term = 1;
  unsigned long j = 0;
  for (;;) {
    ++j;
    term *= t;
    term /= static_cast<unsigned long>(j);
    if (term < eps) break;
    if (j % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

}  // namespace

Rational exp_neg(const Rational& x, int digits) {
  if (digits < 1) throw std::invalid_argument("exp_neg needs digits >= 1");
  if (sgn(x) < 0) throw std::invalid_argument("exp_neg requires x >= 0");
  if (sgn(x) == 0) return 1;

  mpz_class n_int;
  mpz_fdiv_q(n_int.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  Rational f = x - Rational(n_int);
  unsigned long n = mpz_get_ui(n_int.get_mpz_t());

  // eps = 10^{-(digits+10)}. e^{-1} enters raised to the n-th power, which
  // amplifies its error by at most n (all factors lie in (0,1]), so it gets
  // a 1/(3 max(n,1)) share and e^{-f} gets 1/3; total < eps.
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits) + 10);
  Rational eps(1, pow10);

  Rational result = 1;
  if (n > 0) {
    Rational e1 = exp_neg_unit(Rational(1), eps / (3 * static_cast<long>(n)));
    result = rat_pow_ui(e1, n);
  }
  if (sgn(f) > 0) result *= exp_neg_unit(f, eps / 3);
  return result;
}

Rational rat_pow_ui(const Rational& x, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den().get_mpz_t(), e);
  Rational out(num, den);
  // already reduced: powers of coprime integers stay coprime
  return out;
}

double rat_to_double(const Rational& x) { return x.get_d(); }

}  // namespace odds
