#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace odds {

// Exact rational scalar used everywhere. mpq_class keeps values canonical
// (reduced, positive denominator) through arithmetic; rat_parse canonicalizes
// on entry, so the invariant holds for every Rational in the program.
using Rational = mpq_class;

// Accepts "a" or "a/b" with an optional leading sign on a. No whitespace,
// no base prefixes. Throws std::invalid_argument on malformed text or b = 0.
Rational rat_parse(std::string_view text);

// Canonical wire form: "num/den" in lowest terms, "num" when den = 1.
std::string rat_to_string(const Rational& x);

// Fixed-point decimal with exactly `digits` fractional digits, rounded
// half-to-even at the last kept digit. digits >= 1.
std::string rat_to_decimal(const Rational& x, int digits);

// Same, but truncated toward zero instead of rounded. The published bound
// tables chop at the tenth decimal rather than rounding (their m=1 entry
// ends in ...4411 while the value continues ...44117), so reproducing them
// requires this mode; the rounded form is wrong in the last digit for some
// rows. Plain table values (the lambda columns) are rounded and use
// rat_to_decimal.
std::string rat_to_decimal_trunc(const Rational& x, int digits);

// e^{-x} for x >= 0 as a rational with absolute error < 10^{-digits}.
//
// Argument reduction x = n + f with n integer and f in [0,1), then
// alternating Taylor series for e^{-1} and e^{-f}. Each series is cut when
// the first omitted term drops below its share of the budget; for an
// alternating series with decreasing terms that omitted term bounds the
// tail. Ten guard digits are added internally, so callers comparing ten
// printed decimals can rely on the result well past that position.
Rational exp_neg(const Rational& x, int digits);

// x^e by integer exponentiation of numerator and denominator.
Rational rat_pow_ui(const Rational& x, unsigned long e);

double rat_to_double(const Rational& x);

}  // namespace odds
