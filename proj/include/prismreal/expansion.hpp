#pragma once

// Greedy digit expansion: writes a rational x as sum a_n (r')^n with
// |a_n| < 1 + 1/r', taking at each step the least exponent n with
// (r')^n <= |x| and the digit truncated toward zero.

#include <vector>

#include "prismreal/evaluation.hpp"

namespace prismreal {

struct Digit {
    Exponent exponent;
    Integer value;

    friend bool operator==(const Digit&, const Digit&) = default;
};

struct DigitStep {
    Exponent exponent;
    Integer digit;
    Rational next; // x - digit * (r')^exponent
};

struct ExpansionCertificate {
    Rational target;
    RadiusParams params;
    std::vector<Digit> digits;  // exponents strictly increasing
    Rational residual;          // target - theta(series_of(*this))
    Rational digit_bound;       // 1 + 1/r'; every |digit| is strictly below it
    Rational norm_budget;       // bound on the r-norm of the digit series
};

// The unique n with (r')^n <= |x| < (r')^{n-1}. Throws UsageError for x == 0.
Exponent min_exponent(const Rational& x, const Rational& r_prime);

DigitStep next_digit(const Rational& x, const RadiusParams& p);

// Budget c(M) = (1 + 1/r') * sum_{n >= n_min} r^n, with n_min = min_exponent(M),
// covering the r-norm of every expansion of a target in [-M, M].
Rational covering_budget(const Rational& bound, const RadiusParams& p);

// Emits digits until the residual vanishes or max_digits are produced.
ExpansionCertificate expand(const Rational& x, const RadiusParams& p, std::size_t max_digits);

LaurentSeries series_of(const ExpansionCertificate& cert);

// Re-checks every certificate invariant from scratch; returns an empty string
// when all hold, otherwise a description of the first violation.
std::string audit(const ExpansionCertificate& cert);

} // namespace prismreal
