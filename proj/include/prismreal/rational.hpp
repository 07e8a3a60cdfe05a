#pragma once

// Exact scalars shared by every module. Integers and rationals are GMP
// values; nothing in the library touches floating point.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace prismreal {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::int64_t;

// Raised when a caller violates a documented precondition.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed textual input (rationals, integers, series files, JSON).
class ParseError : public UsageError {
public:
    using UsageError::UsageError;
};

// Canonicalized num/den; throws UsageError when den == 0.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p/q" or "p" with an optional leading sign on p and q > 0.
Rational parse_rational(std::string_view text);

// Optional sign followed by decimal digits, nothing else.
Integer parse_integer(std::string_view text);

// Always "p/q" in lowest terms, so zero prints as "0/1".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

// base^k for any integer k; base must be nonzero when k < 0.
Rational power(const Rational& base, Exponent k);

int sign(const Rational& value);

struct DecimalRendering {
    std::string text; // truncated toward zero to the requested digits
    bool exact;       // true when text is the full value
};

DecimalRendering to_decimal(const Rational& value, unsigned max_fraction_digits);

} // namespace prismreal
