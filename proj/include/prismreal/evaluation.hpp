#pragma once

#include "prismreal/series.hpp"

namespace prismreal {

// theta: sum a_n T^n  ->  sum a_n (r')^n, exactly.
Rational theta(const LaurentSeries& f, const Rational& r_prime);
Rational theta(const LaurentSeries& f, const RadiusParams& p);

// Modulus of continuity of theta on the budget-c ball: series that agree on
// every exponent <= order evaluate to values at most `bound` apart, where
// bound = 2c (r'/r)^order / (1 - r'/r).
struct ContinuityBound {
    Exponent order;
    Rational budget;
    RadiusParams params;
    Rational bound;
};

ContinuityBound continuity_bound(Exponent order, const Rational& budget, const RadiusParams& p);

// Largest |a_n| permitted at exponent n inside the budget-c ball: floor(c r^{-n}).
Integer coefficient_ceiling(Exponent n, const Rational& budget, const Rational& r);

} // namespace prismreal
