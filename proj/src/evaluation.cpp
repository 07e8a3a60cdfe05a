#include "prismreal/evaluation.hpp"

namespace prismreal {

Rational theta(const LaurentSeries& f, const Rational& r_prime)
{
    if (f.is_zero())
        return 0;
    if (r_prime == 0)
        throw UsageError("evaluation point must be nonzero");

    // Horner from the top exponent down, then rescale by the lowest power.
    const auto& terms = f.terms();
    auto it = terms.rbegin();
    Rational acc(it->second);
    Exponent prev = it->first;
    for (++it; it != terms.rend(); ++it) {
        acc *= power(r_prime, prev - it->first);
        acc += Rational(it->second);
        prev = it->first;
    }
    return acc * power(r_prime, prev);
}

Rational theta(const LaurentSeries& f, const RadiusParams& p)
{
    return theta(f, p.r_prime());
}

ContinuityBound continuity_bound(Exponent order, const Rational& budget, const RadiusParams& p)
{
    if (order < 0)
        throw UsageError("agreement order must be nonnegative");
    if (budget <= 0)
        throw UsageError("norm budget must be positive");
    Rational ratio = p.r_prime() / p.r();
    Rational bound = 2 * budget * power(ratio, order) / (1 - ratio);
    return {order, budget, p, bound};
}

Integer coefficient_ceiling(Exponent n, const Rational& budget, const Rational& r)
{
    Rational limit = budget / power(r, n);
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), limit.get_num_mpz_t(), limit.get_den_mpz_t());
    return out;
}

} // namespace prismreal
