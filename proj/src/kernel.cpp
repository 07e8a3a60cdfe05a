#include "prismreal/kernel.hpp"

#include "prismreal/sampling.hpp"

namespace prismreal {

KernelGenerator generator(const Integer& b, GeneratorSign sign)
{
    if (b < 2)
        throw UnsupportedBase("kernel generator needs an integer base b >= 2, got " + to_string(b));
    LaurentSeries poly{{0, 1}, {1, Integer(-b)}};
    if (sign == GeneratorSign::unit_leading)
        poly = -poly;
    return KernelGenerator(b, std::move(poly), sign);
}

LaurentSeries inverse_truncation(const KernelGenerator& gen, Exponent order)
{
    if (order < 0)
        throw UsageError("truncation order must be nonnegative");
    std::vector<std::pair<Exponent, Integer>> terms;
    terms.reserve(static_cast<std::size_t>(order) + 1);
    Integer coeff = gen.sign() == GeneratorSign::unit_constant ? 1 : -1;
    for (Exponent k = 0; k <= order; ++k) {
        terms.emplace_back(k, coeff);
        coeff *= gen.base();
    }
    return LaurentSeries(terms);
}

DivisionResult divide(const LaurentSeries& g, const LaurentSeries& divisor)
{
    if (divisor.is_zero())
        throw UsageError("division by the zero series");
    const Exponent d_lo = *divisor.min_exponent();
    const Exponent d_hi = *divisor.max_exponent();
    const Integer& lead = divisor.terms().begin()->second;
    if (abs(lead) != 1)
        throw UsageError("synthetic division needs a divisor with lowest coefficient +-1");

    if (g.is_zero())
        return LaurentSeries{};

    // Any exact quotient is supported in [min g - d_lo, max g - d_hi].
    const Exponent q_hi = *g.max_exponent() - d_hi;
    LaurentSeries remainder = g;
    std::vector<std::pair<Exponent, Integer>> quotient;
    while (!remainder.is_zero()) {
        const Exponent n = *remainder.min_exponent() - d_lo;
        if (n > q_hi)
            break;
        // lead is a unit equal to its own inverse.
        Integer q = remainder.terms().begin()->second * lead;
        remainder -= shift(divisor, n) * LaurentSeries::constant(q);
        quotient.emplace_back(n, std::move(q));
    }
    if (!remainder.is_zero())
        return NotDivisible{std::move(remainder)};
    return LaurentSeries(quotient);
}

DivisionResult divide(const LaurentSeries& g, const KernelGenerator& gen)
{
    return divide(g, gen.poly());
}

Integer base_of(const Rational& r_prime)
{
    if (r_prime.get_num() != 1 || r_prime.get_den() < 2)
        throw UsageError("kernel operations need r' = 1/b with b >= 2, got " + to_string(r_prime));
    return r_prime.get_den();
}

bool in_kernel(const LaurentSeries& g, const RadiusParams& p)
{
    base_of(p.r_prime());
    return theta(g, p.r_prime()) == 0;
}

bool divisible(const LaurentSeries& g, const KernelGenerator& gen)
{
    return std::holds_alternative<LaurentSeries>(divide(g, gen));
}

ZeroDivisorReport not_zero_divisor_check(const KernelGenerator& gen, std::size_t trials,
                                         std::uint64_t seed)
{
    if (trials < 1)
        throw UsageError("not_zero_divisor_check needs at least one trial");
    ZeroDivisorReport report;
    report.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        Sampler sampler(seed, t);
        LaurentSeries g = sampler.nonzero_series();
        if ((gen.poly() * g).is_zero()) {
            ++report.failures;
            report.witnesses.push_back(std::move(g));
        }
    }
    return report;
}

} // namespace prismreal
