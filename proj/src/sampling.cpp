#include "prismreal/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "prismreal/evaluation.hpp"

namespace prismreal {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

Integer to_integer(std::int64_t v)
{
    return Integer(static_cast<long>(v));
}

} // namespace

Sampler::Sampler(std::uint64_t seed, std::uint64_t stream) : engine_(seeded_engine(seed, stream)) {}

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

bool Sampler::coin(double p_true)
{
    return std::bernoulli_distribution(p_true)(engine_);
}

LaurentSeries Sampler::series(const SeriesShape& shape)
{
    auto count = static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(shape.max_terms)));
    std::vector<std::pair<Exponent, Integer>> terms;
    terms.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        terms.emplace_back(uniform(shape.min_exponent, shape.max_exponent),
                           to_integer(uniform(-shape.coeff_bound, shape.coeff_bound)));
    return LaurentSeries(terms);
}

LaurentSeries Sampler::nonzero_series(const SeriesShape& shape)
{
    for (;;) {
        LaurentSeries f = series(shape);
        if (!f.is_zero())
            return f;
    }
}

Rational Sampler::rational(std::int64_t bound, std::int64_t max_den)
{
    std::int64_t den = uniform(1, max_den);
    Integer span = to_integer(bound) * to_integer(den);
    // span may exceed 64 bits; draw the numerator with GMP's own generator.
    gmp_randclass gen(gmp_randinit_default);
    gen.seed(static_cast<unsigned long>(engine_()));
    Integer num = gen.get_z_range(Integer(2 * span + 1)) - span;
    return make_rational(num, to_integer(den));
}

Rational Sampler::terminating_decimal(int max_digits)
{
    int width = static_cast<int>(uniform(1, max_digits));
    std::string digits;
    for (int i = 0; i < width; ++i)
        digits.push_back(static_cast<char>('0' + uniform(0, 9)));
    Integer k(digits, 10);
    if (coin())
        k = -k;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(uniform(0, max_digits)));
    return make_rational(k, scale);
}

LaurentSeries Sampler::fill_budget(std::vector<Exponent> exponents, const Rational& r,
                                   Rational remaining)
{
    std::shuffle(exponents.begin(), exponents.end(), engine_);
    std::vector<std::pair<Exponent, Integer>> terms;
    for (Exponent n : exponents) {
        if (coin(0.3))
            continue;
        Integer ceiling = coefficient_ceiling(n, remaining, r);
        if (ceiling == 0)
            continue;
        // Keep the draw inside int64 range; larger ceilings are clipped.
        std::int64_t cap = ceiling.fits_slong_p() ? ceiling.get_si() : (std::int64_t{1} << 40);
        std::int64_t a = uniform(-cap, cap);
        if (a == 0)
            continue;
        remaining -= Rational(to_integer(a < 0 ? -a : a)) * power(r, n);
        terms.emplace_back(n, to_integer(a));
    }
    return LaurentSeries(terms);
}

LaurentSeries Sampler::budgeted_series(Exponent lo, Exponent hi, const Rational& r, const Rational& c)
{
    std::vector<Exponent> exponents(static_cast<std::size_t>(hi - lo + 1));
    std::iota(exponents.begin(), exponents.end(), lo);
    return fill_budget(std::move(exponents), r, c);
}

std::pair<LaurentSeries, LaurentSeries> Sampler::agreeing_pair(Exponent lo, Exponent order,
                                                               Exponent hi, const Rational& r,
                                                               const Rational& c)
{
    // Split the budget between the shared prefix and the independent tails.
    Rational prefix_budget = c * make_rational(uniform(0, 8), 8);
    LaurentSeries prefix;
    if (prefix_budget > 0 && order >= lo)
        prefix = budgeted_series(lo, order, r, prefix_budget);
    Rational tail_budget = c - r_norm(prefix, r);
    LaurentSeries f = prefix, g = prefix;
    if (tail_budget > 0 && hi > order) {
        f += budgeted_series(order + 1, hi, r, tail_budget);
        g += budgeted_series(order + 1, hi, r, tail_budget);
    }
    return {std::move(f), std::move(g)};
}

} // namespace prismreal
