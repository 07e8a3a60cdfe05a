#pragma once

// Seeded random inputs for property runs. Each (seed, stream) pair gives an
// independent, reproducible generator, so trials can be replayed one by one.

#include <cstdint>
#include <random>
#include <utility>

#include "prismreal/series.hpp"

namespace prismreal {

struct SeriesShape {
    Exponent min_exponent = -6;
    Exponent max_exponent = 12;
    std::size_t max_terms = 8;
    std::int64_t coeff_bound = 1000;
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed, std::uint64_t stream = 0);

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin(double p_true = 0.5);

    LaurentSeries series(const SeriesShape& shape = {});
    LaurentSeries nonzero_series(const SeriesShape& shape = {});

    // num/den with 1 <= den <= max_den and |num/den| <= bound.
    Rational rational(std::int64_t bound, std::int64_t max_den);

    // k / 10^d with |k| < 10^max_digits and d <= max_digits.
    Rational terminating_decimal(int max_digits);

    // Random series supported in [lo, hi] with r_norm(f, r) <= c.
    LaurentSeries budgeted_series(Exponent lo, Exponent hi, const Rational& r, const Rational& c);

    // Two series within budget c that share every coefficient at exponents <= order.
    std::pair<LaurentSeries, LaurentSeries> agreeing_pair(Exponent lo, Exponent order, Exponent hi,
                                                          const Rational& r, const Rational& c);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    LaurentSeries fill_budget(std::vector<Exponent> exponents, const Rational& r, Rational remaining);

    std::mt19937_64 engine_;
};

} // namespace prismreal
