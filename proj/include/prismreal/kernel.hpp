#pragma once

// The kernel of theta at r' = 1/b is the principal ideal generated by
// 1 - bT. This module builds the generator, truncations of its geometric
// inverse, exact division by it, and two membership tests.

#include <cstdint>
#include <variant>
#include <vector>

#include "prismreal/evaluation.hpp"

namespace prismreal {

enum class GeneratorSign {
    unit_constant, // 1 - bT
    unit_leading,  // bT - 1
};

class UnsupportedBase : public UsageError {
public:
    using UsageError::UsageError;
};

class KernelGenerator {
public:
    const Integer& base() const noexcept { return base_; }
    const LaurentSeries& poly() const noexcept { return poly_; }
    GeneratorSign sign() const noexcept { return sign_; }
    Rational r_prime() const { return make_rational(1, base_); }

private:
    friend KernelGenerator generator(const Integer& b, GeneratorSign sign);

    KernelGenerator(Integer b, LaurentSeries poly, GeneratorSign sign)
        : base_(std::move(b)), poly_(std::move(poly)), sign_(sign)
    {
    }

    Integer base_;
    LaurentSeries poly_;
    GeneratorSign sign_;
};

// Throws UnsupportedBase for b < 2.
KernelGenerator generator(const Integer& b, GeneratorSign sign = GeneratorSign::unit_constant);

// Degree-N truncation of 1 / gen.poly, i.e. +-sum_{k<=N} b^k T^k, so that
// gen.poly * result = 1 - b^{N+1} T^{N+1}.
LaurentSeries inverse_truncation(const KernelGenerator& gen, Exponent order);

struct NotDivisible {
    LaurentSeries remainder;
};

using DivisionResult = std::variant<LaurentSeries, NotDivisible>;

// Synthetic division from the lowest exponent by a divisor whose lowest
// coefficient is +-1. Returns h with divisor * h == g, or the leftover
// remainder once the quotient degree is exhausted.
DivisionResult divide(const LaurentSeries& g, const LaurentSeries& divisor);
DivisionResult divide(const LaurentSeries& g, const KernelGenerator& gen);

// theta(g) == 0 at r'. Requires r' = 1/b for an integer b >= 2.
bool in_kernel(const LaurentSeries& g, const RadiusParams& p);

// gen.poly divides g exactly.
bool divisible(const LaurentSeries& g, const KernelGenerator& gen);

// Base b with r' = 1/b, or UsageError when r' is not of that form.
Integer base_of(const Rational& r_prime);

struct ZeroDivisorReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<LaurentSeries> witnesses; // nonzero g with gen.poly * g == 0
};

// Multiplies gen.poly by `trials` random nonzero series from a seeded stream.
ZeroDivisorReport not_zero_divisor_check(const KernelGenerator& gen, std::size_t trials,
                                         std::uint64_t seed = 0);

} // namespace prismreal
