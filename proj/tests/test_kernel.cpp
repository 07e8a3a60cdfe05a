#include "doctest.h"

#include "test_support.hpp"
#include "prismreal/kernel.hpp"
#include "prismreal/sampling.hpp"

using namespace prismreal;

namespace {

const SeriesShape kShape{-5, 10, 6, 200};

const LaurentSeries& quotient_of(const DivisionResult& r)
{
    REQUIRE(std::holds_alternative<LaurentSeries>(r));
    return std::get<LaurentSeries>(r);
}

} // namespace

TEST_CASE("generator")
{
    KernelGenerator ten = generator(10);
    CHECK(ten.poly() == LaurentSeries{{0, 1}, {1, -10}});
    CHECK(ten.r_prime() == Rational(1, 10));
    CHECK(generator(2).poly() == LaurentSeries{{0, 1}, {1, -2}});
    CHECK(generator(10, GeneratorSign::unit_leading).poly() == LaurentSeries{{0, -1}, {1, 10}});

    for (long b = 2; b <= 12; ++b) {
        KernelGenerator g = generator(b);
        CHECK(g.poly().size() == 2);
        CHECK(g.poly().coeff(0) == 1);
        CHECK(*g.poly().min_exponent() == 0);
        CHECK(oracle::eval(g.poly().terms(), make_rational(1, b)) == 0);
        CHECK(theta(g.poly(), g.r_prime()) == 0);
    }
    CHECK_THROWS_AS(generator(1), UnsupportedBase);
    CHECK_THROWS_AS(generator(-3), UnsupportedBase);
}

TEST_CASE("inverse_truncation")
{
    CHECK(inverse_truncation(generator(10), 2) == LaurentSeries{{0, 1}, {1, 10}, {2, 100}});
    CHECK(inverse_truncation(generator(7), 0) == LaurentSeries::constant(1));
    CHECK_THROWS_AS(inverse_truncation(generator(3), -1), UsageError);

    Sampler s(51);
    for (int i = 0; i < 100; ++i) {
        long b = static_cast<long>(s.uniform(2, 40));
        Exponent n = s.uniform(0, 30);
        for (GeneratorSign sign : {GeneratorSign::unit_constant, GeneratorSign::unit_leading}) {
            KernelGenerator gen = generator(b, sign);
            LaurentSeries inv = inverse_truncation(gen, n);
            Integer top;
            mpz_ui_pow_ui(top.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(n + 1));
            LaurentSeries expected{{0, 1}, {n + 1, Integer(-top)}};
            CHECK(gen.poly() * inv == expected);
            CHECK(oracle::product(gen.poly().terms(), inv.terms()) == expected.terms());
            // Truncation norms grow with N; sub-multiplicativity still bounds the product.
            Rational r = make_rational(1, 2 * b + 1);
            CHECK(r_norm(gen.poly() * inv, r) <= r_norm(gen.poly(), r) * r_norm(inv, r));
        }
    }
}

TEST_CASE("divide")
{
    KernelGenerator ten = generator(10);
    CHECK(quotient_of(divide(LaurentSeries{{0, -1}, {1, 10}}, ten)) == LaurentSeries::constant(-1));
    CHECK(quotient_of(divide(LaurentSeries{{0, 1}, {2, -100}}, ten)) == LaurentSeries{{0, 1}, {1, 10}});
    CHECK(quotient_of(divide(LaurentSeries{}, ten)).is_zero());
    CHECK(quotient_of(divide(LaurentSeries{{-1, 1}, {0, -10}}, ten)) == LaurentSeries{{-1, 1}});

    DivisionResult t = divide(LaurentSeries::monomial(1, 1), ten);
    REQUIRE(std::holds_alternative<NotDivisible>(t));
    CHECK_FALSE(std::get<NotDivisible>(t).remainder.is_zero());

    DivisionResult three_plus_t = divide(LaurentSeries{{0, 3}, {1, 1}}, ten);
    REQUIRE(std::holds_alternative<NotDivisible>(three_plus_t));
    // 3 + T = 3(1 - 10T) + 31T.
    CHECK(std::get<NotDivisible>(three_plus_t).remainder == LaurentSeries{{1, 31}});

    CHECK_THROWS_AS(divide(LaurentSeries{{0, 1}}, LaurentSeries{}), UsageError);
    CHECK_THROWS_AS(divide(LaurentSeries{{0, 1}}, LaurentSeries{{0, 2}, {1, 1}}), UsageError);
}

TEST_CASE("divide by either sign of the generator")
{
    Sampler s(52);
    for (int i = 0; i < 200; ++i) {
        long b = static_cast<long>(s.uniform(2, 16));
        LaurentSeries h = s.series(kShape);
        for (GeneratorSign sign : {GeneratorSign::unit_constant, GeneratorSign::unit_leading}) {
            KernelGenerator gen = generator(b, sign);
            CHECK(quotient_of(divide(gen.poly() * h, gen)) == h);
        }
    }
}

TEST_CASE("the remainder witness reconstructs the dividend")
{
    Sampler s(53);
    KernelGenerator gen = generator(10);
    for (int i = 0; i < 200; ++i) {
        LaurentSeries g = s.nonzero_series(kShape);
        DivisionResult r = divide(g, gen);
        if (const auto* nd = std::get_if<NotDivisible>(&r)) {
            // g - remainder must itself be an exact multiple of the generator.
            LaurentSeries rest = g - nd->remainder;
            CHECK(std::holds_alternative<LaurentSeries>(divide(rest, gen)));
            CHECK(theta(g, gen.r_prime()) == theta(nd->remainder, gen.r_prime()));
            CHECK(theta(g, gen.r_prime()) != 0);
        }
    }
}

TEST_CASE("in_kernel")
{
    RadiusParams p(Rational(1, 2), Rational(1, 10));
    CHECK(in_kernel(LaurentSeries{{0, 1}, {1, -10}}, p));
    CHECK(in_kernel(LaurentSeries{}, p));
    CHECK_FALSE(in_kernel(LaurentSeries{{0, 3}, {1, 1}}, p));
    CHECK(theta(LaurentSeries{{0, 3}, {1, 1}}, p) == Rational(31, 10));
    CHECK_THROWS_AS(in_kernel(LaurentSeries{}, RadiusParams(Rational(1, 2), Rational(2, 5))), UsageError);
    CHECK(base_of(Rational(1, 7)) == 7);
}

TEST_CASE("theta membership and divisibility agree")
{
    Sampler s(54);
    for (int i = 0; i < 400; ++i) {
        long b = static_cast<long>(s.uniform(3, 12));
        KernelGenerator gen = generator(b);
        RadiusParams p(Rational(1, 2), gen.r_prime());
        LaurentSeries g = s.coin() ? gen.poly() * s.series(kShape) : s.series(kShape);
        CHECK(in_kernel(g, p) == divisible(g, gen));
    }
}

TEST_CASE("exact sequence at the point")
{
    Sampler s(55);
    KernelGenerator gen = generator(10);
    RadiusParams p(Rational(1, 2), gen.r_prime());
    for (int i = 0; i < 300; ++i) {
        LaurentSeries g = s.nonzero_series(kShape), h = s.series(kShape);
        // injective
        CHECK_FALSE((gen.poly() * g).is_zero());
        if (g != h)
            CHECK(gen.poly() * g != gen.poly() * h);
        // image inside the kernel, and divides back
        CHECK(in_kernel(gen.poly() * h, p));
        CHECK(quotient_of(divide(gen.poly() * h, gen)) == h);
        // divide-then-multiply on kernel elements
        if (in_kernel(g, p))
            CHECK(gen.poly() * quotient_of(divide(g, gen)) == g);
        // norm control of the product
        CHECK(r_norm(gen.poly() * h, p.r()) <= r_norm(gen.poly(), p.r()) * r_norm(h, p.r()));
    }
}

TEST_CASE("not_zero_divisor_check")
{
    KernelGenerator gen = generator(10);
    CHECK_FALSE((gen.poly() * LaurentSeries::monomial(1, -5)).is_zero());

    ZeroDivisorReport rep = not_zero_divisor_check(gen, 1000, 42);
    CHECK(rep.trials == 1000);
    CHECK(rep.failures == 0);
    CHECK(rep.witnesses.empty());
    CHECK_THROWS_AS(not_zero_divisor_check(gen, 0), UsageError);
}
