#pragma once

// Finitely supported integral Laurent series  sum a_n T^n  together with the
// weighted r-norm  sum |a_n| r^n  and the T-adic valuation/metric.

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "prismreal/rational.hpp"

namespace prismreal {

class LaurentSeries {
public:
    using Terms = std::map<Exponent, Integer>;

    LaurentSeries() = default;

    // Duplicate exponents are summed; zero coefficients are dropped.
    explicit LaurentSeries(const std::vector<std::pair<Exponent, Integer>>& terms);
    LaurentSeries(std::initializer_list<std::pair<Exponent, Integer>> terms);

    static LaurentSeries monomial(const Integer& coeff, Exponent n);
    static LaurentSeries constant(const Integer& coeff) { return monomial(coeff, 0); }

    // Sorted by exponent; every stored coefficient is nonzero.
    const Terms& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Integer coeff(Exponent n) const;

    // Smallest / largest exponent of the support; nullopt for zero.
    std::optional<Exponent> min_exponent() const;
    std::optional<Exponent> max_exponent() const;

    LaurentSeries operator-() const;
    LaurentSeries& operator+=(const LaurentSeries& other);
    LaurentSeries& operator-=(const LaurentSeries& other);

    friend LaurentSeries operator+(LaurentSeries f, const LaurentSeries& g) { return f += g; }
    friend LaurentSeries operator-(LaurentSeries f, const LaurentSeries& g) { return f -= g; }
    friend LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g);
    friend bool operator==(const LaurentSeries& f, const LaurentSeries& g) = default;

private:
    void accumulate(Exponent n, const Integer& delta);

    Terms terms_;
};

// Valuation of the zero series is +infinity, represented by nullopt.
using Valuation = std::optional<Exponent>;

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g);
LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g);

// T^k * f.
LaurentSeries shift(const LaurentSeries& f, Exponent k);

// sum |a_n| r^n; requires 0 < r < 1.
Rational r_norm(const LaurentSeries& f, const Rational& r);

// min{ n : a_n != 0 }.
Valuation t_valuation(const LaurentSeries& f);

// 0 < r' < r < 1, with an optional norm budget c > 0.
class RadiusParams {
public:
    RadiusParams(Rational r, Rational r_prime, std::optional<Rational> budget = std::nullopt);

    const Rational& r() const noexcept { return r_; }
    const Rational& r_prime() const noexcept { return r_prime_; }
    const std::optional<Rational>& budget() const noexcept { return budget_; }

    // Throws UsageError when no budget was configured.
    const Rational& require_budget() const;

    RadiusParams with_budget(Rational c) const { return {r_, r_prime_, std::move(c)}; }

    friend bool operator==(const RadiusParams&, const RadiusParams&) = default;

private:
    Rational r_;
    Rational r_prime_;
    std::optional<Rational> budget_;
};

class TAdicParams {
public:
    TAdicParams() : delta_(1, 2) {}
    explicit TAdicParams(Rational delta);

    const Rational& delta() const noexcept { return delta_; }

private:
    Rational delta_;
};

// delta^{v_T(f - g)}, and 0 when f == g.
Rational t_adic_distance(const LaurentSeries& f, const LaurentSeries& g,
                         const TAdicParams& p = TAdicParams{});

// r_norm(f, r) <= c. Throws UsageError if p has no budget.
bool in_budget(const LaurentSeries& f, const RadiusParams& p);

} // namespace prismreal
