#include "prismreal/series.hpp"

namespace prismreal {

namespace {

// Span up to which the Cauchy product accumulates into a dense buffer.
constexpr Exponent kDenseProductSpan = 4096;

void require_unit_interval(const Rational& r, const char* what)
{
    if (r <= 0 || r >= 1)
        throw UsageError(std::string(what) + " must lie strictly between 0 and 1, got "
                         + to_string(r));
}

} // namespace

LaurentSeries::LaurentSeries(const std::vector<std::pair<Exponent, Integer>>& terms)
{
    for (const auto& [n, a] : terms)
        accumulate(n, a);
}

LaurentSeries::LaurentSeries(std::initializer_list<std::pair<Exponent, Integer>> terms)
{
    for (const auto& [n, a] : terms)
        accumulate(n, a);
}

LaurentSeries LaurentSeries::monomial(const Integer& coeff, Exponent n)
{
    LaurentSeries f;
    f.accumulate(n, coeff);
    return f;
}

Integer LaurentSeries::coeff(Exponent n) const
{
    auto it = terms_.find(n);
    return it == terms_.end() ? Integer(0) : it->second;
}

std::optional<Exponent> LaurentSeries::min_exponent() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.begin()->first;
}

std::optional<Exponent> LaurentSeries::max_exponent() const
{
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first;
}

void LaurentSeries::accumulate(Exponent n, const Integer& delta)
{
    if (delta == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(n, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentSeries LaurentSeries::operator-() const
{
    LaurentSeries out = *this;
    for (auto& [n, a] : out.terms_)
        a = -a;
    return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& other)
{
    for (const auto& [n, a] : other.terms_)
        accumulate(n, a);
    return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& other)
{
    for (const auto& [n, a] : other.terms_)
        accumulate(n, Integer(-a));
    return *this;
}

LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g)
{
    LaurentSeries out;
    if (f.is_zero() || g.is_zero())
        return out;

    const Exponent lo = *f.min_exponent() + *g.min_exponent();
    const Exponent hi = *f.max_exponent() + *g.max_exponent();
    if (hi - lo <= kDenseProductSpan) {
        std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
        for (const auto& [i, a] : f.terms_)
            for (const auto& [j, b] : g.terms_)
                mpz_addmul(dense[static_cast<std::size_t>(i + j - lo)].get_mpz_t(),
                           a.get_mpz_t(), b.get_mpz_t());
        auto hint = out.terms_.end();
        for (std::size_t k = 0; k < dense.size(); ++k)
            if (dense[k] != 0)
                hint = out.terms_.emplace_hint(hint, lo + static_cast<Exponent>(k),
                                               std::move(dense[k]));
        return out;
    }

    for (const auto& [i, a] : f.terms_)
        for (const auto& [j, b] : g.terms_)
            out.accumulate(i + j, Integer(a * b));
    return out;
}

LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g)
{
    return f + g;
}

LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g)
{
    return f * g;
}

LaurentSeries shift(const LaurentSeries& f, Exponent k)
{
    std::vector<std::pair<Exponent, Integer>> moved;
    moved.reserve(f.size());
    for (const auto& [n, a] : f.terms())
        moved.emplace_back(n + k, a);
    return LaurentSeries(moved);
}

Rational r_norm(const LaurentSeries& f, const Rational& r)
{
    require_unit_interval(r, "r");
    Rational total = 0;
    for (const auto& [n, a] : f.terms())
        total += Rational(abs(a)) * power(r, n);
    return total;
}

Valuation t_valuation(const LaurentSeries& f)
{
    return f.min_exponent();
}

RadiusParams::RadiusParams(Rational r, Rational r_prime, std::optional<Rational> budget)
    : r_(std::move(r)), r_prime_(std::move(r_prime)), budget_(std::move(budget))
{
    r_.canonicalize();
    r_prime_.canonicalize();
    if (budget_)
        budget_->canonicalize();
    require_unit_interval(r_, "r");
    require_unit_interval(r_prime_, "r'");
    if (r_prime_ >= r_)
        throw UsageError("need r' < r, got r = " + to_string(r_) + ", r' = " + to_string(r_prime_));
    if (budget_ && *budget_ <= 0)
        throw UsageError("norm budget c must be positive, got " + to_string(*budget_));
}

const Rational& RadiusParams::require_budget() const
{
    if (!budget_)
        throw UsageError("operation requires a norm budget c");
    return *budget_;
}

TAdicParams::TAdicParams(Rational delta) : delta_(std::move(delta))
{
    delta_.canonicalize();
    require_unit_interval(delta_, "delta");
}

Rational t_adic_distance(const LaurentSeries& f, const LaurentSeries& g, const TAdicParams& p)
{
    Valuation v = t_valuation(f - g);
    if (!v)
        return 0;
    return power(p.delta(), *v);
}

bool in_budget(const LaurentSeries& f, const RadiusParams& p)
{
    const Rational& c = p.require_budget();
    return r_norm(f, p.r()) <= c;
}

} // namespace prismreal
