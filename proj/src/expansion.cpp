#include "prismreal/expansion.hpp"

#include <stdexcept>

namespace prismreal {

namespace {

// Walks from (n, pw = r'^n) to the least exponent with r'^n <= ax.
// Returns the exponent and leaves pw = r'^n.
Exponent walk_to_min_exponent(const Rational& ax, const Rational& rp, Exponent n, Rational& pw)
{
    if (pw <= ax) {
        for (;;) {
            Rational up = pw / rp;
            if (up > ax)
                break;
            pw = std::move(up);
            --n;
        }
    } else {
        while (pw > ax) {
            pw *= rp;
            ++n;
        }
    }
    return n;
}

DigitStep step_from(const Rational& x, const Rational& rp, Exponent n_hint, Rational pw)
{
    Rational ax = abs(x);
    Exponent n = walk_to_min_exponent(ax, rp, n_hint, pw);

    Rational scaled = ax / pw;
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (x < 0)
        a = -a;
    Rational next = x - Rational(a) * pw;

    Rational deviation = abs(Rational(x / pw - Rational(a)));
    if (a == 0 || deviation >= 1 || abs(next) >= pw || pw > ax
        || Rational(abs(a)) >= 1 + 1 / rp)
        throw std::logic_error("greedy digit step violated its bounds at x = " + to_string(x));
    return {n, std::move(a), std::move(next)};
}

} // namespace

Exponent min_exponent(const Rational& x, const Rational& r_prime)
{
    if (x == 0)
        throw UsageError("min_exponent of zero is undefined");
    if (r_prime <= 0 || r_prime >= 1)
        throw UsageError("r' must lie strictly between 0 and 1");
    Rational pw = 1;
    return walk_to_min_exponent(abs(x), r_prime, 0, pw);
}

DigitStep next_digit(const Rational& x, const RadiusParams& p)
{
    if (x == 0)
        throw UsageError("next_digit of zero is undefined");
    return step_from(x, p.r_prime(), 0, Rational(1));
}

Rational covering_budget(const Rational& bound, const RadiusParams& p)
{
    if (bound == 0)
        return 0;
    Exponent floor_exponent = min_exponent(bound, p.r_prime());
    const Rational& r = p.r();
    return (1 + 1 / p.r_prime()) * power(r, floor_exponent) / (1 - r);
}

ExpansionCertificate expand(const Rational& x, const RadiusParams& p, std::size_t max_digits)
{
    const Rational& rp = p.r_prime();
    ExpansionCertificate cert{x, p, {}, x, 1 + 1 / rp, covering_budget(abs(x), p)};

    Exponent hint = 0;
    Rational pw = 1;
    while (cert.residual != 0 && cert.digits.size() < max_digits) {
        DigitStep s = step_from(cert.residual, rp, hint, pw);
        if (!cert.digits.empty() && s.exponent <= cert.digits.back().exponent)
            throw std::logic_error("greedy exponents failed to increase");
        cert.digits.push_back({s.exponent, std::move(s.digit)});
        cert.residual = std::move(s.next);
        // The residual is below r'^n, so the next exponent is at least n + 1.
        hint = s.exponent + 1;
        pw = power(rp, hint);
    }
    return cert;
}

LaurentSeries series_of(const ExpansionCertificate& cert)
{
    std::vector<std::pair<Exponent, Integer>> terms;
    terms.reserve(cert.digits.size());
    for (const auto& d : cert.digits)
        terms.emplace_back(d.exponent, d.value);
    return LaurentSeries(terms);
}

std::string audit(const ExpansionCertificate& cert)
{
    const Rational& rp = cert.params.r_prime();
    if (cert.digit_bound != 1 + 1 / rp)
        return "digit bound is not 1 + 1/r'";

    std::optional<Exponent> floor_exponent;
    if (cert.target != 0)
        floor_exponent = min_exponent(cert.target, rp);

    for (std::size_t i = 0; i < cert.digits.size(); ++i) {
        const Digit& d = cert.digits[i];
        if (i > 0 && d.exponent <= cert.digits[i - 1].exponent)
            return "exponents not strictly increasing at index " + std::to_string(i);
        if (d.value == 0)
            return "zero digit at exponent " + std::to_string(d.exponent);
        if (Rational(abs(d.value)) >= cert.digit_bound)
            return "digit exceeds 1 + 1/r' at exponent " + std::to_string(d.exponent);
        if (!floor_exponent || d.exponent < *floor_exponent)
            return "exponent below the uniform floor at " + std::to_string(d.exponent);
    }

    LaurentSeries s = series_of(cert);
    if (cert.target - theta(s, rp) != cert.residual)
        return "residual does not equal target - theta(series)";
    if (!cert.digits.empty() && abs(cert.residual) >= power(rp, cert.digits.back().exponent))
        return "residual not below r'^(last exponent)";
    if (cert.norm_budget != covering_budget(abs(cert.target), cert.params))
        return "norm budget does not match the covering bound";
    if (r_norm(s, cert.params.r()) > cert.norm_budget)
        return "r-norm of the digit series exceeds the norm budget";
    return {};
}

} // namespace prismreal
