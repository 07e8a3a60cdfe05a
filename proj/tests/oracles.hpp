#pragma once

// Brute-force reference computations for the unit and acceptance tests.
// None of these call into the library algorithms they are used to check.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include <stdexcept>

#include "prismreal/io.hpp"
#include "prismreal/series.hpp"

namespace oracle {

using prismreal::Exponent;
using prismreal::Integer;
using prismreal::Rational;
using Terms = std::map<Exponent, Integer>;

// q^n by repeated multiplication or division.
inline Rational pow_loop(const Rational& q, Exponent n)
{
    Rational out = 1;
    for (Exponent i = 0; i < n; ++i)
        out *= q;
    for (Exponent i = 0; i > n; --i)
        out /= q;
    return out;
}

inline Rational eval(const Terms& terms, const Rational& x)
{
    Rational total = 0;
    for (const auto& [n, a] : terms)
        total += Rational(a) * pow_loop(x, n);
    return total;
}

inline Rational weighted_norm(const Terms& terms, const Rational& r)
{
    Rational total = 0;
    for (const auto& [n, a] : terms)
        total += Rational(abs(a)) * pow_loop(r, n);
    return total;
}

inline Terms product(const Terms& f, const Terms& g)
{
    Terms out;
    for (const auto& [i, a] : f)
        for (const auto& [j, b] : g)
            out[i + j] += a * b;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

// The n with q^n <= x < q^(n-1), 0 < q < 1, by scanning a wide window.
inline Exponent min_exponent_scan(const Rational& x, const Rational& q)
{
    Rational ax = abs(x);
    for (Exponent n = -400; n <= 400; ++n)
        if (pow_loop(q, n) <= ax)
            return n;
    throw std::runtime_error("min_exponent_scan window too small");
}

// Positional digits of |x| in base b, exponent n <-> b^{-n}, via integer long
// division. Stops after the digit at exponent max_exponent.
inline std::vector<std::pair<Exponent, Integer>> positional_digits(const Rational& x, long b,
                                                                   Exponent max_exponent)
{
    std::vector<std::pair<Exponent, Integer>> out;
    Integer num = abs(x.get_num());
    const Integer& den = x.get_den();
    Integer whole = num / den;
    Integer rem = num % den;

    std::vector<Integer> int_digits;
    while (whole != 0) {
        int_digits.push_back(whole % b);
        whole /= b;
    }
    for (std::size_t j = int_digits.size(); j-- > 0;)
        if (int_digits[j] != 0)
            out.emplace_back(-static_cast<Exponent>(j), int_digits[j]);
    for (Exponent n = 1; n <= max_exponent && rem != 0; ++n) {
        rem *= b;
        Integer d = rem / den;
        rem %= den;
        if (d != 0)
            out.emplace_back(n, d);
    }
    return out;
}

// Number of tuples in the digit box |a_n| <= floor(c r^{-n}), n = 0..m.
inline Integer box_size(int m, const Rational& r, const Rational& c)
{
    Integer total = 1;
    for (int n = 0; n <= m; ++n) {
        Rational lim = c / pow_loop(r, n);
        total *= 2 * Integer(lim.get_num() / lim.get_den()) + 1;
    }
    return total;
}

// Every tuple in the box |a_n| <= bound_n that passes the exact norm filter.
inline std::vector<std::vector<std::int64_t>> truncation_box(int m, const Rational& r,
                                                             const Rational& c)
{
    std::vector<std::int64_t> bounds;
    for (int n = 0; n <= m; ++n) {
        Rational lim = c / pow_loop(r, n);
        bounds.push_back(static_cast<std::int64_t>(mpz_class(lim.get_num() / lim.get_den()).get_si()));
    }
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> t(static_cast<std::size_t>(m + 1));
    for (std::size_t n = 0; n < t.size(); ++n)
        t[n] = -bounds[n];
    for (;;) {
        Rational norm = 0;
        for (std::size_t n = 0; n < t.size(); ++n)
            norm += Rational(std::abs(t[n])) * pow_loop(r, static_cast<Exponent>(n));
        if (norm <= c)
            out.push_back(t);
        std::size_t k = t.size();
        while (k-- > 0) {
            if (t[k] < bounds[k]) {
                ++t[k];
                break;
            }
            t[k] = -bounds[k];
        }
        if (k == static_cast<std::size_t>(-1))
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle
