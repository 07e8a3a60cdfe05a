#include "prismreal/rational.hpp"

#include <algorithm>
#include <cctype>

namespace prismreal {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return c >= '0' && c <= '9';
    });
}

} // namespace

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw UsageError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer parse_integer(std::string_view text)
{
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("not an integer: '" + std::string(text) + "'");
    Integer value(std::string(s), 10);
    return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text)
{
    std::string_view s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s));
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text))
        throw ParseError("not a rational: '" + std::string(text) + "'");
    Integer num = parse_integer(s.substr(0, slash));
    Integer den(std::string(den_text), 10);
    if (den == 0)
        throw ParseError("zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const Integer& value)
{
    return value.get_str(10);
}

std::string to_string(const Rational& value)
{
    return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

Rational power(const Rational& base, Exponent k)
{
    if (k < 0 && base == 0)
        throw UsageError("negative power of zero");
    auto e = static_cast<unsigned long>(k < 0 ? -k : k);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    return k < 0 ? make_rational(den, num) : make_rational(num, den);
}

int sign(const Rational& value)
{
    return sgn(value);
}

DecimalRendering to_decimal(const Rational& value, unsigned max_fraction_digits)
{
    Integer num = abs(value.get_num());
    const Integer& den = value.get_den();
    Integer whole = num / den;
    Integer rem = num % den;

    std::string frac;
    while (rem != 0 && frac.size() < max_fraction_digits) {
        rem *= 10;
        Integer digit = rem / den;
        rem %= den;
        frac.push_back(static_cast<char>('0' + digit.get_ui()));
    }

    std::string text = value < 0 ? "-" : "";
    text += whole.get_str(10);
    if (!frac.empty())
        text += "." + frac;
    return {text, rem == 0};
}

} // namespace prismreal
