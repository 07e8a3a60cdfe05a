#include "prismreal/io.hpp"

#include <cctype>
#include <istream>
#include <iterator>
#include <set>
#include <sstream>

namespace prismreal {

namespace {

using nlohmann::json;

Exponent parse_exponent(std::string_view token, std::size_t line)
{
    Integer n = parse_integer(token);
    if (!n.fits_slong_p())
        throw ParseError("exponent out of range on line " + std::to_string(line));
    return n.get_si();
}

Integer integer_from_json(const json& j)
{
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned())
        return Integer(j.get<std::uint64_t>());
    throw ParseError("expected an integer or decimal string, got " + j.dump());
}

json integer_to_json(const Integer& a)
{
    if (a.fits_slong_p())
        return static_cast<std::int64_t>(a.get_si());
    return to_string(a);
}

Rational rational_from_json(const json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_string())
        throw ParseError(std::string("missing rational field '") + key + "'");
    return parse_rational(j.at(key).get<std::string>());
}

Exponent exponent_from_json(const json& j)
{
    Integer n = integer_from_json(j);
    if (!n.fits_slong_p())
        throw ParseError("exponent out of range");
    return n.get_si();
}

} // namespace

LaurentSeries parse_series_text(std::string_view text)
{
    std::vector<std::pair<Exponent, Integer>> terms;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::set<Exponent> seen;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string exp_token, coeff_token, extra;
        if (!(fields >> exp_token))
            continue; // blank line
        if (!(fields >> coeff_token) || (fields >> extra))
            throw ParseError("line " + std::to_string(line_no)
                             + ": expected '<exponent> <coefficient>'");
        Exponent n = parse_exponent(exp_token, line_no);
        if (!seen.insert(n).second)
            throw ParseError("line " + std::to_string(line_no) + ": repeated exponent "
                             + std::to_string(n));
        terms.emplace_back(n, parse_integer(coeff_token));
    }
    return LaurentSeries(terms);
}

std::string format_series_text(const LaurentSeries& f)
{
    std::string out;
    for (const auto& [n, a] : f.terms())
        out += std::to_string(n) + " " + to_string(a) + "\n";
    return out;
}

json series_to_json(const LaurentSeries& f)
{
    json terms = json::array();
    for (const auto& [n, a] : f.terms())
        terms.push_back(json::array({n, to_string(a)}));
    return json{{"terms", terms}};
}

LaurentSeries series_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
        throw ParseError("series JSON needs a \"terms\" array");
    std::vector<std::pair<Exponent, Integer>> terms;
    std::optional<Exponent> previous;
    for (const json& term : j.at("terms")) {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("each term must be [n, \"a_n\"]");
        Exponent n = exponent_from_json(term[0]);
        if (previous && n <= *previous)
            throw ParseError("series JSON exponents must strictly increase");
        previous = n;
        terms.emplace_back(n, integer_from_json(term[1]));
    }
    return LaurentSeries(terms);
}

json certificate_to_json(const ExpansionCertificate& cert)
{
    json digits = json::array();
    for (const Digit& d : cert.digits)
        digits.push_back(json::array({d.exponent, integer_to_json(d.value)}));
    json out;
    out["x"] = to_string(cert.target);
    out["r"] = to_string(cert.params.r());
    out["r_prime"] = to_string(cert.params.r_prime());
    out["digits"] = std::move(digits);
    out["residual"] = to_string(cert.residual);
    out["digit_bound"] = to_string(cert.digit_bound);
    out["norm_budget"] = to_string(cert.norm_budget);
    return out;
}

ExpansionCertificate certificate_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("digits") || !j.at("digits").is_array())
        throw ParseError("certificate JSON needs a \"digits\" array");
    RadiusParams params(rational_from_json(j, "r"), rational_from_json(j, "r_prime"));
    Rational x = rational_from_json(j, "x");
    ExpansionCertificate cert{x, params, {}, rational_from_json(j, "residual"),
                              1 + 1 / params.r_prime(), covering_budget(abs(x), params)};
    for (const json& d : j.at("digits")) {
        if (!d.is_array() || d.size() != 2)
            throw ParseError("each digit must be [n, a_n]");
        cert.digits.push_back({exponent_from_json(d[0]), integer_from_json(d[1])});
    }
    return cert;
}

LaurentSeries parse_series_any(std::string_view text)
{
    auto first = std::find_if(text.begin(), text.end(),
                              [](char c) { return !std::isspace(static_cast<unsigned char>(c)); });
    if (first == text.end() || *first != '{')
        return parse_series_text(text);

    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded())
        throw ParseError("malformed JSON input");
    if (j.contains("terms"))
        return series_from_json(j);
    if (j.contains("digits"))
        return series_of(certificate_from_json(j));
    throw ParseError("JSON input is neither a series nor a certificate");
}

std::string read_stream(std::istream& in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace prismreal
