#pragma once

// Text and JSON encodings.
//
// Series text: one "<exponent> <coefficient>" pair per line, decimal,
// written with exponents strictly increasing; an empty file is the zero
// series. The reader accepts distinct exponents in any order.
// Series JSON: {"terms": [[n, "a_n"], ...]}.
// Certificate JSON: {"x", "r", "r_prime", "digits": [[n, a_n], ...], "residual", ...}
// with every rational written as "p/q".

#include <iosfwd>
#include <string>
#include <string_view>

#include "json.hpp"

#include "prismreal/expansion.hpp"

namespace prismreal {

LaurentSeries parse_series_text(std::string_view text);
std::string format_series_text(const LaurentSeries& f);

nlohmann::json series_to_json(const LaurentSeries& f);
LaurentSeries series_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ExpansionCertificate& cert);
ExpansionCertificate certificate_from_json(const nlohmann::json& j);

// Series text, series JSON, or certificate JSON (evaluated as its digit
// series), told apart by the first non-blank character and the JSON keys.
LaurentSeries parse_series_any(std::string_view text);

std::string read_stream(std::istream& in);

} // namespace prismreal
