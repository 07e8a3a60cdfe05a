#pragma once

#include "doctest.h"

#include "oracles.hpp"

namespace doctest {
template <>
struct StringMaker<prismreal::LaurentSeries> {
    static String convert(const prismreal::LaurentSeries& f)
    {
        return prismreal::series_to_json(f).dump().c_str();
    }
};
} // namespace doctest
