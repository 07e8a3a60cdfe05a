#pragma once

// The finite sets Z((T))^m_{r,<=c} of coefficient tuples (a_0, ..., a_m) with
// sum |a_n| r^n <= c, and the coordinate-dropping maps between them. Their
// inverse limit is the compact ball of budget c.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prismreal/series.hpp"

namespace prismreal {

using Tuple = std::vector<std::int64_t>;

inline constexpr std::size_t kDefaultCardinalityCap = 10'000'000;

class CardinalityCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TruncationSet {
public:
    TruncationSet(Exponent m, RadiusParams params, std::vector<Tuple> elements);

    Exponent degree() const noexcept { return m_; }
    const RadiusParams& params() const noexcept { return params_; }
    // Sorted lexicographically, no duplicates.
    const std::vector<Tuple>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    bool contains(const Tuple& t) const;
    bool is_subset_of(const TruncationSet& other) const;

    friend bool operator==(const TruncationSet&, const TruncationSet&) = default;

private:
    Exponent m_;
    RadiusParams params_;
    std::vector<Tuple> elements_;
};

// sum_{n=0}^{m} |a_n| r^n for a tuple.
Rational tuple_norm(const Tuple& t, const Rational& r);
LaurentSeries to_series(const Tuple& t);

// All tuples of length m + 1 within the budget of p, in lexicographic order.
// Throws CardinalityCapExceeded once more than `cap` tuples are found.
TruncationSet enumerate(Exponent m, const RadiusParams& p, std::size_t cap = kDefaultCardinalityCap);

// Cardinality of enumerate(m, p) without materializing the tuples.
std::size_t count(Exponent m, const RadiusParams& p, std::size_t cap = kDefaultCardinalityCap);

// Drops the last coordinate of each tuple: the map from degree m+1 to m.
TruncationSet restrict(const TruncationSet& set);

struct NormalizedBudget {
    Exponent shift;
    RadiusParams params; // budget r^shift * c < 1
};

// Smallest k >= 0 with r^k c < 1; T^k maps the budget-c ball onto budget r^k c.
NormalizedBudget normalize_budget(const RadiusParams& p);

} // namespace prismreal
