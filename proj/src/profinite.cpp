#include "prismreal/profinite.hpp"

#include <algorithm>

#include "prismreal/evaluation.hpp"

namespace prismreal {

namespace {

// Depth-first walk over coordinates n = 0..m, narrowing each digit range to
// the budget still unspent. Visits tuples in lexicographic order.
//
// With r = p/q and c = u/v the budget condition sum |a_n| r^n <= c is
// scaled by v q^m into integers: sum |a_n| p^n q^(m-n) v <= u q^m.
struct ScaledBudget {
    ScaledBudget(Exponent m, const RadiusParams& p)
    {
        const Rational& r = p.r();
        const Rational& c = p.require_budget();
        const auto top = static_cast<unsigned long>(m);
        weights.resize(top + 1);
        for (unsigned long n = 0; n <= top; ++n) {
            Integer pn, qmn;
            mpz_pow_ui(pn.get_mpz_t(), r.get_num_mpz_t(), n);
            mpz_pow_ui(qmn.get_mpz_t(), r.get_den_mpz_t(), top - n);
            weights[n] = pn * qmn * c.get_den();
        }
        Integer qm;
        mpz_pow_ui(qm.get_mpz_t(), r.get_den_mpz_t(), top);
        capacity = c.get_num() * qm;
    }

    std::vector<Integer> weights;
    Integer capacity;
};

template <typename Visit>
class TupleWalker {
public:
    TupleWalker(Exponent m, const RadiusParams& p, std::size_t cap, Visit visit)
        : cap_(cap), visit_(std::move(visit)), current_(static_cast<std::size_t>(m + 1))
    {
        ScaledBudget budget(m, p);
        weights_ = std::move(budget.weights);
        capacity_ = std::move(budget.capacity);
    }

    std::size_t run()
    {
        descend(0, capacity_);
        return found_;
    }

private:
    void descend(std::size_t n, const Integer& remaining)
    {
        Integer ceiling = remaining / weights_[n];
        if (!ceiling.fits_slong_p())
            throw CardinalityCapExceeded("digit range at exponent " + std::to_string(n)
                                         + " does not fit in 64 bits");
        const std::int64_t hi = ceiling.get_si();
        const bool last = n == current_.size() - 1;
        if (last && (found_ + static_cast<std::size_t>(2 * hi + 1) > cap_))
            throw CardinalityCapExceeded("truncation set exceeds the cardinality cap of "
                                         + std::to_string(cap_));
        Integer next;
        for (std::int64_t a = -hi; a <= hi; ++a) {
            current_[n] = a;
            if (last) {
                ++found_;
                visit_(current_);
                continue;
            }
            next = remaining - weights_[n] * static_cast<unsigned long>(a < 0 ? -a : a);
            descend(n + 1, next);
        }
    }

    std::size_t cap_;
    Visit visit_;
    Tuple current_;
    std::vector<Integer> weights_;
    Integer capacity_;
    std::size_t found_ = 0;
};

template <typename Visit>
std::size_t walk(Exponent m, const RadiusParams& p, std::size_t cap, Visit visit)
{
    if (m < 0)
        throw UsageError("truncation degree m must be nonnegative");
    TupleWalker<Visit> walker(m, p, cap, std::move(visit));
    return walker.run();
}

} // namespace

TruncationSet::TruncationSet(Exponent m, RadiusParams params, std::vector<Tuple> elements)
    : m_(m), params_(std::move(params)), elements_(std::move(elements))
{
    if (m_ < 0)
        throw UsageError("truncation degree must be >= 0");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    const ScaledBudget budget(m_, params_);
    Integer total;
    for (const Tuple& t : elements_) {
        if (t.size() != static_cast<std::size_t>(m_ + 1))
            throw UsageError("tuple length does not match truncation degree");
        total = 0;
        for (std::size_t n = 0; n < t.size(); ++n)
            total += budget.weights[n] * static_cast<unsigned long>(t[n] < 0 ? -t[n] : t[n]);
        if (total > budget.capacity)
            throw UsageError("tuple exceeds the norm budget");
    }
}

bool TruncationSet::contains(const Tuple& t) const
{
    return std::binary_search(elements_.begin(), elements_.end(), t);
}

bool TruncationSet::is_subset_of(const TruncationSet& other) const
{
    return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                         elements_.end());
}

Rational tuple_norm(const Tuple& t, const Rational& r)
{
    return r_norm(to_series(t), r);
}

LaurentSeries to_series(const Tuple& t)
{
    std::vector<std::pair<Exponent, Integer>> terms;
    for (std::size_t n = 0; n < t.size(); ++n)
        terms.emplace_back(static_cast<Exponent>(n), Integer(static_cast<long>(t[n])));
    return LaurentSeries(terms);
}

TruncationSet enumerate(Exponent m, const RadiusParams& p, std::size_t cap)
{
    std::vector<Tuple> out;
    walk(m, p, cap, [&out](const Tuple& t) { out.push_back(t); });
    return TruncationSet(m, p, std::move(out));
}

std::size_t count(Exponent m, const RadiusParams& p, std::size_t cap)
{
    return walk(m, p, cap, [](const Tuple&) {});
}

TruncationSet restrict(const TruncationSet& set)
{
    if (set.degree() < 1)
        throw UsageError("restriction needs a truncation set of degree >= 1");
    std::vector<Tuple> dropped;
    dropped.reserve(set.size());
    for (const Tuple& t : set.elements())
        dropped.emplace_back(t.begin(), t.end() - 1);
    return TruncationSet(set.degree() - 1, set.params(), std::move(dropped));
}

NormalizedBudget normalize_budget(const RadiusParams& p)
{
    Rational c = p.require_budget();
    Exponent k = 0;
    while (c >= 1) {
        c *= p.r();
        ++k;
    }
    return {k, p.with_budget(c)};
}

} // namespace prismreal
