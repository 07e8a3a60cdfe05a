#include "prismreal/verify.hpp"

#include <functional>
#include <sstream>

#include "prismreal/expansion.hpp"
#include "prismreal/io.hpp"
#include "prismreal/kernel.hpp"
#include "prismreal/sampling.hpp"

namespace prismreal {

namespace {

// Each property gets its own stream block so adding a property never
// perturbs the inputs of another.
enum Stream : std::uint64_t {
    kInjective = 1,
    kImage,
    kDivideBack,
    kSurjective,
    kTerminating,
    kMembership,
    kContinuity,
    kNormAlgebra,
};

using Check = std::function<std::string(Sampler&)>;

PropertyResult run_property(const std::string& name, const VerifyConfig& cfg, Stream stream,
                            const Check& check)
{
    PropertyResult result{name, cfg.trials, 0, {}};
    for (std::size_t t = 0; t < cfg.trials; ++t) {
        Sampler sampler(cfg.seed, (static_cast<std::uint64_t>(stream) << 32) | t);
        std::string failure = check(sampler);
        if (!failure.empty()) {
            if (result.failures++ == 0)
                result.first_failure = "trial " + std::to_string(t) + ": " + failure;
        }
    }
    return result;
}

std::string show(const LaurentSeries& f)
{
    return series_to_json(f).dump();
}

// Base-b digits of k (least significant first), computed by plain integer
// division, independent of the greedy expansion.
std::vector<Integer> base_digits(Integer k, const Integer& b)
{
    std::vector<Integer> out;
    while (k != 0) {
        out.push_back(k % b);
        k /= b;
    }
    return out;
}

} // namespace

bool VerifyReport::passed() const
{
    for (const auto& p : properties)
        if (p.failures != 0)
            return false;
    return !properties.empty();
}

VerifyReport run_verification(const VerifyConfig& cfg)
{
    const KernelGenerator gen = generator(cfg.base);
    const RadiusParams params(cfg.r, gen.r_prime());
    const Rational& rp = params.r_prime();
    const SeriesShape shape{-6, 12, 8, 1000};

    VerifyReport report{cfg, {}};
    auto add = [&](const std::string& name, Stream s, const Check& c) {
        report.properties.push_back(run_property(name, cfg, s, c));
    };

    add("generator_multiplication_injective", kInjective, [&](Sampler& s) -> std::string {
        LaurentSeries g = s.nonzero_series(shape);
        if ((gen.poly() * g).is_zero())
            return "f * g == 0 for g = " + show(g);
        LaurentSeries h = s.series(shape);
        if (g != h && gen.poly() * g == gen.poly() * h)
            return "f * g == f * h for g != h";
        return {};
    });

    add("generator_image_in_kernel", kImage, [&](Sampler& s) -> std::string {
        LaurentSeries h = s.series(shape);
        LaurentSeries g = gen.poly() * h;
        if (theta(g, rp) != 0 || !in_kernel(g, params))
            return "theta(f * h) != 0 for h = " + show(h);
        return {};
    });

    add("kernel_divides_back", kDivideBack, [&](Sampler& s) -> std::string {
        LaurentSeries h = s.series(shape);
        DivisionResult q = divide(gen.poly() * h, gen);
        const auto* quotient = std::get_if<LaurentSeries>(&q);
        if (!quotient)
            return "f * h not divisible for h = " + show(h);
        if (*quotient != h)
            return "quotient differs from h = " + show(h);
        return {};
    });

    add("expansion_converges", kSurjective, [&](Sampler& s) -> std::string {
        Rational x = s.rational(1'000'000, 1'000'000);
        ExpansionCertificate cert = expand(x, params, cfg.max_digits);
        Rational error = x - theta(series_of(cert), rp);
        if (error != cert.residual)
            return "residual mismatch for x = " + to_string(x);
        if (cert.digits.empty()) {
            if (x != 0)
                return "no digits emitted for x = " + to_string(x);
        } else if (abs(error) >= power(rp, cert.digits.back().exponent)) {
            return "error not below r'^N for x = " + to_string(x);
        }
        if (std::string why = audit(cert); !why.empty())
            return why + " for x = " + to_string(x);
        return {};
    });

    add("terminating_expansion_recovered", kTerminating, [&](Sampler& s) -> std::string {
        const int max_places = 12;
        Integer k = 0;
        for (std::int64_t i = s.uniform(1, max_places); i > 0; --i)
            k = k * cfg.base + Integer(static_cast<long>(s.uniform(0, 1'000'000'000)))
                                   % cfg.base;
        if (s.coin())
            k = -k;
        auto places = s.uniform(0, max_places);
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), cfg.base.get_mpz_t(), static_cast<unsigned long>(places));
        Rational x = make_rational(k, scale);

        ExpansionCertificate cert = expand(x, params, cfg.max_digits);
        if (cert.residual != 0)
            return "nonzero residual for x = " + to_string(x);
        // The digit of b^j in |k| sits at exponent places - j.
        std::vector<Digit> expected;
        std::vector<Integer> ds = base_digits(abs(k), cfg.base);
        for (std::size_t j = ds.size(); j-- > 0;)
            if (ds[j] != 0)
                expected.push_back({places - static_cast<Exponent>(j), k < 0 ? Integer(-ds[j]) : ds[j]});
        if (cert.digits != expected)
            return "digits differ from positional digits for x = " + to_string(x);
        if (std::string why = audit(cert); !why.empty())
            return why + " for x = " + to_string(x);
        return {};
    });

    add("membership_procedures_agree", kMembership, [&](Sampler& s) -> std::string {
        LaurentSeries g = s.coin() ? gen.poly() * s.series(shape) : s.series(shape);
        if (in_kernel(g, params) != divisible(g, gen))
            return "theta test and division disagree on " + show(g);
        return {};
    });

    add("continuity_modulus", kContinuity, [&](Sampler& s) -> std::string {
        Rational c = s.coin() ? Rational(1) : Rational(6);
        Exponent order = s.uniform(1, 10);
        auto [f, g] = s.agreeing_pair(-2, order, order + 12, cfg.r, c);
        if (r_norm(f, cfg.r) > c || r_norm(g, cfg.r) > c)
            return "sampled pair left the budget";
        LaurentSeries diff = f - g;
        for (const auto& [n, a] : diff.terms())
            if (n <= order)
                return "sampled pair disagrees below the order";
        Rational gap = abs(Rational(theta(f, rp) - theta(g, rp)));
        if (gap > continuity_bound(order, c, params).bound)
            return "|theta f - theta g| exceeds the modulus for " + show(f) + ", " + show(g);
        return {};
    });

    add("norm_algebra", kNormAlgebra, [&](Sampler& s) -> std::string {
        LaurentSeries f = s.series(shape), g = s.series(shape);
        Exponent k = s.uniform(-8, 8);
        const Rational& r = cfg.r;
        if (r_norm(f * g, r) > r_norm(f, r) * r_norm(g, r))
            return "norm not sub-multiplicative";
        if (r_norm(f + g, r) > r_norm(f, r) + r_norm(g, r))
            return "norm triangle inequality fails";
        if (r_norm(shift(f, k), r) != power(r, k) * r_norm(f, r))
            return "shift identity fails";
        return {};
    });

    ZeroDivisorReport zd = not_zero_divisor_check(gen, cfg.trials, cfg.seed);
    report.properties.push_back({"generator_not_zero_divisor", zd.trials, zd.failures,
                                 zd.failures ? "witness " + show(zd.witnesses.front()) : ""});
    return report;
}

nlohmann::json report_to_json(const VerifyReport& report)
{
    nlohmann::json props = nlohmann::json::array();
    for (const auto& p : report.properties) {
        nlohmann::json entry{{"name", p.name}, {"trials", p.trials}, {"failures", p.failures}};
        if (!p.first_failure.empty())
            entry["first_failure"] = p.first_failure;
        props.push_back(std::move(entry));
    }
    return {{"command", "verify"},
            {"seed", report.config.seed},
            {"trials", report.config.trials},
            {"base", to_string(report.config.base)},
            {"r", to_string(report.config.r)},
            {"properties", std::move(props)},
            {"passed", report.passed()}};
}

std::string report_to_text(const VerifyReport& report)
{
    std::ostringstream out;
    for (const auto& p : report.properties) {
        out << (p.failures == 0 ? "PASS " : "FAIL ") << p.name << " (" << p.trials << " trials, "
            << p.failures << " failures)";
        if (!p.first_failure.empty())
            out << ": " << p.first_failure;
        out << "\n";
    }
    out << (report.passed() ? "all properties passed" : "property failures detected") << "\n";
    return out.str();
}

} // namespace prismreal
