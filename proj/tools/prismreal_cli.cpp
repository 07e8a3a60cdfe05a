// prismreal: command-line front end for exact Laurent-series arithmetic.
//
// Exit codes: 0 ok, 2 usage or parse error, 3 not divisible,
// 4 cardinality cap exceeded, 5 property failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "prismreal/evaluation.hpp"
#include "prismreal/expansion.hpp"
#include "prismreal/io.hpp"
#include "prismreal/kernel.hpp"
#include "prismreal/profinite.hpp"
#include "prismreal/verify.hpp"

namespace {

using namespace prismreal;
using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kNotDivisible = 3,
    kCapExceeded = 4,
    kPropertyFailure = 5,
};

struct Options {
    std::string r = "1/2";
    std::optional<std::string> r_prime;
    std::optional<std::string> base;
    std::optional<std::string> budget;
    std::size_t max_digits = 40;
    std::size_t cap = kDefaultCardinalityCap;
    std::uint64_t seed = 42;
    std::size_t trials = 1000;
    std::int64_t m = 0;
    unsigned decimal_digits = 0;
    bool count_only = false;
    bool json = false;
    std::string input;
    std::string target;
};

// Parsed and cross-checked parameters.
struct Config {
    Rational r;
    Rational r_prime;
    std::optional<Integer> base;
    std::optional<Rational> budget;
};

Config resolve(const Options& o, bool need_base)
{
    Config cfg{parse_rational(o.r), Rational(1, 10), std::nullopt, std::nullopt};
    if (o.budget)
        cfg.budget = parse_rational(*o.budget);
    if (o.r_prime)
        cfg.r_prime = parse_rational(*o.r_prime);
    if (o.base) {
        Integer b = parse_integer(*o.base);
        if (b < 2)
            throw UsageError("--base must be an integer >= 2");
        if (o.r_prime && cfg.r_prime != make_rational(1, b))
            throw UsageError("--r-prime must equal 1/base when both are given");
        cfg.r_prime = make_rational(1, b);
        cfg.base = b;
    } else if (need_base) {
        cfg.base = base_of(cfg.r_prime);
    }
    return cfg;
}

RadiusParams params_of(const Config& cfg)
{
    return RadiusParams(cfg.r, cfg.r_prime, cfg.budget);
}

std::string read_input(const std::string& path)
{
    if (path == "-")
        return read_stream(std::cin);
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    return read_stream(in);
}

void add_radius_flags(CLI::App* cmd, Options& o)
{
    cmd->add_option("--r", o.r, "Norm radius r, as p/q")->capture_default_str();
    cmd->add_option("--r-prime", o.r_prime, "Evaluation point r', as p/q (default 1/10)");
    cmd->add_option("--base", o.base, "Integer base b >= 2; sets r' = 1/b");
}

int cmd_expand(const Options& o)
{
    Config cfg = resolve(o, false);
    ExpansionCertificate cert = expand(parse_rational(o.target), params_of(cfg), o.max_digits);
    std::cout << certificate_to_json(cert).dump() << "\n";
    return kOk;
}

int cmd_eval(const Options& o)
{
    Config cfg = resolve(o, false);
    LaurentSeries f = parse_series_any(read_input(o.input));
    Rational value = theta(f, params_of(cfg));
    std::optional<DecimalRendering> dec;
    if (o.decimal_digits > 0)
        dec = to_decimal(value, o.decimal_digits);

    if (o.json) {
        json out{{"value", to_string(value)}};
        if (dec) {
            out["decimal"] = dec->text;
            out["exact"] = dec->exact;
        }
        std::cout << out.dump() << "\n";
        return kOk;
    }
    std::cout << to_string(value) << "\n";
    if (dec)
        std::cout << dec->text << (dec->exact ? " (exact)" : "...") << "\n";
    return kOk;
}

std::string describe(const KernelGenerator& gen)
{
    return "1 - " + to_string(gen.base()) + "T";
}

int cmd_kernel_check(const Options& o)
{
    Config cfg = resolve(o, true);
    KernelGenerator gen = generator(*cfg.base);

    if (o.input.empty()) {
        ZeroDivisorReport rep = not_zero_divisor_check(gen, o.trials, o.seed);
        if (o.json) {
            json witnesses = json::array();
            for (const auto& w : rep.witnesses)
                witnesses.push_back(series_to_json(w));
            std::cout << json{{"command", "kernel-check"},
                              {"generator", series_to_json(gen.poly())},
                              {"trials", rep.trials},
                              {"failures", rep.failures},
                              {"witnesses", witnesses}}
                             .dump()
                      << "\n";
        } else {
            std::cout << "generator " << describe(gen) << " is not a zero divisor: " << rep.trials
                      << " trials, " << rep.failures << " failures\n";
        }
        return rep.failures == 0 ? kOk : kPropertyFailure;
    }

    LaurentSeries g = parse_series_any(read_input(o.input));
    RadiusParams p = params_of(cfg);
    Rational value = theta(g, p);
    bool by_theta = in_kernel(g, p);
    DivisionResult div = divide(g, gen);
    const auto* quotient = std::get_if<LaurentSeries>(&div);
    bool agree = by_theta == (quotient != nullptr);

    if (o.json) {
        json out{{"command", "kernel-check"},
                 {"theta", to_string(value)},
                 {"in_kernel", by_theta},
                 {"divisible", quotient != nullptr},
                 {"agree", agree}};
        if (quotient)
            out["quotient"] = series_to_json(*quotient);
        else
            out["remainder"] = series_to_json(std::get<NotDivisible>(div).remainder);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "theta: " << to_string(value) << "\n"
                  << "in_kernel: " << (by_theta ? "true" : "false") << "\n"
                  << "divisible by " << describe(gen) << ": " << (quotient ? "true" : "false")
                  << "\n";
        if (!agree)
            std::cout << "membership procedures disagree\n";
    }
    return agree ? kOk : kPropertyFailure;
}

int cmd_divide(const Options& o)
{
    Config cfg = resolve(o, true);
    KernelGenerator gen = generator(*cfg.base);
    LaurentSeries g = parse_series_any(read_input(o.input));
    DivisionResult div = divide(g, gen);

    if (const auto* q = std::get_if<LaurentSeries>(&div)) {
        if (o.json)
            std::cout << json{{"divisible", true}, {"quotient", series_to_json(*q)}}.dump() << "\n";
        else
            std::cout << format_series_text(*q);
        return kOk;
    }
    const LaurentSeries& rem = std::get<NotDivisible>(div).remainder;
    std::cerr << "not divisible by " << describe(gen) << "\n";
    if (o.json)
        std::cout << json{{"divisible", false}, {"remainder", series_to_json(rem)}}.dump() << "\n";
    else
        std::cout << format_series_text(rem);
    return kNotDivisible;
}

int cmd_enumerate(const Options& o)
{
    if (!o.budget)
        throw UsageError("enumerate needs --c");
    Config cfg = resolve(o, false);
    // r' plays no part in the truncation sets; keep it below r when unset.
    if (!o.r_prime && !o.base && cfg.r_prime >= cfg.r)
        cfg.r_prime = cfg.r / 2;
    RadiusParams p = params_of(cfg);

    if (o.count_only) {
        std::size_t n = count(o.m, p, o.cap);
        if (o.json)
            std::cout << json{{"m", o.m}, {"count", n}}.dump() << "\n";
        else
            std::cout << n << "\n";
        return kOk;
    }
    TruncationSet set = enumerate(o.m, p, o.cap);
    if (o.json) {
        std::cout << json{{"m", o.m}, {"count", set.size()}, {"tuples", set.elements()}}.dump()
                  << "\n";
        return kOk;
    }
    for (const Tuple& t : set.elements()) {
        for (std::size_t i = 0; i < t.size(); ++i)
            std::cout << (i ? "," : "") << t[i];
        std::cout << "\n";
    }
    return kOk;
}

int cmd_verify(const Options& o)
{
    Config cfg = resolve(o, true);
    VerifyConfig vc;
    vc.seed = o.seed;
    vc.trials = o.trials;
    vc.base = *cfg.base;
    vc.r = cfg.r;
    vc.max_digits = o.max_digits;
    RadiusParams(vc.r, cfg.r_prime); // validates r' < r up front
    VerifyReport report = run_verification(vc);
    if (o.json)
        std::cout << report_to_json(report).dump(2) << "\n";
    else
        std::cout << report_to_text(report);
    return report.passed() ? kOk : kPropertyFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact bounded integral Laurent series and their evaluation onto the reals"};
    app.require_subcommand(1);
    Options o;

    auto* expand_cmd = app.add_subcommand("expand", "Greedy digit expansion of a rational");
    expand_cmd->add_option("x", o.target, "Target rational p/q")->required();
    add_radius_flags(expand_cmd, o);
    expand_cmd->add_option("--max-digits", o.max_digits, "Digit limit")->capture_default_str();
    expand_cmd->add_flag("--json", o.json, "Emit JSON (always on for expand)");

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a series at T = r'");
    eval_cmd->add_option("file", o.input, "Series file, or - for stdin")->required();
    add_radius_flags(eval_cmd, o);
    eval_cmd->add_option("--digits", o.decimal_digits, "Also print a decimal with this many places");
    eval_cmd->add_flag("--json", o.json, "Emit JSON");

    auto* kernel_cmd = app.add_subcommand("kernel-check",
                                          "Kernel membership of a series, or a zero-divisor run");
    kernel_cmd->add_option("file", o.input, "Series file, or - for stdin");
    add_radius_flags(kernel_cmd, o);
    kernel_cmd->add_option("--trials", o.trials, "Zero-divisor trials")->capture_default_str();
    kernel_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    kernel_cmd->add_flag("--json", o.json, "Emit JSON");

    auto* divide_cmd = app.add_subcommand("divide", "Divide a series by 1 - bT");
    divide_cmd->add_option("file", o.input, "Series file, or - for stdin")->required();
    add_radius_flags(divide_cmd, o);
    divide_cmd->add_flag("--json", o.json, "Emit JSON");

    auto* enum_cmd = app.add_subcommand("enumerate", "List the truncation set of degree m");
    enum_cmd->add_option("--m", o.m, "Truncation degree m >= 0")->required();
    add_radius_flags(enum_cmd, o);
    enum_cmd->add_option("--c", o.budget, "Norm budget c, as p/q")->required();
    enum_cmd->add_option("--cap", o.cap, "Cardinality cap")->capture_default_str();
    enum_cmd->add_flag("--count-only", o.count_only, "Print only the cardinality");
    enum_cmd->add_flag("--json", o.json, "Emit JSON");

    auto* verify_cmd = app.add_subcommand("verify", "Run the exactness property suite");
    add_radius_flags(verify_cmd, o);
    verify_cmd->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    verify_cmd->add_option("--trials", o.trials, "Trials per property")->capture_default_str();
    verify_cmd->add_option("--max-digits", o.max_digits, "Digits per expansion")->capture_default_str();
    verify_cmd->add_flag("--json", o.json, "Emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*expand_cmd)
            return cmd_expand(o);
        if (*eval_cmd)
            return cmd_eval(o);
        if (*kernel_cmd)
            return cmd_kernel_check(o);
        if (*divide_cmd)
            return cmd_divide(o);
        if (*enum_cmd)
            return cmd_enumerate(o);
        if (*verify_cmd)
            return cmd_verify(o);
    } catch (const CardinalityCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
