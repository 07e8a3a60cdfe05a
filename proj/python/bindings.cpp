// Python bindings. GMP integers map to Python int and rationals to
// fractions.Fraction; ints and "p/q" strings are accepted wherever a
// rational is expected.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prismreal/evaluation.hpp"
#include "prismreal/expansion.hpp"
#include "prismreal/io.hpp"
#include "prismreal/kernel.hpp"
#include "prismreal/profinite.hpp"
#include "prismreal/verify.hpp"

namespace py = pybind11;
using namespace prismreal;

namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool)
    {
        if (!PyLong_Check(src.ptr()))
            return false;
        value = mpz_class(py::str(src).cast<std::string>(), 10);
        return true;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle)
    {
        return PyLong_FromString(v.get_str(10).c_str(), nullptr, 10);
    }
};

template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

    bool load(handle src, bool convert)
    {
        if (PyLong_Check(src.ptr())) {
            value = mpq_class(mpz_class(py::str(src).cast<std::string>(), 10));
            return true;
        }
        if (py::isinstance<py::str>(src)) {
            if (!convert)
                return false;
            value = parse_rational(src.cast<std::string>());
            return true;
        }
        if (py::hasattr(src, "numerator") && py::hasattr(src, "denominator")) {
            py::object num = src.attr("numerator"), den = src.attr("denominator");
            if (!PyLong_Check(num.ptr()) || !PyLong_Check(den.ptr()))
                return false;
            value = make_rational(mpz_class(py::str(num).cast<std::string>(), 10),
                                  mpz_class(py::str(den).cast<std::string>(), 10));
            return true;
        }
        return false;
    }

    static handle cast(const mpq_class& v, return_value_policy policy, handle parent)
    {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        py::object num = py::reinterpret_steal<py::object>(
            type_caster<mpz_class>::cast(v.get_num(), policy, parent));
        py::object den = py::reinterpret_steal<py::object>(
            type_caster<mpz_class>::cast(v.get_den(), policy, parent));
        return fraction(num, den).release();
    }
};

} // namespace pybind11::detail

namespace {

const Rational kDefaultR(1, 2);
const Rational kDefaultRPrime(1, 10);

LaurentSeries series_from_mapping(const py::dict& d)
{
    std::vector<std::pair<Exponent, Integer>> terms;
    for (auto [k, v] : d)
        terms.emplace_back(k.cast<Exponent>(), v.cast<Integer>());
    return LaurentSeries(terms);
}

py::object json_to_python(const nlohmann::json& j)
{
    return py::module_::import("json").attr("loads")(j.dump());
}

KernelGenerator make_generator(const Integer& b, bool leading)
{
    return generator(b, leading ? GeneratorSign::unit_leading : GeneratorSign::unit_constant);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact bounded integral Laurent series, evaluation at T = r', greedy digit "
              "expansion, kernel division and truncation sets.";

    static py::exception<NotDivisible> not_divisible(m, "NotDivisible", PyExc_ArithmeticError);
    py::register_exception<CardinalityCapExceeded>(m, "CardinalityCapExceeded", PyExc_RuntimeError);

    py::class_<LaurentSeries>(m, "LaurentSeries")
        .def(py::init<>())
        .def(py::init(&series_from_mapping), py::arg("terms"),
             "From a mapping {exponent: coefficient}.")
        .def(py::init([](const std::vector<std::pair<Exponent, Integer>>& terms) {
                 return LaurentSeries(terms);
             }),
             py::arg("terms"))
        .def_static("from_text", [](const std::string& s) { return parse_series_text(s); })
        .def_static("from_json", [](const std::string& s) { return parse_series_any(s); })
        .def("to_text", &format_series_text)
        .def("to_json", [](const LaurentSeries& f) { return series_to_json(f).dump(); })
        .def("terms", [](const LaurentSeries& f) {
            py::dict out;
            for (const auto& [n, a] : f.terms())
                out[py::int_(n)] = py::cast(a);
            return out;
        })
        .def("coeff", &LaurentSeries::coeff)
        .def("is_zero", &LaurentSeries::is_zero)
        .def_property_readonly("min_exponent", &LaurentSeries::min_exponent)
        .def_property_readonly("max_exponent", &LaurentSeries::max_exponent)
        .def("__len__", &LaurentSeries::size)
        .def("__add__", [](const LaurentSeries& f, const LaurentSeries& g) { return f + g; })
        .def("__sub__", [](const LaurentSeries& f, const LaurentSeries& g) { return f - g; })
        .def("__mul__", [](const LaurentSeries& f, const LaurentSeries& g) { return f * g; })
        .def("__neg__", [](const LaurentSeries& f) { return -f; })
        .def("__eq__", [](const LaurentSeries& f, const LaurentSeries& g) { return f == g; })
        .def("__repr__", [](const LaurentSeries& f) {
            return "LaurentSeries(" + series_to_json(f)["terms"].dump() + ")";
        });

    m.def("shift", &shift, py::arg("f"), py::arg("k"));
    m.def("r_norm", &r_norm, py::arg("f"), py::arg("r"));
    m.def("t_valuation", &t_valuation, py::arg("f"), "None stands for +infinity.");
    m.def(
        "t_adic_distance",
        [](const LaurentSeries& f, const LaurentSeries& g, const Rational& delta) {
            return t_adic_distance(f, g, TAdicParams(delta));
        },
        py::arg("f"), py::arg("g"), py::arg("delta") = Rational(1, 2));
    m.def(
        "in_budget",
        [](const LaurentSeries& f, const Rational& r, const Rational& c) {
            return r_norm(f, r) <= c;
        },
        py::arg("f"), py::arg("r"), py::arg("c"));

    m.def("theta", py::overload_cast<const LaurentSeries&, const Rational&>(&theta), py::arg("f"),
          py::arg("r_prime"));

    py::class_<ContinuityBound>(m, "ContinuityBound")
        .def_readonly("order", &ContinuityBound::order)
        .def_readonly("budget", &ContinuityBound::budget)
        .def_readonly("bound", &ContinuityBound::bound);
    m.def(
        "continuity_bound",
        [](Exponent order, const Rational& c, const Rational& r, const Rational& r_prime) {
            return continuity_bound(order, c, RadiusParams(r, r_prime));
        },
        py::arg("order"), py::arg("c"), py::arg("r"), py::arg("r_prime"));

    py::class_<ExpansionCertificate>(m, "ExpansionCertificate")
        .def_readonly("target", &ExpansionCertificate::target)
        .def_readonly("residual", &ExpansionCertificate::residual)
        .def_readonly("digit_bound", &ExpansionCertificate::digit_bound)
        .def_readonly("norm_budget", &ExpansionCertificate::norm_budget)
        .def_property_readonly("digits", [](const ExpansionCertificate& c) {
            std::vector<std::pair<Exponent, Integer>> out;
            for (const Digit& d : c.digits)
                out.emplace_back(d.exponent, d.value);
            return out;
        })
        .def("audit", &audit, "Empty string when every certificate invariant holds.")
        .def("to_json", [](const ExpansionCertificate& c) { return certificate_to_json(c).dump(); });

    m.def("min_exponent", &min_exponent, py::arg("x"), py::arg("r_prime"));
    m.def(
        "next_digit",
        [](const Rational& x, const Rational& r_prime, const Rational& r) {
            DigitStep s = next_digit(x, RadiusParams(r, r_prime));
            return py::make_tuple(s.exponent, py::cast(s.digit), py::cast(s.next));
        },
        py::arg("x"), py::arg("r_prime") = kDefaultRPrime, py::arg("r") = kDefaultR);
    m.def(
        "expand",
        [](const Rational& x, const Rational& r_prime, const Rational& r, std::size_t max_digits) {
            return expand(x, RadiusParams(r, r_prime), max_digits);
        },
        py::arg("x"), py::arg("r_prime") = kDefaultRPrime, py::arg("r") = kDefaultR,
        py::arg("max_digits") = 40);
    m.def("series_of", &series_of, py::arg("cert"));
    m.def(
        "covering_budget",
        [](const Rational& bound, const Rational& r_prime, const Rational& r) {
            return covering_budget(bound, RadiusParams(r, r_prime));
        },
        py::arg("bound"), py::arg("r_prime") = kDefaultRPrime, py::arg("r") = kDefaultR);

    m.def(
        "generator_poly",
        [](const Integer& b, bool leading) { return make_generator(b, leading).poly(); },
        py::arg("base"), py::arg("leading") = false,
        "1 - bT, or bT - 1 with leading=True.");
    m.def(
        "inverse_truncation",
        [](const Integer& b, Exponent order, bool leading) {
            return inverse_truncation(make_generator(b, leading), order);
        },
        py::arg("base"), py::arg("order"), py::arg("leading") = false);
    m.def(
        "divide",
        [](const LaurentSeries& g, const Integer& b, bool leading) -> LaurentSeries {
            DivisionResult r = divide(g, make_generator(b, leading));
            if (auto* nd = std::get_if<NotDivisible>(&r)) {
                PyErr_SetObject(not_divisible.ptr(), py::cast(nd->remainder).ptr());
                throw py::error_already_set();
            }
            return std::get<LaurentSeries>(r);
        },
        py::arg("g"), py::arg("base"), py::arg("leading") = false,
        "Quotient by the generator; raises NotDivisible(remainder) otherwise.");
    m.def(
        "in_kernel",
        [](const LaurentSeries& g, const Rational& r_prime) {
            base_of(r_prime);
            return theta(g, r_prime) == 0;
        },
        py::arg("g"), py::arg("r_prime"));
    m.def(
        "not_zero_divisor_check",
        [](const Integer& b, std::size_t trials, std::uint64_t seed) {
            ZeroDivisorReport rep = not_zero_divisor_check(generator(b), trials, seed);
            py::dict out;
            out["trials"] = rep.trials;
            out["failures"] = rep.failures;
            out["witnesses"] = rep.witnesses;
            return out;
        },
        py::arg("base"), py::arg("trials"), py::arg("seed") = 0);

    m.def(
        "enumerate",
        [](Exponent m_, const Rational& r, const Rational& c, std::size_t cap) {
            return enumerate(m_, RadiusParams(r, r / 2, c), cap).elements();
        },
        py::arg("m"), py::arg("r"), py::arg("c"), py::arg("cap") = kDefaultCardinalityCap,
        "Lexicographically sorted coefficient tuples (a_0, ..., a_m).");
    m.def(
        "count",
        [](Exponent m_, const Rational& r, const Rational& c, std::size_t cap) {
            return count(m_, RadiusParams(r, r / 2, c), cap);
        },
        py::arg("m"), py::arg("r"), py::arg("c"), py::arg("cap") = kDefaultCardinalityCap);
    m.def(
        "restrict",
        [](const std::vector<Tuple>& tuples, const Rational& r, const Rational& c) {
            if (tuples.empty())
                throw UsageError("restrict needs a nonempty truncation set");
            auto degree = static_cast<Exponent>(tuples.front().size()) - 1;
            return restrict(TruncationSet(degree, RadiusParams(r, r / 2, c), tuples)).elements();
        },
        py::arg("tuples"), py::arg("r"), py::arg("c"));
    m.def(
        "normalize_budget",
        [](const Rational& r, const Rational& c) {
            NormalizedBudget nb = normalize_budget(RadiusParams(r, r / 2, c));
            return py::make_tuple(nb.shift, py::cast(*nb.params.budget()));
        },
        py::arg("r"), py::arg("c"));

    m.def(
        "verify",
        [](std::uint64_t seed, std::size_t trials, const Integer& base, const Rational& r) {
            VerifyConfig cfg;
            cfg.seed = seed;
            cfg.trials = trials;
            cfg.base = base;
            cfg.r = r;
            return json_to_python(report_to_json(run_verification(cfg)));
        },
        py::arg("seed") = 42, py::arg("trials") = 1000, py::arg("base") = 10,
        py::arg("r") = kDefaultR);
}
