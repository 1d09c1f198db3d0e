#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rstirling/beta_sim.hpp"
#include "rstirling/bounds.hpp"
#include "rstirling/exact.hpp"
#include "rstirling/figures.hpp"
#include "rstirling/moments.hpp"
#include "rstirling/stirling.hpp"
#include "rstirling/verify.hpp"

namespace py = pybind11;
using namespace rstirling;

namespace {

py::int_ to_py_int(const Natural& n) {
    PyObject* obj = PyLong_FromString(n.str().c_str(), nullptr, 10);
    if (!obj) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

py::int_ to_py_int(const mpz_class& z) {
    PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
    if (!obj) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

py::object to_py_fraction(const ExactRational& q) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(to_py_int(q.num()), to_py_int(q.den()));
}

mpz_class mpz_from_py_int(const py::int_& v) {
    const std::string s = py::str(v);
    mpz_class out;
    if (mpz_set_str(out.get_mpz_t(), s.c_str(), 10) != 0) {
        throw py::value_error("expected an integer");
    }
    return out;
}

// ints and fractions.Fraction both carry numerator/denominator
ExactRational rational_from_py(const py::object& v) {
    const auto num = mpz_from_py_int(py::int_(v.attr("numerator")));
    const auto den = mpz_from_py_int(py::int_(v.attr("denominator")));
    return ExactRational(num, den);
}

py::object optional_fraction(const std::optional<ExactRational>& v) {
    return v ? to_py_fraction(*v) : py::none();
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Exact r-associated Stirling numbers via beta-moment identities";

    mod.def(
        "factorial", [](std::uint64_t n) { return to_py_int(factorial(n)); }, py::arg("n"),
        "n! as an exact integer");
    mod.def(
        "binomial", [](std::uint64_t n, std::uint64_t k) { return to_py_int(binomial(n, k)); },
        py::arg("n"), py::arg("k"), "C(n, k); 0 when k > n");

    mod.def(
        "stirling",
        [](std::uint64_t r, std::uint64_t p, std::uint64_t m) {
            return to_py_int(stirling_cache().value(r, p, m));
        },
        py::arg("r"), py::arg("p"), py::arg("m"),
        "S_r(p, m) from the cached recurrence triangle");
    mod.def(
        "stirling_lemma",
        [](std::uint64_t r, std::uint64_t p, std::uint64_t m) {
            return to_py_int(stirling_lemma_sum(StirlingQuery{r, p, m}));
        },
        py::arg("r"), py::arg("p"), py::arg("m"),
        "S_r(p, m) by the exact multinomial sum over weak compositions");
    mod.def(
        "stirling_brute",
        [](std::uint64_t r, std::uint64_t p, std::uint64_t m) {
            return to_py_int(stirling_brute_force(StirlingQuery{r, p, m}));
        },
        py::arg("r"), py::arg("p"), py::arg("m"),
        "S_r(p, m) by full set-partition enumeration (capped)");
    mod.def(
        "bell", [](std::uint64_t p) { return to_py_int(bell(p)); }, py::arg("p"),
        "Bell number B(p)");
    mod.def(
        "egf_coefficients",
        [](std::uint64_t m, std::uint64_t order_n) {
            py::list out;
            for (const ExactRational& coeff : egf_coefficients(m, order_n)) {
                out.append(to_py_fraction(coeff));
            }
            return out;
        },
        py::arg("m"), py::arg("order_n"),
        "Fractions: coefficients of t^0..t^order_n in (exp(t)-1)^m / m!");

    mod.def(
        "raw_beta_moment",
        [](std::uint64_t s, std::uint64_t r) { return to_py_fraction(raw_beta_moment(s, r)); },
        py::arg("s"), py::arg("r"), "E(X^s) = s! r!/(s+r)! for X ~ beta(1, r)");
    mod.def(
        "moment",
        [](std::uint64_t r, std::uint64_t k, std::uint64_t m) {
            return to_py_fraction(moment_multinomial(MomentQuery{r, k, m}));
        },
        py::arg("r"), py::arg("k"), py::arg("m"),
        "Exact k-th moment of a sum of m beta(1, r) variables");
    mod.def(
        "moment_from_stirling",
        [](std::uint64_t r, std::uint64_t k, std::uint64_t m) {
            return to_py_fraction(moment_from_stirling(MomentQuery{r, k, m}));
        },
        py::arg("r"), py::arg("k"), py::arg("m"),
        "The same moment recovered from a Stirling triangle entry");
    mod.def(
        "mean_and_variance",
        [](std::uint64_t r, std::uint64_t m) {
            const auto mv = mean_and_variance(MomentQuery{r, 0, m});
            return py::make_tuple(to_py_fraction(mv.first), to_py_fraction(mv.second));
        },
        py::arg("r"), py::arg("m"), "(mean, variance) of the sum, exactly");

    mod.def(
        "jensen_bounds",
        [](std::uint64_t r, std::uint64_t k, std::uint64_t m) {
            const auto b = jensen_bounds(MomentQuery{r, k, m});
            return py::make_tuple(to_py_fraction(b.first), to_py_fraction(b.second));
        },
        py::arg("r"), py::arg("k"), py::arg("m"));
    mod.def(
        "tail_bounds",
        [](std::uint64_t r, std::uint64_t k, std::uint64_t m) {
            const auto b = tail_bounds(MomentQuery{r, k, m});
            return py::make_tuple(to_py_fraction(b.first), to_py_fraction(b.second));
        },
        py::arg("r"), py::arg("k"), py::arg("m"));
    mod.def(
        "expo_upper",
        [](std::uint64_t r, std::uint64_t k, std::uint64_t m) {
            return to_py_fraction(expo_upper(MomentQuery{r, k, m}));
        },
        py::arg("r"), py::arg("k"), py::arg("m"), "Exponential-comparison bound, r >= 2");
    mod.def(
        "erlang_moment",
        [](std::uint64_t k, std::uint64_t m) { return to_py_int(erlang_moment(k, m)); },
        py::arg("k"), py::arg("m"));
    mod.def(
        "majorant_constant",
        [](const py::object& a, std::uint64_t k) {
            return to_py_fraction(majorant_constant(rational_from_py(a), k));
        },
        py::arg("a"), py::arg("k"));

    py::class_<BoundReport>(mod, "BoundReport")
        .def_property_readonly("r", [](const BoundReport& b) { return b.query.r; })
        .def_property_readonly("p", [](const BoundReport& b) { return b.query.p; })
        .def_property_readonly("m", [](const BoundReport& b) { return b.query.m; })
        .def_property_readonly("exact", [](const BoundReport& b) { return to_py_int(b.exact); })
        .def_property_readonly("jensen_lower",
                               [](const BoundReport& b) { return to_py_fraction(b.jensen_lower); })
        .def_property_readonly("jensen_upper",
                               [](const BoundReport& b) { return to_py_fraction(b.jensen_upper); })
        .def_property_readonly("tail_lower",
                               [](const BoundReport& b) { return to_py_fraction(b.tail_lower); })
        .def_property_readonly("tail_upper",
                               [](const BoundReport& b) { return to_py_fraction(b.tail_upper); })
        .def_property_readonly("expo_upper",
                               [](const BoundReport& b) { return optional_fraction(b.expo_upper); })
        .def_property_readonly("rd_lower",
                               [](const BoundReport& b) { return optional_fraction(b.rd_lower); })
        .def_property_readonly("rd_upper",
                               [](const BoundReport& b) { return optional_fraction(b.rd_upper); })
        .def_property_readonly("combined_L",
                               [](const BoundReport& b) { return to_py_fraction(b.combined_L); })
        .def_property_readonly("combined_U",
                               [](const BoundReport& b) { return to_py_fraction(b.combined_U); })
        .def("__repr__", [](const BoundReport& b) {
            return "BoundReport(r=" + std::to_string(b.query.r) + ", p=" + std::to_string(b.query.p) +
                   ", m=" + std::to_string(b.query.m) + ", exact=" + b.exact.str() + ")";
        });

    mod.def(
        "stirling_bounds",
        [](std::uint64_t r, std::uint64_t p, std::uint64_t m) {
            return stirling_bounds(StirlingQuery{r, p, m});
        },
        py::arg("r"), py::arg("p"), py::arg("m"),
        "Every bound family plus the exact value at one (r, p, m)");
    mod.def(
        "bell_upper", [](std::uint64_t p) { return to_py_fraction(bell_upper(p)); }, py::arg("p"),
        "Exact rational upper bound U(p) >= B(p)");
    mod.def(
        "berend_tassa_log", [](std::uint64_t p) { return berend_tassa(p).ln_magnitude; },
        py::arg("p"), "ln of the Berend-Tassa Bell bound");
    mod.def(
        "rennie_dobson_bounds",
        [](std::uint64_t p, std::uint64_t m) {
            return py::make_tuple(to_py_fraction(rennie_dobson_lower(p, m)),
                                  to_py_fraction(rennie_dobson_upper(p, m)));
        },
        py::arg("p"), py::arg("m"));

    mod.def("density_g", &density_g, py::arg("x"), py::arg("r"));
    mod.def("density_h", &density_h, py::arg("x"), py::arg("r"));
    mod.def("tail_density", &tail_density, py::arg("x"), py::arg("m"), py::arg("r"));
    mod.def("tail_density_upper", &tail_density_upper, py::arg("x"), py::arg("m"), py::arg("r"));
    mod.def(
        "tail_probability",
        [](const py::object& x, std::uint64_t m, std::uint64_t r) {
            return to_py_fraction(tail_probability(rational_from_py(x), m, r));
        },
        py::arg("x"), py::arg("m"), py::arg("r"),
        "P(X_1+...+X_m >= x) for rational x in [m-1, m], exactly");
    mod.def(
        "majorant_eval",
        [](double x, const py::object& a, std::uint64_t k) {
            return majorant_eval(x, rational_from_py(a), k);
        },
        py::arg("x"), py::arg("a"), py::arg("k"));
    mod.def("sample_beta", &sample_beta, py::arg("u"), py::arg("r"));

    py::class_<MCEstimate>(mod, "MCEstimate")
        .def_readonly("mean", &MCEstimate::mean)
        .def_readonly("stderr", &MCEstimate::std_error)
        .def_readonly("n", &MCEstimate::n)
        .def("__repr__", [](const MCEstimate& e) {
            return "MCEstimate(mean=" + decimal12(e.mean) + ", stderr=" + decimal12(e.std_error) +
                   ", n=" + std::to_string(e.n) + ")";
        });

    mod.def(
        "mc_moment",
        [](std::uint64_t r, std::uint64_t k, std::uint64_t m, std::uint64_t seed, std::uint64_t n,
           std::uint64_t chunks) {
            return mc_moment(MomentQuery{r, k, m}, MCConfig{seed, n, chunks});
        },
        py::arg("r"), py::arg("k"), py::arg("m"), py::arg("seed") = 42,
        py::arg("n") = 1000000, py::arg("chunks") = 1);
    mod.def(
        "mc_stirling",
        [](std::uint64_t r, std::uint64_t p, std::uint64_t m, std::uint64_t seed, std::uint64_t n,
           std::uint64_t chunks) {
            return mc_stirling(StirlingQuery{r, p, m}, MCConfig{seed, n, chunks});
        },
        py::arg("r"), py::arg("p"), py::arg("m"), py::arg("seed") = 42,
        py::arg("n") = 1000000, py::arg("chunks") = 1);
    mod.def(
        "mc_tail_probability",
        [](double x, std::uint64_t m, std::uint64_t r, std::uint64_t seed, std::uint64_t n,
           std::uint64_t chunks) {
            return mc_tail_probability(x, m, r, MCConfig{seed, n, chunks});
        },
        py::arg("x"), py::arg("m"), py::arg("r"), py::arg("seed") = 42,
        py::arg("n") = 1000000, py::arg("chunks") = 1);

    mod.def(
        "write_figure_csv",
        [](int figure_id, const std::string& path, std::optional<std::uint64_t> p_min,
           std::optional<std::uint64_t> p_max, std::optional<std::uint64_t> m_min,
           std::optional<std::uint64_t> m_max) {
            FigureSpec spec = FigureSpec::defaults(figure_id);
            if (!path.empty()) spec.output_path = path;
            if (p_min) spec.p_min = *p_min;
            if (p_max) spec.p_max = *p_max;
            if (m_min) spec.m_min = *m_min;
            if (m_max) spec.m_max = *m_max;
            write_figure_csv(spec);
            return spec.output_path;
        },
        py::arg("figure_id"), py::arg("path") = std::string(), py::arg("p_min") = py::none(),
        py::arg("p_max") = py::none(), py::arg("m_min") = py::none(),
        py::arg("m_max") = py::none());

    mod.def(
        "verify",
        [](const std::string& level, const std::string& only) {
            const VerifyOptions options{
                level == "full" ? VerifyLevel::full : VerifyLevel::quick, false, only};
            py::list out;
            for (const CheckResult& r : run_verification(options)) {
                out.append(py::make_tuple(r.name, r.passed, r.detail));
            }
            return out;
        },
        py::arg("level") = "quick", py::arg("only") = std::string(),
        "Runs the verification suites; returns (name, passed, detail) tuples");
}
