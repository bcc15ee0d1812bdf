#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numrad/bounds.hpp"
#include "numrad/errors.hpp"
#include "numrad/harness.hpp"
#include "numrad/io.hpp"
#include "numrad/numerical_radius.hpp"
#include "numrad/transforms.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

using numrad::CMatrix;
namespace nb = numrad::bounds;
namespace nh = numrad::harness;

numrad::NumRadOptions options(std::optional<double> tol) {
    numrad::NumRadOptions opts = numrad::default_numrad_options();
    if (tol) opts.tol = *tol;
    return opts;
}

py::object json_to_python(const numrad::io::Json& doc) {
    return py::module_::import("json").attr("loads")(doc.dump());
}

void bind_errors(py::module_& m) {
    // Translators run in reverse registration order, so subclasses go last.
    auto& base = py::register_exception<numrad::Error>(m, "NumradError", PyExc_ValueError);
    py::register_exception<numrad::DimensionError>(m, "DimensionError", base.ptr());
    py::register_exception<numrad::NonFiniteError>(m, "NonFiniteError", base.ptr());
    py::register_exception<numrad::ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<numrad::NotHermitianError>(m, "NotHermitianError", base.ptr());
    py::register_exception<numrad::NotPsdError>(m, "NotPsdError", base.ptr());
    py::register_exception<numrad::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<numrad::ConsistencyError>(m, "ConsistencyError", base.ptr());
}

void bind_core(py::module_& m) {
    py::class_<numrad::NumRadResult>(m, "NumRadResult")
        .def_readonly("value", &numrad::NumRadResult::value)
        .def_readonly("theta_star", &numrad::NumRadResult::theta_star)
        .def_readonly("witness", &numrad::NumRadResult::witness)
        .def("__repr__", [](const numrad::NumRadResult& r) {
            return "NumRadResult(value=" + std::to_string(r.value) + ", theta_star=" + std::to_string(r.theta_star) +
                   ")";
        });

    m.def(
        "numerical_radius",
        [](const CMatrix& a, std::optional<double> tol, int grid) {
            numrad::NumRadOptions opts = options(tol);
            opts.grid = grid;
            return numrad::numerical_radius(a, opts);
        },
        "a"_a, "tol"_a = py::none(), "grid"_a = numrad::kDefaultThetaGrid,
        "w(A) with the maximizing angle and a unit witness vector.");
    m.def(
        "numrad_value", [](const CMatrix& a, std::optional<double> tol) { return numrad::numrad_value(a, options(tol)); },
        "a"_a, "tol"_a = py::none());
    m.def(
        "nr_profile",
        [](const CMatrix& a, int grid) {
            std::vector<std::pair<double, double>> out;
            for (const auto& s : numrad::nr_profile(a, grid)) out.emplace_back(s.theta, s.lambda_max);
            return out;
        },
        "a"_a, "grid"_a, "List of (theta, lambda_max) pairs on a uniform grid.");
    m.def("nr_lower_random", &numrad::nr_lower_random, "a"_a, "trials"_a, "seed"_a);

    m.def("op_norm", &numrad::op_norm, "a"_a);
    m.def("psd_power", &numrad::psd_power, "m"_a, "p"_a);
    m.def("aluthge", &numrad::aluthge, "a"_a);
    m.def("cartesian", [](const CMatrix& a) {
        auto p = numrad::cartesian(a);
        return py::make_tuple(p.re, p.im);
    });
    m.def("polar", [](const CMatrix& a) {
        auto p = numrad::polar(a);
        return py::make_tuple(p.u, p.modulus);
    });
}

void bind_bounds(py::module_& m) {
    py::class_<nb::BoundReport>(m, "BoundReport")
        .def_readonly("id", &nb::BoundReport::id)
        .def_property_readonly("side", [](const nb::BoundReport& r) { return std::string(nb::to_string(r.side)); })
        .def_property_readonly("target", [](const nb::BoundReport& r) { return std::string(nb::to_string(r.target)); })
        .def_readonly("value", &nb::BoundReport::value)
        .def_property_readonly("alpha", [](const nb::BoundReport& r) { return r.params.alpha; })
        .def_property_readonly("r", [](const nb::BoundReport& r) { return r.params.r; })
        .def_property_readonly("sign", [](const nb::BoundReport& r) { return r.params.sign; })
        .def_readonly("anchor", &nb::BoundReport::anchor)
        .def("to_dict", [](const nb::BoundReport& r) { return json_to_python(numrad::io::to_json(r)); })
        .def("__repr__", [](const nb::BoundReport& r) {
            return "BoundReport(" + r.id + ", " + std::string(nb::to_string(r.side)) + ", value=" +
                   numrad::io::fmt12(r.value) + ")";
        });

    py::class_<nb::AlphaCurve>(m, "AlphaCurve")
        .def_property_readonly("samples",
                               [](const nb::AlphaCurve& c) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& s : c.samples) out.emplace_back(s.alpha, s.value);
                                   return out;
                               })
        .def_readonly("argmin", &nb::AlphaCurve::argmin)
        .def_readonly("min_value", &nb::AlphaCurve::min_value)
        .def("report", &nb::AlphaCurve::report);

    const auto t = [](std::optional<double> tol) { return options(tol); };

    m.def("half_norm_lower", &nb::half_norm_lower, "a"_a);
    m.def("norm_upper", &nb::norm_upper, "a"_a);
    m.def("kittaneh_pair", &nb::kittaneh_pair, "a"_a);
    m.def("kittaneh_square_root_upper", &nb::kittaneh_square_root_upper, "a"_a);
    m.def(
        "yamazaki_upper", [t](const CMatrix& a, std::optional<double> tol) { return nb::yamazaki_upper(a, t(tol)); },
        "a"_a, "tol"_a = py::none());
    m.def("cartesian_mix_lower", &nb::cartesian_mix_lower, "a"_a);
    m.def("real_imag_gap_lower", &nb::real_imag_gap_lower, "a"_a);
    m.def("cartesian_mix_lower_sq", &nb::cartesian_mix_lower_sq, "a"_a);
    m.def("real_imag_gap_lower_sq", &nb::real_imag_gap_lower_sq, "a"_a);
    m.def(
        "aluthge_polar_upper",
        [t](const CMatrix& a, std::optional<double> tol) { return nb::aluthge_polar_upper(a, t(tol)); }, "a"_a,
        "tol"_a = py::none());
    m.def(
        "heinz_buzano_upper_sq",
        [t](const CMatrix& a, double alpha, std::optional<double> tol) {
            return nb::heinz_buzano_upper_sq(a, alpha, t(tol));
        },
        "a"_a, "alpha"_a, "tol"_a = py::none());
    m.def(
        "heinz_buzano_min_alpha",
        [t](const CMatrix& a, int grid, double width, std::optional<double> tol) {
            return nb::heinz_buzano_min_alpha(a, grid, width, t(tol));
        },
        "a"_a, "grid"_a = 257, "width"_a = 1e-10, "tol"_a = py::none());

    m.def(
        "dragomir_product_upper",
        [](const CMatrix& a, const CMatrix& b, double r) {
            auto d = nb::dragomir_product_upper(a, b, r);
            return py::make_tuple(d.raw, d.squared);
        },
        "a"_a, "b"_a, "r"_a, "(raw, squared) reports.");
    m.def(
        "heydarbeygi_product_upper",
        [t](const CMatrix& a, const CMatrix& b, double r, std::optional<double> tol) {
            return nb::heydarbeygi_product_upper(a, b, r, t(tol));
        },
        "a"_a, "b"_a, "r"_a, "tol"_a = py::none());
    m.def(
        "cartesian_product_upper",
        [t](const CMatrix& a, const CMatrix& b, double r, std::optional<double> tol) {
            return nb::cartesian_product_upper(a, b, r, t(tol));
        },
        "a"_a, "b"_a, "r"_a, "tol"_a = py::none());
    m.def("anticommutator_product_upper", &nb::anticommutator_product_upper, "a"_a, "b"_a, "r"_a);

    m.def(
        "generalized_commutator_upper",
        [t](const CMatrix& a, const CMatrix& b, const CMatrix& x, const CMatrix& y, int sign,
            std::optional<double> tol) { return nb::generalized_commutator_upper(a, b, x, y, sign, t(tol)); },
        "a"_a, "b"_a, "x"_a, "y"_a, "sign"_a = 1, "tol"_a = py::none());
    m.def(
        "commutator_upper",
        [t](const CMatrix& a, const CMatrix& b, int sign, std::optional<double> tol) {
            return nb::commutator_upper(a, b, sign, t(tol));
        },
        "a"_a, "b"_a, "sign"_a = 1, "tol"_a = py::none());
    m.def(
        "fong_holbrook_commutator_upper",
        [t](const CMatrix& a, const CMatrix& b, std::optional<double> tol) {
            return nb::fong_holbrook_commutator_upper(a, b, t(tol));
        },
        "a"_a, "b"_a, "tol"_a = py::none());
    m.def(
        "hirzallah_kittaneh_commutator_upper",
        [t](const CMatrix& a, const CMatrix& b, int sign, std::optional<double> tol) {
            return nb::hirzallah_kittaneh_commutator_upper(a, b, sign, t(tol));
        },
        "a"_a, "b"_a, "sign"_a = 1, "tol"_a = py::none());
    m.def(
        "fong_holbrook_xa_ax_upper",
        [t](const CMatrix& a, const CMatrix& x, std::optional<double> tol) {
            return nb::fong_holbrook_xa_ax_upper(a, x, t(tol));
        },
        "a"_a, "x"_a, "tol"_a = py::none());
    m.def("commutator_expression", &nb::commutator_expression, "a"_a, "b"_a, "x"_a, "y"_a, "sign"_a);
}

void bind_harness(py::module_& m) {
    m.def(
        "generate",
        [](const std::string& family, int n, std::uint64_t seed, int count) {
            return nh::generate({nh::parse_family(family), n, seed, count});
        },
        "family"_a, "n"_a, "seed"_a, "count"_a = 1);
    m.def("families", [] {
        std::vector<std::string> out;
        for (auto f : nh::all_families()) out.emplace_back(nh::to_string(f));
        return out;
    });
    m.def("verify_polarization", &nh::verify_polarization, "a"_a, "x"_a, "y"_a);
    m.def("verify_heinz", &nh::verify_heinz, "a"_a, "x"_a, "y"_a, "alpha"_a);
    m.def("verify_buzano", &nh::verify_buzano, "a"_a, "b"_a, "e"_a);
    m.def("verify_power_lemma", &nh::verify_power_lemma, "a"_a, "x"_a, "r"_a);
    m.def("verify_scalar_lemma", &nh::verify_scalar_lemma, "a"_a, "b"_a);
    m.def("verify_convex_norm_lemma", &nh::verify_convex_norm_lemma, "a"_a, "b"_a, "r"_a);

    m.def(
        "certify",
        [](std::optional<std::vector<std::string>> families, std::vector<int> sizes, int count, std::uint64_t seed,
           std::vector<double> r, int alpha_grid, int lemma_trials, bool self_test_fail, bool records,
           std::optional<double> tol) {
            nh::CertConfig config;
            if (families) {
                config.families.clear();
                for (const auto& f : *families) config.families.push_back(nh::parse_family(f));
            }
            config.sizes = std::move(sizes);
            config.count = count;
            config.seed = seed;
            config.r_values = std::move(r);
            config.alpha_grid = alpha_grid;
            config.lemma_trials = lemma_trials;
            config.self_test_fail = self_test_fail;
            config.numrad = options(tol);
            nh::CertReport report;
            {
                py::gil_scoped_release release;
                report = nh::run_certification(config);
            }
            return json_to_python(numrad::io::to_json(report, records));
        },
        "families"_a = py::none(), "sizes"_a = std::vector<int>{2, 3, 4, 5, 6}, "count"_a = 5, "seed"_a = 1,
        "r"_a = std::vector<double>{1.0, 1.5, 2.0, 3.0}, "alpha_grid"_a = 33, "lemma_trials"_a = 4,
        "self_test_fail"_a = false, "records"_a = true, "tol"_a = py::none(),
        "Run the certification suite and return the report as a dict.");
}

} // namespace

PYBIND11_MODULE(_numrad, m) {
    m.doc() = "Numerical radius of complex matrices and certified bounds on it";
    bind_errors(m);
    bind_core(m);
    bind_bounds(m);
    bind_harness(m);
}
