#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <prymsv/arith.hpp>
#include <prymsv/error.hpp>
#include <prymsv/hilbert.hpp>
#include <prymsv/prototypes.hpp>
#include <prymsv/qseries.hpp>
#include <prymsv/siegel_veech.hpp>

#include <string>

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace prymsv;

namespace
{

py::object to_fraction(const Rational &r)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    auto as_int = [](const mpz_class &z) {
        const std::string digits = z.get_str();
        return py::reinterpret_steal<py::object>(PyLong_FromString(digits.c_str(), nullptr, 10));
    };
    return fraction(as_int(r.numerator()), as_int(r.denominator()));
}

Rational from_python(const py::handle &value)
{
    return Rational::parse(py::str(value).cast<std::string>());
}

py::object optional_fraction(const std::optional<Rational> &r)
{
    return r ? to_fraction(*r) : py::none();
}

py::list series_list(const QSeries &s)
{
    py::list out;
    for (const auto &c : s.coefficients()) {
        out.append(to_fraction(c));
    }
    return out;
}

py::dict euler_dict(const EulerCharacteristics &t)
{
    py::dict d;
    d["D"] = t.disc.value();
    d["chi_X"] = to_fraction(t.chi_X);
    d["chi_X_prime"] = optional_fraction(t.chi_X_prime);
    d["chi_P"] = to_fraction(t.chi_P);
    d["chi_P_prime"] = optional_fraction(t.chi_P_prime);
    d["chi_Q"] = to_fraction(t.chi_Q);
    d["chi_Q_prime"] = optional_fraction(t.chi_Q_prime);
    d["chi_W2"] = to_fraction(t.chi_W2);
    d["chi_W4"] = optional_fraction(t.chi_W4);
    d["chi_W0cubed"] = optional_fraction(t.chi_W0cubed);
    d["b_D"] = t.b_D ? py::object(py::int_(*t.b_D)) : py::none();
    return d;
}

py::tuple triple(const std::array<Rational, 3> &v)
{
    return py::make_tuple(to_fraction(v[0]), to_fraction(v[1]), to_fraction(v[2]));
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Euler characteristics, q-expansion identities and Siegel-Veech constants";

    static py::exception<Error> error(m, "PrymsvError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const Error &e) {
            const std::string message = std::string(to_string(e.kind())) + ": " + e.what();
            PyErr_SetString(error.ptr(), message.c_str());
        }
    });

    // arith
    m.def("sigma", [](int k, std::int64_t n) { return to_fraction(sigma(k, n)); }, py::arg("m"), py::arg("n"));
    m.def("mobius", &mobius, py::arg("n"));
    m.def("kronecker", &kronecker, py::arg("a"), py::arg("b"));
    m.def("psi_gamma0", [](std::int64_t k) { return to_fraction(psi_gamma0(k)); }, py::arg("m"));
    m.def(
        "classify_discriminant",
        [](std::int64_t d) {
            const auto disc = classify_discriminant(d);
            py::dict out;
            out["D"] = disc.value();
            out["residue_mod_8"] = disc.residue_mod_8();
            out["is_square"] = disc.is_square();
            out["f"] = disc.conductor();
            out["D0"] = disc.fundamental();
            out["s"] = disc.two_power();
            out["f_odd"] = disc.odd_conductor();
            out["is_fundamental"] = disc.is_fundamental();
            out["is_12_primitive"] = disc.is_12_primitive();
            return out;
        },
        py::arg("D"));

    // qseries
    m.def("build_form", [](const std::string &name, std::int64_t order) { return series_list(build_form(name, order)); },
          py::arg("name"), py::arg("order"), "Coefficients c_0..c_N of a named q-expansion as Fractions.");
    m.def("coeff_closed_form", [](int k, std::int64_t n) { return to_fraction(coeff_closed_form(k, n)); },
          py::arg("m"), py::arg("n"));
    m.def(
        "certify_identities",
        [](std::int64_t order) {
            const auto report = certify_identities(order);
            py::dict checks;
            for (const auto &c : report.checks) {
                checks[py::str(c.name)] = c.first_failure ? py::object(py::int_(*c.first_failure)) : py::none();
            }
            return py::make_tuple(report.passed(), checks);
        },
        py::arg("order"), "Returns (passed, {check name: first failing exponent or None}).");
    m.def("verify_sigma_identity", [](std::int64_t d) { return verify_sigma_identity(classify_discriminant(d)); },
          py::arg("D"));

    // hilbert
    m.def("zeta_K_minus1", [](std::int64_t d0) { return to_fraction(zeta_K_minus1(d0)); }, py::arg("D0"));
    m.def("chi_X", [](std::int64_t d) { return to_fraction(chi_X(classify_discriminant(d))); }, py::arg("D"));
    m.def("chi_X_via_siegel_sums",
          [](std::int64_t d) { return to_fraction(chi_X_via_siegel_sums(classify_discriminant(d))); }, py::arg("D"));
    m.def("chi_X_prime", [](std::int64_t d) { return optional_fraction(chi_X_prime(classify_discriminant(d))); },
          py::arg("D"));
    m.def("b_coefficient", [](std::int64_t d) { return b_coefficient(classify_discriminant(d)); }, py::arg("D"));
    m.def("full_table", [](std::int64_t d) { return euler_dict(full_table(classify_discriminant(d))); },
          py::arg("D"));
    m.def("verify_ratio_prop", [](std::int64_t d) { return verify_ratio_prop(classify_discriminant(d)); },
          py::arg("D"));
    m.def("verify_w2_combination", [](std::int64_t d) { return verify_w2_combination(classify_discriminant(d)); },
          py::arg("D"));

    // prototypes
    m.def(
        "enumerate_P",
        [](std::int64_t d, bool restricted) {
            py::list out;
            for (const auto &p : enumerate_P(d, restricted)) {
                out.append(py::make_tuple(p.a, p.b, p.d, p.e));
            }
            return out;
        },
        py::arg("D"), py::arg("restricted") = true, "Tuples (a, b, d, e).");
    m.def("count_P_tilde_by_sigma", &count_P_tilde_by_sigma, py::arg("D"));
    m.def(
        "verify_gcd_stratification",
        [](std::int64_t d0, std::int64_t f) { return verify_gcd_stratification(classify_discriminant(d0), f); },
        py::arg("D0"), py::arg("f"));
    m.def(
        "enumerate_torus_products",
        [](std::int64_t d) {
            py::list out;
            for (const auto &p : enumerate_torus_products(d)) {
                out.append(py::make_tuple(p.e, p.ell, p.m));
            }
            return out;
        },
        py::arg("D"), "Tuples (e, ell, m).");
    m.def("chi_Q_via_prototypes", [](std::int64_t d) { return to_fraction(chi_Q_via_prototypes(d)); }, py::arg("D"));
    m.def("chi_Q_prime_via_prototypes", [](std::int64_t d) { return to_fraction(chi_Q_prime_via_prototypes(d)); },
          py::arg("D"));

    // siegel_veech
    m.def(
        "sv_constants",
        [](std::int64_t d) {
            const auto c = sv_constants(classify_discriminant(d));
            return py::make_tuple(to_fraction(c.c1), to_fraction(c.c2), to_fraction(c.c3));
        },
        py::arg("D"), "(c1, c2, c3) for a discriminant D.");
    m.def(
        "sweep_constancy",
        [](std::int64_t lo, std::int64_t hi, unsigned threads) {
            const auto report = sweep_constancy(lo, hi, threads);
            return py::make_tuple(report.rows.size(), report.deviations());
        },
        py::arg("min_D"), py::arg("max_D"), py::arg("threads") = 1,
        "Returns (number of discriminants checked, list of deviating D).");
    m.def("appendix_sv_constants", []() { return triple(appendix_sv_constants()); });
    m.def(
        "cone_volume_closed",
        [](int r, int s, const py::object &a, const py::object &b) {
            const auto v = cone_volume_closed(r, s, from_python(a), from_python(b), ball_volume(r), ball_volume(s));
            return py::make_tuple(to_fraction(v.coefficient()), v.pi_exponent());
        },
        py::arg("r"), py::arg("s"), py::arg("a"), py::arg("b"),
        "Cone volume over unit balls as (coefficient, power of pi).");
    m.def(
        "cone_volume_mc",
        [](int r, int s, double a, double b, std::int64_t samples, std::uint64_t seed) {
            const auto est = cone_volume_mc(r, s, a, b, samples, seed);
            return py::make_tuple(est.estimate, est.stderr_);
        },
        py::arg("r"), py::arg("s"), py::arg("a"), py::arg("b"), py::arg("samples"), py::arg("seed"));

#ifdef VERSION_INFO
    m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
    m.attr("__version__") = "dev";
#endif
}
