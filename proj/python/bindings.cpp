#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isodirac/deform.hpp"
#include "isodirac/errors.hpp"
#include "isodirac/families.hpp"
#include "isodirac/numerics.hpp"
#include "isodirac/verify.hpp"
#include "isodirac/version.hpp"

namespace py = pybind11;
using namespace isodirac;

PYBIND11_MODULE(_isodirac, m) {
    m.doc() = "rationally extended Dirac oscillator potentials, their isospectral "
              "deformations and one-sided limits";
    m.attr("__version__") = kVersion;

    // registration order matters: the translator registered last runs first,
    // so UsageError (and subclasses) win over the NumericalError mapping
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);
    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init([](double x_min, double x_max, int n) {
                 GridSpec g{x_min, x_max, n};
                 g.validate();
                 return g;
             }),
             py::arg("x_min"), py::arg("x_max"), py::arg("n"))
        .def_readonly("x_min", &GridSpec::x_min)
        .def_readonly("x_max", &GridSpec::x_max)
        .def_readonly("n", &GridSpec::n)
        .def("spacing", &GridSpec::spacing)
        .def("points", &GridSpec::points)
        .def("__repr__", [](const GridSpec& g) {
            return "GridSpec(x_min=" + std::to_string(g.x_min) +
                   ", x_max=" + std::to_string(g.x_max) + ", n=" + std::to_string(g.n) + ")";
        });

    py::enum_<FamilyKind>(m, "FamilyKind")
        .value("RadialOscillator", FamilyKind::RadialOscillator)
        .value("ScarfI", FamilyKind::ScarfI)
        .value("GPT", FamilyKind::GPT);

    py::class_<FamilyParams>(m, "FamilyParams")
        .def_static("radial_oscillator", &FamilyParams::radial_oscillator, py::arg("omega"),
                    py::arg("ell"), py::arg("m") = 1)
        .def_static("scarf1", &FamilyParams::scarf1, py::arg("A"), py::arg("B"),
                    py::arg("m") = 1)
        .def_static("gpt", &FamilyParams::gpt, py::arg("A"), py::arg("B"), py::arg("m") = 1)
        .def_readonly("kind", &FamilyParams::kind)
        .def_readonly("m", &FamilyParams::m)
        .def_readonly("omega", &FamilyParams::omega)
        .def_readonly("ell", &FamilyParams::ell)
        .def_readonly("A", &FamilyParams::A)
        .def_readonly("B", &FamilyParams::B)
        .def("label", &FamilyParams::label)
        .def("__repr__", [](const FamilyParams& p) { return "FamilyParams(" + p.label() + ")"; });

    py::class_<DomainSpec>(m, "DomainSpec")
        .def_readonly("lower", &DomainSpec::lower)
        .def_readonly("upper", &DomainSpec::upper)
        .def_property_readonly("coordinate",
                               [](const DomainSpec& d) { return std::string(d.coordinate); })
        .def("upper_infinite", &DomainSpec::upper_infinite);

    py::class_<SpectralLine>(m, "SpectralLine")
        .def_readonly("n", &SpectralLine::n)
        .def_readonly("E", &SpectralLine::E)
        .def_readonly("epsilon", &SpectralLine::epsilon)
        .def_readonly("sector", &SpectralLine::sector)
        .def("__repr__", [](const SpectralLine& l) {
            return "SpectralLine(sector=" + std::to_string(l.sector) +
                   ", n=" + std::to_string(l.n) + ", E=" + std::to_string(l.E) + ")";
        });

    py::class_<Family>(m, "Family")
        .def(py::init<const FamilyParams&>(), py::arg("params"))
        .def_property_readonly("params", &Family::params)
        .def("domain", &Family::domain)
        .def("default_grid", &Family::default_grid)
        .def("phi", &Family::phi, py::arg("x"))
        .def("phi_prime", &Family::phi_prime, py::arg("x"))
        .def("v1", &Family::v1, py::arg("x"))
        .def("v2", &Family::v2, py::arg("x"))
        .def("psi1", &Family::psi1, py::arg("n"), py::arg("x"))
        .def("psi2", &Family::psi2, py::arg("n"), py::arg("x"))
        .def("energy1", &Family::energy1, py::arg("n"))
        .def("energy2", &Family::energy2, py::arg("n"))
        .def("bound_count1", &Family::bound_count1)
        .def("spectrum", &Family::spectrum, py::arg("sector"), py::arg("count"))
        .def("__repr__",
             [](const Family& f) { return "Family(" + f.params().label() + ")"; });

    py::class_<Deformation>(m, "Deformation")
        .def_static("generic", &Deformation::generic, py::arg("lam"))
        .def_static("pursey", &Deformation::pursey)
        .def_static("abraham_moses", &Deformation::abraham_moses)
        .def_static("undeformed", &Deformation::undeformed)
        .def_readonly("lam", &Deformation::lambda)
        .def("label", &Deformation::label)
        .def("__repr__", [](const Deformation& d) { return "Deformation(" + d.label() + ")"; });

    py::class_<IntegralTable>(m, "IntegralTable")
        .def("err_est", &IntegralTable::err_est)
        .def("psi0", &IntegralTable::psi0, py::arg("x"))
        .def("psi0_sq", &IntegralTable::psi0_sq, py::arg("x"))
        .def("cdf", &IntegralTable::cdf, py::arg("x"))
        .def("tail", &IntegralTable::tail, py::arg("x"))
        .def("denominator", &IntegralTable::denominator, py::arg("d"), py::arg("x"));

    // the table stores a pointer to the family, so the family object must
    // stay alive as long as the table does
    m.def("compute_I", &compute_I, py::arg("fam"), py::arg("grid"), py::keep_alive<0, 1>());

    m.def("phi_lambda", &phi_lambda, py::arg("fam"), py::arg("d"), py::arg("x"),
          py::arg("table"));
    m.def("v1_lambda", &v1_lambda, py::arg("fam"), py::arg("d"), py::arg("x"),
          py::arg("table"));
    m.def("psi0_lambda", &psi0_lambda, py::arg("fam"), py::arg("d"), py::arg("x"),
          py::arg("table"));
    m.def("psi_excited_lambda", &psi_excited_lambda, py::arg("fam"), py::arg("d"),
          py::arg("n"), py::arg("x"), py::arg("table"));

    py::class_<Spinor>(m, "Spinor")
        .def_readonly("upper", &Spinor::upper)
        .def_readonly("lower", &Spinor::lower)
        .def("__repr__", [](const Spinor& s) {
            return "Spinor(upper=" + std::to_string(s.upper) +
                   ", lower=" + std::to_string(s.lower) + ")";
        });
    m.def("dirac_spinor_lambda", &dirac_spinor_lambda, py::arg("fam"), py::arg("d"),
          py::arg("n"), py::arg("x"), py::arg("table"));

    m.def(
        "fd_eigensolve",
        [](const std::function<double(double)>& v, const GridSpec& grid, int k, double tol) {
            return fd_eigensolve(v, grid, k, tol);
        },
        py::arg("v"), py::arg("grid"), py::arg("k"), py::arg("tol") = 5e-2);

    py::class_<Check>(m, "Check")
        .def_readonly("name", &Check::name)
        .def_readonly("citation", &Check::citation)
        .def_readonly("measured", &Check::measured)
        .def_readonly("tolerance", &Check::tolerance)
        .def_readonly("pass_", &Check::pass)
        .def_readonly("note", &Check::note)
        .def("__repr__", [](const Check& c) {
            return std::string(c.pass ? "[pass] " : "[FAIL] ") + c.name;
        });

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("subject", &VerificationReport::subject)
        .def_readonly("grid_note", &VerificationReport::grid_note)
        .def_readonly("checks", &VerificationReport::checks)
        .def("overall", &VerificationReport::overall);

    m.def("verify_family", &verify_family, py::arg("params"), py::arg("grid"),
          py::arg("lambdas") = std::vector<double>{0.05, 0.1, 1.0, 10.0});
    m.def("check_closed_forms", &check_closed_forms);
    m.def("to_text", &to_text, py::arg("report"));
    m.def("to_tree", &to_tree, py::arg("report"));
}
