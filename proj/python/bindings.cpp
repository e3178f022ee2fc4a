#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "salbounds/jacobi.hpp"
#include "salbounds/report.hpp"

namespace py = pybind11;
namespace sb = salbounds;

namespace {

py::object opt_result(const std::optional<sb::VariationalResult>& r)
{
    if (!r) return py::none();
    py::dict d;
    d["s_star"] = r->s_star;
    d["value"] = r->value;
    d["stationary"] = r->stationary;
    d["boundary_infimum"] = r->boundary_infimum;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Energy bounds for semirelativistic N-boson systems";

    py::class_<sb::PhysicalParams>(m, "PhysicalParams")
        .def(py::init<std::int64_t, double, double, double>(), py::arg("n_particles"),
             py::arg("mass"), py::arg("range"), py::arg("coupling"))
        .def_readwrite("n_particles", &sb::PhysicalParams::n_particles)
        .def_readwrite("mass", &sb::PhysicalParams::mass)
        .def_readwrite("range", &sb::PhysicalParams::range)
        .def_readwrite("coupling", &sb::PhysicalParams::coupling);

    py::class_<sb::ScaledParams>(m, "ScaledParams")
        .def_readonly("mu", &sb::ScaledParams::mu)
        .def_readonly("nu", &sb::ScaledParams::nu)
        .def_readonly("lambda_", &sb::ScaledParams::lambda)
        .def_readonly("gamma", &sb::ScaledParams::gamma);

    m.def("to_scaled", &sb::to_scaled, py::arg("params"));
    m.def("energy_from_scaled", &sb::energy_from_scaled, py::arg("e"), py::arg("params"));

    m.def("bessel_k1_scaled", &sb::bessel_k1_scaled, py::arg("x"));
    m.def("erfcx", &sb::erfcx, py::arg("x"));
    m.def("kinetic_I", &sb::kinetic_I, py::arg("x"));

    m.def(
        "potential_J",
        [](const std::string& shape, double y) {
            return sb::potential_J(sb::shape_by_name(shape), y);
        },
        py::arg("shape"), py::arg("y"));

    m.def(
        "spectral_F",
        [](const std::string& shape, double nu, double e) {
            return sb::spectral_F(sb::shape_by_name(shape), nu, e);
        },
        py::arg("shape"), py::arg("nu"), py::arg("e"));

    m.def(
        "solve_kg",
        [](const std::string& shape, double mu, double nu) -> py::object {
            const auto r = sb::solve_kg(sb::shape_by_name(shape), mu, nu);
            if (!r) return py::none();
            py::dict d;
            d["e_k"] = r->e_k;
            d["f_prime"] = r->f_prime;
            d["valid"] = r->valid;
            d["all_roots"] = r->all_roots;
            return d;
        },
        py::arg("shape"), py::arg("mu"), py::arg("nu"));

    m.def(
        "upper_bound_eg",
        [](const std::string& shape, double mu, double nu) {
            return opt_result(sb::upper_bound_eg(sb::shape_by_name(shape), mu, nu));
        },
        py::arg("shape"), py::arg("mu"), py::arg("nu"));

    m.def(
        "upper_bound_e2g",
        [](const std::string& shape, double mu, double nu, double lam) {
            return opt_result(
                sb::upper_bound_e2g(sb::shape_by_name(shape), mu, nu, lam));
        },
        py::arg("shape"), py::arg("mu"), py::arg("nu"), py::arg("lambda_") = 1.0);

    m.def(
        "critical_nu",
        [](const std::string& shape, double mu, double tol) {
            return sb::critical_nu(sb::shape_by_name(shape), mu, tol);
        },
        py::arg("shape"), py::arg("mu"), py::arg("tol") = 1e-6);

    m.def(
        "supercritical_nu",
        [](const std::string& shape, double mu, double tol) {
            return sb::supercritical_nu(sb::shape_by_name(shape), mu, tol);
        },
        py::arg("shape"), py::arg("mu"), py::arg("tol") = 1e-6);

    m.def(
        "compute_bounds",
        [](const std::string& shape, double mu, double nu, double lam) {
            const sb::BoundsReport r =
                sb::compute_bounds(sb::shape_by_name(shape), mu, nu, lam);
            py::dict d;
            d["mu"] = r.mu;
            d["nu"] = r.nu;
            d["lambda_"] = r.lambda;
            d["shape"] = r.shape;
            d["e_k"] = r.e_k ? py::cast(*r.e_k) : py::none();
            d["e_k_valid"] = r.ek_valid;
            d["e_g"] = r.e_g ? py::cast(*r.e_g) : py::none();
            d["e_2g"] = r.e_2g ? py::cast(*r.e_2g) : py::none();
            return d;
        },
        py::arg("shape"), py::arg("mu"), py::arg("nu"), py::arg("lambda_") = 1.0);

    m.def(
        "jacobi_identity_deviations",
        [](std::int64_t n) {
            const auto r = sb::check_identities(n);
            py::dict d;
            d["orthogonality"] = r.orthogonality;
            d["row_sum"] = r.row_sum;
            d["coeff_diag"] = r.coeff_diag;
            d["coeff_cross"] = r.coeff_cross;
            return d;
        },
        py::arg("n"));
}
