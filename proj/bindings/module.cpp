// Python bindings for the main operations.  JSON-shaped values cross the
// boundary as plain dicts/lists (round-tripped through the json module).
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "heatsym/chern.hpp"
#include "heatsym/cocycle.hpp"
#include "heatsym/io.hpp"
#include "heatsym/oracle.hpp"
#include "heatsym/verify.hpp"

namespace py = pybind11;
using namespace heatsym;
using nlohmann::json;

namespace {

json from_py(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return json::parse(obj.cast<std::string>());
    py::object dumps = py::module_::import("json").attr("dumps");
    return json::parse(dumps(obj).cast<std::string>());
}

py::object to_py(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(py::str(j.dump()));
}

CurvatureData curvature_arg(const py::object& obj) {
    return io::curvature_from_json(from_py(obj));
}

py::object py_index_density(const py::object& curvature) {
    FormElement d = index_density(curvature_arg(curvature));
    json report;
    report["density"] = io::form_to_json(d);
    report["top"] =
        io::scalar_to_json(d.is_zero() ? ExtScalar() : d.top_coefficient().at(0, 0));
    return to_py(report);
}

py::object py_heat_coefficients(const py::object& curvature, int count, std::string op) {
    CurvatureData R = curvature_arg(curvature);
    DiffOpSymbol p = (op == "laplace") ? laplace_beltrami_symbol(R) : lichnerowicz_symbol(R);
    json list = json::array();
    for (const auto& a : heat_coefficients(p, count)) list.push_back(io::form_to_json(a));
    return to_py(list);
}

py::object py_pair_even_sphere_bott() {
    return to_py(io::scalar_to_json(pair_even_sphere(SphereMatrix::bott_idempotent())));
}

py::object py_pair_even_torus(const py::object& matrix, int dim) {
    TrigMatrix e = io::trig_matrix_from_json(from_py(matrix));
    return to_py(io::scalar_to_json(pair_even_torus(e, dim)));
}

py::object py_pair_odd(const py::object& matrix, int dim) {
    TrigMatrix u = io::trig_matrix_from_json(from_py(matrix));
    return to_py(io::scalar_to_json(pair_odd(u, dim)));
}

py::object py_aps(const py::object& matrix, int dim) {
    TrigMatrix u = io::trig_matrix_from_json(from_py(matrix));
    return to_py(io::scalar_to_json(aps_spectral_flow(u, dim)));
}

py::object py_cm_even(int k, int dim, const py::object& functions) {
    json arr = from_py(functions);
    std::vector<TrigPoly> fs;
    for (json cell : arr) {
        if (!cell.contains("dim")) cell["dim"] = dim;
        fs.push_back(io::trig_from_json(cell));
    }
    return to_py(io::scalar_to_json(cm_even_value(k, dim, fs)));
}

py::object py_cm_odd(int k, int dim, const py::object& functions) {
    json arr = from_py(functions);
    std::vector<TrigPoly> fs;
    for (json cell : arr) {
        if (!cell.contains("dim")) cell["dim"] = dim;
        fs.push_back(io::trig_from_json(cell));
    }
    return to_py(io::scalar_to_json(cm_odd_value(k, dim, fs)));
}

py::dict py_spectral_flow(int winding, int cutoff) {
    auto tracked = oracle::spectral_flow_track(winding, cutoff);
    TrigMatrix u = TrigMatrix::winding(winding);
    ExtScalar paired = pair_odd(u, 1);
    ExtScalar aps = aps_spectral_flow(u, 1);
    py::dict out;
    out["sf"] = tracked.spectral_flow;
    out["toeplitz"] = tracked.toeplitz_index;
    out["pairOdd"] = to_py(io::scalar_to_json(paired));
    out["aps"] = to_py(io::scalar_to_json(aps));
    out["match"] = tracked.spectral_flow == winding && paired == ExtScalar::integer(winding) &&
                   aps == ExtScalar::integer(winding);
    return out;
}

py::dict py_mehler_check(double a, int dim, int grid, double box, double t0, double t1,
                         int steps) {
    oracle::PdeCheckResult r = (dim == 1)
                                   ? oracle::mehler_pde_check_1d(a, grid, box, t0, t1, steps)
                                   : oracle::mehler_pde_check_2d(a, grid, box, t0, t1, steps);
    py::dict out;
    out["max_rel_error"] = r.max_rel_error;
    out["mass_defect"] = r.mass_defect;
    return out;
}

py::list py_run_acceptance(std::uint64_t seed, int threads) {
    py::list out;
    for (const auto& r : verify::run_acceptance(seed, threads)) {
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["pass"] = r.pass;
        d["seconds"] = r.seconds;
        d["detail"] = r.detail;
        out.append(d);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_heatsym, m) {
    m.doc() = "exact heat-kernel asymptotics, index densities and cyclic pairings";

    py::register_exception<Error>(m, "HeatsymError");

    m.def("index_density", &py_index_density, py::arg("curvature"),
          "A-hat/Chern local index density from a curvature description");
    m.def("heat_coefficients", &py_heat_coefficients, py::arg("curvature"),
          py::arg("count") = 2, py::arg("operator") = "dirac",
          "pointwise heat coefficients a_0..a_{count-1}");
    m.def("pair_even_sphere_bott", &py_pair_even_sphere_bott,
          "pairing of the CM cocycle with the Bott idempotent on S^2");
    m.def("pair_even_torus", &py_pair_even_torus, py::arg("matrix"), py::arg("dim"));
    m.def("pair_odd", &py_pair_odd, py::arg("matrix"), py::arg("dim"));
    m.def("aps_spectral_flow", &py_aps, py::arg("matrix"), py::arg("dim"));
    m.def("cm_even", &py_cm_even, py::arg("k"), py::arg("dim"), py::arg("functions"));
    m.def("cm_odd", &py_cm_odd, py::arg("k"), py::arg("dim"), py::arg("functions"));
    m.def("spectral_flow", &py_spectral_flow, py::arg("winding"), py::arg("cutoff") = 64);
    m.def("mehler_check", &py_mehler_check, py::arg("a"), py::arg("dim") = 1,
          py::arg("grid") = 2001, py::arg("box") = 9.0, py::arg("t0") = 0.25,
          py::arg("t1") = 0.75, py::arg("steps") = 300);
    m.def("quadrature_radial", &oracle::quadrature_radial_value, py::arg("beta"),
          py::arg("base_pow"), py::arg("dim"), py::arg("points") = 48);
    m.def("radial_reference", &oracle::radial_reference, py::arg("beta"), py::arg("base_pow"),
          py::arg("dim"));
    m.def("run_acceptance", &py_run_acceptance, py::arg("seed") = 20260801ull,
          py::arg("threads") = 1);
}
