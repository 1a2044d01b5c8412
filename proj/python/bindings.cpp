#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nodal/acceptance.hpp"
#include "nodal/critical.hpp"
#include "nodal/folding.hpp"
#include "nodal/mesh.hpp"
#include "nodal/report.hpp"
#include "nodal/surfaces.hpp"

namespace py = pybind11;
using namespace nodal;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_nodal, m) {
  m.doc() = "Nodal surfaces of degree 3n built from shifted A2 folding polynomials";

  py::class_<MultiPoly>(m, "Poly")
      .def_property_readonly("arity", &MultiPoly::arity)
      .def_property_readonly("degree", &MultiPoly::degree)
      .def("__len__", &MultiPoly::size)
      .def("__call__",
           [](const MultiPoly& p, const std::vector<std::complex<double>>& pt) { return eval_complex(p, pt); },
           py::arg("point"))
      .def("to_text", [](const MultiPoly& p, const std::vector<std::string>& vars) { return poly_to_text(p, vars); },
           py::arg("vars") = std::vector<std::string>{})
      .def_static("from_text", [](const std::string& text) { return poly_from_text(text); })
      .def("__eq__", [](const MultiPoly& a, const MultiPoly& b) { return a == b; })
      .def("__repr__", [](const MultiPoly& p) {
        return "<Poly arity=" + std::to_string(p.arity()) + " degree=" + std::to_string(p.degree()) +
               " terms=" + std::to_string(p.size()) + ">";
      });

  m.def("folding_P", &folding_P, py::arg("d"));
  m.def("folding_Q", &folding_Q, py::arg("d"));
  m.def("chebyshev_T", &chebyshev_T, py::arg("d"));
  m.def("power_sum", &power_sum, py::arg("d"));
  m.def("surface", [](int d, const std::string& kind) {
    if (kind != "U" && kind != "V") throw py::value_error("kind must be 'U' or 'V'");
    return build_surface(d, kind == "U" ? SurfaceKind::U : SurfaceKind::V).poly;
  }, py::arg("d"), py::arg("kind") = "U");
  m.def("hypersurface", [](int n) { return hypersurface_build(n).poly; }, py::arg("n"));
  m.def("real_variant", py::overload_cast<int>(&real_variant), py::arg("d"));

  m.def("trig_h", [](double u, double v) { return trig_h({u, v}); }, py::arg("u"), py::arg("v"));
  m.def("trig_H", [](int d, double u, double v) { return trig_H(d, {u, v}); }, py::arg("d"), py::arg("u"), py::arg("v"));

  py::class_<CriticalPoint>(m, "CriticalPoint")
      .def_readonly("i", &CriticalPoint::i)
      .def_readonly("j", &CriticalPoint::j)
      .def_property_readonly("u", [](const CriticalPoint& p) { return p.u.get_str(); })
      .def_property_readonly("v", [](const CriticalPoint& p) { return p.v.get_str(); })
      .def_readonly("value", &CriticalPoint::value)
      .def_property_readonly("family", [](const CriticalPoint& p) { return std::string(family_tag(p.family)); })
      .def_readonly("hessian_det", &CriticalPoint::hessian_det)
      .def_readonly("image_x", &CriticalPoint::image_x)
      .def_readonly("image_y", &CriticalPoint::image_y);

  m.def("brute_force_scan", [](int d) { return brute_force_scan(d); }, py::arg("d"));
  m.def("family_enumerate", [](int d) { return family_enumerate(d); }, py::arg("d"));
  m.def("lemma_census", [](int d) { return json_to_py(census_to_json(image_census(family_enumerate(d), d))); },
        py::arg("d"), "Critical point census of H_d as a dict");

  m.def("count_singular_U", &count_singular_U, py::arg("d"));
  m.def("count_singular_V", &count_singular_V, py::arg("d"));
  m.def("mu_lower_bound", &mu_lower_bound, py::arg("n"));
  m.def("hypersurface_count", &hypersurface_count, py::arg("n"));
  m.def("hypersurface_excess", &hypersurface_excess, py::arg("n"));
  m.def("singular_report", [](int d) { return json_to_py(singular_report_to_json(d, enumerate_singular_U(d))); },
        py::arg("d"), "Certified nodes of U_d as a dict");
  m.def("infinity_check", [](int d) { return infinity_check(d).ok; }, py::arg("d"));

  m.def("mesh_real_variant", [](int d, double box, int resolution) {
    const auto mesh = mesh_real_variant(d, box, resolution);
    return py::make_tuple(mesh.vertices, mesh.faces);
  }, py::arg("d"), py::arg("box") = 2.0, py::arg("resolution") = 64,
     "Marching-cubes mesh of the real variant: (vertices, faces)");

  m.def("verify_all", [](const std::vector<int>& degrees) {
    const auto opts = degrees.empty() ? AcceptanceOptions{} : options_for_degrees(degrees);
    py::list out;
    for (const auto& r : run_acceptance(opts)) out.append(py::make_tuple(r.id, r.name, r.passed, r.detail));
    return out;
  }, py::arg("degrees") = std::vector<int>{});

  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
}
