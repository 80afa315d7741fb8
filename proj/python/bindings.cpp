#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "precubical/cli.hpp"
#include "precubical/complex.hpp"
#include "precubical/errors.hpp"
#include "precubical/fbg.hpp"
#include "precubical/model_io.hpp"
#include "precubical/reduce.hpp"

namespace py = pybind11;
using namespace precubical;

namespace {

py::object to_python(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object certificate(const ReductionCertificate& c) { return to_python(cli::certificate_json(c)); }

py::tuple reduction(const ReductionResult& r) {
  return py::make_tuple(r.complex ? py::cast(*r.complex) : py::object(py::none()), certificate(r.certificate));
}

Mode mode_of(bool apply) { return apply ? Mode::apply : Mode::check; }

RecipeStep step_from(const py::handle& h) {
  auto t = h.cast<py::tuple>();
  if (t.size() != 3 && t.size() != 4) throw OutOfRange("recipe steps are (kind, cell, b) or (kind, cell, a, b)");
  auto kind = parse_reduction_kind(t[0].cast<std::string>());
  if (!kind) throw OutOfRange("unknown reduction kind '" + t[0].cast<std::string>() + "'");
  RecipeStep s{*kind, t[1].cast<std::string>(), 0, 0};
  if (t.size() == 4) s.a = t[2].cast<int>();
  s.b = t[t.size() - 1].cast<int>();
  return s;
}

py::list cells_of(const Complex& p) {
  py::list out;
  for (const auto& c : p.cells()) out.append(py::make_tuple(c.degree, c.id));
  return out;
}

}  // namespace

PYBIND11_MODULE(_precubical, m) {
  m.doc() = "Precubical sets, their reductions, and fundamental bipartite graph counts";

  auto base = py::register_exception<Error>(m, "PrecubicalError");
  py::register_exception<ValidationFailed>(m, "ValidationFailed", base.ptr());
  py::register_exception<SyntaxError>(m, "DocumentSyntaxError", base.ptr());
  py::register_exception<NotAcyclic>(m, "NotAcyclic", base.ptr());
  py::register_exception<PathExplosion>(m, "PathExplosion", base.ptr());
  // The reduction failures carry their certificate as an attribute; the
  // translator below raises them.
  static py::object conditions_failed = py::exception<ConditionsFailed>(m, "ConditionsFailed", base.ptr());
  static py::object guarantee_lost = py::exception<GuaranteeLost>(m, "GuaranteeLost", base.ptr());
  static py::object step_failed = py::exception<RecipeStepFailed>(m, "RecipeStepFailed", base.ptr());

  py::register_exception_translator([](std::exception_ptr p) {
    auto raise = [](const py::object& type, const std::exception& e, const ReductionCertificate& cert) {
      py::object exc = type(e.what());
      exc.attr("certificate") = certificate(cert);
      PyErr_SetObject(type.ptr(), exc.ptr());
    };
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ConditionsFailed& e) {
      raise(conditions_failed, e, e.certificate());
    } catch (const GuaranteeLost& e) {
      raise(guarantee_lost, e, e.certificate());
    } catch (const RecipeStepFailed& e) {
      raise(step_failed, e, e.certificate());
    }
  });

  py::class_<Complex>(m, "Complex")
      .def(py::init<>())
      .def_property_readonly("dimension", &Complex::dimension)
      .def("count", &Complex::count, py::arg("degree"))
      .def("contains", [](const Complex& p, int d, const std::string& id) { return p.contains({d, id}); })
      .def("face", [](const Complex& p, int d, const std::string& id, int i, int k) { return p.face({d, id}, i, k); },
           py::arg("degree"), py::arg("id"), py::arg("i"), py::arg("k"))
      .def("cells", &cells_of)
      .def("__len__", &Complex::total_cells)
      .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; })
      .def("__repr__", [](const Complex& p) {
        std::string s = "<Complex";
        for (int d = 0; d < p.num_levels(); ++d) s += " " + std::to_string(p.count(d));
        return s + ">";
      });

  m.def("parse", [](const std::string& text) { return parse(text); }, py::arg("text"));
  m.def("serialize", &serialize, py::arg("complex"), py::arg("name") = std::nullopt);
  m.def("named_fixture", &named_fixture, py::arg("name"));
  m.def("fixture_names", &fixture_names);
  m.def("grid_with_holes", py::overload_cast<int, int, const std::set<GridCoord>&>(&grid_with_holes), py::arg("m"),
        py::arg("n"), py::arg("holes") = std::set<GridCoord>{});
  m.def("standard_cube", &standard_cube, py::arg("n"));
  m.def("export_dot", &export_dot, py::arg("complex"), py::arg("name") = std::nullopt);

  m.def("validate", [](const Complex& p) {
    std::vector<std::string> out;
    for (const auto& v : validate(p).violations) out.push_back(v.message);
    return out;
  });
  m.def("is_regular", [](const Complex& p, int d, const std::string& id) { return is_regular(p, {d, id}); });
  m.def("opposite", &opposite);
  m.def("transpose", &transpose);
  m.def("minimal_vertices", &minimal_vertices);
  m.def("maximal_vertices", &maximal_vertices);
  m.def("extremal_vertices", &extremal_vertices);
  m.def("euler_characteristic", &euler_characteristic);
  m.def("is_subcomplex", &is_subcomplex, py::arg("p"), py::arg("q"));
  m.def("are_isomorphic", [](const Complex& p, const Complex& q) { return are_isomorphic(p, q).has_value(); });

  m.def(
      "edge_collapse",
      [](const Complex& p, const std::string& x, int b, bool apply, bool allow_empty_y) {
        return reduction(edge_collapse(p, x, b, mode_of(apply), {allow_empty_y}));
      },
      py::arg("complex"), py::arg("cell"), py::arg("b"), py::arg("apply") = true, py::arg("allow_empty_y") = false);
  m.def(
      "square_one_free",
      [](const Complex& p, const std::string& x, int b, bool apply) {
        return reduction(square_one_free(p, x, b, mode_of(apply)));
      },
      py::arg("complex"), py::arg("cell"), py::arg("b"), py::arg("apply") = true);
  m.def(
      "square_two_free",
      [](const Complex& p, const std::string& x, int a, int b, bool apply, bool allow_empty_y) {
        return reduction(square_two_free(p, x, a, b, mode_of(apply), {allow_empty_y}));
      },
      py::arg("complex"), py::arg("cell"), py::arg("a"), py::arg("b"), py::arg("apply") = true,
      py::arg("allow_empty_y") = false);

  m.def(
      "auto_reduce",
      [](const Complex& p, const std::optional<py::list>& recipe) {
        std::vector<RecipeStep> steps;
        if (recipe) {
          for (const auto& h : *recipe) steps.push_back(step_from(h));
        }
        auto res = auto_reduce(p, recipe ? Policy::recipe : Policy::greedy, steps);
        py::list trail;
        for (const auto& c : res.trail) trail.append(certificate(c));
        return py::make_tuple(res.complex, trail);
      },
      py::arg("complex"), py::arg("recipe") = std::nullopt);
  m.def("example_recipe", [](const std::string& fixture) {
    py::list out;
    for (const auto& s : example_recipe(fixture)) {
      if (s.kind == ReductionKind::square_two_free) {
        out.append(py::make_tuple(to_string(s.kind), s.cell, s.a, s.b));
      } else {
        out.append(py::make_tuple(to_string(s.kind), s.cell, s.b));
      }
    }
    return out;
  });

  m.def("one_skeleton_is_acyclic", &one_skeleton_is_acyclic);
  m.def(
      "dihomotopy_classes",
      [](const Complex& p, const std::string& from, const std::string& to, std::size_t max_paths) {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const auto& cls : dihomotopy_classes(p, from, to, max_paths)) {
          auto& group = out.emplace_back();
          for (const auto& path : cls) group.push_back(path.edges);
        }
        return out;
      },
      py::arg("complex"), py::arg("source"), py::arg("target"), py::arg("max_paths") = kDefaultMaxPaths);
  m.def(
      "fbg",
      [](const Complex& p, std::size_t max_paths) { return to_python(cli::fbg_json(fundamental_bipartite_graph(p, max_paths))); },
      py::arg("complex"), py::arg("max_paths") = kDefaultMaxPaths);
  m.def(
      "fbg_equal",
      [](const Complex& p, const Complex& q, bool profile) {
        auto a = fundamental_bipartite_graph(p);
        auto b = fundamental_bipartite_graph(q);
        return profile ? fbg_count_profile_equal(a, b) : fbg_equal(a, b);
      },
      py::arg("p"), py::arg("q"), py::arg("profile") = false);
}
