#include "sandwich/atlas.hpp"
#include "sandwich/classifier.hpp"
#include "sandwich/cli.hpp"
#include "sandwich/errors.hpp"
#include "sandwich/reference.hpp"
#include "sandwich/render.hpp"
#include "sandwich/specfile.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace sandwich;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
py::object to_py(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

nlohmann::json from_py(const py::object& o) {
  if (py::isinstance<py::str>(o)) return nlohmann::json::parse(o.cast<std::string>());
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

std::vector<Group> groups_of(const std::optional<std::vector<std::vector<int>>>& gs) {
  std::vector<Group> out;
  if (gs)
    for (const auto& f : *gs) out.emplace_back(f);
  return out;
}

}  // namespace

PYBIND11_MODULE(sandwich_py, m) {
  m.doc() = "Canonical pencils on isotrivial sandwich surfaces";

  static py::exception<Error> error(m, "SandwichError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, (std::string(kind_name(e.kind())) + ": " + e.what()).c_str());
    } catch (const nlohmann::json::exception& e) {
      py::set_error(error, (std::string("InvalidInput: ") + e.what()).c_str());
    }
  });

  m.def(
      "atlas",
      [](int genus, int workers) {
        std::vector<AtlasRow> rows;
        {
          py::gil_scoped_release nogil;
          rows = atlas_table(genus, workers);
        }
        return to_py(render_atlas(rows, Format::Json));
      },
      py::arg("genus"), py::arg("workers") = 0, "Eigenspace profiles of abelian actions on curves of the given genus.");

  m.def(
      "covers",
      [](const std::vector<int>& group, int base_genus, std::optional<int> genus) {
        CoverConstraints cons;
        cons.genus = genus;
        std::vector<CoverData> cs;
        {
          py::gil_scoped_release nogil;
          cs = enumerate_covers(Group(group), base_genus, cons);
        }
        return to_py(render_covers(cs, Format::Json));
      },
      py::arg("group"), py::arg("base_genus"), py::arg("genus") = py::none(),
      "Covers of one group over a base of given genus, up to automorphism.");

  m.def(
      "invariants",
      [](const py::object& spec, bool flip) {
        auto s = sandwich_from_json(from_py(spec));
        return to_py(invariants_json(invariants(s, flip)));
      },
      py::arg("spec"), py::arg("flip") = false,
      "Invariants of a sandwich given as a dict or JSON string with group, coverF and coverD.");

  m.def(
      "classify",
      [](int genus_f, std::optional<std::vector<std::vector<int>>> groups, std::optional<int> base_a,
         std::optional<int> base_b, int pg_lo, int pg_hi, int workers) {
        ClassifyRequest req;
        req.genus_f = genus_f;
        req.groups = groups_of(groups);
        req.base_a = base_a;
        req.base_b = base_b;
        req.pg_lo = pg_lo;
        req.pg_hi = pg_hi;
        req.workers = workers;
        std::vector<FamilyRow> rows;
        {
          py::gil_scoped_release nogil;
          rows = classify(req);
        }
        py::list out;
        for (const auto& r : rows) out.append(to_py(family_json(r)));
        return out;
      },
      py::arg("genus_f") = 3, py::arg("groups") = py::none(), py::arg("base_a") = py::none(),
      py::arg("base_b") = py::none(), py::arg("pg_lo") = 3, py::arg("pg_hi") = 6, py::arg("workers") = 0,
      "Families of canonical-pencil sandwiches, one dict per family.");

  m.def(
      "compare",
      [](const std::string& table, int pg_lo, int pg_hi, int workers) {
        std::vector<DiscrepancyReport> ds;
        {
          py::gil_scoped_release nogil;
          ds = compare_table(table, pg_lo, pg_hi, workers);
        }
        py::list out;
        for (const auto& d : ds) out.append(to_py(discrepancy_json(d)));
        return out;
      },
      py::arg("table"), py::arg("pg_lo") = 3, py::arg("pg_hi") = 6, py::arg("workers") = 0,
      "Field-wise discrepancies between engine output and an embedded table.");

  m.def("tables", &reference_table_ids, "Ids of the embedded reference tables.");
}
