#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "superx/c5.hpp"
#include "superx/commands.hpp"
#include "superx/error.hpp"
#include "superx/invariant.hpp"
#include "superx/mls.hpp"
#include "superx/orbit.hpp"
#include "superx/superextension.hpp"

namespace py = pybind11;
using namespace superx;

namespace {

  std::vector<Elem> elements(Mask m) {
    std::vector<Elem> out;
    for (auto i : elements_of(m)) {
      out.push_back(static_cast<Elem>(i));
    }
    return out;
  }

  Mask to_mask(FiniteGroup const& g, std::vector<Elem> const& xs) {
    Mask m = 0;
    for (Elem x : xs) {
      if (x >= g.order()) {
        throw DomainError("element " + std::to_string(x) + " is outside "
                          + g.name());
      }
      m |= singleton(x);
    }
    return m;
  }

  std::vector<std::vector<Elem>> sets_of(SetFamily const& f) {
    std::vector<std::vector<Elem>> out;
    for (Mask m : f.minimal_sets()) {
      out.push_back(elements(m));
    }
    return out;
  }

  std::string json_of(Report const& r) {
    return to_json(r).dump();
  }

  std::optional<Cache> cache_at(std::optional<std::string> const& dir) {
    if (!dir) {
      return std::nullopt;
    }
    return Cache(*dir);
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Superextensions of small finite groups";

  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<CapacityError>(m, "CapacityError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());

  m.def("catalog", &catalog_names, py::arg("min_order") = 1,
        py::arg("max_order") = 13);
  m.def("group_table", [](std::string const& name) { return build_group(name).table(); });

  m.def(
      "maximal_linked_systems",
      [](std::size_t n, bool allow_large) {
        std::vector<std::vector<std::vector<Elem>>> out;
        for (auto const& l : enumerate_mls(n, allow_large)) {
          out.push_back(sets_of(l.family()));
        }
        return out;
      },
      py::arg("n"), py::arg("allow_large") = false,
      "Every maximal linked system on n points, each as its minimal sets.");
  m.def("count_mls", &count_mls, py::arg("n"), py::arg("allow_large") = false);

  m.def(
      "lambda_table",
      [](std::string const& group) {
        auto const t = build_lambda_table(build_group(group));
        py::dict   d;
        std::vector<std::vector<std::vector<Elem>>> systems;
        for (auto const& l : t.elements()) {
          systems.push_back(sets_of(l.family()));
        }
        std::vector<std::vector<Index>> rows(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) {
          for (std::size_t j = 0; j < t.size(); ++j) {
            rows[i].push_back(t.table()(i, j));
          }
        }
        d["elements"] = systems;
        d["table"]    = rows;
        return d;
      },
      py::arg("group"),
      "lambda(G) as its elements and the Cayley table of the circ product.");
  m.def(
      "orbit_count",
      [](std::string const& group, bool allow_large) {
        return count_lambda_orbits(build_group(group), allow_large);
      },
      py::arg("group"), py::arg("allow_large") = false);

  m.def(
      "sl",
      [](std::string const& group) {
        auto const r = min_self_linked(build_group(group));
        return py::make_tuple(r.size, elements(r.witness));
      },
      py::arg("group"), "sl(G) with a self-linked witness of that size.");
  m.def(
      "is_self_linked",
      [](std::string const& group, std::vector<Elem> const& a) {
        auto const g = build_group(group);
        return is_self_linked(g, to_mask(g, a));
      },
      py::arg("group"), py::arg("elements"));
  m.def(
      "invariant_systems",
      [](std::string const& group, bool allow_large) {
        std::vector<std::vector<std::vector<Elem>>> out;
        for (auto const& s : enumerate_invariant_mls(build_group(group), allow_large)) {
          out.push_back(sets_of(s.family));
        }
        return out;
      },
      py::arg("group"), py::arg("allow_large") = false);
  m.def(
      "sim_class_count",
      [](std::string const& group) { return sim_classes(build_group(group)).s(); },
      py::arg("group"));

  m.def(
      "c5_resolve",
      [](std::string const& name) { return sets_of(c5::resolve(name).family()); },
      py::arg("name"));
  m.def(
      "c5_render",
      [](std::vector<std::vector<Elem>> const& sets) {
        auto const        g = build_group("C5");
        std::vector<Mask> masks;
        for (auto const& s : sets) {
          masks.push_back(to_mask(g, s));
        }
        return c5::render(MaximalLinkedSystem(SetFamily::generate(5, masks)));
      },
      py::arg("sets"));

  // Report-producing commands; each returns the report as a JSON string.
  m.def("report_sl_table", [](std::size_t max_order) { return json_of(cmd_sl_table(max_order)); },
        py::arg("max_order") = 13);
  m.def(
      "report_lambda",
      [](std::string const& group, std::string const& what, bool allow_large,
         std::optional<std::string> const& cache_dir) {
        auto const cache = cache_at(cache_dir);
        return json_of(cmd_lambda(group, parse_lambda_query(what),
                                  {allow_large, cache ? &*cache : nullptr}));
      },
      py::arg("group"), py::arg("what") = "count", py::arg("allow_large") = false,
      py::arg("cache_dir") = py::none());
  m.def(
      "report_invariant",
      [](std::string const& group, bool allow_large) {
        return json_of(cmd_invariant(group, {allow_large, nullptr}));
      },
      py::arg("group"), py::arg("allow_large") = false);
  m.def("report_c5_t17", [] { return json_of(cmd_c5_t17()); });
  m.def("report_explore_sl", [](std::size_t max_n) { return json_of(cmd_explore_sl(max_n)); },
        py::arg("max_n") = 16);
  m.def(
      "report_verify",
      [](std::string const& scope, std::optional<std::string> const& cache_dir) {
        auto const cache = cache_at(cache_dir);
        return json_of(
            cmd_verify_paper(verify::parse_scope(scope), {false, cache ? &*cache : nullptr}));
      },
      py::arg("scope") = "fast", py::arg("cache_dir") = py::none());
}
