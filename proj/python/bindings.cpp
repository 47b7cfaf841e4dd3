// Copyright 2026 The auraspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "auraspace/cli.hpp"
#include "auraspace/corpus.hpp"
#include "auraspace/laws.hpp"
#include "auraspace/query.hpp"
#include "auraspace/search.hpp"
#include "auraspace/space_io.hpp"
#include "auraspace/topologies.hpp"

namespace py = pybind11;
using namespace auraspace;

namespace {

// Results cross the boundary as JSON text and are decoded with the stdlib.
py::object from_json(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

PointSet parse_arg(const IdealAuraSpace& s, const std::string& text) { return parse_set(s.universe(), text); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite ideal-aura topological spaces";

  py::register_exception<SpaceError>(m, "SpaceError", PyExc_ValueError);

  py::class_<IdealAuraSpace>(m, "Space")
      .def_static("from_json", [](const std::string& text) { return parse_space(text); })
      .def_static("load", [](const std::string& path) { return load_space(path); })
      .def("to_json", [](const IdealAuraSpace& s) { return serialize_space(s); })
      .def_property_readonly("size", &IdealAuraSpace::size)
      .def_property_readonly("points", [](const IdealAuraSpace& s) { return s.universe().names(); })
      .def_property_readonly("is_transitive", &IdealAuraSpace::is_transitive)
      .def(
          "compute",
          [](const IdealAuraSpace& s, const std::string& op, const std::string& arg) {
            return from_json(to_json(s.universe(), evaluate(s, op, arg)));
          },
          py::arg("op"), py::arg("arg") = "")
      .def(
          "compute_text",
          [](const IdealAuraSpace& s, const std::string& op, const std::string& arg) {
            return to_text(s.universe(), evaluate(s, op, arg));
          },
          py::arg("op"), py::arg("arg") = "")
      .def("family",
           [](const IdealAuraSpace& s, const std::string& name) {
             return from_json(to_json(s.universe(), QueryValue{gen_family(s, name)}));
           })
      .def("classify", [](const IdealAuraSpace& s, const std::string& set) {
        return from_json(to_json(s.universe(), QueryValue{classify(s, parse_arg(s, set))}));
      });

  m.def("law_ids", &all_law_ids);
  m.def(
      "check_laws",
      [](const std::vector<std::string>& ids, const std::string& spaces, std::uint64_t seed, int jobs) {
        const SpaceSource source = SpaceSource::parse(spaces, seed);
        std::vector<std::string> selected = ids.empty() ? all_law_ids() : ids;
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& r : run_laws(selected, source, jobs)) out.push_back(law_report_to_json(r));
        return from_json(out);
      },
      py::arg("ids") = std::vector<std::string>{}, py::arg("spaces") = "enum:n=1..3", py::arg("seed") = 1,
      py::arg("jobs") = 1);

  m.def(
      "repro",
      [](const std::string& only) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& r : run_corpus(only).rows) {
          rows.push_back({{"fixture", r.fixture}, {"op", r.op}, {"arg", r.arg}, {"expected", r.expected},
                          {"got", r.got}, {"location", r.location}, {"ok", r.ok}});
        }
        return from_json(rows);
      },
      py::arg("only") = "");

  m.def(
      "find_witness",
      [](const std::string& predicate, int n, const std::string& mode, std::uint64_t seed, std::uint64_t budget,
         bool discrete) -> py::object {
        SearchConfig c;
        c.n = n;
        c.seed = seed;
        c.budget = budget;
        c.mode = mode == "random" ? SearchMode::Random : SearchMode::Exhaustive;
        if (discrete) c.topology_source = TopologySource::Discrete;
        const SearchResult r = find_witness(parse_predicate(predicate), c);
        if (!r.witness) return py::none();
        return from_json(nlohmann::ordered_json::parse(serialize_witness(*r.witness)));
      },
      py::arg("predicate"), py::arg("n"), py::arg("mode") = "exhaustive", py::arg("seed") = 1,
      py::arg("budget") = 10000, py::arg("discrete") = false);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<const char*> argv{"auraspace"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
