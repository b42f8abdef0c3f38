// Copyright 2026 The mwkc Authors
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

#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mwkc/errors.hpp"
#include "mwkc/interval_graph.hpp"
#include "mwkc/network.hpp"
#include "mwkc/oracle.hpp"
#include "mwkc/schedule.hpp"
#include "mwkc/solver.hpp"

namespace py = pybind11;
using namespace mwkc;

namespace {

IntervalInstance instance_from_tuples(
    const std::vector<std::tuple<Coord, Coord, Weight>>& intervals,
    const std::vector<std::string>& slot_ids) {
  IntervalInstance inst;
  for (const auto& [s, f, w] : intervals) inst.vertices.push_back({s, f, w});
  inst.slot_ids = slot_ids;
  inst.check();
  return inst;
}

const char* severity_name(Severity s) {
  return s == Severity::kError ? "ERROR" : "WARNING";
}

}  // namespace

PYBIND11_MODULE(_mwkc, m) {
  m.doc() = "Maximum-weight k-colourable subgraphs of interval graphs";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", error);
  py::register_exception<UnknownReference>(m, "UnknownReference", error);
  py::register_exception<EmptyInstance>(m, "EmptyInstance", error);
  py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", error);
  py::register_exception<InternalInvariantViolation>(m, "InternalInvariantViolation", error);

  py::class_<Interval>(m, "Interval")
      .def(py::init([](Coord s, Coord f, Weight w) { return Interval{s, f, w}; }),
           py::arg("start"), py::arg("finish"), py::arg("weight"))
      .def_readwrite("start", &Interval::start)
      .def_readwrite("finish", &Interval::finish)
      .def_readwrite("weight", &Interval::weight)
      .def("__eq__", [](const Interval& a, const Interval& b) { return a == b; })
      .def("__repr__", [](const Interval& i) {
        return "Interval(" + std::to_string(i.start) + ", " + std::to_string(i.finish) +
               ", " + std::to_string(i.weight) + ")";
      });

  py::class_<IntervalInstance>(m, "IntervalInstance")
      .def(py::init(&instance_from_tuples), py::arg("intervals"),
           py::arg("slot_ids") = std::vector<std::string>{})
      .def_readonly("vertices", &IntervalInstance::vertices)
      .def_readonly("slot_ids", &IntervalInstance::slot_ids)
      .def("__len__", &IntervalInstance::size)
      .def("__getitem__", [](const IntervalInstance& inst, VertexId v) {
        if (v < 0 || static_cast<std::size_t>(v) >= inst.size()) throw py::index_error();
        return inst[v];
      })
      .def_property_readonly("max_weight", &IntervalInstance::max_weight)
      .def_property_readonly("total_weight", &IntervalInstance::total_weight)
      .def("find_slot", &IntervalInstance::find_slot, py::arg("slot_id"));

  py::class_<ProgrammeSlot>(m, "ProgrammeSlot")
      .def_readonly("slot_id", &ProgrammeSlot::slot_id)
      .def_readonly("channel", &ProgrammeSlot::channel)
      .def_readonly("title", &ProgrammeSlot::title)
      .def_property_readonly("start", [](const ProgrammeSlot& s) { return s.start.to_string(); })
      .def_property_readonly("end", [](const ProgrammeSlot& s) { return s.end.to_string(); })
      .def_property_readonly("start_minutes", [](const ProgrammeSlot& s) { return s.start.minutes(); })
      .def_property_readonly("end_minutes", [](const ProgrammeSlot& s) { return s.end.minutes(); })
      .def_readonly("viewers", &ProgrammeSlot::viewers);

  py::class_<ScheduleSet>(m, "ScheduleSet")
      .def_readonly("slots", &ScheduleSet::slots)
      .def_property_readonly("channels", &ScheduleSet::channels)
      .def("__len__", [](const ScheduleSet& s) { return s.slots.size(); });

  m.def(
      "parse_schedule",
      [](const std::string& text, const std::string& format) {
        return parse_schedule(text, parse_format(format));
      },
      py::arg("text"), py::arg("format") = "csv");
  m.def(
      "serialize_schedule",
      [](const ScheduleSet& s, const std::string& format) {
        return serialize_schedule(s, parse_format(format));
      },
      py::arg("schedule"), py::arg("format") = "csv");
  m.def(
      "validate_schedule",
      [](const ScheduleSet& s) {
        py::list issues;
        for (const auto& issue : validate_schedule(s).issues) {
          py::dict d;
          d["severity"] = severity_name(issue.severity);
          d["slot_ids"] = issue.slot_ids;
          d["message"] = issue.message;
          issues.append(d);
        }
        return issues;
      },
      py::arg("schedule"));
  m.def("to_intervals", &to_intervals, py::arg("schedule"),
        py::arg("excluded") = std::set<std::string>{});

  py::class_<CliqueSequence>(m, "CliqueSequence")
      .def_readonly("cliques", &CliqueSequence::cliques)
      .def_readonly("leading_points", &CliqueSequence::leading_points)
      .def_property_readonly("spans",
                             [](const CliqueSequence& cs) {
                               std::vector<std::pair<int, int>> out;
                               for (const auto& s : cs.spans) out.emplace_back(s.first, s.last);
                               return out;
                             })
      .def("__len__", &CliqueSequence::size);
  m.def("enumerate_maximal_cliques", &enumerate_maximal_cliques, py::arg("instance"));
  m.def(
      "compute_stats",
      [](const IntervalInstance& inst) {
        const auto stats = compute_stats(inst, enumerate_maximal_cliques(inst));
        py::dict d;
        d["n"] = stats.n;
        d["m"] = stats.m;
        d["max_weight"] = stats.max_weight;
        d["omega"] = stats.omega;
        d["components"] = stats.components;
        return d;
      },
      py::arg("instance"));

  py::enum_<ArcKind>(m, "ArcKind")
      .value("CLIQUE", ArcKind::kClique)
      .value("INTERVAL", ArcKind::kInterval);
  py::class_<Arc>(m, "Arc")
      .def_readonly("id", &Arc::id)
      .def_readonly("tail", &Arc::tail)
      .def_readonly("head", &Arc::head)
      .def_readonly("kind", &Arc::kind)
      .def_readonly("vertex", &Arc::vertex)
      .def_readonly("weight", &Arc::weight)
      .def_readonly("capacity", &Arc::capacity);
  py::class_<FlowNetwork>(m, "FlowNetwork")
      .def_readonly("k", &FlowNetwork::k)
      .def_readonly("node_count", &FlowNetwork::node_count)
      .def_readonly("arcs", &FlowNetwork::arcs)
      .def("interval_arc", &FlowNetwork::interval_arc, py::arg("vertex"));
  py::class_<TransformedNetwork>(m, "TransformedNetwork")
      .def_readonly("network", &TransformedNetwork::network)
      .def_readonly("pi", &TransformedNetwork::pi)
      .def_readonly("reduced_weight", &TransformedNetwork::reduced_weight);
  m.def(
      "build_network",
      [](const IntervalInstance& inst, int k) {
        const auto net = build_network(enumerate_maximal_cliques(inst), inst, k);
        return transform_weights(net, compute_pi(net));
      },
      py::arg("instance"), py::arg("k"));

  py::class_<ColourClass>(m, "ColourClass")
      .def_readonly("vertices", &ColourClass::vertices)
      .def_readonly("weight", &ColourClass::weight);
  py::class_<KcolourSolution>(m, "KcolourSolution")
      .def(py::init([](int k, const std::vector<std::vector<VertexId>>& classes,
                       const IntervalInstance& inst) {
             KcolourSolution sol;
             sol.k = k;
             for (const auto& c : classes) {
               ColourClass cls{c, 0};
               for (VertexId v : c) {
                 if (v < 0 || static_cast<std::size_t>(v) >= inst.size()) {
                   throw UnknownReference("vertex " + std::to_string(v));
                 }
                 cls.weight += inst[v].weight;
               }
               sol.total_weight += cls.weight;
               sol.selected.insert(sol.selected.end(), c.begin(), c.end());
               sol.classes.push_back(std::move(cls));
             }
             std::sort(sol.selected.begin(), sol.selected.end());
             return sol;
           }),
           py::arg("k"), py::arg("classes"), py::arg("instance"))
      .def_readonly("k", &KcolourSolution::k)
      .def_readonly("selected", &KcolourSolution::selected)
      .def_readonly("classes", &KcolourSolution::classes)
      .def_readonly("total_weight", &KcolourSolution::total_weight);
  m.def(
      "solve",
      [](const IntervalInstance& inst, int k, bool validate) {
        SolveOptions opts;
        opts.validate_paths = validate;
        return solve_mwkc(inst, k, opts);
      },
      py::arg("instance"), py::arg("k"), py::arg("validate") = false,
      py::call_guard<py::gil_scoped_release>());

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("best_weight", &OracleResult::best_weight)
      .def_readonly("best_subset", &OracleResult::best_subset)
      .def_readonly("nodes_explored", &OracleResult::nodes_explored);
  m.def("brute_force", &brute_force_mwkc, py::arg("instance"), py::arg("k"),
        py::arg("limit") = 20, py::call_guard<py::gil_scoped_release>());

  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("violations", &CheckReport::violations)
      .def_readonly("class_weights", &CheckReport::class_weights)
      .def_readonly("total_weight", &CheckReport::total_weight)
      .def_property_readonly("passed", &CheckReport::passed);
  m.def("verify", &verify_solution, py::arg("solution"), py::arg("instance"), py::arg("k"));
}
