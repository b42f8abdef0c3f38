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

#include "mwkc/export.hpp"

#include <algorithm>
#include <iomanip>
#include <unordered_map>

#include "mwkc/errors.hpp"

namespace mwkc {

namespace {

Json vertex_ref(VertexId v, const IntervalInstance& instance) {
  if (!instance.slot_ids.empty()) {
    return instance.slot_ids[static_cast<std::size_t>(v)];
  }
  return v;
}

Json vertex_list(const std::vector<VertexId>& vs,
                 const IntervalInstance& instance) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(vertex_ref(v, instance));
  return out;
}

Json describe_slot(VertexId v, const IntervalInstance& instance,
                   const ScheduleSet* schedule) {
  const ProgrammeSlot* slot = nullptr;
  if (schedule != nullptr && !instance.slot_ids.empty()) {
    slot = schedule->find(instance.slot_ids[static_cast<std::size_t>(v)]);
  }
  if (slot != nullptr) {
    return Json{{"slot_id", slot->slot_id},  {"channel", slot->channel},
                {"title", slot->title},      {"start", slot->start.to_string()},
                {"end", slot->end.to_string()}, {"viewers", slot->viewers}};
  }
  Json j{{"vertex", v}};
  if (!instance.slot_ids.empty()) {
    j["slot_id"] = instance.slot_ids[static_cast<std::size_t>(v)];
  }
  j["start"] = instance[v].start;
  j["end"] = instance[v].finish;
  j["viewers"] = instance[v].weight;
  return j;
}

}  // namespace

Json to_json(const ValidationReport& report) {
  Json issues = Json::array();
  for (const auto& issue : report.issues) {
    issues.push_back(
        {{"severity", issue.severity == Severity::kError ? "ERROR" : "WARNING"},
         {"slot_ids", issue.slot_ids},
         {"message", issue.message}});
  }
  return Json{{"valid", !report.has_errors()}, {"issues", issues}};
}

Json to_json(const CliqueSequence& cliques, const IntervalInstance& instance) {
  Json list = Json::array();
  for (int i = 1; i <= cliques.size(); ++i) {
    list.push_back(
        {{"index", i},
         {"members", cliques.clique(i)},
         {"leading_point",
          cliques.leading_points[static_cast<std::size_t>(i - 1)]}});
  }
  Json spans = Json::object();
  for (std::size_t v = 0; v < cliques.spans.size(); ++v) {
    spans[std::to_string(v)] = {cliques.spans[v].first, cliques.spans[v].last};
  }
  Json out{{"cliques", list}, {"spans", spans}};
  if (!instance.slot_ids.empty()) out["slot_ids"] = instance.slot_ids;
  return out;
}

Json to_json(const GraphStats& stats, const IntervalInstance& instance) {
  Json components = Json::array();
  for (const auto& c : stats.components) {
    components.push_back(vertex_list(c, instance));
  }
  return Json{{"n", stats.n},
              {"m", stats.m ? Json(*stats.m) : Json("not computed")},
              {"max_weight", stats.max_weight},
              {"omega", stats.omega},
              {"component_count", stats.components.size()},
              {"components", components}};
}

Json to_json(const TransformedNetwork& tn, const IntervalInstance& instance) {
  Json arcs = Json::array();
  for (const Arc& a : tn.network.arcs) {
    Json j{{"arc_id", a.id},
           {"tail", a.tail},
           {"head", a.head},
           {"kind", a.kind == ArcKind::kClique ? "c_arc" : "i_arc"}};
    if (a.kind == ArcKind::kInterval) {
      j["vertex"] = a.vertex;
      if (!instance.slot_ids.empty()) {
        j["slot_id"] = instance.slot_ids[static_cast<std::size_t>(a.vertex)];
      }
    }
    j["weight_N"] = a.weight;
    j["weight_U"] = tn.reduced_weight[static_cast<std::size_t>(a.id)];
    j["capacity"] = a.capacity;
    arcs.push_back(std::move(j));
  }
  return Json{{"k", tn.network.k},
              {"node_count", tn.network.node_count},
              {"pi", tn.pi},
              {"arcs", arcs}};
}

Json to_json(const CheckReport& report) {
  return Json{{"passed", report.passed()},
              {"class_weights", report.class_weights},
              {"total_weight", report.total_weight},
              {"violations", report.violations}};
}

Json to_json(const OracleResult& result, int k,
             const IntervalInstance& instance) {
  return Json{{"k", k},
              {"best_weight", result.best_weight},
              {"best_subset", vertex_list(result.best_subset, instance)},
              {"nodes_explored", result.nodes_explored}};
}

Json solution_to_json(const KcolourSolution& solution,
                      const IntervalInstance& instance,
                      const ScheduleSet* schedule) {
  Json sessions = Json::array();
  for (const auto& cls : solution.classes) {
    Json slots = Json::array();
    for (VertexId v : cls.vertices) {
      slots.push_back(describe_slot(v, instance, schedule));
    }
    sessions.push_back({{"weight", cls.weight}, {"slots", slots}});
  }
  return Json{{"k", solution.k},
              {"total_weight", solution.total_weight},
              {"sessions", sessions}};
}

ParsedSolution solution_from_json(const std::string& text,
                                  const IntervalInstance& instance) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid solution JSON: ") + e.what(), 0);
  }
  if (!doc.is_object() || !doc.contains("sessions") ||
      !doc["sessions"].is_array()) {
    throw ParseError("solution needs a \"sessions\" array", 0);
  }
  std::unordered_map<std::string, VertexId> by_id;
  for (std::size_t v = 0; v < instance.slot_ids.size(); ++v) {
    by_id.emplace(instance.slot_ids[v], static_cast<VertexId>(v));
  }

  ParsedSolution out;
  out.solution.k = doc.value("k", 0);
  out.solution.total_weight = doc.value("total_weight", Weight{0});
  for (const auto& session : doc["sessions"]) {
    if (!session.is_object() || !session.contains("slots") ||
        !session["slots"].is_array()) {
      throw ParseError("every session needs a \"slots\" array", 0);
    }
    ColourClass cls;
    cls.weight = session.value("weight", Weight{0});
    for (const auto& slot : session["slots"]) {
      if (slot.contains("slot_id") && !by_id.empty()) {
        const auto id = slot["slot_id"].get<std::string>();
        auto it = by_id.find(id);
        if (it == by_id.end()) {
          out.problems.push_back("unknown slot '" + id + "'");
          continue;
        }
        cls.vertices.push_back(it->second);
      } else if (slot.contains("vertex") && slot["vertex"].is_number_integer()) {
        cls.vertices.push_back(slot["vertex"].get<VertexId>());
      } else {
        throw ParseError("slot entry has neither a slot_id nor a vertex", 0);
      }
    }
    out.solution.selected.insert(out.solution.selected.end(),
                                 cls.vertices.begin(), cls.vertices.end());
    out.solution.classes.push_back(std::move(cls));
  }
  std::sort(out.solution.selected.begin(), out.solution.selected.end());
  return out;
}

void write_dot(std::ostream& out, const TransformedNetwork& tn,
               const IntervalInstance& instance) {
  out << "digraph N {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (int i = 0; i < tn.network.node_count; ++i) {
    out << "  C" << i << " [label=\"C" << i << "\\npi="
        << tn.pi[static_cast<std::size_t>(i)] << "\"];\n";
  }
  for (const Arc& a : tn.network.arcs) {
    out << "  C" << a.tail << " -> C" << a.head << " [id=\"e" << a.id + 1
        << "\", label=\"w=" << a.weight
        << "/wU=" << tn.reduced_weight[static_cast<std::size_t>(a.id)]
        << "/cap=" << a.capacity << "\"";
    if (a.kind == ArcKind::kClique) {
      out << ", style=dashed";
    } else {
      const Json ref = vertex_ref(a.vertex, instance);
      out << ", tooltip=\""
          << (ref.is_string() ? ref.get<std::string>() : ref.dump()) << "\"";
    }
    out << "];\n";
  }
  out << "}\n";
}

void write_session_table(std::ostream& out, const KcolourSolution& solution,
                         const IntervalInstance& instance,
                         const ScheduleSet* schedule) {
  out << "k = " << solution.k << ", total weight = " << solution.total_weight
      << "\n";
  int index = 0;
  for (const auto& cls : solution.classes) {
    out << "session " << ++index << " (weight " << cls.weight << ", "
        << cls.vertices.size() << " slots)\n";
    for (VertexId v : cls.vertices) {
      const Json d = describe_slot(v, instance, schedule);
      auto field = [&](const char* key) {
        if (!d.contains(key)) return std::string();
        return d[key].is_string() ? d[key].get<std::string>() : d[key].dump();
      };
      out << "  " << std::left << std::setw(6) << field("start") << "- "
          << std::setw(6) << field("end") << std::setw(10)
          << (d.contains("slot_id") ? field("slot_id") : field("vertex"))
          << std::setw(14) << field("channel") << std::setw(6)
          << field("viewers") << field("title") << "\n";
    }
  }
}

}  // namespace mwkc
