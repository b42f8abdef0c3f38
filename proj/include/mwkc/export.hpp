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

// JSON and Graphviz renderings of the solver's data. Key order is fixed so
// identical inputs give byte-identical output.

#ifndef MWKC_EXPORT_HPP
#define MWKC_EXPORT_HPP

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mwkc/interval_graph.hpp"
#include "mwkc/network.hpp"
#include "mwkc/oracle.hpp"
#include "mwkc/schedule.hpp"
#include "mwkc/solver.hpp"

namespace mwkc {

using Json = nlohmann::ordered_json;

Json to_json(const ValidationReport& report);
Json to_json(const CliqueSequence& cliques, const IntervalInstance& instance);
Json to_json(const GraphStats& stats, const IntervalInstance& instance);
Json to_json(const TransformedNetwork& network,
             const IntervalInstance& instance);
Json to_json(const CheckReport& report);
Json to_json(const OracleResult& result, int k,
             const IntervalInstance& instance);

//! `{"k", "total_weight", "sessions": [{"weight", "slots": [...]}]}`.
//! Slots are described from `schedule` when given, otherwise by vertex.
Json solution_to_json(const KcolourSolution& solution,
                      const IntervalInstance& instance,
                      const ScheduleSet* schedule);

struct ParsedSolution {
  KcolourSolution solution;
  //! Slot ids in the document that do not resolve against the instance.
  std::vector<std::string> problems;
};

//! Reads the solution document back against an instance built from the
//! same schedule. Throws ParseError on a malformed document.
ParsedSolution solution_from_json(const std::string& text,
                                  const IntervalInstance& instance);

//! Both N and N^U in one graph: labels `w=<w>/wU=<wU>/cap=<c>`.
void write_dot(std::ostream& out, const TransformedNetwork& network,
               const IntervalInstance& instance);

//! Fixed-width session listing for terminals.
void write_session_table(std::ostream& out, const KcolourSolution& solution,
                         const IntervalInstance& instance,
                         const ScheduleSet* schedule);

}  // namespace mwkc

#endif  // MWKC_EXPORT_HPP
