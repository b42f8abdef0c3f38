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

// Maximum-weight k-colourable subgraph of an interval graph.
//
// Pipeline: maximal cliques -> clique network -> pi -> transformed network
// -> minimum-cost k-flow -> colour classes read off the k unit paths.

#ifndef MWKC_SOLVER_HPP
#define MWKC_SOLVER_HPP

#include <vector>

#include "mwkc/instance.hpp"
#include "mwkc/interval_graph.hpp"
#include "mwkc/kflow.hpp"
#include "mwkc/network.hpp"

namespace mwkc {

struct ColourClass {
  //! Sorted by start time.
  std::vector<VertexId> vertices;
  Weight weight = 0;
};

struct KcolourSolution {
  int k = 0;
  //! Selected vertices, increasing id.
  std::vector<VertexId> selected;
  //! Exactly k classes (some possibly empty), heaviest first.
  std::vector<ColourClass> classes;
  Weight total_weight = 0;
};

//! Reads the selected set and the classes off a k-flow. Throws
//! InternalInvariantViolation if a path carries two overlapping vertices.
KcolourSolution extract_solution(const KFlowResult& flow,
                                 const FlowNetwork& network,
                                 const IntervalInstance& instance);

struct SolveOptions {
  //! Cross-check every augmenting path with a label-correcting search.
  bool validate_paths = false;
  //! Also solve each connected component on its own and require the same
  //! total.
  bool check_components = false;
};

//! Every intermediate product of one solve.
struct SolveTrace {
  CliqueSequence cliques;
  TransformedNetwork transformed;
  KFlowResult flow;
  KcolourSolution solution;
};

SolveTrace solve_mwkc_traced(const IntervalInstance& instance, int k,
                             const SolveOptions& options = {});

//! Throws EmptyInstance for an instance without vertices.
KcolourSolution solve_mwkc(const IntervalInstance& instance, int k,
                           const SolveOptions& options = {});

}  // namespace mwkc

#endif  // MWKC_SOLVER_HPP
