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

#include "mwkc/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "mwkc/errors.hpp"

namespace mwkc {

KcolourSolution extract_solution(const KFlowResult& flow,
                                 const FlowNetwork& network,
                                 const IntervalInstance& instance) {
  KcolourSolution sol;
  sol.k = static_cast<int>(flow.path_arcs.size());
  std::vector<char> taken(instance.size(), 0);
  for (const auto& arcs : flow.path_arcs) {
    ColourClass cls;
    for (int id : arcs) {
      const Arc& a = network.arcs[static_cast<std::size_t>(id)];
      if (a.kind != ArcKind::kInterval) continue;
      // Interval arcs met in sequence along one path never share a clique.
      if (!cls.vertices.empty() &&
          overlaps(instance[cls.vertices.back()], instance[a.vertex])) {
        throw InternalInvariantViolation(
            "vertices " + std::to_string(cls.vertices.back()) + " and " +
            std::to_string(a.vertex) + " overlap on one path");
      }
      if (taken[static_cast<std::size_t>(a.vertex)]++) {
        throw InternalInvariantViolation("vertex " + std::to_string(a.vertex) +
                                         " selected twice");
      }
      cls.vertices.push_back(a.vertex);
      cls.weight += instance[a.vertex].weight;
    }
    sol.total_weight += cls.weight;
    sol.classes.push_back(std::move(cls));
  }
  for (VertexId v = 0; v < static_cast<VertexId>(instance.size()); ++v) {
    if (taken[static_cast<std::size_t>(v)]) sol.selected.push_back(v);
  }
  if (sol.total_weight != flow.weight_n) {
    throw InternalInvariantViolation("class weights disagree with the flow");
  }
  std::stable_sort(sol.classes.begin(), sol.classes.end(),
                   [](const ColourClass& a, const ColourClass& b) {
                     return std::make_tuple(-a.weight, -static_cast<long>(a.vertices.size()),
                                            std::cref(a.vertices)) <
                            std::make_tuple(-b.weight, -static_cast<long>(b.vertices.size()),
                                            std::cref(b.vertices));
                   });
  return sol;
}

namespace {

Weight solve_by_components(const IntervalInstance& instance, int k,
                           const SolveOptions& options) {
  Weight total = 0;
  for (const auto& component : connected_components(instance)) {
    IntervalInstance part;
    for (VertexId v : component) part.vertices.push_back(instance[v]);
    SolveOptions inner = options;
    inner.check_components = false;
    total += solve_mwkc(part, k, inner).total_weight;
  }
  return total;
}

}  // namespace

SolveTrace solve_mwkc_traced(const IntervalInstance& instance, int k,
                             const SolveOptions& options) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (instance.empty()) throw EmptyInstance();
  instance.check();

  SolveTrace trace;
  trace.cliques = enumerate_maximal_cliques(instance);
  FlowNetwork network = build_network(trace.cliques, instance, k);
  auto pi = compute_pi(network);
  trace.transformed = transform_weights(network, std::move(pi));
  trace.flow = solve_min_cost_k_flow(trace.transformed, k,
                                     KFlowOptions{options.validate_paths});
  trace.solution =
      extract_solution(trace.flow, trace.transformed.network, instance);

  if (options.check_components) {
    const Weight split = solve_by_components(instance, k, options);
    if (split != trace.solution.total_weight) {
      throw InternalInvariantViolation(
          "per-component total " + std::to_string(split) +
          " differs from global total " +
          std::to_string(trace.solution.total_weight));
    }
  }
  return trace;
}

KcolourSolution solve_mwkc(const IntervalInstance& instance, int k,
                           const SolveOptions& options) {
  return solve_mwkc_traced(instance, k, options).solution;
}

}  // namespace mwkc
