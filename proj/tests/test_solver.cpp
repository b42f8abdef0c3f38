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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "mwkc/errors.hpp"
#include "mwkc/oracle.hpp"
#include "mwkc/solver.hpp"

using namespace mwkc;
using namespace mwkc::testing;

namespace {

TransformedNetwork transformed(const IntervalInstance& inst, int k) {
  const auto net = build_network(enumerate_maximal_cliques(inst), inst, k);
  return transform_weights(net, compute_pi(net));
}

void check_flow_shape(const KFlowResult& fr, const FlowNetwork& net, int k) {
  REQUIRE(fr.paths.size() == static_cast<std::size_t>(k));
  std::vector<int> inflow(static_cast<std::size_t>(net.node_count), 0);
  std::vector<int> outflow(static_cast<std::size_t>(net.node_count), 0);
  for (const Arc& a : net.arcs) {
    const int f = fr.flow[static_cast<std::size_t>(a.id)];
    CHECK(f >= 0);
    CHECK(f <= a.capacity);
    if (a.kind == ArcKind::kInterval) CHECK(f <= 1);
    outflow[static_cast<std::size_t>(a.tail)] += f;
    inflow[static_cast<std::size_t>(a.head)] += f;
  }
  CHECK(outflow[0] == k);
  CHECK(inflow[static_cast<std::size_t>(net.sink())] == k);
  for (int v = 1; v < net.sink(); ++v) {
    CHECK(inflow[static_cast<std::size_t>(v)] == outflow[static_cast<std::size_t>(v)]);
  }
  for (const auto& p : fr.paths) {
    CHECK(p.front() == net.source());
    CHECK(p.back() == net.sink());
    CHECK(std::is_sorted(p.begin(), p.end()));
  }
}

}  // namespace

TEST_CASE("k-flow on the reference network") {
  const auto inst = fig1_instance();
  const auto tn = transformed(inst, 2);
  const auto fr = solve_min_cost_k_flow(tn, 2);
  CHECK(fr.cost_u == 6);  // 2 * 20 - 34
  CHECK(fr.weight_n == 34);
  check_flow_shape(fr, tn.network, 2);

  const auto one = solve_min_cost_k_flow(transformed(inst, 1), 1);
  CHECK(one.cost_u == 0);
  CHECK(one.weight_n == 20);

  CHECK_THROWS_AS(solve_min_cost_k_flow(tn, 3), std::invalid_argument);
  CHECK_THROWS_AS(solve_min_cost_k_flow(tn, 0), std::invalid_argument);
}

TEST_CASE("k-flow on the three-channel network") {
  const auto tn = transformed(three_channel_instance(), 2);
  const auto fr = solve_min_cost_k_flow(tn, 2, {true});
  CHECK(tn.pi_source() == 110);
  CHECK(fr.weight_n == 185);
  CHECK(fr.cost_u == 2 * 110 - 185);
  check_flow_shape(fr, tn.network, 2);
}

TEST_CASE("validation mode agrees with the fast path") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = random_instance(rng, {1, 40, 80, 9});
    const int k = 1 + trial % 4;
    const auto tn = transformed(inst, k);
    const auto fast = solve_min_cost_k_flow(tn, k);
    const auto slow = solve_min_cost_k_flow(tn, k, {true});
    CHECK(fast.flow == slow.flow);
    CHECK(fast.cost_u + fast.weight_n == k * tn.pi_source());
    check_flow_shape(fast, tn.network, k);
  }
}

TEST_CASE("reference instance solutions") {
  const auto inst = fig1_instance();
  const auto two = solve_mwkc(inst, 2);
  CHECK(two.total_weight == 34);
  CHECK(two.selected == fig1_ids({1, 2, 3, 5, 6, 9, 10}));
  CHECK(two.classes.size() == 2);
  CHECK(verify_solution(two, inst, 2).passed());
  CHECK(two.classes[0].weight >= two.classes[1].weight);

  CHECK(solve_mwkc(inst, 1).total_weight == 20);
  CHECK(solve_mwkc(inst, 3).total_weight == 38);
  CHECK(solve_mwkc(inst, 4).total_weight == inst.total_weight());
  CHECK(solve_mwkc(inst, 9).selected.size() == inst.size());
}

TEST_CASE("three-channel solutions") {
  const auto inst = three_channel_instance();
  SolveOptions opts;
  opts.check_components = true;
  opts.validate_paths = true;
  const auto expected = std::vector<Weight>{110, 185, 215};
  for (int k = 1; k <= 3; ++k) {
    CAPTURE(k);
    const auto sol = solve_mwkc(inst, k, opts);
    CHECK(sol.total_weight == expected[static_cast<std::size_t>(k - 1)]);
    CHECK(sol.total_weight == brute_force_mwkc(inst, k).best_weight);
    CHECK(verify_solution(sol, inst, k).passed());
  }
}

TEST_CASE("extraction reads classes off the paths") {
  const auto inst = fig1_instance();
  const auto trace = solve_mwkc_traced(inst, 2);
  const auto& sol = trace.solution;
  std::vector<VertexId> from_paths;
  for (const auto& arcs : trace.flow.path_arcs) {
    for (int id : arcs) {
      const Arc& a = trace.transformed.network.arcs[static_cast<std::size_t>(id)];
      if (a.kind == ArcKind::kInterval) from_paths.push_back(a.vertex);
    }
  }
  std::sort(from_paths.begin(), from_paths.end());
  CHECK(from_paths == sol.selected);
  CHECK(sol.total_weight == 2 * trace.transformed.pi_source() - trace.flow.cost_u);
  for (const auto& cls : sol.classes) {
    for (std::size_t i = 1; i < cls.vertices.size(); ++i) {
      CHECK(inst[cls.vertices[i - 1]].finish <= inst[cls.vertices[i]].start);
    }
  }
}

TEST_CASE("solver errors") {
  CHECK_THROWS_AS(solve_mwkc(IntervalInstance{}, 1), EmptyInstance);
  CHECK_THROWS_AS(solve_mwkc(fig1_instance(), 0), std::invalid_argument);
  IntervalInstance bad;
  bad.vertices.push_back({5, 5, 1});
  CHECK_THROWS_AS(solve_mwkc(bad, 1), std::invalid_argument);
}

TEST_CASE("solver matches the oracle and its own invariants") {
  std::mt19937_64 rng(8675309);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = random_instance(rng);
    const auto omega = compute_stats(inst, enumerate_maximal_cliques(inst)).omega;
    Weight previous = 0;
    for (int k = 1; k <= 4; ++k) {
      CAPTURE(trial);
      CAPTURE(k);
      const auto trace = solve_mwkc_traced(inst, k);
      const auto& sol = trace.solution;
      CHECK(sol.total_weight == brute_force_mwkc(inst, k).best_weight);
      CHECK(verify_solution(sol, inst, k).passed());
      CHECK(max_depth(inst, sol.selected) <= static_cast<std::size_t>(k));
      CHECK(sol.total_weight >= previous);
      if (k == 1) CHECK(sol.total_weight == trace.transformed.pi_source());
      if (static_cast<std::size_t>(k) >= omega) {
        CHECK(sol.total_weight == inst.total_weight());
      }
      previous = sol.total_weight;
    }
  }
}

TEST_CASE("solving is deterministic") {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = random_instance(rng, {5, 60, 100, 9});
    const auto a = solve_mwkc(inst, 3);
    const auto b = solve_mwkc(inst, 3);
    REQUIRE(a.classes.size() == b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      CHECK(a.classes[i].vertices == b.classes[i].vertices);
    }
  }
}
