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

// Clique-ordered flow network and its potential-shifted transform.

#ifndef MWKC_NETWORK_HPP
#define MWKC_NETWORK_HPP

#include <vector>

#include "mwkc/instance.hpp"
#include "mwkc/interval_graph.hpp"

namespace mwkc {

enum class ArcKind { kClique, kInterval };

struct Arc {
  int id = 0;
  int tail = 0;
  int head = 0;
  ArcKind kind = ArcKind::kClique;
  //! Vertex carried by an interval arc, -1 for clique arcs.
  VertexId vertex = -1;
  Weight weight = 0;
  int capacity = 0;
};

/**
 * Nodes 0..r stand for C_0..C_r; node 0 is the source and node r the sink.
 *
 * Clique arcs (i-1, i) come first with weight 0 and capacity k, followed by
 * one interval arc (p_u - 1, q_u) per vertex u in vertex order, carrying
 * w(u) and capacity 1. Every arc runs forward (tail < head).
 */
struct FlowNetwork {
  int k = 1;
  int node_count = 0;
  std::vector<Arc> arcs;

  int source() const { return 0; }
  int sink() const { return node_count - 1; }
  int clique_count() const { return node_count - 1; }
  //! Index of vertex v's interval arc.
  int interval_arc(VertexId v) const { return clique_count() + v; }
};

//! Throws EmptyInstance when there are no vertices and
//! std::invalid_argument for k < 1.
FlowNetwork build_network(const CliqueSequence& cliques,
                          const IntervalInstance& instance, int k);

//! pi[i] = heaviest path weight from node i to the sink; one reverse pass.
std::vector<Weight> compute_pi(const FlowNetwork& network);

struct TransformedNetwork {
  FlowNetwork network;
  std::vector<Weight> pi;
  //! pi[tail] - pi[head] - weight, per arc id.
  std::vector<Weight> reduced_weight;

  Weight pi_source() const { return pi.front(); }
};

//! Throws InternalInvariantViolation if any transformed weight is outside
//! [0, pi[source]].
TransformedNetwork transform_weights(const FlowNetwork& network,
                                     std::vector<Weight> pi);

}  // namespace mwkc

#endif  // MWKC_NETWORK_HPP
