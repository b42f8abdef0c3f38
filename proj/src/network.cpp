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

#include "mwkc/network.hpp"

#include <algorithm>
#include <stdexcept>

#include "mwkc/errors.hpp"

namespace mwkc {

FlowNetwork build_network(const CliqueSequence& cliques,
                          const IntervalInstance& instance, int k) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (instance.empty() || cliques.size() == 0) throw EmptyInstance();
  if (cliques.spans.size() != instance.size()) {
    throw std::invalid_argument("clique sequence does not match instance");
  }

  const int r = cliques.size();
  FlowNetwork net;
  net.k = k;
  net.node_count = r + 1;
  net.arcs.reserve(static_cast<std::size_t>(r) + instance.size());
  for (int i = 1; i <= r; ++i) {
    net.arcs.push_back(
        {static_cast<int>(net.arcs.size()), i - 1, i, ArcKind::kClique, -1, 0, k});
  }
  for (VertexId v = 0; v < static_cast<VertexId>(instance.size()); ++v) {
    const CliqueSpan span = vertex_span(cliques, v);
    net.arcs.push_back({static_cast<int>(net.arcs.size()), span.first - 1,
                        span.last, ArcKind::kInterval, v, instance[v].weight,
                        1});
  }
  return net;
}

std::vector<Weight> compute_pi(const FlowNetwork& network) {
  // Bucket arcs by tail so a single pass from the sink backwards suffices.
  std::vector<std::vector<const Arc*>> out(
      static_cast<std::size_t>(network.node_count));
  for (const Arc& a : network.arcs) {
    if (a.tail >= a.head) {
      throw std::invalid_argument("network arc does not run forward");
    }
    out[static_cast<std::size_t>(a.tail)].push_back(&a);
  }
  std::vector<Weight> pi(static_cast<std::size_t>(network.node_count), 0);
  for (int i = network.node_count - 2; i >= 0; --i) {
    Weight best = 0;
    for (const Arc* a : out[static_cast<std::size_t>(i)]) {
      best = std::max(best, a->weight + pi[static_cast<std::size_t>(a->head)]);
    }
    pi[static_cast<std::size_t>(i)] = best;
  }
  return pi;
}

TransformedNetwork transform_weights(const FlowNetwork& network,
                                     std::vector<Weight> pi) {
  if (pi.size() != static_cast<std::size_t>(network.node_count)) {
    throw std::invalid_argument("pi does not match the network");
  }
  TransformedNetwork tn;
  tn.network = network;
  tn.pi = std::move(pi);
  tn.reduced_weight.reserve(network.arcs.size());
  const Weight bound = tn.pi_source();
  for (const Arc& a : network.arcs) {
    const Weight w = tn.pi[static_cast<std::size_t>(a.tail)] -
                     tn.pi[static_cast<std::size_t>(a.head)] - a.weight;
    if (w < 0 || w > bound) {
      throw InternalInvariantViolation(
          "transformed weight " + std::to_string(w) + " of arc " +
          std::to_string(a.id) + " outside [0, " + std::to_string(bound) + "]");
    }
    tn.reduced_weight.push_back(w);
  }
  return tn;
}

}  // namespace mwkc
