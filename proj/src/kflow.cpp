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

#include "mwkc/kflow.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

#include "mwkc/errors.hpp"

namespace mwkc {

namespace {

constexpr Weight kInf = std::numeric_limits<Weight>::max() / 4;

// Residual edge: arc `arc` traversed forward or backward.
struct ResidualEdge {
  int arc;
  bool forward;
};

class Residual {
 public:
  explicit Residual(const TransformedNetwork& tn)
      : tn_(tn),
        flow_(tn.network.arcs.size(), 0),
        adj_(static_cast<std::size_t>(tn.network.node_count)) {
    // Arcs are visited in id order, so every adjacency list ends up sorted
    // by (arc id, forward first).
    for (const Arc& a : tn.network.arcs) {
      adj_[static_cast<std::size_t>(a.tail)].push_back({a.id, true});
      adj_[static_cast<std::size_t>(a.head)].push_back({a.id, false});
    }
  }

  int nodes() const { return tn_.network.node_count; }
  const std::vector<ResidualEdge>& out(int node) const {
    return adj_[static_cast<std::size_t>(node)];
  }
  const Arc& arc(int id) const {
    return tn_.network.arcs[static_cast<std::size_t>(id)];
  }

  int from(ResidualEdge e) const { return e.forward ? arc(e.arc).tail : arc(e.arc).head; }
  int to(ResidualEdge e) const { return e.forward ? arc(e.arc).head : arc(e.arc).tail; }

  int capacity(ResidualEdge e) const {
    const int f = flow_[static_cast<std::size_t>(e.arc)];
    return e.forward ? arc(e.arc).capacity - f : f;
  }

  Weight cost(ResidualEdge e) const {
    const Weight w = tn_.reduced_weight[static_cast<std::size_t>(e.arc)];
    return e.forward ? w : -w;
  }

  void push(ResidualEdge e) {
    flow_[static_cast<std::size_t>(e.arc)] += e.forward ? 1 : -1;
  }

  const std::vector<int>& flow() const { return flow_; }

 private:
  const TransformedNetwork& tn_;
  std::vector<int> flow_;
  std::vector<std::vector<ResidualEdge>> adj_;
};

// Dijkstra on reduced costs cost + pot[u] - pot[v].
std::vector<Weight> reduced_distances(const Residual& res,
                                      const std::vector<Weight>& pot,
                                      int source) {
  std::vector<Weight> dist(static_cast<std::size_t>(res.nodes()), kInf);
  using Item = std::pair<Weight, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[static_cast<std::size_t>(source)] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(u)]) continue;
    for (ResidualEdge e : res.out(u)) {
      if (res.capacity(e) <= 0) continue;
      const int v = res.to(e);
      const Weight rc = res.cost(e) + pot[static_cast<std::size_t>(u)] -
                        pot[static_cast<std::size_t>(v)];
      if (rc < 0) {
        throw InternalInvariantViolation(
            "negative reduced cost on residual arc " + std::to_string(e.arc));
      }
      if (d + rc < dist[static_cast<std::size_t>(v)]) {
        dist[static_cast<std::size_t>(v)] = d + rc;
        heap.push({d + rc, v});
      }
    }
  }
  return dist;
}

// Depth-first search over tight residual edges in adjacency order.
std::vector<ResidualEdge> first_tight_path(const Residual& res,
                                           const std::vector<Weight>& pot,
                                           const std::vector<Weight>& dist,
                                           int source, int sink) {
  auto tight = [&](ResidualEdge e) {
    if (res.capacity(e) <= 0) return false;
    const int u = res.from(e);
    const int v = res.to(e);
    const auto du = dist[static_cast<std::size_t>(u)];
    const auto dv = dist[static_cast<std::size_t>(v)];
    if (du >= kInf || dv >= kInf) return false;
    return du + res.cost(e) + pot[static_cast<std::size_t>(u)] -
               pot[static_cast<std::size_t>(v)] ==
           dv;
  };
  std::vector<char> visited(static_cast<std::size_t>(res.nodes()), 0);
  std::vector<ResidualEdge> path;
  std::vector<std::size_t> cursor;  // next edge index per path depth
  int node = source;
  visited[static_cast<std::size_t>(source)] = 1;
  cursor.push_back(0);
  while (node != sink) {
    const auto& edges = res.out(node);
    std::size_t& next = cursor.back();
    bool advanced = false;
    while (next < edges.size()) {
      const ResidualEdge e = edges[next++];
      const int v = res.to(e);
      if (visited[static_cast<std::size_t>(v)] || !tight(e)) continue;
      visited[static_cast<std::size_t>(v)] = 1;
      path.push_back(e);
      cursor.push_back(0);
      node = v;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (path.empty()) {
      throw InternalInvariantViolation("no tight path to the sink");
    }
    cursor.pop_back();
    node = res.from(path.back());
    path.pop_back();
  }
  return path;
}

// Label-correcting shortest path on true residual costs (may be negative).
Weight label_correcting_distance(const Residual& res, int source, int sink) {
  const auto n = static_cast<std::size_t>(res.nodes());
  std::vector<Weight> dist(n, kInf);
  std::vector<char> queued(n, 0);
  std::vector<std::size_t> edges(n, 0);  // arcs on the current best path
  std::deque<int> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  queued[static_cast<std::size_t>(source)] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    queued[static_cast<std::size_t>(u)] = 0;
    const Weight du = dist[static_cast<std::size_t>(u)];
    for (ResidualEdge e : res.out(u)) {
      if (res.capacity(e) <= 0) continue;
      const auto v = static_cast<std::size_t>(res.to(e));
      if (du + res.cost(e) < dist[v]) {
        dist[v] = du + res.cost(e);
        edges[v] = edges[static_cast<std::size_t>(u)] + 1;
        if (edges[v] >= n) {
          throw InternalInvariantViolation("negative cycle in residual network");
        }
        if (!queued[v]) {
          queued[v] = 1;
          queue.push_back(static_cast<int>(v));
        }
      }
    }
  }
  return dist[static_cast<std::size_t>(sink)];
}

}  // namespace

KFlowResult solve_min_cost_k_flow(const TransformedNetwork& tn, int k,
                                  const KFlowOptions& options) {
  const FlowNetwork& net = tn.network;
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > net.k) {
    throw std::invalid_argument("k exceeds the clique-arc capacity of the network");
  }
  if (tn.reduced_weight.size() != net.arcs.size() ||
      tn.pi.size() != static_cast<std::size_t>(net.node_count)) {
    throw std::invalid_argument("transformed network is inconsistent");
  }
  const int s = net.source();
  const int t = net.sink();

  Residual res(tn);
  std::vector<Weight> pot(static_cast<std::size_t>(net.node_count), 0);
  for (int round = 0; round < k; ++round) {
    const auto dist = reduced_distances(res, pot, s);
    const Weight dt = dist[static_cast<std::size_t>(t)];
    if (dt >= kInf) {
      throw InternalInvariantViolation("cannot route unit " +
                                       std::to_string(round + 1) + " of " +
                                       std::to_string(k));
    }
    const auto path = first_tight_path(res, pot, dist, s, t);
    Weight path_cost = 0;
    for (ResidualEdge e : path) path_cost += res.cost(e);
    if (path_cost != dt + pot[static_cast<std::size_t>(t)] -
                         pot[static_cast<std::size_t>(s)]) {
      throw InternalInvariantViolation("augmenting path is not shortest");
    }
    if (options.validate) {
      const Weight expected = label_correcting_distance(res, s, t);
      if (expected != path_cost) {
        throw InternalInvariantViolation(
            "round " + std::to_string(round + 1) + ": path cost " +
            std::to_string(path_cost) + " but label-correcting search found " +
            std::to_string(expected));
      }
    }
    for (ResidualEdge e : path) res.push(e);
    // Capping at the sink distance keeps reduced costs non-negative for
    // nodes the search did not reach.
    for (std::size_t v = 0; v < pot.size(); ++v) {
      pot[v] += std::min(dist[v], dt);
    }
  }

  KFlowResult out;
  out.flow = res.flow();
  for (const Arc& a : net.arcs) {
    const int f = out.flow[static_cast<std::size_t>(a.id)];
    if (f < 0 || f > a.capacity) {
      throw InternalInvariantViolation("flow outside capacity on arc " +
                                       std::to_string(a.id));
    }
    out.cost_u += f * tn.reduced_weight[static_cast<std::size_t>(a.id)];
    out.weight_n += f * a.weight;
  }
  if (out.cost_u + out.weight_n != static_cast<Weight>(k) * tn.pi_source()) {
    throw InternalInvariantViolation("Z_N + Z_NU differs from k * pi(s)");
  }

  // Unit path decomposition; a clique arc carrying f units is walked f times.
  std::vector<std::vector<int>> by_tail(static_cast<std::size_t>(net.node_count));
  for (const Arc& a : net.arcs) by_tail[static_cast<std::size_t>(a.tail)].push_back(a.id);
  for (auto& ids : by_tail) std::sort(ids.begin(), ids.end());
  std::vector<int> remaining = out.flow;
  for (int unit = 0; unit < k; ++unit) {
    std::vector<int> nodes{s};
    std::vector<int> arcs;
    int node = s;
    while (node != t) {
      const auto& ids = by_tail[static_cast<std::size_t>(node)];
      auto it = std::find_if(ids.begin(), ids.end(), [&](int id) {
        return remaining[static_cast<std::size_t>(id)] > 0;
      });
      if (it == ids.end()) {
        throw InternalInvariantViolation("flow is not conserved at node " +
                                         std::to_string(node));
      }
      --remaining[static_cast<std::size_t>(*it)];
      arcs.push_back(*it);
      node = net.arcs[static_cast<std::size_t>(*it)].head;
      nodes.push_back(node);
    }
    out.paths.push_back(std::move(nodes));
    out.path_arcs.push_back(std::move(arcs));
  }
  if (std::any_of(remaining.begin(), remaining.end(), [](int f) { return f != 0; })) {
    throw InternalInvariantViolation("flow does not decompose into k paths");
  }
  return out;
}

}  // namespace mwkc
