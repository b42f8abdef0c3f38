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

#include "mwkc/interval_graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "mwkc/errors.hpp"

namespace mwkc {

namespace {

struct Event {
  Coord at;
  // Finishes sort before starts at the same coordinate: touching intervals
  // never coexist.
  int is_start;
  VertexId vertex;

  bool operator<(const Event& o) const {
    return std::tie(at, is_start, vertex) < std::tie(o.at, o.is_start, o.vertex);
  }
};

std::vector<Event> sorted_events(const IntervalInstance& instance,
                                 const std::vector<VertexId>& subset) {
  std::vector<Event> events;
  events.reserve(2 * subset.size());
  for (VertexId v : subset) {
    events.push_back({instance[v].start, 1, v});
    events.push_back({instance[v].finish, 0, v});
  }
  std::sort(events.begin(), events.end());
  return events;
}

std::vector<VertexId> all_vertices(const IntervalInstance& instance) {
  std::vector<VertexId> ids(instance.size());
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

}  // namespace

CliqueSequence enumerate_maximal_cliques(const IntervalInstance& instance) {
  CliqueSequence out;
  out.spans.assign(instance.size(), CliqueSpan{});
  std::set<VertexId> active;
  // A maximal clique closes at the first finish after one or more starts.
  bool grew = false;
  for (const Event& e : sorted_events(instance, all_vertices(instance))) {
    if (e.is_start) {
      active.insert(e.vertex);
      grew = true;
      continue;
    }
    if (grew) {
      const int index = out.size() + 1;
      std::vector<VertexId> members(active.begin(), active.end());
      Coord leading = instance[members.front()].start;
      for (VertexId v : members) {
        leading = std::max(leading, instance[v].start);
        auto& span = out.spans[static_cast<std::size_t>(v)];
        if (span.first == 0) span.first = index;
        span.last = index;
      }
      out.cliques.push_back(std::move(members));
      out.leading_points.push_back(leading);
      grew = false;
    }
    active.erase(e.vertex);
  }
  return out;
}

CliqueSpan vertex_span(const CliqueSequence& cliques, VertexId v) {
  if (v < 0 || static_cast<std::size_t>(v) >= cliques.spans.size() ||
      cliques.spans[static_cast<std::size_t>(v)].first == 0) {
    throw UnknownReference("vertex " + std::to_string(v) +
                           " is not in the clique sequence");
  }
  return cliques.spans[static_cast<std::size_t>(v)];
}

std::vector<std::vector<VertexId>> connected_components(
    const IntervalInstance& instance) {
  auto order = all_vertices(instance);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return std::tie(instance[a].start, a) < std::tie(instance[b].start, b);
  });
  std::vector<std::vector<VertexId>> components;
  Coord reach = 0;
  for (VertexId v : order) {
    if (components.empty() || instance[v].start >= reach) {
      components.emplace_back();
      reach = instance[v].finish;
    }
    components.back().push_back(v);
    reach = std::max(reach, instance[v].finish);
  }
  for (auto& c : components) std::sort(c.begin(), c.end());
  return components;
}

std::size_t max_depth(const IntervalInstance& instance,
                      const std::vector<VertexId>& subset) {
  std::size_t depth = 0;
  std::size_t best = 0;
  for (const Event& e : sorted_events(instance, subset)) {
    if (e.is_start) {
      best = std::max(best, ++depth);
    } else {
      --depth;
    }
  }
  return best;
}

GraphStats compute_stats(const IntervalInstance& instance,
                         const CliqueSequence& cliques) {
  GraphStats stats;
  stats.n = instance.size();
  stats.max_weight = instance.max_weight();
  for (const auto& c : cliques.cliques) {
    stats.omega = std::max(stats.omega, c.size());
  }
  stats.components = connected_components(instance);
  if (stats.n <= GraphStats::kEdgeCountLimit) {
    std::size_t m = 0;
    for (std::size_t a = 0; a < stats.n; ++a) {
      for (std::size_t b = a + 1; b < stats.n; ++b) {
        if (overlaps(instance.vertices[a], instance.vertices[b])) ++m;
      }
    }
    stats.m = m;
  }
  return stats;
}

}  // namespace mwkc
