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

#ifndef MWKC_INTERVAL_GRAPH_HPP
#define MWKC_INTERVAL_GRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "mwkc/instance.hpp"

namespace mwkc {

//! Strict open-interval intersection: touching endpoints do not overlap.
constexpr bool overlaps(const Interval& a, const Interval& b) {
  return a.start < b.finish && b.start < a.finish;
}

//! 1-based clique index range [first, last] containing a vertex.
struct CliqueSpan {
  int first = 0;
  int last = 0;

  friend bool operator==(const CliqueSpan&, const CliqueSpan&) = default;
};

/**
 * The maximal cliques C_1..C_r of an interval graph in left-to-right order.
 *
 * `cliques[i]` holds C_{i+1} with members in increasing vertex id;
 * `leading_points[i]` is the largest start among its members. Every vertex
 * belongs to a contiguous run of cliques recorded in `spans`.
 */
struct CliqueSequence {
  std::vector<std::vector<VertexId>> cliques;
  std::vector<Coord> leading_points;
  std::vector<CliqueSpan> spans;

  int size() const { return static_cast<int>(cliques.size()); }
  //! Clique C_index, 1-based.
  const std::vector<VertexId>& clique(int index) const {
    return cliques[static_cast<std::size_t>(index - 1)];
  }
};

//! Sweep-line enumeration; O(n log n + total clique size).
CliqueSequence enumerate_maximal_cliques(const IntervalInstance& instance);

//! Throws UnknownReference when `v` is not a vertex of the sequence.
CliqueSpan vertex_span(const CliqueSequence& cliques, VertexId v);

struct GraphStats {
  std::size_t n = 0;
  //! Overlapping pairs; absent when n exceeds kEdgeCountLimit.
  std::optional<std::size_t> m;
  Weight max_weight = 0;
  std::size_t omega = 0;
  //! Connected components in time order, members sorted by id.
  std::vector<std::vector<VertexId>> components;

  static constexpr std::size_t kEdgeCountLimit = 2000;
};

GraphStats compute_stats(const IntervalInstance& instance,
                         const CliqueSequence& cliques);

//! Components by overlap connectivity, in time order.
std::vector<std::vector<VertexId>> connected_components(
    const IntervalInstance& instance);

//! Largest number of intervals sharing a common interior point.
std::size_t max_depth(const IntervalInstance& instance,
                      const std::vector<VertexId>& subset);

}  // namespace mwkc

#endif  // MWKC_INTERVAL_GRAPH_HPP
