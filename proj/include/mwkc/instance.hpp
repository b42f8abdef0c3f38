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

#ifndef MWKC_INSTANCE_HPP
#define MWKC_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mwkc {

using Coord = std::int64_t;
using Weight = std::int64_t;
using VertexId = int;

//! Weighted interval (s, f) on the line. Open-overlap semantics, s < f.
struct Interval {
  Coord start = 0;
  Coord finish = 0;
  Weight weight = 0;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/**
 * A set of weighted intervals indexed densely by vertex id 0..n-1.
 *
 * The interval graph is implicit: two vertices are adjacent iff their
 * intervals overlap. `slot_ids`, when non-empty, maps each vertex back to
 * the programme slot it was built from.
 */
struct IntervalInstance {
  std::vector<Interval> vertices;
  std::vector<std::string> slot_ids;

  std::size_t size() const { return vertices.size(); }
  bool empty() const { return vertices.empty(); }

  const Interval& operator[](VertexId v) const {
    return vertices[static_cast<std::size_t>(v)];
  }

  //! Maximum vertex weight, 0 for the empty instance.
  Weight max_weight() const;
  Weight total_weight() const;

  //! Throws std::invalid_argument unless every vertex has s < f, w >= 0 and
  //! slot_ids is either empty or one-per-vertex.
  void check() const;

  std::optional<VertexId> find_slot(const std::string& slot_id) const;
};

//! Builds an instance from bare intervals, no provenance.
IntervalInstance make_instance(std::vector<Interval> intervals);

}  // namespace mwkc

#endif  // MWKC_INSTANCE_HPP
