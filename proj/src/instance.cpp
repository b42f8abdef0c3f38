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

#include "mwkc/instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mwkc {

Weight IntervalInstance::max_weight() const {
  Weight best = 0;
  for (const auto& v : vertices) best = std::max(best, v.weight);
  return best;
}

Weight IntervalInstance::total_weight() const {
  return std::accumulate(
      vertices.begin(), vertices.end(), Weight{0},
      [](Weight acc, const Interval& v) { return acc + v.weight; });
}

void IntervalInstance::check() const {
  if (!slot_ids.empty() && slot_ids.size() != vertices.size()) {
    throw std::invalid_argument("slot_ids must be empty or one per vertex");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    if (!(v.start < v.finish)) {
      throw std::invalid_argument("vertex " + std::to_string(i) +
                                  " has start >= finish");
    }
    if (v.weight < 0) {
      throw std::invalid_argument("vertex " + std::to_string(i) +
                                  " has negative weight");
    }
  }
}

std::optional<VertexId> IntervalInstance::find_slot(
    const std::string& slot_id) const {
  auto it = std::find(slot_ids.begin(), slot_ids.end(), slot_id);
  if (it == slot_ids.end()) return std::nullopt;
  return static_cast<VertexId>(it - slot_ids.begin());
}

IntervalInstance make_instance(std::vector<Interval> intervals) {
  IntervalInstance inst;
  inst.vertices = std::move(intervals);
  inst.check();
  return inst;
}

}  // namespace mwkc
