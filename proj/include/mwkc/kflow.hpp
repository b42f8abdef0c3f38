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

#ifndef MWKC_KFLOW_HPP
#define MWKC_KFLOW_HPP

#include <vector>

#include "mwkc/network.hpp"

namespace mwkc {

struct KFlowOptions {
  //! Re-derive every augmenting path cost with a label-correcting search on
  //! true residual costs and compare. Slow; meant for tests.
  bool validate = false;
};

struct KFlowResult {
  //! Units per arc id.
  std::vector<int> flow;
  //! One node sequence per unit of flow, source to sink.
  std::vector<std::vector<int>> paths;
  //! Arc ids traversed by each path, parallel to `paths`.
  std::vector<std::vector<int>> path_arcs;
  //! Total transformed cost.
  Weight cost_u = 0;
  //! Total original weight carried.
  Weight weight_n = 0;
};

/**
 * Minimum-cost integral flow of exactly k units from source to sink.
 *
 * Successive shortest paths over the residual network with node potentials;
 * the transformed weights are non-negative so zero initial potentials are
 * valid. The result is decomposed into k unit paths.
 */
KFlowResult solve_min_cost_k_flow(const TransformedNetwork& network, int k,
                                  const KFlowOptions& options = {});

}  // namespace mwkc

#endif  // MWKC_KFLOW_HPP
