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

// Ground truth for testing: exhaustive search and a solution checker. Shares
// nothing with the flow machinery.

#ifndef MWKC_ORACLE_HPP
#define MWKC_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mwkc/instance.hpp"
#include "mwkc/solver.hpp"

namespace mwkc {

struct OracleResult {
  Weight best_weight = 0;
  std::vector<VertexId> best_subset;
  std::uint64_t nodes_explored = 0;
};

/**
 * Exhaustive subset search for the heaviest vertex set with depth <= k.
 *
 * Works component by component; `limit` bounds the size of the largest
 * component. Throws InstanceTooLarge above it.
 */
OracleResult brute_force_mwkc(const IntervalInstance& instance, int k,
                              std::size_t limit = 20);

struct CheckReport {
  std::vector<std::string> violations;
  std::vector<Weight> class_weights;
  Weight total_weight = 0;

  bool passed() const { return violations.empty(); }
};

//! Checks disjointness, class count, per-class independence, and the weight
//! sums. Lists every violation found.
CheckReport verify_solution(const KcolourSolution& solution,
                            const IntervalInstance& instance, int k);

}  // namespace mwkc

#endif  // MWKC_ORACLE_HPP
