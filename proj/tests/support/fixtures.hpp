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

// Shared test inputs: the two reference instances and random generators.

#ifndef MWKC_TESTS_FIXTURES_HPP
#define MWKC_TESTS_FIXTURES_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mwkc/instance.hpp"
#include "mwkc/schedule.hpp"

namespace mwkc::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(MWKC_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// The ten-interval example. Vertex v here is interval v+1 of the reference
// drawing, so ids do not follow start order.
inline IntervalInstance fig1_instance() {
  return make_instance({{2, 3, 5},
                        {1, 6, 3},
                        {7, 8, 6},
                        {5, 9, 2},
                        {4, 11, 8},
                        {12, 15, 4},
                        {10, 17, 1},
                        {14, 18, 2},
                        {13, 19, 5},
                        {16, 20, 3}});
}

// 1-based labels of the reference drawing -> vertex ids of fig1_instance().
inline std::vector<VertexId> fig1_ids(std::initializer_list<int> labels) {
  std::vector<VertexId> out;
  for (int l : labels) out.push_back(l - 1);
  return out;
}

inline ScheduleSet three_channel_schedule() {
  return parse_schedule(read_fixture("three_channel.csv"), ScheduleFormat::kCsv);
}

inline IntervalInstance three_channel_instance() {
  return to_intervals(three_channel_schedule());
}

inline std::vector<VertexId> slots_to_vertices(
    const IntervalInstance& inst, const std::vector<std::string>& slot_ids) {
  std::vector<VertexId> out;
  for (const auto& id : slot_ids) out.push_back(*inst.find_slot(id));
  return out;
}

struct RandomParams {
  int min_n = 1;
  int max_n = 16;
  Coord max_coord = 48;
  Weight max_weight = 9;
};

// Integer endpoints drawn from [0, max_coord] with s < f.
inline IntervalInstance random_instance(std::mt19937_64& rng,
                                        const RandomParams& params = {}) {
  std::uniform_int_distribution<int> n_dist(params.min_n, params.max_n);
  std::uniform_int_distribution<Coord> c_dist(0, params.max_coord);
  std::uniform_int_distribution<Weight> w_dist(0, params.max_weight);
  const int n = n_dist(rng);
  std::vector<Interval> vs;
  vs.reserve(static_cast<std::size_t>(n));
  while (static_cast<int>(vs.size()) < n) {
    Coord a = c_dist(rng);
    Coord b = c_dist(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    vs.push_back({a, b, w_dist(rng)});
  }
  return make_instance(std::move(vs));
}

}  // namespace mwkc::testing

#endif  // MWKC_TESTS_FIXTURES_HPP
