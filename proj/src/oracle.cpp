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

#include "mwkc/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

#include "mwkc/errors.hpp"
#include "mwkc/interval_graph.hpp"

namespace mwkc {

namespace {

// Exhaustive include/exclude search over one component. Vertices are taken
// in start order, so the depth just after a start point is fixed once the
// last vertex starting there has been decided.
class SubsetSearch {
 public:
  SubsetSearch(const IntervalInstance& inst, std::vector<VertexId> vertices,
               int k)
      : inst_(inst), order_(std::move(vertices)), k_(k) {
    std::sort(order_.begin(), order_.end(), [&](VertexId a, VertexId b) {
      return std::tie(inst_[a].start, inst_[a].finish, a) <
             std::tie(inst_[b].start, inst_[b].finish, b);
    });
    suffix_.assign(order_.size() + 1, 0);
    for (std::size_t i = order_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + inst_[order_[i]].weight;
    }
  }

  void run() {
    best_weight_ = -1;
    recurse(0, 0);
  }

  Weight best_weight() const { return best_weight_; }
  const std::vector<VertexId>& best_subset() const { return best_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void recurse(std::size_t i, Weight weight) {
    ++nodes_;
    if (weight + suffix_[i] <= best_weight_) return;
    if (i == order_.size()) {
      best_weight_ = weight;
      best_ = chosen_;
      return;
    }
    const VertexId v = order_[i];
    if (load_at_start(v) < static_cast<std::size_t>(k_)) {
      chosen_.push_back(v);
      recurse(i + 1, weight + inst_[v].weight);
      chosen_.pop_back();
    }
    recurse(i + 1, weight);
  }

  // Chosen intervals still open just after v starts.
  std::size_t load_at_start(VertexId v) const {
    std::size_t load = 0;
    for (VertexId u : chosen_) {
      if (inst_[u].finish > inst_[v].start) ++load;
    }
    return load;
  }

  const IntervalInstance& inst_;
  std::vector<VertexId> order_;
  int k_;
  std::vector<Weight> suffix_;
  std::vector<VertexId> chosen_;
  std::vector<VertexId> best_;
  Weight best_weight_ = -1;
  std::uint64_t nodes_ = 0;
};

// Components by sweeping start-sorted intervals, kept local to the oracle.
std::vector<std::vector<VertexId>> components_of(const IntervalInstance& inst) {
  std::vector<VertexId> order(inst.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return std::tie(inst[a].start, a) < std::tie(inst[b].start, b);
  });
  std::vector<std::vector<VertexId>> out;
  Coord reach = 0;
  for (VertexId v : order) {
    if (out.empty() || !(inst[v].start < reach)) out.emplace_back();
    out.back().push_back(v);
    reach = out.back().size() == 1 ? inst[v].finish
                                   : std::max(reach, inst[v].finish);
  }
  return out;
}

}  // namespace

OracleResult brute_force_mwkc(const IntervalInstance& instance, int k,
                              std::size_t limit) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  instance.check();
  const auto components = components_of(instance);
  for (const auto& c : components) {
    if (c.size() > limit) {
      throw InstanceTooLarge("component of " + std::to_string(c.size()) +
                             " intervals exceeds the oracle limit of " +
                             std::to_string(limit));
    }
  }
  OracleResult result;
  for (const auto& c : components) {
    SubsetSearch search(instance, c, k);
    search.run();
    result.best_weight += search.best_weight();
    result.nodes_explored += search.nodes();
    result.best_subset.insert(result.best_subset.end(),
                              search.best_subset().begin(),
                              search.best_subset().end());
  }
  std::sort(result.best_subset.begin(), result.best_subset.end());
  return result;
}

CheckReport verify_solution(const KcolourSolution& solution,
                            const IntervalInstance& instance, int k) {
  CheckReport report;
  auto fail = [&](std::string what) { report.violations.push_back(std::move(what)); };
  const auto n = static_cast<VertexId>(instance.size());

  if (k < 1) fail("k must be at least 1");
  const auto non_empty = std::count_if(
      solution.classes.begin(), solution.classes.end(),
      [](const ColourClass& c) { return !c.vertices.empty(); });
  if (non_empty > k) {
    fail(std::to_string(non_empty) + " non-empty classes exceed k = " +
         std::to_string(k));
  }

  std::vector<int> owner(instance.size(), -1);
  std::vector<VertexId> in_classes;
  for (std::size_t ci = 0; ci < solution.classes.size(); ++ci) {
    const ColourClass& cls = solution.classes[ci];
    const std::string name = "class " + std::to_string(ci + 1);
    std::vector<VertexId> members;
    Weight weight = 0;
    for (VertexId v : cls.vertices) {
      if (v < 0 || v >= n) {
        fail(name + " references unknown vertex " + std::to_string(v));
        continue;
      }
      int& o = owner[static_cast<std::size_t>(v)];
      if (o >= 0) {
        fail("vertex " + std::to_string(v) + " appears in class " +
             std::to_string(o + 1) + " and " + name);
        continue;
      }
      o = static_cast<int>(ci);
      members.push_back(v);
      in_classes.push_back(v);
      weight += instance[v].weight;
    }
    // Start-ordered sweep reports every overlapping pair once.
    std::sort(members.begin(), members.end(), [&](VertexId a, VertexId b) {
      return std::tie(instance[a].start, a) < std::tie(instance[b].start, b);
    });
    std::vector<VertexId> open;
    for (VertexId v : members) {
      std::erase_if(open, [&](VertexId u) {
        return instance[u].finish <= instance[v].start;
      });
      for (VertexId u : open) {
        if (overlaps(instance[u], instance[v])) {
          fail(name + " is not independent: vertices " + std::to_string(u) +
               " and " + std::to_string(v) + " overlap");
        }
      }
      open.push_back(v);
    }
    if (weight != cls.weight) {
      fail(name + " claims weight " + std::to_string(cls.weight) +
           " but its vertices weigh " + std::to_string(weight));
    }
    report.class_weights.push_back(weight);
    report.total_weight += weight;
  }

  if (report.total_weight != solution.total_weight) {
    fail("total weight " + std::to_string(solution.total_weight) +
         " differs from the class sum " + std::to_string(report.total_weight));
  }
  std::sort(in_classes.begin(), in_classes.end());
  auto selected = solution.selected;
  std::sort(selected.begin(), selected.end());
  if (!selected.empty() && selected != in_classes) {
    fail("selected set differs from the union of the classes");
  }
  return report;
}

}  // namespace mwkc
