// Copyright 2026 The Gridflow Authors.
//
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

#include "gridflow/extreme.h"

#include <algorithm>
#include <set>

#include "gridflow/error.h"
#include "internal/union_find.h"

namespace gridflow {
namespace {

using internal::RollbackUnionFind;

class SpanningTreeEnumerator {
 public:
  SpanningTreeEnumerator(
      const GridSpec& grid,
      const std::function<bool(const std::vector<ArcId>&)>& visit)
      : grid_(grid), visit_(visit), uf_(grid.num_vertices()) {}

  void Run() {
    if (grid_.num_vertices() == 1) {
      visit_(chosen_);
      return;
    }
    Recurse(0);
  }

 private:
  // The chosen arcs plus every arc from `next` on still connect the grid.
  bool CanStillSpan(ArcId next) const {
    RollbackUnionFind probe = uf_;
    int components = grid_.num_vertices() - static_cast<int>(chosen_.size());
    for (ArcId id = next; id < grid_.num_arcs() && components > 1; ++id) {
      const Arc& a = grid_.arc(id);
      if (probe.Union(grid_.VertexIndex(a.tail), grid_.VertexIndex(a.head))) {
        --components;
      }
    }
    return components == 1;
  }

  void Recurse(ArcId next) {
    if (stopped_) return;
    const int needed = grid_.num_vertices() - 1;
    if (static_cast<int>(chosen_.size()) == needed) {
      if (!visit_(chosen_)) stopped_ = true;
      return;
    }
    if (next == grid_.num_arcs()) return;
    if (grid_.num_arcs() - next < needed - static_cast<int>(chosen_.size())) {
      return;
    }
    const Arc& a = grid_.arc(next);
    if (uf_.Union(grid_.VertexIndex(a.tail), grid_.VertexIndex(a.head))) {
      chosen_.push_back(next);
      Recurse(next + 1);
      chosen_.pop_back();
      uf_.Rollback();
    }
    if (CanStillSpan(next + 1)) Recurse(next + 1);
  }

  const GridSpec& grid_;
  const std::function<bool(const std::vector<ArcId>&)>& visit_;
  RollbackUnionFind uf_;
  std::vector<ArcId> chosen_;
  bool stopped_ = false;
};

// A leaf-peeling schedule for one spanning tree: arc flows follow from the
// vertex imbalances in this order.
struct PeelStep {
  ArcId arc;
  int leaf;
  bool leaf_is_tail;
};

std::vector<PeelStep> PeelingOrder(const GridSpec& grid,
                                   const std::vector<ArcId>& tree) {
  const int n = grid.num_vertices();
  std::vector<std::vector<ArcId>> incident(n);
  for (ArcId id : tree) {
    const Arc& a = grid.arc(id);
    incident[grid.VertexIndex(a.tail)].push_back(id);
    incident[grid.VertexIndex(a.head)].push_back(id);
  }
  std::vector<int> degree(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    degree[v] = static_cast<int>(incident[v].size());
    if (degree[v] == 1) leaves.push_back(v);
  }
  std::vector<bool> used(grid.num_arcs(), false);
  std::vector<PeelStep> order;
  order.reserve(tree.size());
  while (!leaves.empty()) {
    const int v = leaves.back();
    leaves.pop_back();
    if (degree[v] != 1) continue;
    ArcId arc = -1;
    for (ArcId id : incident[v]) {
      if (!used[id]) {
        arc = id;
        break;
      }
    }
    used[arc] = true;
    const Arc& a = grid.arc(arc);
    const bool is_tail = grid.VertexIndex(a.tail) == v;
    order.push_back({arc, v, is_tail});
    const int other = grid.VertexIndex(is_tail ? a.head : a.tail);
    --degree[v];
    if (--degree[other] == 1) leaves.push_back(other);
  }
  return order;
}

}  // namespace

bool IsCycleFree(const GridSpec& grid, const FlowAssignment& flow) {
  const FlowCheck check = CheckFlow(grid, flow);
  if (!check.ok()) {
    throw Error(ErrorCode::kInfeasibleFlow,
                check.violations.front().DebugString(grid));
  }
  RollbackUnionFind uf(grid.num_vertices());
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    if (!IsFreeArc(grid, flow, id)) continue;
    const Arc& a = grid.arc(id);
    if (!uf.Union(grid.VertexIndex(a.tail), grid.VertexIndex(a.head))) {
      return false;
    }
  }
  return true;
}

void ForEachSpanningTree(
    const GridSpec& grid,
    const std::function<bool(const std::vector<ArcId>&)>& visit) {
  SpanningTreeEnumerator(grid, visit).Run();
}

std::vector<FlowAssignment> EnumerateExtremePoints(
    const GridSpec& grid, const EnumerationBudget& budget,
    EnumerationStats* stats) {
  if (grid.num_vertices() > budget.max_vertices) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(grid.num_vertices()) +
                    " vertices exceed the enumeration budget of " +
                    std::to_string(budget.max_vertices));
  }
  EnumerationStats local;
  std::set<std::vector<int64_t>> points;
  std::vector<bool> in_tree(grid.num_arcs());
  std::vector<int64_t> flow(grid.num_arcs());
  std::vector<int64_t> need(grid.num_vertices());

  ForEachSpanningTree(grid, [&](const std::vector<ArcId>& tree) {
    ++local.spanning_trees;
    std::fill(in_tree.begin(), in_tree.end(), false);
    for (ArcId id : tree) in_tree[id] = true;
    std::vector<ArcId> bounded;
    for (ArcId id = 0; id < grid.num_arcs(); ++id) {
      if (!in_tree[id] && grid.capacity(id).is_finite() &&
          grid.capacity(id).value() > 0) {
        bounded.push_back(id);
      }
    }
    if (bounded.size() >= 62) {
      throw Error(ErrorCode::kTooLarge, "too many bounded nontree arcs");
    }
    const int64_t assignments = int64_t{1} << bounded.size();
    local.combinations += assignments;
    if (local.combinations > budget.max_combinations) {
      throw Error(ErrorCode::kTooLarge,
                  "extreme-point enumeration exceeds " +
                      std::to_string(budget.max_combinations) +
                      " tree/bound combinations");
    }
    const std::vector<PeelStep> order = PeelingOrder(grid, tree);
    for (int64_t mask = 0; mask < assignments; ++mask) {
      std::fill(flow.begin(), flow.end(), 0);
      need = grid.supplies();
      for (size_t k = 0; k < bounded.size(); ++k) {
        if (!((mask >> k) & 1)) continue;
        const ArcId id = bounded[k];
        const Arc& a = grid.arc(id);
        const int64_t u = grid.capacity(id).value();
        flow[id] = u;
        need[grid.VertexIndex(a.tail)] -= u;
        need[grid.VertexIndex(a.head)] += u;
      }
      bool feasible = true;
      for (const PeelStep& step : order) {
        const Arc& a = grid.arc(step.arc);
        int64_t x;
        if (step.leaf_is_tail) {
          x = need[step.leaf];
          need[grid.VertexIndex(a.head)] += x;
        } else {
          x = -need[step.leaf];
          need[grid.VertexIndex(a.tail)] -= x;
        }
        need[step.leaf] = 0;
        if (!grid.capacity(step.arc).Admits(x)) {
          feasible = false;
          break;
        }
        flow[step.arc] = x;
      }
      if (feasible) points.insert(flow);
    }
    return true;
  });

  if (stats != nullptr) *stats = local;
  std::vector<FlowAssignment> result;
  result.reserve(points.size());
  for (const auto& values : points) result.emplace_back(values);
  return result;
}

}  // namespace gridflow
