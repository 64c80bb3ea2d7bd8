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

#include "gridflow/spanning_tree.h"

#include <algorithm>
#include <deque>

#include "gridflow/error.h"
#include "internal/union_find.h"

namespace gridflow {
namespace {

using internal::RollbackUnionFind;

// Vertices reachable from row 0 along directed arcs flagged in `in_tree`.
std::vector<bool> ReachableFromRowZero(const GridSpec& grid,
                                       const std::vector<bool>& in_tree) {
  std::vector<bool> seen(grid.num_vertices(), false);
  std::deque<Vertex> queue;
  for (int t = 0; t < grid.cols(); ++t) {
    seen[grid.VertexIndex({0, t})] = true;
    queue.push_back({0, t});
  }
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (ArcId id : grid.OutArcs(v)) {
      if (!in_tree[id]) continue;
      const Vertex w = grid.arc(id).head;
      if (!seen[grid.VertexIndex(w)]) {
        seen[grid.VertexIndex(w)] = true;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

void RequireTreeArc(const SpanningTreeSolution& tree, ArcId arc) {
  if (arc < 0 || arc >= static_cast<int>(tree.flow().size()) ||
      !tree.InTree(arc)) {
    throw Error(ErrorCode::kNontreeArc,
                "arc " + std::to_string(arc) + " is not in the tree");
  }
}

}  // namespace

SpanningTreeSolution SpanningTreeSolution::Create(const GridSpec& grid,
                                                  FlowAssignment flow,
                                                  std::vector<ArcId> tree_arcs) {
  const FlowCheck check = CheckFlow(grid, flow);
  if (!check.ok()) {
    throw Error(ErrorCode::kInfeasibleFlow,
                check.violations.front().DebugString(grid));
  }
  std::sort(tree_arcs.begin(), tree_arcs.end());
  tree_arcs.erase(std::unique(tree_arcs.begin(), tree_arcs.end()),
                  tree_arcs.end());
  if (static_cast<int>(tree_arcs.size()) != grid.num_vertices() - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "a spanning tree needs L*T - 1 arcs");
  }
  SpanningTreeSolution solution;
  solution.in_tree_.assign(grid.num_arcs(), false);
  RollbackUnionFind uf(grid.num_vertices());
  for (ArcId id : tree_arcs) {
    if (id < 0 || id >= grid.num_arcs()) {
      throw Error(ErrorCode::kUnknownArc, "tree arc id out of range");
    }
    const Arc& a = grid.arc(id);
    if (!uf.Union(grid.VertexIndex(a.tail), grid.VertexIndex(a.head))) {
      throw Error(ErrorCode::kInvalidArgument, "tree arcs contain a cycle");
    }
    solution.in_tree_[id] = true;
  }
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    if (!IsFreeArc(grid, flow, id)) continue;
    if (!solution.in_tree_[id]) {
      throw Error(ErrorCode::kNotExtreme,
                  "nontree arc " + std::to_string(id) + " is free");
    }
    solution.free_arcs_.push_back(id);
  }
  solution.flow_ = std::move(flow);
  solution.tree_arcs_ = std::move(tree_arcs);
  return solution;
}

SpanningTreeSolution BuildAccessibleSpanningTree(const GridSpec& grid,
                                                 const FlowAssignment& flow) {
  for (int v = 0; v < grid.num_vertices(); ++v) {
    if (grid.supplies()[v] > 0 && grid.VertexAt(v).row > 0) {
      throw Error(ErrorCode::kPreconditionSources,
                  "source at " + ToString(grid.VertexAt(v)) +
                      " lies below row 0");
    }
  }
  const FlowCheck check = CheckFlow(grid, flow);
  if (!check.ok()) {
    throw Error(ErrorCode::kInfeasibleFlow,
                check.violations.front().DebugString(grid));
  }

  const int n = grid.num_vertices();
  std::vector<bool> in_tree(grid.num_arcs(), false);
  std::vector<int> degree(n, 0);
  RollbackUnionFind uf(n);
  int size = 0;
  auto add = [&](ArcId id) {
    const Arc& a = grid.arc(id);
    in_tree[id] = true;
    ++degree[grid.VertexIndex(a.tail)];
    ++degree[grid.VertexIndex(a.head)];
    ++size;
  };
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    if (!IsFreeArc(grid, flow, id)) continue;
    const Arc& a = grid.arc(id);
    if (!uf.Union(grid.VertexIndex(a.tail), grid.VertexIndex(a.head))) {
      throw Error(ErrorCode::kNotExtreme, "free arcs contain a cycle");
    }
    add(id);
  }

  while (size < n - 1) {
    const std::vector<bool> reachable = ReachableFromRowZero(grid, in_tree);
    ArcId chosen = -1;
    for (ArcId id = 0; id < grid.num_arcs() && chosen < 0; ++id) {
      if (in_tree[id]) continue;
      const Arc& a = grid.arc(id);
      const int tail = grid.VertexIndex(a.tail);
      const int head = grid.VertexIndex(a.head);
      if (degree[tail] > 0 && reachable[tail] &&
          uf.Find(tail) != uf.Find(head)) {
        chosen = id;
      }
    }
    if (chosen < 0) {
      for (int t = 0; t < grid.cols() && chosen < 0; ++t) {
        if (degree[grid.VertexIndex({0, t})] > 0) continue;
        if (auto id = grid.ForwardArc(0, t)) {
          chosen = *id;
        } else if (auto down = grid.DownwardArc(0, t)) {
          chosen = *down;
        }
      }
    }
    if (chosen < 0) {
      throw Error(ErrorCode::kPropertyViolated,
                  "no accessible arc can extend the tree");
    }
    const Arc& a = grid.arc(chosen);
    uf.Union(grid.VertexIndex(a.tail), grid.VertexIndex(a.head));
    add(chosen);
  }

  std::vector<ArcId> tree_arcs;
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    if (in_tree[id]) tree_arcs.push_back(id);
  }
  SpanningTreeSolution solution =
      SpanningTreeSolution::Create(grid, flow, std::move(tree_arcs));
  if (!IsAccessibleFromRowZero(grid, solution)) {
    throw Error(ErrorCode::kPropertyViolated,
                "tree leaves a vertex unreachable from row 0");
  }
  return solution;
}

bool IsAccessibleFromRowZero(const GridSpec& grid,
                             const SpanningTreeSolution& tree) {
  std::vector<bool> in_tree(grid.num_arcs(), false);
  for (ArcId id : tree.tree_arcs()) in_tree[id] = true;
  const std::vector<bool> reachable = ReachableFromRowZero(grid, in_tree);
  return std::all_of(reachable.begin(), reachable.end(),
                     [](bool r) { return r; });
}

KappaTable ComputeKappa(const GridSpec& grid,
                        const SpanningTreeSolution& tree) {
  KappaTable table;
  table.kappa.assign(grid.rows(), std::vector<int>(grid.cols(), -1));
  table.paths.assign(grid.rows(),
                     std::vector<std::vector<ArcId>>(grid.cols()));
  const int n = grid.num_vertices();
  // toward[w] is the tree arc leaving w on the way to the target vertex.
  std::vector<ArcId> toward(n);
  std::vector<bool> seen(n);
  for (int target = 0; target < n; ++target) {
    std::fill(seen.begin(), seen.end(), false);
    std::fill(toward.begin(), toward.end(), -1);
    std::deque<int> queue{target};
    seen[target] = true;
    int best = -1;
    while (!queue.empty()) {
      const int w = queue.front();
      queue.pop_front();
      const Vertex vw = grid.VertexAt(w);
      if (vw.row == 0 && (best < 0 || vw.col < grid.VertexAt(best).col)) {
        best = w;
      }
      for (ArcId id : grid.InArcs(vw)) {
        if (!tree.InTree(id)) continue;
        const int u = grid.VertexIndex(grid.arc(id).tail);
        if (seen[u]) continue;
        seen[u] = true;
        toward[u] = id;
        queue.push_back(u);
      }
    }
    const Vertex vt = grid.VertexAt(target);
    if (best < 0) {
      throw Error(ErrorCode::kPropertyViolated,
                  ToString(vt) + " is not reachable from row 0");
    }
    table.kappa[vt.row][vt.col] = grid.VertexAt(best).col;
    std::vector<ArcId>& path = table.paths[vt.row][vt.col];
    for (int w = best; w != target;) {
      const ArcId id = toward[w];
      path.push_back(id);
      w = grid.VertexIndex(grid.arc(id).head);
    }
  }
  return table;
}

std::vector<bool> TailComponent(const GridSpec& grid,
                                const SpanningTreeSolution& tree, ArcId arc) {
  RequireTreeArc(tree, arc);
  std::vector<bool> side(grid.num_vertices(), false);
  const Vertex tail = grid.arc(arc).tail;
  std::deque<Vertex> queue{tail};
  side[grid.VertexIndex(tail)] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    std::vector<ArcId> incident = grid.OutArcs(v);
    const std::vector<ArcId> in = grid.InArcs(v);
    incident.insert(incident.end(), in.begin(), in.end());
    for (ArcId id : incident) {
      if (id == arc || !tree.InTree(id)) continue;
      const Arc& a = grid.arc(id);
      const Vertex w = (a.tail == v) ? a.head : a.tail;
      if (!side[grid.VertexIndex(w)]) {
        side[grid.VertexIndex(w)] = true;
        queue.push_back(w);
      }
    }
  }
  return side;
}

VertexTypeMap ClassifyVertices(const GridSpec& grid,
                               const SpanningTreeSolution& tree, ArcId arc) {
  const std::vector<bool> tail_side = TailComponent(grid, tree, arc);
  const KappaTable kappa = ComputeKappa(grid, tree);
  VertexTypeMap map;
  map.rows = grid.rows();
  map.cols = grid.cols();
  map.labels.resize(grid.num_vertices());
  for (int v = 0; v < grid.num_vertices(); ++v) {
    if (tail_side[v]) {
      map.labels[v] = VertexType::kType1;
      continue;
    }
    const Vertex w = grid.VertexAt(v);
    const std::vector<ArcId>& path = kappa.paths[w.row][w.col];
    const bool through = std::find(path.begin(), path.end(), arc) != path.end();
    map.labels[v] = through ? VertexType::kType2A : VertexType::kType2B;
  }
  return map;
}

int64_t FlowViaTreeCut(const GridSpec& grid, const SpanningTreeSolution& tree,
                       ArcId arc) {
  const std::vector<bool> tail_side = TailComponent(grid, tree, arc);
  int64_t value = 0;
  for (int v = 0; v < grid.num_vertices(); ++v) {
    if (tail_side[v]) value += grid.supplies()[v];
  }
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    if (tree.InTree(id)) continue;
    const Arc& a = grid.arc(id);
    const bool tail_in = tail_side[grid.VertexIndex(a.tail)];
    const bool head_in = tail_side[grid.VertexIndex(a.head)];
    if (tail_in && !head_in) value -= tree.flow()[id];
    if (!tail_in && head_in) value += tree.flow()[id];
  }
  return value;
}

}  // namespace gridflow
