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

#ifndef GRIDFLOW_SPANNING_TREE_H_
#define GRIDFLOW_SPANNING_TREE_H_

#include <cstdint>
#include <vector>

#include "gridflow/flow.h"
#include "gridflow/grid.h"

namespace gridflow {

// A feasible flow with a spanning tree whose nontree arcs are all restricted
// (at 0 or at capacity). Free arcs are necessarily tree arcs.
class SpanningTreeSolution {
 public:
  // Validates the tree (L*T - 1 arcs, spanning, acyclic) and that every
  // nontree arc is restricted. Throws kInvalidArgument for a bad tree,
  // kInfeasibleFlow for a bad flow and kNotExtreme for a free nontree arc.
  static SpanningTreeSolution Create(const GridSpec& grid, FlowAssignment flow,
                                     std::vector<ArcId> tree_arcs);

  const FlowAssignment& flow() const { return flow_; }
  // Ascending arc ids.
  const std::vector<ArcId>& tree_arcs() const { return tree_arcs_; }
  const std::vector<ArcId>& free_arcs() const { return free_arcs_; }
  bool InTree(ArcId id) const { return in_tree_[id]; }

 private:
  SpanningTreeSolution() = default;

  FlowAssignment flow_;
  std::vector<ArcId> tree_arcs_;
  std::vector<ArcId> free_arcs_;
  std::vector<bool> in_tree_;
};

// Builds a spanning tree around the free arcs of an extreme point such that
// every vertex is reachable by a directed tree path from some row-0 vertex.
// Restricted arcs are added one at a time: the smallest arc id whose tail is
// already reachable and touched by the tree and that closes no cycle; when no
// such arc exists, the first untouched row-0 vertex is attached through its
// forward arc (downward if it has none).
//
// Requires all sources in row 0 (strip the rows above the source row first).
// Throws kPreconditionSources, kInfeasibleFlow, kNotExtreme, and
// kPropertyViolated if no accessible tree can be grown from the free arcs.
SpanningTreeSolution BuildAccessibleSpanningTree(const GridSpec& grid,
                                                 const FlowAssignment& flow);

// Every vertex is reachable by a directed tree path from row 0.
bool IsAccessibleFromRowZero(const GridSpec& grid,
                             const SpanningTreeSolution& tree);

// kappa[l][i] is the smallest column j with a directed tree path from (0, j)
// to (l, i); paths[l][i] holds the arcs of that path from (0, kappa) down to
// (l, i).
struct KappaTable {
  std::vector<std::vector<int>> kappa;
  std::vector<std::vector<std::vector<ArcId>>> paths;
};

// Throws kPropertyViolated if some vertex is not reachable from row 0.
KappaTable ComputeKappa(const GridSpec& grid, const SpanningTreeSolution& tree);

enum class VertexType { kType1, kType2A, kType2B };

// Vertex labels relative to a deleted tree arc a = (u, v). Type 1 is the
// component of u; type 2 the component of v, split into 2A (the kappa path to
// the vertex runs through a) and 2B.
struct VertexTypeMap {
  int rows = 0;
  int cols = 0;
  std::vector<VertexType> labels;  // Indexed by GridSpec::VertexIndex.

  VertexType at(int row, int col) const { return labels[row * cols + col]; }
  bool IsType2(int row, int col) const {
    return at(row, col) != VertexType::kType1;
  }
};

// Throws kNontreeArc when `arc` is not a tree arc, kPropertyViolated when the
// tree lacks accessibility.
VertexTypeMap ClassifyVertices(const GridSpec& grid,
                               const SpanningTreeSolution& tree, ArcId arc);

// The component of the tail of `arc` after deleting it from the tree, as a
// per-vertex flag. Throws kNontreeArc.
std::vector<bool> TailComponent(const GridSpec& grid,
                                const SpanningTreeSolution& tree, ArcId arc);

// Flow on a tree arc from the cut it induces: the supply on the tail side,
// plus nontree flow entering that side, minus nontree flow leaving it.
int64_t FlowViaTreeCut(const GridSpec& grid, const SpanningTreeSolution& tree,
                       ArcId arc);

}  // namespace gridflow

#endif  // GRIDFLOW_SPANNING_TREE_H_
