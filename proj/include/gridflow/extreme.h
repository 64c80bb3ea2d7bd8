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

#ifndef GRIDFLOW_EXTREME_H_
#define GRIDFLOW_EXTREME_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "gridflow/flow.h"
#include "gridflow/grid.h"

namespace gridflow {

// Caps for the brute-force extreme-point enumeration.
struct EnumerationBudget {
  int max_vertices = 20;
  // Spanning trees times nontree bound assignments.
  int64_t max_combinations = 1'000'000;
};

struct EnumerationStats {
  int64_t spanning_trees = 0;
  int64_t combinations = 0;
};

// True iff the free arcs of `flow` contain no undirected cycle. Throws
// kInfeasibleFlow when the flow is not feasible.
bool IsCycleFree(const GridSpec& grid, const FlowAssignment& flow);

// Calls `visit` with the arc ids (ascending) of every spanning tree of the
// grid, in a fixed order. Enumeration stops early when `visit` returns false.
void ForEachSpanningTree(
    const GridSpec& grid,
    const std::function<bool(const std::vector<ArcId>&)>& visit);

// All extreme points of the flow polyhedron, sorted and deduplicated. Every
// spanning tree is combined with every assignment of its finite-capacity
// nontree arcs to {0, U}; unbounded nontree arcs sit at 0. Tree flows follow
// from balance and the feasible results are kept.
//
// Throws kTooLarge when the grid exceeds budget.max_vertices or the
// enumeration exceeds budget.max_combinations.
std::vector<FlowAssignment> EnumerateExtremePoints(
    const GridSpec& grid, const EnumerationBudget& budget = {},
    EnumerationStats* stats = nullptr);

}  // namespace gridflow

#endif  // GRIDFLOW_EXTREME_H_
