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

#ifndef GRIDFLOW_DP_SOLVER_H_
#define GRIDFLOW_DP_SOLVER_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "gridflow/candidates.h"
#include "gridflow/classify.h"
#include "gridflow/extreme.h"
#include "gridflow/flow.h"
#include "gridflow/grid.h"

namespace gridflow {

// Stage t in [0, T] holds L-vectors s where s[l] is the flow on the forward
// arc (l, t-1) -> (l, t). Stages 0 and T hold only the zero vector.
// Transitions from stage t to t + 1 settle column t.
class StateGraph {
 public:
  struct Edge {
    int from = 0;  // Index into states(t).
    int to = 0;    // Index into states(t + 1).
    double cost = 0.0;
  };

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_stages() const { return static_cast<int>(states_.size()); }
  // Lexicographically sorted.
  const std::vector<std::vector<int64_t>>& states(int stage) const {
    return states_[stage];
  }
  // Edges leaving stage t, grouped by `from` and then sorted by `to`.
  const std::vector<Edge>& edges(int t) const { return edges_[t]; }
  // Downward flows (L - 1 values) of edge `e` between stages t and t + 1.
  std::vector<int64_t> DownwardFlows(int t, int e) const;
  // Edges of stage t leaving state `from` are [first, last).
  std::pair<int, int> EdgeRange(int t, int from) const {
    return {edge_offsets_[t][from], edge_offsets_[t][from + 1]};
  }

  std::vector<int64_t> StatesPerStage() const;
  int64_t num_edges() const;
  int64_t oracle_queries() const { return oracle_queries_; }

 private:
  friend StateGraph BuildStateGraph(const GridSpec&, const CandidateValueSet&,
                                    int);

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::vector<std::vector<int64_t>>> states_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<int64_t>> downward_;
  std::vector<std::vector<int>> edge_offsets_;
  int64_t oracle_queries_ = 0;
};

// Builds the stage graph over the Cartesian product of per-row candidates,
// keeping states that satisfy the column-sum identity and the cut bounds
// sum_{l' <= l} s[l'] in [-(supply of rows <= l right of the cut),
// supply of rows <= l left of the cut]. Uses `threads` workers for pricing.
// Throws kEmptyStage when a stage ends up empty.
StateGraph BuildStateGraph(const GridSpec& grid,
                           const CandidateValueSet& candidates,
                           int threads = 1);

struct TransitionResult {
  std::vector<int64_t> downward;  // u[l] on (l, t) -> (l + 1, t).
  double cost = 0.0;
};

// Settles column t given the inflows s_prev and outflows s_next. Returns
// nullopt when a downward flow is negative or over capacity, a forward flow
// is over capacity, or the last row does not balance. The cost charges the
// forward arcs entering column t (none for t = 0) and the downward arcs of
// column t.
std::optional<TransitionResult> Transition(const GridSpec& grid, int t,
                                           const std::vector<int64_t>& s_prev,
                                           const std::vector<int64_t>& s_next);

struct StatePath {
  std::vector<int> states;  // One state index per stage.
  std::vector<int> edges;   // One edge index per transition.
  double cost = 0.0;
};

// Minimum-cost path from stage 0 to stage T. Among optimal paths the one with
// the lexicographically smallest state sequence wins. Throws kNoPath.
StatePath ShortestPath(const StateGraph& graph);

// Reads forward flows off the states and downward flows off the edges. Throws
// kInternalInconsistency when the flow is infeasible or its cost differs from
// the path cost by more than `tolerance` (relative above 1).
FlowAssignment RecoverFlow(const GridSpec& grid, const StateGraph& graph,
                           const StatePath& path, double tolerance = 1e-9);

struct SolveOptions {
  int threads = 1;
  double tolerance = 1e-9;
  EnumerationBudget budget;
};

struct SolveStats {
  std::vector<int64_t> states_per_stage;
  int64_t num_edges = 0;
  int64_t oracle_queries = 0;
  int64_t extreme_points = 0;  // Fallback only.
};

struct SolveResult {
  FlowAssignment flow;
  double cost = 0.0;
  CaseKind tag = CaseKind::kUnsupported;
  InstanceCase instance_case;
  SolveStats stats;
};

// Classify, generate candidates, build the stage graph, take the shortest
// path and recover the flow. Unsupported instances within the enumeration
// budget are solved by enumeration and tagged kBruteForce. Throws
// kInfeasibleInstance and kUnsupported.
SolveResult Solve(const GridSpec& grid, const SolveOptions& options = {});

// The stage-graph pipeline on caller-supplied candidates.
SolveResult SolveWithCandidates(const GridSpec& grid,
                                const CandidateValueSet& candidates,
                                const SolveOptions& options = {});

}  // namespace gridflow

#endif  // GRIDFLOW_DP_SOLVER_H_
