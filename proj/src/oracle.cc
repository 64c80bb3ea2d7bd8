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

#include "gridflow/oracle.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gridflow/error.h"
#include "gridflow/feasibility.h"

namespace gridflow {
namespace {

class StepSearch {
 public:
  StepSearch(const GridSpec& grid, int64_t max_nodes)
      : grid_(grid), checker_(grid), max_nodes_(max_nodes),
        open_(grid.num_arcs(), true), decided_(grid.num_arcs(), false) {
    for (ArcId id = 0; id < grid.num_arcs(); ++id) {
      if (grid.cost(id).StepValue() > 0.0) costly_.push_back(id);
    }
    std::stable_sort(costly_.begin(), costly_.end(), [&](ArcId a, ArcId b) {
      return grid.cost(a).StepValue() > grid.cost(b).StepValue();
    });
    for (int v = 0; v < grid.num_vertices(); ++v) {
      const int64_t b = grid.supplies()[v];
      if (b > 0) sources_.push_back(v);
      if (b < 0) sinks_.push_back(v);
    }
  }

  OracleResult Run() {
    if (!checker_.Feasible(open_)) {
      throw Error(ErrorCode::kInfeasibleInstance, "instance is infeasible");
    }
    Visit(0, 0.0);
    OracleResult result;
    result.method = OracleMethod::kStepSearch;
    result.flow = std::move(best_flow_);
    result.cost = best_cost_;
    result.nodes = nodes_;
    return result;
  }

 private:
  // Every terminal whose incident arcs on its active side are all costly needs
  // one of them open. Counted separately for sources and sinks so no arc is
  // charged twice.
  double LowerBound(double committed) const {
    auto side = [&](const std::vector<int>& terminals, bool outgoing) {
      double sum = 0.0;
      for (int v : terminals) {
        const Vertex vx = grid_.VertexAt(v);
        const std::vector<ArcId> arcs =
            outgoing ? grid_.OutArcs(vx) : grid_.InArcs(vx);
        double cheapest = std::numeric_limits<double>::infinity();
        for (ArcId id : arcs) {
          const double c = grid_.cost(id).StepValue();
          if (c <= 0.0 || (decided_[id] && open_[id])) {
            cheapest = 0.0;
            break;
          }
          if (!decided_[id]) cheapest = std::min(cheapest, c);
        }
        if (cheapest != std::numeric_limits<double>::infinity()) {
          sum += cheapest;
        }
      }
      return sum;
    };
    return committed + std::max(side(sources_, true), side(sinks_, false));
  }

  void Visit(size_t depth, double committed) {
    if (++nodes_ > max_nodes_) {
      throw Error(ErrorCode::kTooLarge, "step search exceeded its node budget");
    }
    if (LowerBound(committed) >= best_cost_) return;
    if (depth == costly_.size()) {
      std::optional<FlowAssignment> flow = checker_.FeasibleFlow(open_);
      if (!flow) return;
      const double cost = EvaluateCost(grid_, *flow);
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_flow_ = std::move(*flow);
      }
      return;
    }
    const ArcId id = costly_[depth];
    decided_[id] = true;
    open_[id] = false;
    if (checker_.Feasible(open_)) Visit(depth + 1, committed);
    open_[id] = true;
    Visit(depth + 1, committed + grid_.cost(id).StepValue());
    decided_[id] = false;
  }

  const GridSpec& grid_;
  FeasibilityChecker checker_;
  int64_t max_nodes_;
  std::vector<bool> open_;
  std::vector<bool> decided_;
  std::vector<ArcId> costly_;
  std::vector<int> sources_;
  std::vector<int> sinks_;
  int64_t nodes_ = 0;
  double best_cost_ = std::numeric_limits<double>::infinity();
  FlowAssignment best_flow_;
};

}  // namespace

std::string OracleMethodName(OracleMethod method) {
  return method == OracleMethod::kEnumeration ? "enumeration" : "step-search";
}

OracleResult BruteForceMinimum(const GridSpec& grid,
                               const EnumerationBudget& budget,
                               EnumerationStats* stats) {
  const std::vector<FlowAssignment> points =
      EnumerateExtremePoints(grid, budget, stats);
  if (points.empty()) {
    throw Error(ErrorCode::kInfeasibleInstance, "instance is infeasible");
  }
  OracleResult result;
  result.method = OracleMethod::kEnumeration;
  result.extreme_points = static_cast<int64_t>(points.size());
  result.cost = std::numeric_limits<double>::infinity();
  for (const FlowAssignment& point : points) {
    const double cost = EvaluateCost(grid, point);
    if (cost < result.cost) {
      result.cost = cost;
      result.flow = point;
    }
  }
  return result;
}

bool HasOnlyStepCosts(const GridSpec& grid) {
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    if (!grid.cost(id).IsStep()) return false;
  }
  return true;
}

OracleResult StepCostMinimum(const GridSpec& grid, int64_t max_nodes) {
  if (!HasOnlyStepCosts(grid)) {
    throw Error(ErrorCode::kInvalidArgument,
                "step search needs zero or pure fixed-charge costs");
  }
  return StepSearch(grid, max_nodes).Run();
}

OracleResult ExactMinimum(const GridSpec& grid,
                          const EnumerationBudget& budget) {
  try {
    return BruteForceMinimum(grid, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kTooLarge || !HasOnlyStepCosts(grid)) throw;
  }
  return StepCostMinimum(grid);
}

}  // namespace gridflow
