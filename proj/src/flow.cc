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

#include "gridflow/flow.h"

#include <sstream>

#include "gridflow/error.h"

namespace gridflow {

std::string FlowViolation::DebugString(const GridSpec& grid) const {
  std::ostringstream out;
  switch (kind) {
    case Kind::kBalance:
      out << "balance at " << ToString(vertex) << " off by " << amount;
      break;
    case Kind::kLowerBound:
    case Kind::kUpperBound: {
      const Arc& a = grid.arc(arc);
      out << (kind == Kind::kLowerBound ? "negative flow " : "flow ") << amount
          << " on " << ToString(a.tail) << "->" << ToString(a.head);
      if (kind == Kind::kUpperBound) {
        out << " exceeds capacity " << grid.capacity(arc).value();
      }
      break;
    }
    case Kind::kShape:
      out << "flow vector has " << amount << " entries";
      break;
  }
  return out.str();
}

FlowCheck CheckFlow(const GridSpec& grid, const FlowAssignment& flow) {
  FlowCheck check;
  if (flow.size() != grid.num_arcs()) {
    check.violations.push_back(
        {FlowViolation::Kind::kShape, {}, -1, flow.size()});
    return check;
  }
  std::vector<int64_t> excess(grid.num_vertices(), 0);
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    const Arc& a = grid.arc(id);
    const int64_t x = flow[id];
    if (x < 0) {
      check.violations.push_back({FlowViolation::Kind::kLowerBound, {}, id, x});
    } else if (!grid.capacity(id).Admits(x)) {
      check.violations.push_back({FlowViolation::Kind::kUpperBound, {}, id, x});
    }
    excess[grid.VertexIndex(a.tail)] += x;
    excess[grid.VertexIndex(a.head)] -= x;
  }
  for (int v = 0; v < grid.num_vertices(); ++v) {
    const int64_t off = excess[v] - grid.supplies()[v];
    if (off != 0) {
      check.violations.push_back(
          {FlowViolation::Kind::kBalance, grid.VertexAt(v), -1, off});
    }
  }
  return check;
}

double EvaluateCostUnchecked(const GridSpec& grid,
                             const FlowAssignment& flow) {
  double total = 0.0;
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    total += grid.cost(id)(static_cast<double>(flow[id]));
  }
  return total;
}

double EvaluateCost(const GridSpec& grid, const FlowAssignment& flow) {
  const FlowCheck check = CheckFlow(grid, flow);
  if (!check.ok()) {
    throw Error(ErrorCode::kInfeasibleFlow,
                check.violations.front().DebugString(grid));
  }
  return EvaluateCostUnchecked(grid, flow);
}

bool IsFreeArc(const GridSpec& grid, const FlowAssignment& flow, ArcId id) {
  const int64_t x = flow[id];
  const Capacity& cap = grid.capacity(id);
  return x > 0 && (!cap.is_finite() || x < cap.value());
}

}  // namespace gridflow
