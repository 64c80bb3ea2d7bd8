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

#ifndef GRIDFLOW_FLOW_H_
#define GRIDFLOW_FLOW_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gridflow/grid.h"

namespace gridflow {

// One integer flow value per arc, indexed by ArcId.
class FlowAssignment {
 public:
  FlowAssignment() = default;
  explicit FlowAssignment(int num_arcs) : values_(num_arcs, 0) {}
  explicit FlowAssignment(std::vector<int64_t> values)
      : values_(std::move(values)) {}
  // Zero flow sized for `grid`.
  static FlowAssignment Zero(const GridSpec& grid) {
    return FlowAssignment(grid.num_arcs());
  }

  int size() const { return static_cast<int>(values_.size()); }
  int64_t operator[](ArcId id) const { return values_[id]; }
  int64_t& operator[](ArcId id) { return values_[id]; }
  const std::vector<int64_t>& values() const { return values_; }

  friend auto operator<=>(const FlowAssignment&,
                          const FlowAssignment&) = default;

 private:
  std::vector<int64_t> values_;
};

struct FlowViolation {
  enum class Kind { kBalance, kLowerBound, kUpperBound, kShape };
  Kind kind;
  // The vertex for kBalance, unused otherwise.
  Vertex vertex;
  // The arc for bound violations, -1 otherwise.
  ArcId arc = -1;
  // Outflow - inflow - supply for kBalance, the offending flow for bounds.
  int64_t amount = 0;

  std::string DebugString(const GridSpec& grid) const;
};

struct FlowCheck {
  std::vector<FlowViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Lists every violated balance equation and bound. Never throws.
FlowCheck CheckFlow(const GridSpec& grid, const FlowAssignment& flow);

// Sum of arc costs, one oracle query per arc. Throws kInfeasibleFlow when
// CheckFlow reports a violation.
double EvaluateCost(const GridSpec& grid, const FlowAssignment& flow);

// Same as EvaluateCost but without the feasibility check.
double EvaluateCostUnchecked(const GridSpec& grid, const FlowAssignment& flow);

// A free arc carries flow strictly between its bounds.
bool IsFreeArc(const GridSpec& grid, const FlowAssignment& flow, ArcId id);

}  // namespace gridflow

#endif  // GRIDFLOW_FLOW_H_
