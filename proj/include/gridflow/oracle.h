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

#ifndef GRIDFLOW_ORACLE_H_
#define GRIDFLOW_ORACLE_H_

#include <cstdint>
#include <string>

#include "gridflow/extreme.h"
#include "gridflow/flow.h"
#include "gridflow/grid.h"

namespace gridflow {

enum class OracleMethod { kEnumeration, kStepSearch };

std::string OracleMethodName(OracleMethod method);

struct OracleResult {
  OracleMethod method = OracleMethod::kEnumeration;
  FlowAssignment flow;
  double cost = 0.0;
  // Distinct extreme points seen (enumeration only).
  int64_t extreme_points = 0;
  // Search nodes visited (step search only).
  int64_t nodes = 0;
};

// Minimum-cost extreme point. Ties go to the lexicographically smallest flow.
// Throws kTooLarge past the budget and kInfeasibleInstance when no extreme
// point exists.
OracleResult BruteForceMinimum(const GridSpec& grid,
                               const EnumerationBudget& budget = {},
                               EnumerationStats* stats = nullptr);

// True when every arc cost depends only on whether the flow is positive.
bool HasOnlyStepCosts(const GridSpec& grid);

// Exact minimum for grids with step costs only, by depth-first search over
// open/closed decisions on the costly arcs with max-flow feasibility pruning.
// Throws kInvalidArgument for other costs, kInfeasibleInstance, and kTooLarge
// after `max_nodes` search nodes.
OracleResult StepCostMinimum(const GridSpec& grid,
                             int64_t max_nodes = 20'000'000);

// Enumeration when it fits the budget, otherwise the step search when it
// applies. Throws kTooLarge when neither does.
OracleResult ExactMinimum(const GridSpec& grid,
                          const EnumerationBudget& budget = {});

}  // namespace gridflow

#endif  // GRIDFLOW_ORACLE_H_
