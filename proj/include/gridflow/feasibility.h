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

#ifndef GRIDFLOW_FEASIBILITY_H_
#define GRIDFLOW_FEASIBILITY_H_

#include <memory>
#include <optional>
#include <vector>

#include "gridflow/flow.h"
#include "gridflow/grid.h"

namespace gridflow {

// True iff some flow satisfies balance and bounds: a max flow from a
// super-source (arcs of capacity b_v into every source) to a super-sink
// (arcs of capacity -b_v out of every sink) saturates the total supply.
bool IsInstanceFeasible(const GridSpec& grid);

// Repeated feasibility queries on one grid where some arcs are closed
// (capacity forced to zero). The max-flow network is built once.
class FeasibilityChecker {
 public:
  explicit FeasibilityChecker(const GridSpec& grid);
  ~FeasibilityChecker();
  FeasibilityChecker(const FeasibilityChecker&) = delete;
  FeasibilityChecker& operator=(const FeasibilityChecker&) = delete;

  // `open[a]` false closes arc a. Size must be grid.num_arcs().
  bool Feasible(const std::vector<bool>& open);
  // A feasible flow using only open arcs, or nullopt.
  std::optional<FlowAssignment> FeasibleFlow(const std::vector<bool>& open);

 private:
  struct Network;
  std::unique_ptr<Network> network_;
};

}  // namespace gridflow

#endif  // GRIDFLOW_FEASIBILITY_H_
