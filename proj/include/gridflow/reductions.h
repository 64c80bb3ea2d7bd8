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

#ifndef GRIDFLOW_REDUCTIONS_H_
#define GRIDFLOW_REDUCTIONS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridflow/cost.h"
#include "gridflow/grid.h"

namespace gridflow {

// Is there a subset with sum of values >= target and sum of costs <= budget?
struct KnapsackInstance {
  std::vector<int64_t> values;  // y_i > 0
  std::vector<int64_t> costs;   // c_i > 0
  int64_t budget = 0;           // C >= 0
  int64_t target = 0;           // Y >= 0

  // Throws kInvalidArgument.
  void Validate() const;
};

// Can the values be split into two halves of equal sum?
struct PartitionInstance {
  std::vector<int64_t> values;  // y_i > 0

  // Throws kInvalidArgument, and kOddTotal when the sum is odd.
  void Validate() const;
};

// Exhaustive answers for small inputs (at most 30 items).
bool KnapsackBruteForce(const KnapsackInstance& kp);
bool PartitionBruteForce(const PartitionInstance& pp);

enum class ThresholdRule {
  kAtMost,  // yes iff optimal cost <= threshold
  kEquals,  // yes iff optimal cost == threshold
};

struct ReductionInstance {
  GridSpec grid;
  double threshold = 0.0;
  ThresholdRule rule = ThresholdRule::kAtMost;
  // Cost of an arc that is absent from the construction.
  double big_m = 0.0;

  bool Accepts(double optimal_cost, double tolerance = 1e-9) const;
};

std::string ThresholdRuleName(ThresholdRule rule);

// A serial multi-echelon lot-sizing model. Row 0 holds the total demand at
// column 0 and moves it for free; echelon e lives in row e + 1, receives
// production on the downward arcs (e, t) -> (e + 1, t) and holds inventory on
// its forward arcs.
struct LotSizingModel {
  int echelons = 1;
  int periods = 1;
  // demand[e][t] >= 0.
  std::vector<std::vector<int64_t>> demand;
  // production[e][t] prices (e, t) -> (e + 1, t).
  std::vector<std::vector<CostSpec>> production;
  // holding[e][t] prices (e + 1, t) -> (e + 1, t + 1), t < periods - 1.
  std::vector<std::vector<CostSpec>> holding;
  // Optional, same shape as production. Empty means uncapacitated.
  std::vector<std::vector<Capacity>> production_capacity;

  // Throws kInvalidArgument on shape errors.
  GridSpec ToGrid() const;
};

// Two-row uncapacitated lot sizing: source (0, 0) with the total demand,
// sinks (1, t). `holding` has one entry per period boundary (T - 1).
GridSpec UlspToMfg(const std::vector<int64_t>& demands,
                   const std::vector<CostSpec>& production,
                   const std::vector<CostSpec>& holding);

// Three rows, n columns. Source (0, 0), sinks (1, i) with B - y_i and
// (2, n - 1) with Y. Downward capacity B; (1, i) -> (2, i) costs c_i; the
// middle row has no forward arcs. Yes iff optimal <= C. B defaults to max y.
// Throws kBadB.
ReductionInstance KnapsackToMfgSinksTwoRows(const KnapsackInstance& kp,
                                            std::optional<int64_t> b = {});

// Three rows, 2n columns. Item i is the middle-row arc (1, 2i) -> (1, 2i + 1)
// with capacity y_i and cost c_i, fed from row 0 at column 2i and draining to
// row 2 at column 2i + 1. Yes iff optimal <= C.
ReductionInstance KnapsackToMfgForwardCaps(const KnapsackInstance& kp);

// (n + 1) x (n + 1), sources (0, 0) and (0, 1) with half the total each,
// sinks on the diagonal (i, i) with y_i. The region below the diagonal is fed
// from (0, 0), the region above from (0, 1); both arcs into a sink cost 1.
// Yes iff optimal == n. Throws kOddTotal.
ReductionInstance PartitionToMfgVaryingL(const PartitionInstance& pp);

// Three rows, 2n columns, D = 2 sum y. Sources (0, 0) with half the total and
// (1, 2i) with D; sinks (1, 2i + 1) with y_i and (2, 2n - 1) with
// nD - half. Both arcs into (1, 2i + 1) cost 1. Yes iff optimal == n.
// Throws kOddTotal.
ReductionInstance PartitionToMfgTwoTerminalRows(const PartitionInstance& pp);

}  // namespace gridflow

#endif  // GRIDFLOW_REDUCTIONS_H_
