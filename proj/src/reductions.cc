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

#include "gridflow/reductions.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gridflow/error.h"

namespace gridflow {
namespace {

int64_t Sum(const std::vector<int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), int64_t{0});
}

void RequirePositive(const std::vector<int64_t>& v, const char* what) {
  if (v.empty()) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " is empty");
  }
  for (int64_t x : v) {
    if (x <= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " must be positive");
    }
  }
}

// Marks every arc as absent (cost M); constructions then overwrite the arcs
// that exist.
GridBuilder AllAbsent(int rows, int cols, double big_m) {
  GridBuilder builder(rows, cols);
  builder.SetAllCosts(CostSpec::MakeFixedCharge(big_m));
  return builder;
}

void Present(GridBuilder& builder, Vertex tail, Vertex head,
             CostSpec cost = CostSpec::MakeZero()) {
  builder.SetCost(tail, head, std::move(cost));
}

}  // namespace

void KnapsackInstance::Validate() const {
  RequirePositive(values, "knapsack values");
  RequirePositive(costs, "knapsack costs");
  if (values.size() != costs.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "knapsack values and costs differ in length");
  }
  if (budget < 0 || target < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "knapsack budget and target must be nonnegative");
  }
}

void PartitionInstance::Validate() const {
  RequirePositive(values, "partition values");
  if (Sum(values) % 2 != 0) {
    throw Error(ErrorCode::kOddTotal, "partition total is odd");
  }
}

bool KnapsackBruteForce(const KnapsackInstance& kp) {
  kp.Validate();
  const int n = static_cast<int>(kp.values.size());
  if (n > 30) throw Error(ErrorCode::kTooLarge, "too many knapsack items");
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    int64_t value = 0, cost = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) {
        value += kp.values[i];
        cost += kp.costs[i];
      }
    }
    if (value >= kp.target && cost <= kp.budget) return true;
  }
  return false;
}

bool PartitionBruteForce(const PartitionInstance& pp) {
  RequirePositive(pp.values, "partition values");
  const int n = static_cast<int>(pp.values.size());
  if (n > 30) throw Error(ErrorCode::kTooLarge, "too many partition items");
  const int64_t total = Sum(pp.values);
  if (total % 2 != 0) return false;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    int64_t sum = 0;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1) sum += pp.values[i];
    }
    if (2 * sum == total) return true;
  }
  return false;
}

bool ReductionInstance::Accepts(double optimal_cost, double tolerance) const {
  const double slack = tolerance * std::max(1.0, std::abs(threshold));
  if (rule == ThresholdRule::kAtMost) return optimal_cost <= threshold + slack;
  return std::abs(optimal_cost - threshold) <= slack;
}

std::string ThresholdRuleName(ThresholdRule rule) {
  return rule == ThresholdRule::kAtMost ? "at-most" : "equals";
}

GridSpec LotSizingModel::ToGrid() const {
  if (echelons < 1 || periods < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "lot sizing needs at least one echelon and one period");
  }
  auto check_shape = [&](size_t rows, size_t cols, size_t actual_rows,
                         auto&& row_size, const char* what) {
    if (actual_rows != rows) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " has the wrong number of echelons");
    }
    for (size_t e = 0; e < rows; ++e) {
      if (row_size(e) != cols) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string(what) + " has the wrong number of periods");
      }
    }
  };
  const size_t ne = echelons;
  const size_t np = periods;
  check_shape(ne, np, demand.size(), [&](size_t e) { return demand[e].size(); },
              "demand");
  check_shape(ne, np, production.size(),
              [&](size_t e) { return production[e].size(); }, "production");
  check_shape(ne, np - 1, holding.size(),
              [&](size_t e) { return holding[e].size(); }, "holding");
  if (!production_capacity.empty()) {
    check_shape(ne, np, production_capacity.size(),
                [&](size_t e) { return production_capacity[e].size(); },
                "production capacity");
  }

  GridBuilder builder(echelons + 1, periods);
  int64_t total = 0;
  for (int e = 0; e < echelons; ++e) {
    for (int t = 0; t < periods; ++t) {
      if (demand[e][t] < 0) {
        throw Error(ErrorCode::kInvalidArgument, "demand must be nonnegative");
      }
      total += demand[e][t];
      builder.SetSupply({e + 1, t}, -demand[e][t]);
      builder.SetCost({e, t}, {e + 1, t}, production[e][t]);
      if (!production_capacity.empty()) {
        builder.SetCapacity({e, t}, {e + 1, t}, production_capacity[e][t]);
      }
      if (t + 1 < periods) {
        builder.SetCost({e + 1, t}, {e + 1, t + 1}, holding[e][t]);
      }
    }
  }
  builder.SetSupply({0, 0}, total);
  return builder.Build();
}

GridSpec UlspToMfg(const std::vector<int64_t>& demands,
                   const std::vector<CostSpec>& production,
                   const std::vector<CostSpec>& holding) {
  LotSizingModel model;
  model.echelons = 1;
  model.periods = static_cast<int>(demands.size());
  model.demand = {demands};
  model.production = {production};
  model.holding = {holding};
  return model.ToGrid();
}

ReductionInstance KnapsackToMfgSinksTwoRows(const KnapsackInstance& kp,
                                            std::optional<int64_t> b) {
  kp.Validate();
  const int n = static_cast<int>(kp.values.size());
  const int64_t max_y = *std::max_element(kp.values.begin(), kp.values.end());
  const int64_t big_b = b.value_or(max_y);
  if (big_b < max_y) {
    throw Error(ErrorCode::kBadB, "B must be at least the largest value");
  }
  const double big_m = static_cast<double>(Sum(kp.costs) + kp.budget + 1);
  GridBuilder builder = AllAbsent(3, n, big_m);
  int64_t source = kp.target;
  for (int i = 0; i < n; ++i) {
    source += big_b - kp.values[i];
    builder.SetSupply({1, i}, -(big_b - kp.values[i]));
    Present(builder, {0, i}, {1, i});
    Present(builder, {1, i}, {2, i},
            CostSpec::MakeFixedCharge(static_cast<double>(kp.costs[i])));
    builder.SetCapacity({0, i}, {1, i}, Capacity::Finite(big_b));
    builder.SetCapacity({1, i}, {2, i}, Capacity::Finite(big_b));
    if (i + 1 < n) {
      Present(builder, {0, i}, {0, i + 1});
      Present(builder, {2, i}, {2, i + 1});
    }
  }
  builder.SetSupply({0, 0}, source);
  builder.SetSupply({2, n - 1}, -kp.target);
  return {builder.Build(), static_cast<double>(kp.budget),
          ThresholdRule::kAtMost, big_m};
}

ReductionInstance KnapsackToMfgForwardCaps(const KnapsackInstance& kp) {
  kp.Validate();
  const int n = static_cast<int>(kp.values.size());
  const int cols = 2 * n;
  const double big_m = static_cast<double>(Sum(kp.costs) + kp.budget + 1);
  GridBuilder builder = AllAbsent(3, cols, big_m);
  for (int t = 0; t + 1 < cols; ++t) {
    Present(builder, {0, t}, {0, t + 1});
    Present(builder, {2, t}, {2, t + 1});
  }
  for (int i = 0; i < n; ++i) {
    Present(builder, {0, 2 * i}, {1, 2 * i});
    Present(builder, {1, 2 * i}, {1, 2 * i + 1},
            CostSpec::MakeFixedCharge(static_cast<double>(kp.costs[i])));
    builder.SetCapacity({1, 2 * i}, {1, 2 * i + 1},
                        Capacity::Finite(kp.values[i]));
    Present(builder, {1, 2 * i + 1}, {2, 2 * i + 1});
  }
  builder.SetSupply({0, 0}, kp.target);
  builder.SetSupply({2, cols - 1}, -kp.target);
  return {builder.Build(), static_cast<double>(kp.budget),
          ThresholdRule::kAtMost, big_m};
}

ReductionInstance PartitionToMfgVaryingL(const PartitionInstance& pp) {
  pp.Validate();
  const int n = static_cast<int>(pp.values.size());
  const int size = n + 1;
  const int64_t half = Sum(pp.values) / 2;
  const double big_m = static_cast<double>(n + 1);
  GridBuilder builder = AllAbsent(size, size, big_m);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      if (r == c) continue;
      // Arcs that stay inside the region of (r, c).
      const bool lower = r > c;
      if (c + 1 < size && (lower ? r > c + 1 : true)) {
        Present(builder, {r, c}, {r, c + 1});
      }
      if (r + 1 < size && (lower ? true : r + 1 < c)) {
        Present(builder, {r, c}, {r + 1, c});
      }
    }
  }
  Present(builder, {0, 0}, {1, 0});
  for (int i = 1; i <= n; ++i) {
    builder.SetSupply({i, i}, -pp.values[i - 1]);
    Present(builder, {i, i - 1}, {i, i}, CostSpec::MakeFixedCharge(1.0));
    Present(builder, {i - 1, i}, {i, i}, CostSpec::MakeFixedCharge(1.0));
  }
  builder.SetSupply({0, 0}, half);
  builder.SetSupply({0, 1}, half);
  return {builder.Build(), static_cast<double>(n), ThresholdRule::kEquals,
          big_m};
}

ReductionInstance PartitionToMfgTwoTerminalRows(const PartitionInstance& pp) {
  pp.Validate();
  const int n = static_cast<int>(pp.values.size());
  const int cols = 2 * n;
  const int64_t total = Sum(pp.values);
  const int64_t half = total / 2;
  const int64_t d = 2 * total;
  const double big_m = static_cast<double>(n + 1);
  GridBuilder builder = AllAbsent(3, cols, big_m);
  for (int t = 0; t + 1 < cols; ++t) {
    Present(builder, {0, t}, {0, t + 1});
    Present(builder, {2, t}, {2, t + 1});
  }
  for (int i = 0; i < n; ++i) {
    const int src = 2 * i;
    const int sink = 2 * i + 1;
    builder.SetSupply({1, src}, d);
    builder.SetSupply({1, sink}, -pp.values[i]);
    Present(builder, {1, src}, {2, src});
    Present(builder, {1, src}, {1, sink}, CostSpec::MakeFixedCharge(1.0));
    Present(builder, {0, sink}, {1, sink}, CostSpec::MakeFixedCharge(1.0));
  }
  builder.SetSupply({0, 0}, half);
  builder.SetSupply({2, cols - 1}, -(n * d - half));
  return {builder.Build(), static_cast<double>(n), ThresholdRule::kEquals,
          big_m};
}

}  // namespace gridflow
