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

#include "support/random_instances.h"

#include <algorithm>
#include <map>
#include <set>

#include "gridflow/feasibility.h"

namespace gridflow::testing {
namespace {

int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool Coin(Rng& rng, double p) {
  return std::bernoulli_distribution(p)(rng);
}

// Routes each unit of supply from a random source to a random vertex it can
// reach, keeping the terminals inside `rows`.
std::vector<std::vector<int64_t>> RouteSupplies(
    Rng& rng, int rows, int cols, int max_supply,
    const std::vector<int>& source_rows, const std::vector<int>& sink_rows) {
  std::vector<std::vector<int64_t>> b(rows, std::vector<int64_t>(cols, 0));
  for (int r : source_rows) {
    for (int t = 0; t < cols; ++t) {
      if (!Coin(rng, 0.5)) continue;
      const int units = Uniform(rng, 0, max_supply);
      std::vector<Vertex> targets;
      for (int l : sink_rows) {
        if (l < r) continue;
        for (int c = t; c < cols; ++c) {
          if (l == r && c == t) continue;
          targets.push_back({l, c});
        }
      }
      if (targets.empty()) continue;
      for (int u = 0; u < units; ++u) {
        const Vertex v = targets[Uniform(rng, 0, targets.size() - 1)];
        b[r][t] += 1;
        b[v.row][v.col] -= 1;
      }
    }
  }
  return b;
}

std::map<ArcKey, CostSpec> RandomCosts(Rng& rng, int rows, int cols,
                                       bool integer_costs) {
  std::map<ArcKey, CostSpec> costs;
  for (int l = 0; l < rows; ++l) {
    for (int t = 0; t < cols; ++t) {
      const Vertex v{l, t};
      if (t + 1 < cols) {
        costs[{v, {l, t + 1}}] =
            integer_costs ? RandomIntegerCost(rng) : RandomMixedCost(rng);
      }
      if (l + 1 < rows) {
        costs[{v, {l + 1, t}}] =
            integer_costs ? RandomIntegerCost(rng) : RandomMixedCost(rng);
      }
    }
  }
  return costs;
}

std::vector<ArcKey> AllArcs(int rows, int cols) {
  std::vector<ArcKey> arcs;
  for (int l = 0; l < rows; ++l) {
    for (int t = 0; t < cols; ++t) {
      if (t + 1 < cols) arcs.push_back({{l, t}, {l, t + 1}});
      if (l + 1 < rows) arcs.push_back({{l, t}, {l + 1, t}});
    }
  }
  return arcs;
}

std::vector<int64_t> DistinctValues(Rng& rng, int count, int lo, int hi) {
  std::set<int64_t> values;
  while (static_cast<int>(values.size()) < count) {
    values.insert(Uniform(rng, lo, hi));
  }
  return {values.begin(), values.end()};
}

}  // namespace

CostSpec RandomIntegerCost(Rng& rng) {
  switch (Uniform(rng, 0, 4)) {
    case 0:
      return CostSpec::MakeZero();
    case 1:
      return CostSpec::MakeLinear(Uniform(rng, 0, 3));
    case 2:
    case 3:
      return CostSpec::MakeFixedCharge(Uniform(rng, 1, 8), Uniform(rng, 0, 2));
    default: {
      const int first = Uniform(rng, 2, 5);
      const int second = Uniform(rng, 0, first - 1);
      return CostSpec::MakePiecewiseConcave({0.0, static_cast<double>(
                                                      Uniform(rng, 1, 3))},
                                            {static_cast<double>(first),
                                             static_cast<double>(second)});
    }
  }
}

CostSpec RandomMixedCost(Rng& rng) {
  switch (Uniform(rng, 0, 3)) {
    case 0:
      return CostSpec::MakePower(
          std::uniform_real_distribution<double>(0.5, 3.0)(rng),
          std::uniform_real_distribution<double>(0.3, 1.0)(rng));
    case 1:
      return CostSpec::MakeFixedCharge(
          std::uniform_real_distribution<double>(0.5, 6.0)(rng),
          std::uniform_real_distribution<double>(0.0, 1.5)(rng));
    default:
      return RandomIntegerCost(rng);
  }
}

GridSpec RandomUMfg(Rng& rng, const RandomOptions& o) {
  const int source_row = Uniform(rng, 0, o.rows - 1);
  std::vector<int> sink_rows;
  for (int l = source_row; l < o.rows; ++l) sink_rows.push_back(l);
  const auto b =
      RouteSupplies(rng, o.rows, o.cols, o.max_supply, {source_row}, sink_rows);
  return BuildGrid(o.rows, o.cols, b, {},
                   RandomCosts(rng, o.rows, o.cols, o.integer_costs));
}

GridSpec RandomCMfg(Rng& rng, const RandomOptions& o, int num_capacities) {
  const int last = o.rows - 1;
  while (true) {
    const auto b = RouteSupplies(rng, o.rows, o.cols, o.max_supply, {0, last},
                                 {0, last});
    std::map<ArcKey, Capacity> caps;
    const std::vector<int64_t> values =
        DistinctValues(rng, num_capacities, 1, 6);
    std::vector<ArcKey> arcs = AllArcs(o.rows, o.cols);
    std::shuffle(arcs.begin(), arcs.end(), rng);
    // Every value appears at least once so K is exact.
    for (size_t k = 0; k < values.size(); ++k) {
      caps[arcs[k]] = Capacity::Finite(values[k]);
    }
    for (size_t k = values.size(); k < arcs.size() && !values.empty(); ++k) {
      if (Coin(rng, 0.35)) {
        caps[arcs[k]] =
            Capacity::Finite(values[Uniform(rng, 0, values.size() - 1)]);
      }
    }
    GridSpec grid = BuildGrid(o.rows, o.cols, b, caps,
                              RandomCosts(rng, o.rows, o.cols, o.integer_costs));
    if (IsInstanceFeasible(grid)) return grid;
  }
}

GridSpec RandomTwoRow(Rng& rng, const RandomOptions& o,
                      int num_down_capacities) {
  while (true) {
    const auto b =
        RouteSupplies(rng, 2, o.cols, o.max_supply, {0, 1}, {0, 1});
    std::map<ArcKey, Capacity> caps;
    const std::vector<int64_t> values =
        DistinctValues(rng, num_down_capacities, 1, 6);
    std::vector<int> cols(o.cols);
    for (int t = 0; t < o.cols; ++t) cols[t] = t;
    std::shuffle(cols.begin(), cols.end(), rng);
    for (int k = 0; k < o.cols; ++k) {
      const int t = cols[k];
      if (k < static_cast<int>(values.size()) || Coin(rng, 0.6)) {
        const int64_t v = k < static_cast<int>(values.size())
                              ? values[k]
                              : values[Uniform(rng, 0, values.size() - 1)];
        caps[{{0, t}, {1, t}}] = Capacity::Finite(v);
      }
    }
    for (int l = 0; l < 2; ++l) {
      for (int t = 0; t + 1 < o.cols; ++t) {
        if (Coin(rng, 0.4)) {
          caps[{{l, t}, {l, t + 1}}] = Capacity::Finite(Uniform(rng, 1, 8));
        }
      }
    }
    GridSpec grid = BuildGrid(2, o.cols, b, caps,
                              RandomCosts(rng, 2, o.cols, o.integer_costs));
    if (IsInstanceFeasible(grid)) return grid;
  }
}

GridSpec RandomAnyTerminals(Rng& rng, const RandomOptions& o) {
  std::vector<int> all;
  for (int l = 0; l < o.rows; ++l) all.push_back(l);
  const auto b = RouteSupplies(rng, o.rows, o.cols, o.max_supply, all, all);
  return BuildGrid(o.rows, o.cols, b, {},
                   RandomCosts(rng, o.rows, o.cols, o.integer_costs));
}

}  // namespace gridflow::testing
