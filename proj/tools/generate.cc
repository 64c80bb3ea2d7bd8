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

#include "generate.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gridflow/error.h"
#include "gridflow/feasibility.h"
#include "gridflow/reductions.h"

namespace gridflow::cli {
namespace {

constexpr int kRandomAttempts = 1000;
// Source sizes up to which the expected verdict is computed exhaustively.
constexpr size_t kMaxCertifiedItems = 24;

std::vector<double> Broadcast(const std::vector<double>& v, size_t n,
                              const char* name) {
  if (v.size() == n) return v;
  if (v.size() == 1) return std::vector<double>(n, v[0]);
  throw Error(ErrorCode::kInvalidArgument,
              std::string(name) + ": expected 1 or " + std::to_string(n) +
                  " entries, got " + std::to_string(v.size()));
}

Json Certificate(const ReductionInstance& r, std::optional<bool> expected) {
  Json cert;
  cert["threshold"] = r.threshold;
  cert["rule"] = ThresholdRuleName(r.rule);
  cert["big_m"] = r.big_m;
  if (expected) {
    cert["expected"] = *expected ? "yes" : "no";
  } else {
    cert["expected"] = nullptr;
  }
  return cert;
}

Generated Ulsp(const GenerateOptions& o) {
  const size_t n = o.demands.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "--demands is empty");
  for (int64_t d : o.demands) {
    if (d < 0) throw Error(ErrorCode::kInvalidArgument, "negative demand");
  }
  const std::vector<double> setup = Broadcast(o.setup, n, "--setup");
  const std::vector<double> unit = Broadcast(o.unit, n, "--unit");
  const std::vector<double> holding =
      n == 1 ? std::vector<double>{} : Broadcast(o.holding, n - 1, "--holding");
  std::vector<CostSpec> production;
  for (size_t t = 0; t < n; ++t) {
    production.push_back(CostSpec::MakeFixedCharge(setup[t], unit[t]));
  }
  std::vector<CostSpec> hold;
  for (double h : holding) hold.push_back(CostSpec::MakeLinear(h));
  return {UlspToMfg(o.demands, production, hold), nullptr};
}

Generated Knapsack(const GenerateOptions& o, bool sinks_two_rows) {
  const KnapsackInstance kp{o.values, o.costs, o.cost_limit, o.target};
  ReductionInstance r = sinks_two_rows ? KnapsackToMfgSinksTwoRows(kp, o.downward_cap)
                             : KnapsackToMfgForwardCaps(kp);
  std::optional<bool> expected;
  if (kp.values.size() <= kMaxCertifiedItems) {
    expected = KnapsackBruteForce(kp);
  }
  return {std::move(r.grid), Certificate(r, expected)};
}

Generated Partition(const GenerateOptions& o, bool varying_rows) {
  const PartitionInstance pp{o.values};
  ReductionInstance r =
      varying_rows ? PartitionToMfgVaryingL(pp) : PartitionToMfgTwoTerminalRows(pp);
  std::optional<bool> expected;
  if (pp.values.size() <= kMaxCertifiedItems) {
    expected = PartitionBruteForce(pp);
  }
  return {std::move(r.grid), Certificate(r, expected)};
}

// Sources in the top row, sinks in the bottom row, random fixed-charge costs
// and `capacities` distinct finite capacities on random arcs. Retries until
// the instance is feasible.
Generated Random(const GenerateOptions& o) {
  if (o.rows < 1 || o.cols < 1 || o.max_supply < 0 || o.capacities < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad random grid parameters");
  }
  std::mt19937_64 rng(o.seed);
  auto uniform = [&rng](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  const int bottom = o.rows - 1;
  for (int attempt = 0; attempt < kRandomAttempts; ++attempt) {
    std::vector<std::vector<int64_t>> b(o.rows,
                                        std::vector<int64_t>(o.cols, 0));
    int64_t total = 0;
    for (int t = 0; t < o.cols; ++t) {
      b[0][t] = uniform(0, o.max_supply);
      total += b[0][t];
    }
    // Spread the total demand over the bottom row.
    for (int64_t unit = 0; unit < total; ++unit) {
      b[bottom][uniform(0, o.cols - 1)] -= 1;
    }
    if (bottom == 0) {
      for (int t = 0; t < o.cols; ++t) b[0][t] = 0;
      total = 0;
    }
    GridBuilder builder(o.rows, o.cols);
    builder.SetSupplies(b);
    std::vector<std::pair<Vertex, Vertex>> arcs;
    for (int l = 0; l < o.rows; ++l) {
      for (int t = 0; t < o.cols; ++t) {
        if (t + 1 < o.cols) arcs.push_back({{l, t}, {l, t + 1}});
        if (l + 1 < o.rows) arcs.push_back({{l, t}, {l + 1, t}});
      }
    }
    for (const auto& [tail, head] : arcs) {
      builder.SetCost(tail, head,
                      CostSpec::MakeFixedCharge(static_cast<double>(uniform(0, 9)),
                                                static_cast<double>(uniform(0, 3))));
    }
    if (o.capacities > 0 && arcs.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "no arcs to capacitate");
    }
    std::vector<int64_t> values;
    while (static_cast<int>(values.size()) < o.capacities) {
      const int64_t v = uniform(1, std::max<int64_t>(total, o.capacities));
      if (std::find(values.begin(), values.end(), v) == values.end()) {
        values.push_back(v);
      }
    }
    // Each value lands on a different arc so that K is exact.
    std::shuffle(arcs.begin(), arcs.end(), rng);
    for (size_t k = 0; k < values.size() && k < arcs.size(); ++k) {
      builder.SetCapacity(arcs[k].first, arcs[k].second,
                          Capacity::Finite(values[k]));
    }
    GridSpec grid = builder.Build();
    if (IsInstanceFeasible(grid)) return {std::move(grid), nullptr};
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no feasible random instance with these parameters");
}

}  // namespace

std::vector<std::string> ModelNames() {
  return {"ulsp",           "knapsack-fig3",  "knapsack-fig4",
          "partition-fig6", "partition-fig7", "random"};
}

Generated GenerateInstance(const GenerateOptions& options) {
  const std::string& m = options.model;
  if (m == "ulsp") return Ulsp(options);
  if (m == "knapsack-fig3") return Knapsack(options, true);
  if (m == "knapsack-fig4") return Knapsack(options, false);
  if (m == "partition-fig6") return Partition(options, true);
  if (m == "partition-fig7") return Partition(options, false);
  if (m == "random") return Random(options);
  throw Error(ErrorCode::kInvalidArgument, "unknown model \"" + m + "\"");
}

}  // namespace gridflow::cli
