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

#ifndef GRIDFLOW_TOOLS_GENERATE_H_
#define GRIDFLOW_TOOLS_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridflow/grid.h"
#include "gridflow/instance_io.h"

namespace gridflow::cli {

struct GenerateOptions {
  std::string model;
  // ulsp. Cost lists hold one entry per period or a single shared entry.
  std::vector<int64_t> demands;
  std::vector<double> setup = {0.0};
  std::vector<double> unit = {0.0};
  std::vector<double> holding = {0.0};
  // knapsack-fig3, knapsack-fig4, partition-fig6, partition-fig7.
  std::vector<int64_t> values;
  std::vector<int64_t> costs;
  int64_t cost_limit = 0;
  int64_t target = 0;
  std::optional<int64_t> downward_cap;
  // random.
  int rows = 2;
  int cols = 4;
  int64_t max_supply = 5;
  int capacities = 0;
  uint64_t seed = 1;
};

struct Generated {
  GridSpec grid;
  // Threshold, rule and expected verdict for reduction models; null
  // otherwise.
  Json certificate;
};

// Throws kInvalidArgument for unknown models or bad parameters, and the
// generator errors (kBadB, kOddTotal).
Generated GenerateInstance(const GenerateOptions& options);

std::vector<std::string> ModelNames();

}  // namespace gridflow::cli

#endif  // GRIDFLOW_TOOLS_GENERATE_H_
