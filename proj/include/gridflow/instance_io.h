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

#ifndef GRIDFLOW_INSTANCE_IO_H_
#define GRIDFLOW_INSTANCE_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gridflow/cost.h"
#include "gridflow/flow.h"
#include "gridflow/grid.h"

namespace gridflow {

using Json = nlohmann::ordered_json;

// Instance files:
//   {"L": 2, "T": 2, "supplies": [[5, 0], [-2, -3]],
//    "arcs": [{"from": [0, 0], "to": [0, 1], "capacity": 3,
//              "cost": {"kind": "linear", "params": {"slope": 1}}}]}
// Coordinates are 0-based. Omitted arcs are uncapacitated with a zero cost;
// "capacity" may be an integer or "inf". Cost kinds: zero, linear,
// fixed_charge, piecewise_concave, power.
//
// Parse functions throw Error(kParseError) with a line and column for
// malformed text, and the GridSpec errors for well-formed but invalid data.
GridSpec ParseInstance(std::string_view text, double tolerance = 1e-9);
GridSpec ReadInstanceFile(const std::string& path, double tolerance = 1e-9);

// Lists every arc explicitly, in arc-id order. Throws kInvalidArgument for
// opaque costs.
Json InstanceToJson(const GridSpec& grid);

Json CostToJson(const CostSpec& cost);
CostSpec CostFromJson(const Json& json);

// Flow files: {"flows": [{"from": [0, 0], "to": [0, 1], "flow": 3}, ...]}.
// Omitted arcs carry 0.
FlowAssignment ParseFlow(const GridSpec& grid, std::string_view text);
FlowAssignment ReadFlowFile(const GridSpec& grid, const std::string& path);
Json FlowToJson(const GridSpec& grid, const FlowAssignment& flow);

// Two-space indentation and a trailing newline.
std::string DumpJson(const Json& json);

}  // namespace gridflow

#endif  // GRIDFLOW_INSTANCE_IO_H_
