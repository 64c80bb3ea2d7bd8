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

#ifndef GRIDFLOW_CLASSIFY_H_
#define GRIDFLOW_CLASSIFY_H_

#include <string>

#include "gridflow/grid.h"

namespace gridflow {

enum class CaseKind {
  // Two rows, any number of forward capacities, K1 distinct downward ones.
  kTwoRowDownCap,
  // Sources and sinks confined to at most two rows, K distinct capacities.
  kCMfgTwoTerminalRows,
  // Uncapacitated, all sources in one row, no terminal above it.
  kUMfgSourcesOneRow,
  kUnsupported,
  // Solver tags that are not classification outcomes.
  kBruteForce,
  kFullRange,
};

std::string CaseKindName(CaseKind kind);

struct InstanceCase {
  CaseKind kind = CaseKind::kUnsupported;
  // K for kCMfgTwoTerminalRows, K1 for kTwoRowDownCap, 0 otherwise.
  int num_capacities = 0;
  // Rows [first_row, last_row] may carry flow; all other rows carry none.
  // For kUMfgSourcesOneRow first_row is the source row.
  int first_row = 0;
  int last_row = 0;

  std::string ToString() const;
};

// Deterministic and total. Priority: kTwoRowDownCap (L == 2, K >= 1), then
// kCMfgTwoTerminalRows (K >= 1), then kUMfgSourcesOneRow (K == 0), then
// kCMfgTwoTerminalRows with K == 0, then kUnsupported.
InstanceCase ClassifyInstance(const GridSpec& grid);

}  // namespace gridflow

#endif  // GRIDFLOW_CLASSIFY_H_
