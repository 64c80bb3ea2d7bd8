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

#include "gridflow/classify.h"

#include <sstream>

namespace gridflow {

std::string CaseKindName(CaseKind kind) {
  switch (kind) {
    case CaseKind::kTwoRowDownCap: return "TwoRowDownCap";
    case CaseKind::kCMfgTwoTerminalRows: return "CMfgTwoTerminalRows";
    case CaseKind::kUMfgSourcesOneRow: return "UMfgSourcesOneRow";
    case CaseKind::kUnsupported: return "Unsupported";
    case CaseKind::kBruteForce: return "BruteForce";
    case CaseKind::kFullRange: return "FullRange";
  }
  return "Unknown";
}

std::string InstanceCase::ToString() const {
  std::ostringstream out;
  out << CaseKindName(kind);
  switch (kind) {
    case CaseKind::kTwoRowDownCap:
      out << "(K1=" << num_capacities << ")";
      break;
    case CaseKind::kCMfgTwoTerminalRows:
      out << "(K=" << num_capacities << ", rows " << first_row << ".."
          << last_row << ")";
      break;
    case CaseKind::kUMfgSourcesOneRow:
      out << "(row " << first_row << ")";
      break;
    default:
      break;
  }
  return out.str();
}

InstanceCase ClassifyInstance(const GridSpec& grid) {
  const int num_caps =
      static_cast<int>(grid.DistinctFiniteCapacities().size());
  const std::vector<int> terminal_rows = grid.TerminalRows();
  const std::vector<int> source_rows = grid.SourceRows();

  InstanceCase result;
  if (grid.rows() == 2 && num_caps >= 1) {
    result.kind = CaseKind::kTwoRowDownCap;
    result.num_capacities =
        static_cast<int>(grid.DistinctDownwardCapacities().size());
    result.first_row = 0;
    result.last_row = 1;
    return result;
  }
  const bool two_terminal_rows = terminal_rows.size() <= 2;
  auto two_rows_case = [&](int k) {
    result.kind = CaseKind::kCMfgTwoTerminalRows;
    result.num_capacities = k;
    result.first_row = terminal_rows.empty() ? 0 : terminal_rows.front();
    result.last_row = terminal_rows.empty() ? 0 : terminal_rows.back();
    return result;
  };
  if (num_caps >= 1) {
    if (two_terminal_rows) return two_rows_case(num_caps);
    return result;
  }
  if (source_rows.size() <= 1) {
    const int row = source_rows.empty() ? 0 : source_rows.front();
    const bool clear_above =
        terminal_rows.empty() || terminal_rows.front() >= row;
    if (clear_above) {
      result.kind = CaseKind::kUMfgSourcesOneRow;
      result.first_row = row;
      result.last_row = terminal_rows.empty() ? row : terminal_rows.back();
      return result;
    }
  }
  if (two_terminal_rows) return two_rows_case(0);
  return result;
}

}  // namespace gridflow
