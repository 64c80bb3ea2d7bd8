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

#ifndef GRIDFLOW_CANDIDATES_H_
#define GRIDFLOW_CANDIDATES_H_

#include <cstdint>
#include <map>
#include <vector>

#include "gridflow/classify.h"
#include "gridflow/grid.h"

namespace gridflow {

// Candidate flow values shared by all forward arcs of a row.
struct CandidateValueSet {
  CaseKind provenance = CaseKind::kFullRange;
  // rows[l] is sorted, deduplicated and nonnegative.
  std::vector<std::vector<int64_t>> rows;

  bool Contains(int row, int64_t value) const;
  size_t MaxRowSize() const;
  size_t TotalSize() const;
};

// Sources and sinks in at most two rows l1 <= l2. Per row in [l1, l2] the
// sumset S + D, where S holds the boundary sums (intervals of row l1 or row
// l2, prefix + prefix, suffix + suffix) and their negations, and D the signed
// combinations sum m_k U_k with |m_k| bounded by the number of arcs between
// rows l1 and l2 of capacity U_k. Rows outside [l1, l2] get {0}. Throws
// kCaseMismatch when terminals occupy more than two rows.
CandidateValueSet CandidatesTwoTerminalRows(const GridSpec& grid);

// Two rows. The sumset of the signed boundary sums, {0} together with +-U
// for every finite forward capacity U, and signed combinations of the
// downward capacities. Throws kCaseMismatch when L != 2.
CandidateValueSet CandidatesTwoRowDownCap(const GridSpec& grid);

// Uncapacitated with all sources in one row r and no terminal above it. The
// row-r term is an interval sum or a prefix plus a disjoint suffix; each
// lower row contributes a sum over at most two disjoint intervals or the row
// total minus such a sum. Rows above r and below the last terminal row get
// {0}. Throws kCaseMismatch otherwise.
CandidateValueSet CandidatesUMfgRowOne(const GridSpec& grid);

// Every integer in [0, min(total supply, largest capacity in the row)].
CandidateValueSet CandidatesFullRange(const GridSpec& grid);

// Dispatch on a classification. Throws kUnsupported for kUnsupported.
CandidateValueSet CandidatesForCase(const GridSpec& grid,
                                    const InstanceCase& instance_case);

// Building blocks, all sorted and deduplicated.

// Tail-side supply sums when every terminal sits in row `top` or `bottom`:
// interval sums of either row, prefix + prefix and suffix + suffix, empty
// selections included, together with their negations.
std::vector<int64_t> BoundarySums(const GridSpec& grid, int top, int bottom);

// {sum_k m_k U_k : |m_k| <= counts[U_k]}, dropping partial sums that can no
// longer reach [lo, hi].
std::vector<int64_t> SignedCapacityCombinations(
    const std::map<int64_t, int64_t>& counts, int64_t lo, int64_t hi);

// {0} and +-U for every finite forward capacity U up to the total supply.
std::vector<int64_t> ForwardCrossingValues(const GridSpec& grid);

// Per-row terms of the uncapacitated one-source-row case, from the source
// row down to the last terminal row.
std::vector<std::vector<int64_t>> UMfgRowTerms(const GridSpec& grid);

// Union of two candidate sets row by row. The provenance of `base` is kept.
CandidateValueSet MergeCandidates(const CandidateValueSet& base,
                                  const CandidateValueSet& extra);

}  // namespace gridflow

#endif  // GRIDFLOW_CANDIDATES_H_
