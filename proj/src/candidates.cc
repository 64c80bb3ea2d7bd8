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

#include "gridflow/candidates.h"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "gridflow/error.h"

namespace gridflow {
namespace {

using Values = std::vector<int64_t>;

Values Sorted(std::set<int64_t> values) { return {values.begin(), values.end()}; }

// prefix[t] = b[row][0] + ... + b[row][t-1].
Values RowPrefix(const GridSpec& grid, int row) {
  Values prefix(grid.cols() + 1, 0);
  for (int t = 0; t < grid.cols(); ++t) {
    prefix[t + 1] = prefix[t] + grid.supply(row, t);
  }
  return prefix;
}

// Sums over columns [i, j), empty included, with i >= from.
std::set<int64_t> IntervalSums(const Values& prefix, int from = 0) {
  std::set<int64_t> sums{0};
  const int n = static_cast<int>(prefix.size()) - 1;
  for (int i = from; i <= n; ++i) {
    for (int j = i; j <= n; ++j) sums.insert(prefix[j] - prefix[i]);
  }
  return sums;
}

// Signed boundary sums for terminals confined to rows `top` and `bottom`.
std::set<int64_t> BoundarySumSet(const GridSpec& grid, int top, int bottom) {
  const Values p = RowPrefix(grid, top);
  std::set<int64_t> sums = IntervalSums(p);
  if (bottom != top) {
    const Values q = RowPrefix(grid, bottom);
    const std::set<int64_t> lower = IntervalSums(q);
    sums.insert(lower.begin(), lower.end());
    const int n = grid.cols();
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; j <= n; ++j) {
        sums.insert(p[i] + q[j]);
        sums.insert((p[n] - p[i]) + (q[n] - q[j]));
      }
    }
  }
  std::set<int64_t> signed_sums;
  for (int64_t s : sums) {
    signed_sums.insert(s);
    signed_sums.insert(-s);
  }
  return signed_sums;
}

// {sum_k m_k U_k : |m_k| <= count_k}, keeping only partial sums that can
// still reach [lo, hi].
std::set<int64_t> SignedCombinationSet(const std::map<int64_t, int64_t>& counts,
                                     int64_t lo, int64_t hi) {
  int64_t remaining = 0;
  for (const auto& [cap, count] : counts) remaining += cap * count;
  std::set<int64_t> sums{0};
  for (const auto& [cap, count] : counts) {
    remaining -= cap * count;
    std::set<int64_t> next;
    for (int64_t p : sums) {
      for (int64_t m = -count; m <= count; ++m) {
        const int64_t v = p + m * cap;
        if (v + remaining >= lo && v - remaining <= hi) next.insert(v);
      }
    }
    sums = std::move(next);
  }
  return sums;
}

// {a + b} restricted to [lo, hi].
std::set<int64_t> Sumset(const std::set<int64_t>& a, const std::set<int64_t>& b,
                         int64_t lo, int64_t hi) {
  std::set<int64_t> out;
  for (int64_t x : a) {
    for (auto it = b.lower_bound(lo - x); it != b.end() && *it <= hi - x;
         ++it) {
      out.insert(x + *it);
    }
  }
  return out;
}

// Largest value a forward arc in `row` can carry.
int64_t RowUpperBound(const GridSpec& grid, int row) {
  const int64_t supply = grid.total_supply();
  int64_t upper = 0;
  for (int t = 0; t + 1 < grid.cols(); ++t) {
    const ArcId id = *grid.ForwardArc(row, t);
    upper = std::max(upper, std::min(supply, grid.capacity(id).ValueOr(supply)));
  }
  return upper;
}

CandidateValueSet PerRow(const GridSpec& grid, CaseKind provenance,
                         const std::set<int64_t>& values, int first_row,
                         int last_row) {
  CandidateValueSet result;
  result.provenance = provenance;
  result.rows.assign(grid.rows(), Values{0});
  for (int l = first_row; l <= last_row; ++l) {
    const int64_t upper = RowUpperBound(grid, l);
    Values row;
    for (auto it = values.lower_bound(0); it != values.end() && *it <= upper;
         ++it) {
      row.push_back(*it);
    }
    if (row.empty() || row.front() != 0) row.insert(row.begin(), 0);
    result.rows[l] = std::move(row);
  }
  return result;
}

// Capacity multiplicities of the arcs that can sit at a positive upper bound.
void CountCapacity(const GridSpec& grid, ArcId id,
                   std::map<int64_t, int64_t>& counts) {
  const Capacity& cap = grid.capacity(id);
  if (cap.is_finite() && cap.value() > 0 && cap.value() <= grid.total_supply()) {
    ++counts[cap.value()];
  }
}

std::set<int64_t> ForwardCrossingSet(const GridSpec& grid) {
  std::set<int64_t> forward{0};
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    const Capacity& cap = grid.capacity(id);
    if (grid.arc(id).kind == ArcKind::kForward && cap.is_finite() &&
        cap.value() <= grid.total_supply()) {
      forward.insert(cap.value());
      forward.insert(-cap.value());
    }
  }
  return forward;
}

// Requires the one-source-row case; rows from the source row to the last
// terminal row.
std::vector<std::set<int64_t>> RowTermSets(const GridSpec& grid, int top,
                                           int bottom) {
  const int n = grid.cols();
  std::vector<std::set<int64_t>> terms;
  {
    const Values p = RowPrefix(grid, top);
    std::set<int64_t> term = IntervalSums(p);
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) term.insert(p[i] + (p[n] - p[j]));
    }
    terms.push_back(std::move(term));
  }
  for (int l = top + 1; l <= bottom; ++l) {
    const Values p = RowPrefix(grid, l);
    std::vector<std::set<int64_t>> tail(n + 1);
    for (int k = 0; k <= n; ++k) tail[k] = IntervalSums(p, k);
    std::set<int64_t> term;
    for (int i = 0; i <= n; ++i) {
      for (int j = i; j <= n; ++j) {
        for (int64_t x : tail[j]) {
          const int64_t two = (p[j] - p[i]) + x;
          term.insert(two);
          term.insert(p[n] - two);
        }
      }
    }
    terms.push_back(std::move(term));
  }
  return terms;
}

// Source row and last terminal row, or nullopt without terminals. Throws
// kCaseMismatch outside the uncapacitated one-source-row case.
std::optional<std::pair<int, int>> UMfgBand(const GridSpec& grid) {
  if (!grid.IsUncapacitated()) {
    throw Error(ErrorCode::kCaseMismatch, "grid has finite capacities");
  }
  const std::vector<int> source_rows = grid.SourceRows();
  if (source_rows.size() > 1) {
    throw Error(ErrorCode::kCaseMismatch, "sources span several rows");
  }
  const std::vector<int> terminal_rows = grid.TerminalRows();
  if (terminal_rows.empty()) return std::nullopt;
  const int top = source_rows.empty() ? 0 : source_rows.front();
  if (terminal_rows.front() < top) {
    throw Error(ErrorCode::kCaseMismatch, "a sink lies above the source row");
  }
  return std::make_pair(top, terminal_rows.back());
}

}  // namespace

std::vector<int64_t> BoundarySums(const GridSpec& grid, int top, int bottom) {
  return Sorted(BoundarySumSet(grid, top, bottom));
}

std::vector<int64_t> SignedCapacityCombinations(
    const std::map<int64_t, int64_t>& counts, int64_t lo, int64_t hi) {
  return Sorted(SignedCombinationSet(counts, lo, hi));
}

std::vector<int64_t> ForwardCrossingValues(const GridSpec& grid) {
  return Sorted(ForwardCrossingSet(grid));
}

std::vector<std::vector<int64_t>> UMfgRowTerms(const GridSpec& grid) {
  std::vector<std::vector<int64_t>> out;
  if (const auto band = UMfgBand(grid)) {
    for (auto& term : RowTermSets(grid, band->first, band->second)) {
      out.push_back(Sorted(std::move(term)));
    }
  }
  return out;
}

bool CandidateValueSet::Contains(int row, int64_t value) const {
  return std::binary_search(rows[row].begin(), rows[row].end(), value);
}

size_t CandidateValueSet::MaxRowSize() const {
  size_t size = 0;
  for (const Values& row : rows) size = std::max(size, row.size());
  return size;
}

size_t CandidateValueSet::TotalSize() const {
  size_t size = 0;
  for (const Values& row : rows) size += row.size();
  return size;
}

CandidateValueSet CandidatesTwoTerminalRows(const GridSpec& grid) {
  const std::vector<int> terminal_rows = grid.TerminalRows();
  if (terminal_rows.size() > 2) {
    throw Error(ErrorCode::kCaseMismatch,
                "terminals occupy " + std::to_string(terminal_rows.size()) +
                    " rows");
  }
  if (terminal_rows.empty()) {
    return PerRow(grid, CaseKind::kCMfgTwoTerminalRows, {0}, 0, -1);
  }
  const int top = terminal_rows.front();
  const int bottom = terminal_rows.back();
  const int64_t supply = grid.total_supply();

  std::map<int64_t, int64_t> counts;
  for (int l = top; l <= bottom; ++l) {
    for (int t = 0; t < grid.cols(); ++t) {
      if (auto f = grid.ForwardArc(l, t)) CountCapacity(grid, *f, counts);
      if (l < bottom) CountCapacity(grid, *grid.DownwardArc(l, t), counts);
    }
  }
  const std::set<int64_t> s = BoundarySumSet(grid, top, bottom);
  const std::set<int64_t> d = SignedCombinationSet(counts, -supply, 2 * supply);
  return PerRow(grid, CaseKind::kCMfgTwoTerminalRows,
                Sumset(s, d, 0, supply), top, bottom);
}

CandidateValueSet CandidatesTwoRowDownCap(const GridSpec& grid) {
  if (grid.rows() != 2) {
    throw Error(ErrorCode::kCaseMismatch,
                "two-row candidates on a grid with " +
                    std::to_string(grid.rows()) + " rows");
  }
  const int64_t supply = grid.total_supply();
  const std::set<int64_t> forward = ForwardCrossingSet(grid);
  std::map<int64_t, int64_t> counts;
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    if (grid.arc(id).kind == ArcKind::kDownward) CountCapacity(grid, id, counts);
  }
  const std::set<int64_t> s = BoundarySumSet(grid, 0, 1);
  const std::set<int64_t> sf = Sumset(s, forward, -2 * supply, 2 * supply);
  const std::set<int64_t> d = SignedCombinationSet(counts, -2 * supply, 3 * supply);
  return PerRow(grid, CaseKind::kTwoRowDownCap, Sumset(sf, d, 0, supply), 0, 1);
}

CandidateValueSet CandidatesUMfgRowOne(const GridSpec& grid) {
  const auto band = UMfgBand(grid);
  if (!band) return PerRow(grid, CaseKind::kUMfgSourcesOneRow, {0}, 0, -1);
  const auto [top, bottom] = *band;
  const int64_t supply = grid.total_supply();
  const std::vector<std::set<int64_t>> terms = RowTermSets(grid, top, bottom);

  int64_t rest_lo = 0;
  int64_t rest_hi = 0;
  for (const auto& term : terms) {
    rest_lo += *term.begin();
    rest_hi += *term.rbegin();
  }
  std::set<int64_t> sums{0};
  for (const auto& term : terms) {
    rest_lo -= *term.begin();
    rest_hi -= *term.rbegin();
    sums = Sumset(sums, term, -rest_hi, supply - rest_lo);
  }
  return PerRow(grid, CaseKind::kUMfgSourcesOneRow, sums, top, bottom);
}

CandidateValueSet CandidatesFullRange(const GridSpec& grid) {
  CandidateValueSet result;
  result.provenance = CaseKind::kFullRange;
  for (int l = 0; l < grid.rows(); ++l) {
    Values row(RowUpperBound(grid, l) + 1);
    for (size_t v = 0; v < row.size(); ++v) row[v] = static_cast<int64_t>(v);
    result.rows.push_back(std::move(row));
  }
  return result;
}

CandidateValueSet CandidatesForCase(const GridSpec& grid,
                                    const InstanceCase& instance_case) {
  switch (instance_case.kind) {
    case CaseKind::kTwoRowDownCap:
      return CandidatesTwoRowDownCap(grid);
    case CaseKind::kCMfgTwoTerminalRows:
      return CandidatesTwoTerminalRows(grid);
    case CaseKind::kUMfgSourcesOneRow:
      return CandidatesUMfgRowOne(grid);
    case CaseKind::kFullRange:
      return CandidatesFullRange(grid);
    default:
      throw Error(ErrorCode::kUnsupported,
                  "no candidate generator for " + instance_case.ToString());
  }
}

CandidateValueSet MergeCandidates(const CandidateValueSet& base,
                                  const CandidateValueSet& extra) {
  if (base.rows.size() != extra.rows.size()) {
    throw Error(ErrorCode::kInvalidArgument, "candidate row counts differ");
  }
  CandidateValueSet result;
  result.provenance = base.provenance;
  for (size_t l = 0; l < base.rows.size(); ++l) {
    std::set<int64_t> merged(base.rows[l].begin(), base.rows[l].end());
    merged.insert(extra.rows[l].begin(), extra.rows[l].end());
    result.rows.push_back(Sorted(std::move(merged)));
  }
  return result;
}

}  // namespace gridflow
