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

#include "gridflow/grid.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "gridflow/error.h"

namespace gridflow {

std::string ToString(const Vertex& v) {
  std::ostringstream out;
  out << "(" << v.row << "," << v.col << ")";
  return out.str();
}

Capacity Capacity::Finite(int64_t value) {
  if (value < 0) {
    throw Error(ErrorCode::kNegativeCapacity,
                "capacity " + std::to_string(value) + " is negative");
  }
  Capacity cap;
  cap.value_ = value;
  return cap;
}

std::optional<ArcId> GridSpec::ForwardArc(int row, int col) const {
  if (!Contains({row, col})) return std::nullopt;
  const int id = forward_id_[VertexIndex({row, col})];
  if (id < 0) return std::nullopt;
  return id;
}

std::optional<ArcId> GridSpec::DownwardArc(int row, int col) const {
  if (!Contains({row, col})) return std::nullopt;
  const int id = downward_id_[VertexIndex({row, col})];
  if (id < 0) return std::nullopt;
  return id;
}

std::optional<ArcId> GridSpec::FindArc(const Vertex& tail,
                                       const Vertex& head) const {
  if (head.row == tail.row && head.col == tail.col + 1) {
    return ForwardArc(tail.row, tail.col);
  }
  if (head.row == tail.row + 1 && head.col == tail.col) {
    return DownwardArc(tail.row, tail.col);
  }
  return std::nullopt;
}

std::vector<ArcId> GridSpec::OutArcs(const Vertex& v) const {
  std::vector<ArcId> out;
  if (auto id = ForwardArc(v.row, v.col)) out.push_back(*id);
  if (auto id = DownwardArc(v.row, v.col)) out.push_back(*id);
  return out;
}

std::vector<ArcId> GridSpec::InArcs(const Vertex& v) const {
  std::vector<ArcId> in;
  if (auto id = ForwardArc(v.row, v.col - 1)) in.push_back(*id);
  if (auto id = DownwardArc(v.row - 1, v.col)) in.push_back(*id);
  return in;
}

std::vector<int64_t> GridSpec::DistinctFiniteCapacities() const {
  std::set<int64_t> values;
  for (const Capacity& cap : capacities_) {
    if (cap.is_finite()) values.insert(cap.value());
  }
  return {values.begin(), values.end()};
}

std::vector<int64_t> GridSpec::DistinctDownwardCapacities() const {
  std::set<int64_t> values;
  for (ArcId id = 0; id < num_arcs(); ++id) {
    if (arcs_[id].kind == ArcKind::kDownward && capacities_[id].is_finite()) {
      values.insert(capacities_[id].value());
    }
  }
  return {values.begin(), values.end()};
}

std::vector<int> GridSpec::SourceRows() const {
  std::vector<int> rows;
  for (int l = 0; l < rows_; ++l) {
    for (int t = 0; t < cols_; ++t) {
      if (supply(l, t) > 0) {
        rows.push_back(l);
        break;
      }
    }
  }
  return rows;
}

std::vector<int> GridSpec::TerminalRows() const {
  std::vector<int> rows;
  for (int l = 0; l < rows_; ++l) {
    for (int t = 0; t < cols_; ++t) {
      if (supply(l, t) != 0) {
        rows.push_back(l);
        break;
      }
    }
  }
  return rows;
}

GridSpec GridSpec::RowBand(int first_row, int last_row) const {
  if (first_row < 0 || last_row >= rows_ || first_row > last_row) {
    throw Error(ErrorCode::kInvalidArgument, "bad row band");
  }
  GridBuilder builder(last_row - first_row + 1, cols_);
  for (int l = 0; l < rows_; ++l) {
    for (int t = 0; t < cols_; ++t) {
      const int64_t b = supply(l, t);
      if (l < first_row || l > last_row) {
        if (b != 0) {
          throw Error(ErrorCode::kInvalidArgument,
                      "row band drops a vertex with nonzero supply");
        }
        continue;
      }
      builder.SetSupply({l - first_row, t}, b);
    }
  }
  for (ArcId id = 0; id < num_arcs(); ++id) {
    const Arc& a = arcs_[id];
    if (a.tail.row < first_row || a.head.row > last_row) continue;
    const Vertex tail{a.tail.row - first_row, a.tail.col};
    const Vertex head{a.head.row - first_row, a.head.col};
    builder.SetCapacity(tail, head, capacities_[id]);
    builder.SetCost(tail, head, costs_[id]);
  }
  return builder.Build();
}

GridBuilder::GridBuilder(int rows, int cols) {
  if (rows < 1 || cols < 1) {
    throw Error(ErrorCode::kInvalidArgument, "grid dimensions must be >= 1");
  }
  grid_.rows_ = rows;
  grid_.cols_ = cols;
  grid_.supplies_.assign(rows * cols, 0);
  grid_.forward_id_.assign(rows * cols, -1);
  grid_.downward_id_.assign(rows * cols, -1);
  for (int l = 0; l < rows; ++l) {
    for (int t = 0; t < cols; ++t) {
      const int v = l * cols + t;
      if (t + 1 < cols) {
        grid_.forward_id_[v] = static_cast<int>(grid_.arcs_.size());
        grid_.arcs_.push_back({{l, t}, {l, t + 1}, ArcKind::kForward});
      }
      if (l + 1 < rows) {
        grid_.downward_id_[v] = static_cast<int>(grid_.arcs_.size());
        grid_.arcs_.push_back({{l, t}, {l + 1, t}, ArcKind::kDownward});
      }
    }
  }
  grid_.capacities_.assign(grid_.arcs_.size(), Capacity::Unbounded());
  grid_.costs_.assign(grid_.arcs_.size(), CostSpec::MakeZero());
}

ArcId GridBuilder::ResolveArc(const Vertex& tail, const Vertex& head) const {
  if (auto id = grid_.FindArc(tail, head)) return *id;
  throw Error(ErrorCode::kUnknownArc,
              ToString(tail) + "->" + ToString(head) + " is not a grid arc");
}

GridBuilder& GridBuilder::SetSupply(const Vertex& v, int64_t supply) {
  if (!grid_.Contains(v)) {
    throw Error(ErrorCode::kInvalidArgument, ToString(v) + " is off the grid");
  }
  grid_.supplies_[grid_.VertexIndex(v)] = supply;
  return *this;
}

GridBuilder& GridBuilder::SetSupplies(
    const std::vector<std::vector<int64_t>>& supplies) {
  if (static_cast<int>(supplies.size()) != grid_.rows_) {
    throw Error(ErrorCode::kInvalidArgument, "supply matrix has wrong rows");
  }
  for (int l = 0; l < grid_.rows_; ++l) {
    if (static_cast<int>(supplies[l].size()) != grid_.cols_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "supply matrix has wrong columns");
    }
    for (int t = 0; t < grid_.cols_; ++t) SetSupply({l, t}, supplies[l][t]);
  }
  return *this;
}

GridBuilder& GridBuilder::SetCapacity(const Vertex& tail, const Vertex& head,
                                      Capacity capacity) {
  grid_.capacities_[ResolveArc(tail, head)] = capacity;
  return *this;
}

GridBuilder& GridBuilder::SetCost(const Vertex& tail, const Vertex& head,
                                  CostSpec cost) {
  grid_.costs_[ResolveArc(tail, head)] = std::move(cost);
  return *this;
}

GridBuilder& GridBuilder::SetAllCosts(const CostSpec& cost) {
  std::fill(grid_.costs_.begin(), grid_.costs_.end(), cost);
  return *this;
}

GridBuilder& GridBuilder::SetConcavityTolerance(double tolerance) {
  tolerance_ = tolerance;
  return *this;
}

GridSpec GridBuilder::Build() const {
  GridSpec grid = grid_;
  int64_t net = 0;
  int64_t positive = 0;
  for (int64_t b : grid.supplies_) {
    net += b;
    if (b > 0) positive += b;
  }
  if (net != 0) {
    throw Error(ErrorCode::kNetSupplyNonzero,
                "net supply is " + std::to_string(net));
  }
  grid.total_supply_ = positive;
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    const double upper = static_cast<double>(
        std::min(grid.capacities_[id].ValueOr(positive), positive));
    grid.costs_[id].ValidateConcave(upper, tolerance_);
  }
  return grid;
}

GridSpec BuildGrid(int rows, int cols,
                   const std::vector<std::vector<int64_t>>& supplies,
                   const std::map<ArcKey, Capacity>& capacities,
                   const std::map<ArcKey, CostSpec>& costs) {
  GridBuilder builder(rows, cols);
  builder.SetSupplies(supplies);
  for (const auto& [key, cap] : capacities) {
    builder.SetCapacity(key.first, key.second, cap);
  }
  for (const auto& [key, cost] : costs) {
    builder.SetCost(key.first, key.second, cost);
  }
  return builder.Build();
}

}  // namespace gridflow
