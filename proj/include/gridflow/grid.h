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

#ifndef GRIDFLOW_GRID_H_
#define GRIDFLOW_GRID_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gridflow/cost.h"

namespace gridflow {

// Grid coordinates are 0-based: row in [0, L), col in [0, T).
struct Vertex {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string ToString(const Vertex& v);

enum class ArcKind { kForward, kDownward };

struct Arc {
  Vertex tail;
  Vertex head;
  ArcKind kind;
};

// Arc ids index GridSpec::arcs(). They are ordered row-major by tail vertex,
// with the forward arc of a vertex before its downward arc.
using ArcId = int;
using ArcKey = std::pair<Vertex, Vertex>;

// Arc capacity: a nonnegative integer or the symbolic value Unbounded.
class Capacity {
 public:
  static Capacity Unbounded() { return Capacity(); }
  static Capacity Finite(int64_t value);

  bool is_finite() const { return value_.has_value(); }
  // Requires is_finite().
  int64_t value() const { return *value_; }
  bool Admits(int64_t flow) const {
    return flow >= 0 && (!value_ || flow <= *value_);
  }
  // The value, or `fallback` when unbounded.
  int64_t ValueOr(int64_t fallback) const { return value_.value_or(fallback); }

  friend bool operator==(const Capacity&, const Capacity&) = default;

 private:
  std::optional<int64_t> value_;
};

// An L x T grid instance: supplies, arc capacities and concave arc costs.
// Immutable once built; safe to share across threads.
class GridSpec {
 public:
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int num_vertices() const { return rows_ * cols_; }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }

  int VertexIndex(const Vertex& v) const { return v.row * cols_ + v.col; }
  Vertex VertexAt(int index) const { return {index / cols_, index % cols_}; }
  bool Contains(const Vertex& v) const {
    return v.row >= 0 && v.row < rows_ && v.col >= 0 && v.col < cols_;
  }

  int64_t supply(const Vertex& v) const { return supplies_[VertexIndex(v)]; }
  int64_t supply(int row, int col) const { return supply(Vertex{row, col}); }
  const std::vector<int64_t>& supplies() const { return supplies_; }
  // Sum of the positive supplies. Every arc flow of a feasible flow is at
  // most this value, since the grid is acyclic.
  int64_t total_supply() const { return total_supply_; }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(ArcId id) const { return arcs_[id]; }
  const Capacity& capacity(ArcId id) const { return capacities_[id]; }
  const CostSpec& cost(ArcId id) const { return costs_[id]; }

  // The arc (row, col) -> (row, col + 1), if any.
  std::optional<ArcId> ForwardArc(int row, int col) const;
  // The arc (row, col) -> (row + 1, col), if any.
  std::optional<ArcId> DownwardArc(int row, int col) const;
  std::optional<ArcId> FindArc(const Vertex& tail, const Vertex& head) const;

  std::vector<ArcId> OutArcs(const Vertex& v) const;
  std::vector<ArcId> InArcs(const Vertex& v) const;

  // Distinct finite capacity values over all arcs / over downward arcs.
  std::vector<int64_t> DistinctFiniteCapacities() const;
  std::vector<int64_t> DistinctDownwardCapacities() const;
  bool IsUncapacitated() const { return DistinctFiniteCapacities().empty(); }

  // Rows that hold at least one source / at least one source or sink.
  std::vector<int> SourceRows() const;
  std::vector<int> TerminalRows() const;

  // The grid restricted to rows [first_row, last_row]. Requires every vertex
  // outside that band to have zero supply.
  GridSpec RowBand(int first_row, int last_row) const;

 private:
  friend class GridBuilder;
  GridSpec() = default;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<int64_t> supplies_;
  int64_t total_supply_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Capacity> capacities_;
  std::vector<CostSpec> costs_;
  std::vector<int> forward_id_;
  std::vector<int> downward_id_;
};

// Incremental construction of a GridSpec. Arcs not configured default to an
// unbounded capacity and a Zero cost.
class GridBuilder {
 public:
  GridBuilder(int rows, int cols);

  GridBuilder& SetSupply(const Vertex& v, int64_t supply);
  GridBuilder& SetSupplies(const std::vector<std::vector<int64_t>>& supplies);
  GridBuilder& SetCapacity(const Vertex& tail, const Vertex& head,
                           Capacity capacity);
  GridBuilder& SetCost(const Vertex& tail, const Vertex& head, CostSpec cost);
  GridBuilder& SetAllCosts(const CostSpec& cost);
  GridBuilder& SetConcavityTolerance(double tolerance);

  // Validates and returns the instance. Throws kNetSupplyNonzero,
  // kNonConcaveCost or kInvalidArgument.
  GridSpec Build() const;

 private:
  ArcId ResolveArc(const Vertex& tail, const Vertex& head) const;

  GridSpec grid_;
  double tolerance_ = 1e-9;
};

// One-shot form of GridBuilder. `supplies` is an L x T matrix.
GridSpec BuildGrid(int rows, int cols,
                   const std::vector<std::vector<int64_t>>& supplies,
                   const std::map<ArcKey, Capacity>& capacities = {},
                   const std::map<ArcKey, CostSpec>& costs = {});

}  // namespace gridflow

#endif  // GRIDFLOW_GRID_H_
