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

#include "gridflow/dp_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "gridflow/error.h"
#include "gridflow/feasibility.h"
#include "gridflow/oracle.h"

namespace gridflow {
namespace {

using State = std::vector<int64_t>;

// States of stage t in lexicographic order.
std::vector<State> StageStates(const GridSpec& grid,
                               const CandidateValueSet& candidates, int t) {
  const int rows = grid.rows();
  // left[l] / right[l]: supply in rows <= l left / right of the cut.
  std::vector<int64_t> left(rows), right(rows);
  int64_t left_acc = 0, right_acc = 0;
  for (int l = 0; l < rows; ++l) {
    for (int i = 0; i < grid.cols(); ++i) {
      (i < t ? left_acc : right_acc) += grid.supply(l, i);
    }
    left[l] = left_acc;
    right[l] = right_acc;
  }
  std::vector<State> states;
  State current(rows);
  auto extend = [&](auto& self, int l, int64_t prefix) -> void {
    if (l == rows) {
      states.push_back(current);
      return;
    }
    const int64_t cap =
        grid.capacity(*grid.ForwardArc(l, t - 1))
            .ValueOr(std::numeric_limits<int64_t>::max());
    for (int64_t v : candidates.rows[l]) {
      if (v > cap) break;
      const int64_t p = prefix + v;
      if (p > left[l]) break;
      if (p < -right[l]) continue;
      if (l == rows - 1 && p != left[l]) continue;
      current[l] = v;
      self(self, l + 1, p);
    }
  };
  extend(extend, 0, 0);
  return states;
}

struct EdgeChunk {
  std::vector<StateGraph::Edge> edges;
  std::vector<int64_t> downward;
  std::vector<int> per_from;
  int64_t queries = 0;
};

bool WithinTolerance(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance * std::max(1.0, std::abs(b));
}

}  // namespace

std::vector<int64_t> StateGraph::DownwardFlows(int t, int e) const {
  const int width = rows_ - 1;
  const auto first = downward_[t].begin() + static_cast<ptrdiff_t>(e) * width;
  return {first, first + width};
}

std::vector<int64_t> StateGraph::StatesPerStage() const {
  std::vector<int64_t> counts;
  for (const auto& stage : states_) {
    counts.push_back(static_cast<int64_t>(stage.size()));
  }
  return counts;
}

int64_t StateGraph::num_edges() const {
  int64_t count = 0;
  for (const auto& stage : edges_) count += static_cast<int64_t>(stage.size());
  return count;
}

std::optional<TransitionResult> Transition(const GridSpec& grid, int t,
                                           const std::vector<int64_t>& s_prev,
                                           const std::vector<int64_t>& s_next) {
  const int rows = grid.rows();
  for (int l = 0; l < rows; ++l) {
    if (t >= 1 && !grid.capacity(*grid.ForwardArc(l, t - 1)).Admits(s_prev[l])) {
      return std::nullopt;
    }
    if (t + 1 < grid.cols() &&
        !grid.capacity(*grid.ForwardArc(l, t)).Admits(s_next[l])) {
      return std::nullopt;
    }
  }
  TransitionResult result;
  result.downward.resize(rows - 1);
  int64_t carried = 0;
  for (int l = 0; l < rows; ++l) {
    const int64_t out = s_prev[l] + carried + grid.supply(l, t) - s_next[l];
    if (l == rows - 1) {
      if (out != 0) return std::nullopt;
      break;
    }
    if (out < 0 || !grid.capacity(*grid.DownwardArc(l, t)).Admits(out)) {
      return std::nullopt;
    }
    result.downward[l] = out;
    carried = out;
  }
  double cost = 0.0;
  if (t >= 1) {
    for (int l = 0; l < rows; ++l) {
      cost += grid.cost(*grid.ForwardArc(l, t - 1))(
          static_cast<double>(s_prev[l]));
    }
  }
  for (int l = 0; l + 1 < rows; ++l) {
    cost += grid.cost(*grid.DownwardArc(l, t))(
        static_cast<double>(result.downward[l]));
  }
  if (!std::isfinite(cost)) return std::nullopt;
  result.cost = cost;
  return result;
}

StateGraph BuildStateGraph(const GridSpec& grid,
                           const CandidateValueSet& candidates, int threads) {
  if (static_cast<int>(candidates.rows.size()) != grid.rows()) {
    throw Error(ErrorCode::kCaseMismatch,
                "candidate set does not match the grid rows");
  }
  StateGraph graph;
  graph.rows_ = grid.rows();
  graph.cols_ = grid.cols();
  const int stages = grid.cols() + 1;
  graph.states_.resize(stages);
  graph.states_[0] = {State(grid.rows(), 0)};
  graph.states_[stages - 1] = {State(grid.rows(), 0)};
  for (int t = 1; t < stages - 1; ++t) {
    graph.states_[t] = StageStates(grid, candidates, t);
    if (graph.states_[t].empty()) {
      throw Error(ErrorCode::kEmptyStage,
                  "stage " + std::to_string(t) + " has no states");
    }
  }

  threads = std::max(1, threads);
  graph.edges_.resize(stages - 1);
  graph.downward_.resize(stages - 1);
  graph.edge_offsets_.resize(stages - 1);
  const int queries_per_edge_base = grid.rows() - 1;
  for (int t = 0; t + 1 < stages; ++t) {
    const std::vector<State>& from = graph.states_[t];
    const std::vector<State>& to = graph.states_[t + 1];
    const int n = static_cast<int>(from.size());
    const int workers = std::min(threads, n);
    std::vector<EdgeChunk> chunks(workers);
    auto work = [&](int w) {
      EdgeChunk& chunk = chunks[w];
      const int first = static_cast<int>(int64_t{n} * w / workers);
      const int last = static_cast<int>(int64_t{n} * (w + 1) / workers);
      for (int i = first; i < last; ++i) {
        int count = 0;
        for (int j = 0; j < static_cast<int>(to.size()); ++j) {
          std::optional<TransitionResult> tr =
              Transition(grid, t, from[i], to[j]);
          if (!tr) continue;
          chunk.edges.push_back({i, j, tr->cost});
          chunk.downward.insert(chunk.downward.end(), tr->downward.begin(),
                                tr->downward.end());
          chunk.queries += queries_per_edge_base + (t >= 1 ? grid.rows() : 0);
          ++count;
        }
        chunk.per_from.push_back(count);
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (std::thread& th : pool) th.join();
    }
    std::vector<int>& offsets = graph.edge_offsets_[t];
    offsets.push_back(0);
    for (EdgeChunk& chunk : chunks) {
      graph.edges_[t].insert(graph.edges_[t].end(), chunk.edges.begin(),
                             chunk.edges.end());
      graph.downward_[t].insert(graph.downward_[t].end(),
                                chunk.downward.begin(), chunk.downward.end());
      for (int count : chunk.per_from) offsets.push_back(offsets.back() + count);
      graph.oracle_queries_ += chunk.queries;
    }
  }
  return graph;
}

StatePath ShortestPath(const StateGraph& graph) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int stages = graph.num_stages();
  std::vector<std::vector<double>> togo(stages);
  togo[stages - 1].assign(graph.states(stages - 1).size(), 0.0);
  for (int t = stages - 2; t >= 0; --t) {
    togo[t].assign(graph.states(t).size(), kInf);
    for (const StateGraph::Edge& e : graph.edges(t)) {
      togo[t][e.from] = std::min(togo[t][e.from], e.cost + togo[t + 1][e.to]);
    }
  }
  if (togo[0][0] == kInf) {
    throw Error(ErrorCode::kNoPath, "no path through the stage graph");
  }
  StatePath path;
  path.cost = togo[0][0];
  path.states.push_back(0);
  for (int t = 0; t + 1 < stages; ++t) {
    const int from = path.states.back();
    const auto [first, last] = graph.EdgeRange(t, from);
    int chosen = -1;
    for (int e = first; e < last; ++e) {
      const StateGraph::Edge& edge = graph.edges(t)[e];
      if (edge.cost + togo[t + 1][edge.to] == togo[t][from]) {
        chosen = e;
        break;
      }
    }
    if (chosen < 0) {
      throw Error(ErrorCode::kInternalInconsistency, "lost the optimal path");
    }
    path.edges.push_back(chosen);
    path.states.push_back(graph.edges(t)[chosen].to);
  }
  return path;
}

FlowAssignment RecoverFlow(const GridSpec& grid, const StateGraph& graph,
                           const StatePath& path, double tolerance) {
  FlowAssignment flow = FlowAssignment::Zero(grid);
  for (int t = 1; t < grid.cols(); ++t) {
    const std::vector<int64_t>& s = graph.states(t)[path.states[t]];
    for (int l = 0; l < grid.rows(); ++l) flow[*grid.ForwardArc(l, t - 1)] = s[l];
  }
  for (int t = 0; t < grid.cols(); ++t) {
    const std::vector<int64_t> u = graph.DownwardFlows(t, path.edges[t]);
    for (int l = 0; l + 1 < grid.rows(); ++l) flow[*grid.DownwardArc(l, t)] = u[l];
  }
  const FlowCheck check = CheckFlow(grid, flow);
  if (!check.ok()) {
    throw Error(ErrorCode::kInternalInconsistency,
                "recovered flow is infeasible: " +
                    check.violations.front().DebugString(grid));
  }
  const double cost = EvaluateCost(grid, flow);
  if (!WithinTolerance(cost, path.cost, tolerance)) {
    throw Error(ErrorCode::kInternalInconsistency,
                "recovered flow costs " + std::to_string(cost) +
                    " but the path costs " + std::to_string(path.cost));
  }
  return flow;
}

SolveResult SolveWithCandidates(const GridSpec& grid,
                                const CandidateValueSet& candidates,
                                const SolveOptions& options) {
  const StateGraph graph = BuildStateGraph(grid, candidates, options.threads);
  const StatePath path = ShortestPath(graph);
  SolveResult result;
  result.flow = RecoverFlow(grid, graph, path, options.tolerance);
  result.cost = path.cost;
  result.tag = candidates.provenance;
  result.instance_case.kind = candidates.provenance;
  result.stats.states_per_stage = graph.StatesPerStage();
  result.stats.num_edges = graph.num_edges();
  result.stats.oracle_queries = graph.oracle_queries();
  return result;
}

SolveResult Solve(const GridSpec& grid, const SolveOptions& options) {
  if (!IsInstanceFeasible(grid)) {
    throw Error(ErrorCode::kInfeasibleInstance, "no feasible flow exists");
  }
  const InstanceCase instance_case = ClassifyInstance(grid);
  if (instance_case.kind == CaseKind::kUnsupported) {
    SolveResult result;
    EnumerationStats enum_stats;
    OracleResult oracle;
    try {
      oracle = BruteForceMinimum(grid, options.budget, &enum_stats);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kTooLarge) throw;
      throw Error(ErrorCode::kUnsupported,
                  "no polynomial case applies and enumeration is over budget");
    }
    result.flow = std::move(oracle.flow);
    result.cost = oracle.cost;
    result.tag = CaseKind::kBruteForce;
    result.instance_case = instance_case;
    result.stats.extreme_points = oracle.extreme_points;
    result.stats.oracle_queries = oracle.extreme_points * grid.num_arcs();
    return result;
  }
  SolveResult result = SolveWithCandidates(
      grid, CandidatesForCase(grid, instance_case), options);
  result.tag = instance_case.kind;
  result.instance_case = instance_case;
  return result;
}

}  // namespace gridflow
