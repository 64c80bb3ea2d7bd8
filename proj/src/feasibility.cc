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

#include "gridflow/feasibility.h"

#include <algorithm>
#include <cstdint>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/push_relabel_max_flow.hpp>

#include "gridflow/error.h"

namespace gridflow {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS,
                                            boost::directedS>;
using MaxFlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<
        boost::edge_capacity_t, int64_t,
        boost::property<boost::edge_residual_capacity_t, int64_t,
                        boost::property<boost::edge_reverse_t,
                                        Traits::edge_descriptor>>>>;
using Edge = Traits::edge_descriptor;

struct FeasibilityChecker::Network {
  MaxFlowGraph graph;
  Traits::vertex_descriptor source;
  Traits::vertex_descriptor sink;
  std::vector<Edge> arc_edges;
  std::vector<int64_t> arc_capacity;
  int64_t total_supply = 0;

  Edge AddEdge(int from, int to, int64_t cap) {
    auto capacity = boost::get(boost::edge_capacity, graph);
    auto reverse = boost::get(boost::edge_reverse, graph);
    Edge forward = boost::add_edge(from, to, graph).first;
    Edge backward = boost::add_edge(to, from, graph).first;
    capacity[forward] = cap;
    capacity[backward] = 0;
    reverse[forward] = backward;
    reverse[backward] = forward;
    return forward;
  }
};

FeasibilityChecker::FeasibilityChecker(const GridSpec& grid)
    : network_(std::make_unique<Network>()) {
  Network& net = *network_;
  const int n = grid.num_vertices();
  net.graph = MaxFlowGraph(n + 2);
  net.source = n;
  net.sink = n + 1;
  net.total_supply = grid.total_supply();
  for (ArcId id = 0; id < grid.num_arcs(); ++id) {
    const Arc& a = grid.arc(id);
    const int64_t cap =
        std::min(grid.capacity(id).ValueOr(net.total_supply), net.total_supply);
    net.arc_capacity.push_back(cap);
    net.arc_edges.push_back(
        net.AddEdge(grid.VertexIndex(a.tail), grid.VertexIndex(a.head), cap));
  }
  for (int v = 0; v < n; ++v) {
    const int64_t b = grid.supplies()[v];
    if (b > 0) net.AddEdge(n, v, b);
    if (b < 0) net.AddEdge(v, n + 1, -b);
  }
}

FeasibilityChecker::~FeasibilityChecker() = default;

bool FeasibilityChecker::Feasible(const std::vector<bool>& open) {
  Network& net = *network_;
  if (open.size() != net.arc_edges.size()) {
    throw Error(ErrorCode::kInvalidArgument, "open mask has wrong size");
  }
  auto capacity = boost::get(boost::edge_capacity, net.graph);
  for (size_t i = 0; i < open.size(); ++i) {
    capacity[net.arc_edges[i]] = open[i] ? net.arc_capacity[i] : 0;
  }
  if (net.total_supply == 0) return true;
  const int64_t flow =
      boost::push_relabel_max_flow(net.graph, net.source, net.sink);
  return flow == net.total_supply;
}

std::optional<FlowAssignment> FeasibilityChecker::FeasibleFlow(
    const std::vector<bool>& open) {
  if (!Feasible(open)) return std::nullopt;
  const Network& net = *network_;
  auto capacity = boost::get(boost::edge_capacity, net.graph);
  auto residual = boost::get(boost::edge_residual_capacity, net.graph);
  FlowAssignment flow(static_cast<int>(net.arc_edges.size()));
  if (net.total_supply == 0) return flow;
  for (size_t i = 0; i < net.arc_edges.size(); ++i) {
    const Edge e = net.arc_edges[i];
    flow[static_cast<ArcId>(i)] = capacity[e] - residual[e];
  }
  return flow;
}

bool IsInstanceFeasible(const GridSpec& grid) {
  FeasibilityChecker checker(grid);
  return checker.Feasible(std::vector<bool>(grid.num_arcs(), true));
}

}  // namespace gridflow
