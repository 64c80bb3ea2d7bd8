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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "gridflow/candidates.h"
#include "gridflow/dp_solver.h"
#include "gridflow/error.h"
#include "gridflow/extreme.h"
#include "gridflow/oracle.h"
#include "gridflow/reductions.h"
#include "support/baselines.h"
#include "support/random_instances.h"

namespace gridflow {
namespace {

using ::gridflow::testing::I1Flow;
using ::gridflow::testing::MakeI1;

constexpr Vertex kV11{0, 0}, kV12{0, 1}, kV21{1, 0}, kV22{1, 1};

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInternalInconsistency;
}

CandidateValueSet Explicit(std::vector<std::vector<int64_t>> rows) {
  CandidateValueSet c;
  c.provenance = CaseKind::kFullRange;
  c.rows = std::move(rows);
  return c;
}

int StateIndex(const StateGraph& graph, int stage,
               const std::vector<int64_t>& state) {
  const auto& states = graph.states(stage);
  const auto it = std::lower_bound(states.begin(), states.end(), state);
  if (it == states.end() || *it != state) return -1;
  return static_cast<int>(it - states.begin());
}

int EdgeIndex(const StateGraph& graph, int t, int from, int to) {
  const auto [first, last] = graph.EdgeRange(t, from);
  for (int e = first; e < last; ++e) {
    if (graph.edges(t)[e].to == to) return e;
  }
  return -1;
}

// The state path a flow induces, or nullopt when some piece is missing.
std::optional<StatePath> Replay(const GridSpec& grid, const StateGraph& graph,
                                const FlowAssignment& flow) {
  StatePath path;
  for (int t = 0; t <= grid.cols(); ++t) {
    std::vector<int64_t> state(grid.rows(), 0);
    if (t > 0 && t < grid.cols()) {
      for (int l = 0; l < grid.rows(); ++l) {
        state[l] = flow[*grid.ForwardArc(l, t - 1)];
      }
    }
    const int index = StateIndex(graph, t, state);
    if (index < 0) return std::nullopt;
    path.states.push_back(index);
  }
  for (int t = 0; t < grid.cols(); ++t) {
    const int e = EdgeIndex(graph, t, path.states[t], path.states[t + 1]);
    if (e < 0) return std::nullopt;
    path.edges.push_back(e);
    path.cost += graph.edges(t)[e].cost;
  }
  return path;
}

TEST(BuildStateGraphTest, I1ColumnSumFilter) {
  const GridSpec grid = MakeI1();
  const StateGraph graph = BuildStateGraph(grid, Explicit({{0, 3, 5}, {0, 3, 5}}));
  ASSERT_EQ(graph.num_stages(), 3);
  EXPECT_EQ(graph.states(1),
            (std::vector<std::vector<int64_t>>{{0, 3}, {3, 0}}));
  EXPECT_EQ(graph.states(0), (std::vector<std::vector<int64_t>>{{0, 0}}));
  EXPECT_EQ(graph.states(2), (std::vector<std::vector<int64_t>>{{0, 0}}));
}

TEST(BuildStateGraphTest, SingleColumn) {
  const GridSpec grid = BuildGrid(2, 1, {{4}, {-4}});
  const StateGraph graph = BuildStateGraph(grid, CandidatesFullRange(grid));
  ASSERT_EQ(graph.num_stages(), 2);
  EXPECT_EQ(graph.states(0).size(), 1u);
  EXPECT_EQ(graph.states(1).size(), 1u);
  EXPECT_EQ(graph.num_edges(), 1);
}

TEST(BuildStateGraphTest, ZeroSupplyHasOnlyZeroStates) {
  const GridSpec grid = BuildGrid(3, 4, std::vector<std::vector<int64_t>>(
                                            3, std::vector<int64_t>(4)));
  const StateGraph graph =
      BuildStateGraph(grid, CandidatesForCase(grid, ClassifyInstance(grid)));
  for (int t = 0; t < graph.num_stages(); ++t) {
    EXPECT_EQ(graph.states(t),
              (std::vector<std::vector<int64_t>>{{0, 0, 0}}));
  }
}

TEST(BuildStateGraphTest, EmptyStage) {
  EXPECT_EQ(CodeOf([] { BuildStateGraph(MakeI1(), Explicit({{0}, {0}})); }),
            ErrorCode::kEmptyStage);
  EXPECT_EQ(CodeOf([] { BuildStateGraph(MakeI1(), Explicit({{0}})); }),
            ErrorCode::kCaseMismatch);
}

TEST(BuildStateGraphTest, ThreadsDoNotChangeTheGraph) {
  testing::Rng rng(2);
  for (int trial = 0; trial < 5; ++trial) {
    const GridSpec grid = testing::RandomUMfg(rng, {3, 5, 5, true});
    const CandidateValueSet c = CandidatesFullRange(grid);
    const StateGraph one = BuildStateGraph(grid, c, 1);
    const StateGraph four = BuildStateGraph(grid, c, 4);
    ASSERT_EQ(one.num_edges(), four.num_edges());
    EXPECT_EQ(one.oracle_queries(), four.oracle_queries());
    for (int t = 0; t + 1 < one.num_stages(); ++t) {
      for (size_t e = 0; e < one.edges(t).size(); ++e) {
        EXPECT_EQ(one.edges(t)[e].from, four.edges(t)[e].from);
        EXPECT_EQ(one.edges(t)[e].to, four.edges(t)[e].to);
        EXPECT_EQ(one.edges(t)[e].cost, four.edges(t)[e].cost);
      }
    }
  }
}

TEST(TransitionTest, ForcedBalance) {
  const GridSpec grid = BuildGrid(2, 3, {{3, 0, 0}, {0, -2, -1}});
  const auto r = Transition(grid, 1, {3, 0}, {1, 0});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->downward, (std::vector<int64_t>{2}));
}

TEST(TransitionTest, FirstColumn) {
  const GridSpec grid = MakeI1(CostSpec::MakeLinear(1));
  const auto r = Transition(grid, 0, {0, 0}, {3, 0});
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->downward, (std::vector<int64_t>{2}));
  // No forward arcs enter column 0; only the downward arc is charged.
  EXPECT_EQ(r->cost, 2.0);
}

TEST(TransitionTest, DownwardCapacity) {
  const GridSpec grid = BuildGrid(2, 2, {{5, 0}, {-2, -3}},
                                  {{{kV11, kV21}, Capacity::Finite(1)}});
  EXPECT_FALSE(Transition(grid, 0, {0, 0}, {3, 0}).has_value());
}

TEST(TransitionTest, NegativeDownwardAndImbalance) {
  const GridSpec grid = MakeI1();
  EXPECT_FALSE(Transition(grid, 0, {0, 0}, {6, -1}).has_value());
  EXPECT_FALSE(Transition(grid, 0, {0, 0}, {3, 1}).has_value());
}

TEST(TransitionTest, ForwardCapacity) {
  const GridSpec grid = BuildGrid(2, 2, {{5, 0}, {-2, -3}},
                                  {{{kV11, kV12}, Capacity::Finite(2)}});
  EXPECT_FALSE(Transition(grid, 0, {0, 0}, {3, 0}).has_value());
  EXPECT_FALSE(Transition(grid, 1, {3, 0}, {0, 0}).has_value());
}

TEST(ShortestPathTest, I1Linear) {
  const GridSpec grid = MakeI1(CostSpec::MakeLinear(1));
  const StatePath path = ShortestPath(BuildStateGraph(
      grid, CandidatesForCase(grid, ClassifyInstance(grid))));
  EXPECT_EQ(path.cost, 8.0);
}

TEST(ShortestPathTest, ZeroCosts) {
  const GridSpec grid = MakeI1();
  EXPECT_EQ(ShortestPath(BuildStateGraph(grid, CandidatesFullRange(grid))).cost,
            0.0);
}

TEST(ShortestPathTest, KnapsackSinksTwoRows) {
  const ReductionInstance r =
      KnapsackToMfgSinksTwoRows({{3, 4}, {2, 3}, 3, 4}, int64_t{4});
  const StatePath path =
      ShortestPath(BuildStateGraph(r.grid, CandidatesFullRange(r.grid)));
  EXPECT_EQ(path.cost, 3.0);
}

TEST(ShortestPathTest, TiesGoToTheSmallestStateSequence) {
  const GridSpec grid = MakeI1(CostSpec::MakeLinear(1));
  const StateGraph graph = BuildStateGraph(grid, Explicit({{0, 3}, {0, 3}}));
  const StatePath path = ShortestPath(graph);
  EXPECT_EQ(graph.states(1)[path.states[1]], (std::vector<int64_t>{0, 3}));
}

TEST(ShortestPathTest, NoPath) {
  const GridSpec grid = BuildGrid(2, 2, {{5, 0}, {-2, -3}},
                                  {{{kV11, kV21}, Capacity::Finite(2)},
                                   {{kV12, kV22}, Capacity::Finite(0)}});
  const StateGraph graph = BuildStateGraph(grid, CandidatesFullRange(grid));
  EXPECT_EQ(CodeOf([&] { ShortestPath(graph); }), ErrorCode::kNoPath);
}

TEST(RecoverFlowTest, I1ThroughTopPath) {
  const GridSpec grid = MakeI1(CostSpec::MakeLinear(1));
  const StateGraph graph = BuildStateGraph(grid, Explicit({{0, 3}, {0, 3}}));
  const auto path = Replay(
      grid, graph,
      I1Flow(grid, {{{kV11, kV12}, 3}, {{kV11, kV21}, 2}, {{kV12, kV22}, 3}}));
  ASSERT_TRUE(path.has_value());
  const FlowAssignment flow = RecoverFlow(grid, graph, *path);
  EXPECT_EQ(flow, I1Flow(grid, {{{kV11, kV12}, 3},
                                {{kV21, kV22}, 0},
                                {{kV11, kV21}, 2},
                                {{kV12, kV22}, 3}}));
}

TEST(RecoverFlowTest, ZeroSupply) {
  const GridSpec grid = BuildGrid(2, 3, {{0, 0, 0}, {0, 0, 0}});
  const SolveResult r = Solve(grid);
  EXPECT_EQ(r.flow, FlowAssignment::Zero(grid));
  EXPECT_EQ(r.cost, 0.0);
}

TEST(RecoverFlowTest, LotSizingProducesOnce) {
  const GridSpec grid =
      UlspToMfg({2, 3}, std::vector<CostSpec>(2, CostSpec::MakeFixedCharge(5)),
                {CostSpec::MakeLinear(1)});
  const SolveResult r = Solve(grid);
  EXPECT_EQ(r.cost, 8.0);
  EXPECT_EQ(r.flow[*grid.DownwardArc(0, 0)], 5);
  EXPECT_EQ(r.flow[*grid.DownwardArc(0, 1)], 0);
}

TEST(RecoverFlowTest, CostMismatchIsInconsistent) {
  const GridSpec grid = MakeI1(CostSpec::MakeLinear(1));
  const StateGraph graph = BuildStateGraph(grid, Explicit({{0, 3}, {0, 3}}));
  StatePath path = ShortestPath(graph);
  path.cost += 1.0;
  EXPECT_EQ(CodeOf([&] { RecoverFlow(grid, graph, path); }),
            ErrorCode::kInternalInconsistency);
}

TEST(SolveTest, I1) {
  const SolveResult r = Solve(MakeI1(CostSpec::MakeLinear(1)));
  EXPECT_EQ(r.cost, 8.0);
  EXPECT_EQ(r.tag, CaseKind::kUMfgSourcesOneRow);
  EXPECT_GT(r.stats.num_edges, 0);
  EXPECT_GT(r.stats.oracle_queries, 0);
}

TEST(SolveTest, PartitionVaryingRowsYesInstance) {
  const ReductionInstance r = PartitionToMfgVaryingL({{1, 1}});
  const SolveResult s = Solve(r.grid);
  EXPECT_EQ(s.cost, 2.0);
  EXPECT_TRUE(r.Accepts(s.cost));
}

TEST(SolveTest, UnsupportedFallsBackToEnumeration) {
  const GridSpec grid = BuildGrid(
      4, 3, {{0, 0, 0}, {2, 0, 0}, {1, 0, 0}, {0, -1, -2}}, {},
      {{{{1, 0}, {1, 1}}, CostSpec::MakeFixedCharge(3)},
       {{{2, 0}, {3, 0}}, CostSpec::MakeFixedCharge(2, 1)}});
  ASSERT_EQ(ClassifyInstance(grid).kind, CaseKind::kUnsupported);
  const SolveResult r = Solve(grid);
  EXPECT_EQ(r.tag, CaseKind::kBruteForce);
  EXPECT_EQ(r.cost, BruteForceMinimum(grid).cost);
  EXPECT_GT(r.stats.extreme_points, 0);
}

TEST(SolveTest, Errors) {
  EXPECT_EQ(CodeOf([] {
              Solve(BuildGrid(2, 2, {{5, 0}, {-2, -3}},
                              {{{kV11, kV12}, Capacity::Finite(1)},
                               {{kV11, kV21}, Capacity::Finite(1)}}));
            }),
            ErrorCode::kInfeasibleInstance);
  std::vector<std::vector<int64_t>> b(5, std::vector<int64_t>(5, 0));
  b[1][0] = 2;
  b[2][0] = 2;
  b[3][4] = -1;
  b[4][4] = -3;
  EXPECT_EQ(CodeOf([&] { Solve(BuildGrid(5, 5, b)); }),
            ErrorCode::kUnsupported);
}

// Oracle equivalence, path replay and monotone robustness on one family.
void CheckFamily(const std::function<GridSpec(testing::Rng&)>& make,
                 int trials, uint64_t seed) {
  testing::Rng rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const GridSpec grid = make(rng);
    const SolveResult solved = Solve(grid);
    const OracleResult oracle = BruteForceMinimum(grid);
    EXPECT_NEAR(solved.cost, oracle.cost, 1e-9) << "trial " << trial;
    EXPECT_TRUE(CheckFlow(grid, solved.flow).ok());

    const CandidateValueSet candidates =
        CandidatesForCase(grid, ClassifyInstance(grid));
    const StateGraph graph = BuildStateGraph(grid, candidates);
    for (const FlowAssignment& p : EnumerateExtremePoints(grid)) {
      const auto path = Replay(grid, graph, p);
      ASSERT_TRUE(path.has_value()) << "trial " << trial;
      EXPECT_NEAR(path->cost, EvaluateCost(grid, p), 1e-9);
    }
    const SolveResult wider = SolveWithCandidates(
        grid, MergeCandidates(candidates, CandidatesFullRange(grid)));
    EXPECT_NEAR(wider.cost, solved.cost, 1e-9) << "trial " << trial;
  }
}

TEST(OracleEquivalenceTest, UMfg) {
  CheckFamily([](testing::Rng& rng) {
    return testing::RandomUMfg(rng, {3, 4, 5, false});
  }, 25, 51);
}

TEST(OracleEquivalenceTest, CMfg) {
  CheckFamily([](testing::Rng& rng) {
    return testing::RandomCMfg(rng, {3, 3, 4, true}, 1 + rng() % 2);
  }, 25, 52);
}

TEST(OracleEquivalenceTest, TwoRow) {
  CheckFamily([](testing::Rng& rng) {
    return testing::RandomTwoRow(rng, {2, 4, 4, true}, 1 + rng() % 2);
  }, 25, 53);
}

}  // namespace
}  // namespace gridflow
