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

// Acceptance run: one PASS/FAIL line per criterion, then a growth-trend line.
// Exit status 0 iff every criterion passes.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gridflow/candidates.h"
#include "gridflow/classify.h"
#include "gridflow/dp_solver.h"
#include "gridflow/error.h"
#include "gridflow/extreme.h"
#include "gridflow/instance_io.h"
#include "gridflow/oracle.h"
#include "gridflow/reductions.h"
#include "gridflow/spanning_tree.h"
#include "support/baselines.h"
#include "support/random_instances.h"
#include "support/structure_checks.h"

namespace gridflow {
namespace {

using testing::Rng;

// Pinned tolerances and limits.
constexpr double kRealTolerance = 1e-9;
constexpr double kLimitSeconds1 = 60.0;
constexpr double kLimitSeconds2 = 120.0;
constexpr double kLimitSeconds3 = 60.0;
constexpr double kLimitSeconds6 = 600.0;
constexpr int kCount1 = 200;
constexpr int kCount2 = 200;
constexpr int kCount3 = 100;
constexpr int kCount7 = 100;
// Frozen size bound at L = 2, T = 4, K = 1: c * T^2 * (L T)^2 with c = 1.
constexpr double kSizeConstant = 1.0;
constexpr int kSizeInstances = 200;
constexpr double kMaxGrowthSlope = 10.0;

class Timer {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

bool Report(int id, bool pass, const std::string& what,
            const std::string& detail) {
  std::cout << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << " "
            << what << ": " << detail << std::endl;
  return pass;
}

bool AllIntegerCosts(const GridSpec& grid) {
  for (ArcId a = 0; a < grid.num_arcs(); ++a) {
    if (!grid.cost(a).IsIntegerValued()) return false;
  }
  return true;
}

bool CostsAgree(const GridSpec& grid, double a, double b) {
  return AllIntegerCosts(grid) ? a == b : std::abs(a - b) <= kRealTolerance;
}

// Shared by criteria 1 to 5.
struct OracleTally {
  int instances = 0;
  int mismatches = 0;
  int fallbacks = 0;
  int integer_instances = 0;
  int64_t forward_values = 0;
  int64_t missing_values = 0;
  int64_t extreme_points = 0;
  std::vector<std::string> notes;
};

struct Sample {
  GridSpec grid;
  std::vector<FlowAssignment> points;
};

// Solves, enumerates and compares; fills the candidate superset counters.
Sample CheckOne(const GridSpec& grid, OracleTally& tally) {
  Sample sample{grid, EnumerateExtremePoints(grid)};
  ++tally.instances;
  if (AllIntegerCosts(grid)) ++tally.integer_instances;
  double best = 0.0;
  for (size_t i = 0; i < sample.points.size(); ++i) {
    const double c = EvaluateCost(grid, sample.points[i]);
    if (i == 0 || c < best) best = c;
  }
  tally.extreme_points += static_cast<int64_t>(sample.points.size());
  try {
    const SolveResult r = Solve(grid);
    if (r.tag == CaseKind::kBruteForce) ++tally.fallbacks;
    if (!CostsAgree(grid, r.cost, best) || !CheckFlow(grid, r.flow).ok()) {
      ++tally.mismatches;
      if (tally.notes.size() < 5) {
        std::ostringstream note;
        note << "solve " << r.cost << " vs oracle " << best;
        tally.notes.push_back(note.str());
      }
    }
    const CandidateValueSet cand =
        CandidatesForCase(grid, ClassifyInstance(grid));
    for (const FlowAssignment& p : sample.points) {
      for (int l = 0; l < grid.rows(); ++l) {
        for (int t = 0; t + 1 < grid.cols(); ++t) {
          ++tally.forward_values;
          if (!cand.Contains(l, p[*grid.ForwardArc(l, t)])) {
            ++tally.missing_values;
          }
        }
      }
    }
  } catch (const Error& e) {
    ++tally.mismatches;
    if (tally.notes.size() < 5) tally.notes.push_back(e.what());
  }
  return sample;
}

std::string TallyDetail(const OracleTally& t, double seconds, double limit) {
  std::ostringstream out;
  out << t.instances << " instances (" << t.integer_instances
      << " integer-cost), " << t.extreme_points << " extreme points, "
      << t.mismatches << " mismatches, " << t.fallbacks
      << " enumeration fallbacks, " << std::fixed;
  out.precision(1);
  out << seconds << " s (limit " << limit << " s)";
  for (const std::string& n : t.notes) out << "; " << n;
  return out.str();
}

bool TallyPasses(const OracleTally& t, int required, double seconds,
                 double limit) {
  return t.instances >= required && t.mismatches == 0 && t.fallbacks == 0 &&
         seconds < limit;
}

// Criterion 5 on one criterion-1 instance: every tree of every extreme point,
// on the band of rows that can carry flow.
void CheckStructure(const Sample& s, testing::StructureReport& total,
                    int& trees) {
  const std::vector<int> sources = s.grid.SourceRows();
  const int top = sources.empty() ? 0 : sources.front();
  const GridSpec band = s.grid.RowBand(top, s.grid.rows() - 1);
  for (const FlowAssignment& p : s.points) {
    const SpanningTreeSolution tree = BuildAccessibleSpanningTree(
        band, testing::RestrictFlow(s.grid, band, top, p));
    total.Merge(testing::CheckTreeStructure(band, tree));
    ++trees;
  }
}

// ---- Criterion 6 ----

struct FidelityTally {
  int64_t instances = 0;
  int64_t disagreements = 0;
  int64_t yes = 0;
  std::vector<std::string> notes;

  void Record(bool truth, const ReductionInstance& r, const std::string& tag) {
    ++instances;
    if (truth) ++yes;
    bool verdict = false;
    try {
      const OracleResult o = StepCostMinimum(r.grid);
      verdict = r.Accepts(o.cost);
      for (ArcId a = 0; a < r.grid.num_arcs(); ++a) {
        // An optimal flow never needs an absent arc.
        if (o.flow[a] > 0 && r.grid.cost(a)(1.0) >= r.big_m) verdict = !truth;
      }
    } catch (const Error& e) {
      verdict = !truth;
      if (notes.size() < 5) notes.push_back(tag + ": " + e.what());
    }
    if (verdict != truth) {
      ++disagreements;
      if (notes.size() < 5) notes.push_back(tag);
    }
  }
};

std::string Join(const std::vector<int64_t>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    s += (i ? "," : "") + std::to_string(v[i]);
  }
  return s;
}

bool SourceKnapsack(const KnapsackInstance& kp) {
  const int64_t m = testing::KnapsackMinCost(kp.values, kp.costs, kp.target);
  return m >= 0 && m <= kp.budget;
}

void CheckKnapsack(const KnapsackInstance& kp, FidelityTally& tally) {
  const bool truth = SourceKnapsack(kp);
  const std::string tag = "knapsack y=" + Join(kp.values) +
                          " c=" + Join(kp.costs) +
                          " C=" + std::to_string(kp.budget) +
                          " Y=" + std::to_string(kp.target);
  const int64_t max_y = *std::max_element(kp.values.begin(), kp.values.end());
  for (int64_t b : {max_y, max_y + 2}) {
    tally.Record(truth, KnapsackToMfgSinksTwoRows(kp, b),
                 tag + " sinks B=" + std::to_string(b));
  }
  tally.Record(truth, KnapsackToMfgForwardCaps(kp), tag + " forward");
}

// Every item tuple for n <= 2 with every budget and target; random tuples for
// 3 <= n <= 6 with budgets around the cheapest feasible cost.
void KnapsackFidelity(FidelityTally& tally, int64_t& exhaustive) {
  constexpr int kMaxEntry = 5;
  for (int n = 1; n <= 2; ++n) {
    const int tuples = static_cast<int>(std::pow(kMaxEntry, 2 * n));
    for (int code = 0; code < tuples; ++code) {
      KnapsackInstance kp;
      int rest = code;
      for (int i = 0; i < n; ++i) {
        kp.values.push_back(1 + rest % kMaxEntry);
        rest /= kMaxEntry;
        kp.costs.push_back(1 + rest % kMaxEntry);
        rest /= kMaxEntry;
      }
      int64_t sum_y = 0, sum_c = 0;
      for (int i = 0; i < n; ++i) {
        sum_y += kp.values[i];
        sum_c += kp.costs[i];
      }
      for (kp.target = 0; kp.target <= sum_y; ++kp.target) {
        for (kp.budget = 0; kp.budget <= sum_c; ++kp.budget) {
          CheckKnapsack(kp, tally);
          ++exhaustive;
        }
      }
    }
  }
  Rng rng(606);
  auto uniform = [&rng](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  constexpr int kSamplesPerSize = 1000;
  for (int n = 3; n <= 6; ++n) {
    for (int s = 0; s < kSamplesPerSize; ++s) {
      KnapsackInstance kp;
      int64_t sum_y = 0, sum_c = 0;
      for (int i = 0; i < n; ++i) {
        kp.values.push_back(uniform(1, kMaxEntry));
        kp.costs.push_back(uniform(1, kMaxEntry));
        sum_y += kp.values.back();
        sum_c += kp.costs.back();
      }
      kp.target = uniform(0, sum_y);
      const int64_t m =
          testing::KnapsackMinCost(kp.values, kp.costs, kp.target);
      for (int64_t budget : {m - 1, m, m + 1, uniform(0, sum_c)}) {
        if (budget < 0) continue;
        kp.budget = budget;
        CheckKnapsack(kp, tally);
      }
    }
  }
}

// Every multiset with n <= 8 and entries <= 6 whose total is even, in
// ascending order and in one shuffled order.
void PartitionFidelity(FidelityTally& tally) {
  constexpr int kMaxEntry = 6;
  constexpr int kMaxItems = 8;
  Rng rng(608);
  std::vector<int64_t> y;
  std::function<void(int64_t)> extend = [&](int64_t smallest) {
    if (!y.empty()) {
      const int64_t total = std::accumulate(y.begin(), y.end(), int64_t{0});
      if (total % 2 == 0) {
        const bool truth = testing::HasEqualSplit(y);
        std::vector<int64_t> shuffled = y;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (const auto& order : {y, shuffled}) {
          const PartitionInstance pp{order};
          tally.Record(truth, PartitionToMfgVaryingL(pp),
                       "partition varying rows y=" + Join(order));
          tally.Record(truth, PartitionToMfgTwoTerminalRows(pp),
                       "partition two terminal rows y=" + Join(order));
        }
      }
    }
    if (static_cast<int>(y.size()) == kMaxItems) return;
    for (int64_t v = smallest; v <= kMaxEntry; ++v) {
      y.push_back(v);
      extend(v);
      y.pop_back();
    }
  };
  extend(1);
}

// ---- Criterion 7 ----

bool UlspCrossCheck(int& count, int& mismatches, std::string& note) {
  Rng rng(707);
  auto uniform = [&rng](int64_t lo, int64_t hi) {
    return std::uniform_int_distribution<int64_t>(lo, hi)(rng);
  };
  for (count = 0; count < kCount7; ++count) {
    const int periods = static_cast<int>(uniform(1, 10));
    std::vector<int64_t> demand;
    std::vector<double> setup, unit, hold;
    std::vector<CostSpec> production, holding;
    for (int t = 0; t < periods; ++t) {
      demand.push_back(uniform(0, 9));
      setup.push_back(static_cast<double>(uniform(0, 30)));
      unit.push_back(static_cast<double>(uniform(0, 4)));
      production.push_back(CostSpec::MakeFixedCharge(setup.back(), unit.back()));
      if (t + 1 < periods) {
        hold.push_back(static_cast<double>(uniform(0, 5)));
        holding.push_back(CostSpec::MakeLinear(hold.back()));
      }
    }
    const double expected = testing::WagnerWhitin(demand, setup, unit, hold);
    const double got = Solve(UlspToMfg(demand, production, holding)).cost;
    if (got != expected) {
      ++mismatches;
      note = "demand " + Join(demand) + ": " + std::to_string(got) + " vs " +
             std::to_string(expected);
    }
  }
  return mismatches == 0;
}

// ---- Criterion 8 ----

std::string Capture(const std::string& command, int& status) {
  std::string output;
  FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return output;
  }
  std::array<char, 4096> buffer;
  size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    output.append(buffer.data(), n);
  }
  status = pclose(pipe);
  return output;
}

bool CliDeterminism(std::string& detail) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "gridflow_acceptance";
  fs::create_directories(dir);
  const std::string bin = GRIDFLOW_CLI_BINARY;
  const std::string instance = (dir / "i.json").string();
  const std::string solved = (dir / "s.json").string();
  {
    Rng rng(808);
    std::ofstream(instance) << DumpJson(InstanceToJson(
        testing::RandomCMfg(rng, {3, 4, 5, false}, 2)));
  }
  int status = 0;
  std::ofstream(solved) << Capture(bin + " solve " + instance, status);
  const std::vector<std::string> commands = {
      "solve " + instance,
      "solve " + instance + " --threads 2",
      "verify " + instance + " " + solved,
      "enumerate " + instance,
      "oracle " + instance,
      "generate --model ulsp --demands 2,3,0,4 --setup 5 --holding 1",
      "generate --model knapsack-fig3 --values 3,4 --costs 2,3 "
      "--cost-limit 3 --target 4",
      "generate --model knapsack-fig4 --values 3,4 --costs 2,3 "
      "--cost-limit 3 --target 4",
      "generate --model partition-fig6 --values 1,1,2",
      "generate --model partition-fig7 --values 1,1,2",
      "generate --model random --rows 3 --cols 5 --capacities 2 --seed 9",
  };
  int identical = 0;
  int failed = 0;
  for (const std::string& c : commands) {
    int s1 = 0, s2 = 0;
    const std::string a = Capture(bin + " " + c, s1);
    const std::string b = Capture(bin + " " + c, s2);
    if (s1 != 0 || s2 != 0 || a.empty()) {
      ++failed;
    } else if (a == b) {
      ++identical;
    }
  }
  detail = std::to_string(identical) + "/" + std::to_string(commands.size()) +
           " commands byte-identical across two runs, " +
           std::to_string(failed) + " failed to run";
  return identical == static_cast<int>(commands.size());
}

// ---- Growth trend ----

double GrowthSlope(std::string& detail) {
  const std::vector<int> columns = {6, 12, 24, 48};
  std::vector<double> xs, ys;
  for (int t : columns) {
    Rng rng(900 + t);
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
      const GridSpec grid = testing::RandomUMfg(rng, {2, t, 3, true});
      Timer timer;
      Solve(grid);
      best = std::min(best, std::max(timer.Seconds(), 1e-6));
    }
    xs.push_back(std::log(t));
    ys.push_back(std::log(best));
    detail += "T=" + std::to_string(t) + ":" + std::to_string(best) + "s ";
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double num = 0.0, den = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    num += (xs[i] - mx) * (ys[i] - my);
    den += (xs[i] - mx) * (xs[i] - mx);
  }
  return num / den;
}

int Main() {
  bool all = true;
  OracleTally tally1, tally2, tally3;
  testing::StructureReport structure;
  int trees = 0;

  {
    Rng rng(101);
    Timer timer;
    for (int i = 0; i < kCount1; ++i) {
      const int rows = 2 + i % 2;
      const int cols = 3 + (i / 2) % 3;
      const GridSpec grid =
          testing::RandomUMfg(rng, {rows, cols, 5, i % 3 == 0});
      const Sample s = CheckOne(grid, tally1);
      CheckStructure(s, structure, trees);
    }
    const double seconds = timer.Seconds();
    all &= Report(1, TallyPasses(tally1, kCount1, seconds, kLimitSeconds1),
                  "U-MFG oracle equivalence",
                  TallyDetail(tally1, seconds, kLimitSeconds1));
  }
  {
    Rng rng(202);
    Timer timer;
    for (int i = 0; i < kCount2; ++i) {
      const int rows = 2 + i % 2;
      const int cols = 3 + (i / 2) % 2;
      const int k = (i / 4) % 3;
      CheckOne(testing::RandomCMfg(rng, {rows, cols, 5, i % 2 == 0}, k),
               tally2);
    }
    const double seconds = timer.Seconds();
    all &= Report(2, TallyPasses(tally2, kCount2, seconds, kLimitSeconds2),
                  "C-MFG oracle equivalence",
                  TallyDetail(tally2, seconds, kLimitSeconds2));
  }
  {
    Rng rng(303);
    Timer timer;
    for (int i = 0; i < kCount3; ++i) {
      const int cols = 3 + i % 3;
      const int k1 = 1 + (i / 3) % 2;
      CheckOne(testing::RandomTwoRow(rng, {2, cols, 5, i % 2 == 0}, k1),
               tally3);
    }
    const double seconds = timer.Seconds();
    all &= Report(3, TallyPasses(tally3, kCount3, seconds, kLimitSeconds3),
                  "two-row oracle equivalence",
                  TallyDetail(tally3, seconds, kLimitSeconds3));
  }
  {
    const int64_t values = tally1.forward_values + tally2.forward_values +
                           tally3.forward_values;
    const int64_t missing = tally1.missing_values + tally2.missing_values +
                            tally3.missing_values;
    Rng rng(404);
    size_t largest = 0;
    constexpr int kRows = 2, kCols = 4;
    const double bound =
        kSizeConstant * kCols * kCols * (kRows * kCols) * (kRows * kCols);
    for (int i = 0; i < kSizeInstances; ++i) {
      const GridSpec grid = testing::RandomCMfg(rng, {kRows, kCols, 5, true}, 1);
      largest = std::max(largest, CandidatesTwoTerminalRows(grid).MaxRowSize());
    }
    std::ostringstream detail;
    detail << values << " forward-arc values observed, " << missing
           << " outside the candidate set; largest row set at L=2 T=4 K=1 is "
           << largest << " (bound c*T^2*(LT)^2 = " << bound << ", c = "
           << kSizeConstant << ")";
    all &= Report(4, missing == 0 && values > 0 && largest <= bound,
                  "candidate superset", detail.str());
  }
  {
    std::ostringstream detail;
    detail << trees << " trees, " << structure.tree_arcs_checked
           << " tree arcs; violations: accessibility "
           << structure.accessibility << ", kappa monotone "
           << structure.kappa_monotone << ", row-zero runs "
           << structure.row_zero_runs << ", Type2A contiguity "
           << structure.type2a_contiguous << ", Type1/Type2B alternation "
           << structure.type1_type2b_runs << ", row intervals "
           << structure.row_intervals << ", cut formula "
           << structure.cut_formula;
    for (size_t i = 0; i < structure.messages.size() && i < 3; ++i) {
      detail << "; " << structure.messages[i];
    }
    all &= Report(5, structure.total() == 0 && trees > 0,
                  "structural lemma suite", detail.str());
  }
  {
    Timer timer;
    FidelityTally knapsack, partition;
    int64_t exhaustive = 0;
    KnapsackFidelity(knapsack, exhaustive);
    PartitionFidelity(partition);
    const double seconds = timer.Seconds();
    std::ostringstream detail;
    detail << "knapsack " << knapsack.instances << " generated instances ("
           << exhaustive << " exhaustive source instances for n <= 2, "
           << knapsack.yes << " yes), " << knapsack.disagreements
           << " disagreements; partition " << partition.instances
           << " generated instances (" << partition.yes << " yes), "
           << partition.disagreements << " disagreements; " << std::fixed;
    detail.precision(1);
    detail << seconds << " s (limit " << kLimitSeconds6 << " s)";
    for (const auto& n : knapsack.notes) detail << "; " << n;
    for (const auto& n : partition.notes) detail << "; " << n;
    all &= Report(6,
                  knapsack.disagreements == 0 &&
                      partition.disagreements == 0 &&
                      seconds < kLimitSeconds6,
                  "reduction fidelity", detail.str());
  }
  {
    int count = 0, mismatches = 0;
    std::string note;
    const bool ok = UlspCrossCheck(count, mismatches, note);
    all &= Report(7, ok && count >= kCount7, "ULSP vs Wagner-Whitin",
                  std::to_string(count) + " instances, " +
                      std::to_string(mismatches) + " mismatches" +
                      (note.empty() ? "" : "; " + note));
  }
  {
    std::string detail;
    all &= Report(8, CliDeterminism(detail), "CLI determinism", detail);
  }
  {
    std::string detail;
    const double slope = GrowthSlope(detail);
    std::cout << "growth " << (slope < kMaxGrowthSlope ? "PASS" : "FAIL")
              << " log-log slope of solve time vs T at L=2: " << slope
              << " (limit " << kMaxGrowthSlope << "); " << detail
              << std::endl;
  }
  return all ? 0 : 1;
}

}  // namespace
}  // namespace gridflow

int main() { return gridflow::Main(); }
