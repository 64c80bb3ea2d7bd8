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

#ifndef GRIDFLOW_COST_H_
#define GRIDFLOW_COST_H_

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace gridflow {

// A concave arc-cost oracle. Every kind evaluates to 0 at zero flow except
// Opaque, whose value at zero is whatever the evaluator returns.
//
// Evaluation is const and thread-safe for the declarative kinds. Opaque
// evaluators must be safe to call concurrently; the solver may evaluate
// transitions on several threads.
class CostSpec {
 public:
  enum class Kind { kZero, kLinear, kFixedCharge, kPiecewiseConcave, kPower,
                    kOpaque };

  struct Zero {};
  struct Linear {
    double slope = 0.0;
  };
  // c(0) = 0, c(x) = setup + slope * x for x > 0.
  struct FixedCharge {
    double setup = 0.0;
    double slope = 0.0;
  };
  // breakpoints[0] == 0, strictly increasing; slopes[k] applies on
  // [breakpoints[k], breakpoints[k+1]) and the last slope extends to infinity.
  // Slopes must be nonincreasing.
  struct PiecewiseConcave {
    std::vector<double> breakpoints;
    std::vector<double> slopes;
  };
  // coeff * x^exponent with coeff >= 0 and exponent in (0, 1].
  struct Power {
    double coeff = 0.0;
    double exponent = 1.0;
  };
  struct Opaque {
    std::function<double(double)> evaluator;
    std::string label;
  };

  CostSpec() : spec_(Zero{}) {}

  static CostSpec MakeZero() { return CostSpec(Zero{}); }
  static CostSpec MakeLinear(double slope) { return CostSpec(Linear{slope}); }
  static CostSpec MakeFixedCharge(double setup, double slope = 0.0) {
    return CostSpec(FixedCharge{setup, slope});
  }
  static CostSpec MakePiecewiseConcave(std::vector<double> breakpoints,
                                       std::vector<double> slopes);
  static CostSpec MakePower(double coeff, double exponent);
  static CostSpec MakeOpaque(std::function<double(double)> evaluator,
                             std::string label = "opaque");

  Kind kind() const { return static_cast<Kind>(spec_.index()); }
  const auto& spec() const { return spec_; }

  double operator()(double flow) const;

  // True when the cost only depends on whether the flow is positive, i.e. it
  // is Zero or a fixed charge without a per-unit term.
  bool IsStep() const;
  // For step costs: the cost of any positive flow.
  double StepValue() const;

  // True when every evaluation at an integer flow is an integer, so sums of
  // costs are exact in double arithmetic at desk scale.
  bool IsIntegerValued() const;

  // Throws Error(kNonConcaveCost) when the parameters are malformed or when
  // 17 evenly spaced samples over [0, upper] violate concavity by more than
  // `tolerance`.
  void ValidateConcave(double upper, double tolerance) const;

  std::string DebugString() const;

 private:
  using Variant = std::variant<Zero, Linear, FixedCharge, PiecewiseConcave,
                               Power, Opaque>;
  explicit CostSpec(Variant spec) : spec_(std::move(spec)) {}

  Variant spec_;
};

}  // namespace gridflow

#endif  // GRIDFLOW_COST_H_
