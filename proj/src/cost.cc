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

#include "gridflow/cost.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gridflow/error.h"

namespace gridflow {
namespace {

constexpr int kConcavitySamples = 17;

bool IsIntegral(double v) { return std::isfinite(v) && v == std::floor(v); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

CostSpec CostSpec::MakePiecewiseConcave(std::vector<double> breakpoints,
                                        std::vector<double> slopes) {
  if (breakpoints.empty() || breakpoints.size() != slopes.size()) {
    throw Error(ErrorCode::kNonConcaveCost,
                "piecewise cost needs one slope per breakpoint");
  }
  if (breakpoints.front() != 0.0) {
    throw Error(ErrorCode::kNonConcaveCost,
                "piecewise cost must start at breakpoint 0");
  }
  for (size_t k = 1; k < breakpoints.size(); ++k) {
    if (!(breakpoints[k] > breakpoints[k - 1])) {
      throw Error(ErrorCode::kNonConcaveCost,
                  "piecewise breakpoints must be strictly increasing");
    }
    if (slopes[k] > slopes[k - 1]) {
      throw Error(ErrorCode::kNonConcaveCost,
                  "piecewise slopes must be nonincreasing");
    }
  }
  return CostSpec(PiecewiseConcave{std::move(breakpoints), std::move(slopes)});
}

CostSpec CostSpec::MakePower(double coeff, double exponent) {
  if (!(coeff >= 0.0) || !(exponent > 0.0 && exponent <= 1.0)) {
    throw Error(ErrorCode::kNonConcaveCost,
                "power cost needs coeff >= 0 and exponent in (0, 1]");
  }
  return CostSpec(Power{coeff, exponent});
}

CostSpec CostSpec::MakeOpaque(std::function<double(double)> evaluator,
                              std::string label) {
  if (!evaluator) {
    throw Error(ErrorCode::kInvalidArgument, "opaque cost without evaluator");
  }
  return CostSpec(Opaque{std::move(evaluator), std::move(label)});
}

double CostSpec::operator()(double flow) const {
  return std::visit(
      Overloaded{
          [](const Zero&) { return 0.0; },
          [flow](const Linear& c) { return c.slope * flow; },
          [flow](const FixedCharge& c) {
            return flow > 0.0 ? c.setup + c.slope * flow : 0.0;
          },
          [flow](const PiecewiseConcave& c) {
            double value = 0.0;
            for (size_t k = 0; k < c.breakpoints.size(); ++k) {
              const double lo = c.breakpoints[k];
              if (flow <= lo) break;
              const double hi = k + 1 < c.breakpoints.size()
                                    ? std::min(flow, c.breakpoints[k + 1])
                                    : flow;
              value += c.slopes[k] * (hi - lo);
            }
            return value;
          },
          [flow](const Power& c) {
            return flow > 0.0 ? c.coeff * std::pow(flow, c.exponent) : 0.0;
          },
          [flow](const Opaque& c) { return c.evaluator(flow); },
      },
      spec_);
}

bool CostSpec::IsStep() const {
  switch (kind()) {
    case Kind::kZero:
      return true;
    case Kind::kLinear:
      return std::get<Linear>(spec_).slope == 0.0;
    case Kind::kFixedCharge:
      return std::get<FixedCharge>(spec_).slope == 0.0;
    default:
      return false;
  }
}

double CostSpec::StepValue() const {
  if (kind() == Kind::kFixedCharge) return std::get<FixedCharge>(spec_).setup;
  return 0.0;
}

bool CostSpec::IsIntegerValued() const {
  return std::visit(
      Overloaded{
          [](const Zero&) { return true; },
          [](const Linear& c) { return IsIntegral(c.slope); },
          [](const FixedCharge& c) {
            return IsIntegral(c.setup) && IsIntegral(c.slope);
          },
          [](const PiecewiseConcave& c) {
            return std::all_of(c.breakpoints.begin(), c.breakpoints.end(),
                               IsIntegral) &&
                   std::all_of(c.slopes.begin(), c.slopes.end(), IsIntegral);
          },
          [](const Power& c) { return c.coeff == 0.0 || c.exponent == 1.0; },
          [](const Opaque&) { return false; },
      },
      spec_);
}

void CostSpec::ValidateConcave(double upper, double tolerance) const {
  if (kind() == Kind::kFixedCharge && std::get<FixedCharge>(spec_).setup < 0) {
    throw Error(ErrorCode::kNonConcaveCost,
                "fixed charge with negative setup is not concave");
  }
  if (!(upper > 0.0)) return;
  std::vector<double> xs(kConcavitySamples);
  std::vector<double> ys(kConcavitySamples);
  for (int k = 0; k < kConcavitySamples; ++k) {
    xs[k] = upper * k / (kConcavitySamples - 1);
    ys[k] = (*this)(xs[k]);
    if (!std::isfinite(ys[k])) {
      throw Error(ErrorCode::kNonConcaveCost,
                  DebugString() + " is not finite on the sampled range");
    }
  }
  for (int i = 0; i < kConcavitySamples; ++i) {
    for (int j = i + 1; j < kConcavitySamples; ++j) {
      for (int k = j + 1; k < kConcavitySamples; ++k) {
        const double chord = ((xs[k] - xs[j]) * ys[i] + (xs[j] - xs[i]) * ys[k]) /
                             (xs[k] - xs[i]);
        const double slack =
            tolerance * std::max({1.0, std::abs(chord), std::abs(ys[j])});
        if (ys[j] < chord - slack) {
          std::ostringstream msg;
          msg << DebugString() << " is not concave near x=" << xs[j];
          throw Error(ErrorCode::kNonConcaveCost, msg.str());
        }
      }
    }
  }
}

std::string CostSpec::DebugString() const {
  std::ostringstream out;
  std::visit(Overloaded{
                 [&](const Zero&) { out << "Zero"; },
                 [&](const Linear& c) { out << "Linear(" << c.slope << ")"; },
                 [&](const FixedCharge& c) {
                   out << "FixedCharge(" << c.setup << "," << c.slope << ")";
                 },
                 [&](const PiecewiseConcave& c) {
                   out << "PiecewiseConcave(" << c.breakpoints.size() << ")";
                 },
                 [&](const Power& c) {
                   out << "Power(" << c.coeff << "," << c.exponent << ")";
                 },
                 [&](const Opaque& c) { out << "Opaque(" << c.label << ")"; },
             },
             spec_);
  return out.str();
}

}  // namespace gridflow
