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

#include "gridflow/error.h"

namespace gridflow {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNetSupplyNonzero: return "NetSupplyNonzero";
    case ErrorCode::kUnknownArc: return "UnknownArc";
    case ErrorCode::kNegativeCapacity: return "NegativeCapacity";
    case ErrorCode::kNonConcaveCost: return "NonConcaveCost";
    case ErrorCode::kInfeasibleFlow: return "InfeasibleFlow";
    case ErrorCode::kInfeasibleInstance: return "InfeasibleInstance";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotExtreme: return "NotExtreme";
    case ErrorCode::kPreconditionSources: return "PreconditionSources";
    case ErrorCode::kNontreeArc: return "NontreeArc";
    case ErrorCode::kPropertyViolated: return "PropertyViolated";
    case ErrorCode::kCaseMismatch: return "CaseMismatch";
    case ErrorCode::kEmptyStage: return "EmptyStage";
    case ErrorCode::kNoPath: return "NoPath";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kUnsupported: return "Unsupported";
    case ErrorCode::kBadB: return "BadB";
    case ErrorCode::kOddTotal: return "OddTotal";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gridflow
