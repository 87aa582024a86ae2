// Copyright 2026 The Authors.
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

#include "rainbow/error.h"

#include <utility>

namespace rainbow {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kDuplicatePoint: return "DuplicatePoint";
    case ErrorCode::kCollinearTriple: return "CollinearTriple";
    case ErrorCode::kTooFewPoints: return "TooFewPoints";
    case ErrorCode::kCoordinateOverflow: return "CoordinateOverflow";
    case ErrorCode::kApexCoincides: return "ApexCoincides";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNotConvexPosition: return "NotConvexPosition";
    case ErrorCode::kWrongInteriorCount: return "WrongInteriorCount";
    case ErrorCode::kWrongColourCount: return "WrongColourCount";
    case ErrorCode::kNotSurjective: return "NotSurjective";
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kEmptyMatrix: return "EmptyMatrix";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kElementInBasis: return "ElementInBasis";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kTooFewVertices: return "TooFewVertices";
    case ErrorCode::kTauMismatch: return "TauMismatch";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::vector<int> indices)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      indices_(std::move(indices)) {}

}  // namespace rainbow
