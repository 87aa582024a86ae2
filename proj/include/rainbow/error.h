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

#ifndef RAINBOW_ERROR_H_
#define RAINBOW_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

enum class ErrorCode {
  kInvalidInput,
  kDuplicatePoint,
  kCollinearTriple,
  kTooFewPoints,
  kCoordinateOverflow,
  kApexCoincides,
  kTooLarge,
  kNotConvexPosition,
  kWrongInteriorCount,
  kWrongColourCount,
  kNotSurjective,
  kLoopEdge,
  kBadParameters,
  kEmptyMatrix,
  kNotABasis,
  kElementInBasis,
  kRankTooSmall,
  kDisconnected,
  kTooFewVertices,
  kTauMismatch,
  kGenerationFailed,
};

std::string_view ErrorCodeName(ErrorCode code);

// All validation failures surface as this exception. `indices` carries the
// offending point, edge or element indices when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::vector<int> indices = {});

  ErrorCode code() const { return code_; }
  const std::vector<int>& indices() const { return indices_; }

 private:
  ErrorCode code_;
  std::vector<int> indices_;
};

}  // namespace rainbow

#endif  // RAINBOW_ERROR_H_
