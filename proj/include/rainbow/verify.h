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

// Property suites over exhaustive small instances and seeded random ones.
// A failing check is re-run against the brute-force oracles in naive.h
// before it is reported.

#ifndef RAINBOW_VERIFY_H_
#define RAINBOW_VERIFY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/hypergraph.h"
#include "rainbow/io.h"

namespace rainbow {

// Suite names accepted by RunSuite.
const std::vector<std::string>& SuiteNames();

struct VerifyParams {
  // Size range; 0 selects the suite default.
  int n_min = 0;
  int n_max = 0;
  // Instances (or colourings) per size; 0 selects the suite default.
  int trials = 0;
  std::uint64_t seed = 1;
  // Enumerate every canonical colouring instead of sampling.
  bool exhaustive = false;
  // Matroid presets for the matroid suites; empty selects the default list.
  std::vector<std::string> matroids;
  int cap_nu = kDefaultHeterochromaticCap;
};

struct VerifyReport {
  std::string suite;
  std::string instance;
  std::int64_t attempted = 0;
  std::int64_t passed = 0;
  // Null unless passed < attempted; describes the first failing check.
  Json counterexample;
  // The naive oracle agrees that the counterexample violates the property.
  bool confirmed_by_oracle = false;
  // Suite-specific tallies.
  Json details = Json::object();
  double seconds = 0;

  bool ok() const { return passed == attempted; }
  Json ToJson() const;
};

// Throws kInvalidInput for an unknown suite and kTooLarge for sizes beyond
// the suite's limits.
VerifyReport RunSuite(std::string_view suite, const VerifyParams& params);

}  // namespace rainbow

#endif  // RAINBOW_VERIFY_H_
