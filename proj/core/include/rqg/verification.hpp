// Copyright 2026 The regular-qgraph Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "rqg/expansion.hpp"

namespace rqg::verify {

/// Reference chain: step at b = 0.3 with lambda = 1/2.
ChainGraph reference_chain();

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string measured;
  std::string expected;
  std::string tolerance;
  double seconds = 0.0;
  bool passed = false;
};

/// Runs every acceptance criterion on the reference step chain. Runtime
/// limits are part of each criterion.
std::vector<CriterionResult> run_acceptance_suite(ExpansionOptions options = {});

/// One line per criterion; returns true iff all passed.
bool print_results(std::ostream& os, const std::vector<CriterionResult>& results);

/// All aperiodic cyclic binary words of exactly `length` letters, as sorted
/// minimal rotations, found by listing all 2^length words. Independent of
/// LyndonGenerator; meant for small lengths.
std::vector<std::string> brute_force_primes(int length);

}  // namespace rqg::verify
