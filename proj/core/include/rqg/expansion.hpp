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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rqg/graph_model.hpp"
#include "rqg/trig_form.hpp"

namespace rqg {

struct ExpansionOptions {
  /// Worker threads; 0 reads RQG_THREADS from the environment and falls
  /// back to the hardware concurrency.
  unsigned threads = 0;
  /// Consecutive prime orbits reduced into one compensated partial sum.
  /// Partial sums are combined in stream order, so the result does not
  /// depend on the thread count.
  std::size_t block_size = 1024;
};

struct LevelEstimate {
  double estimate = 0.0;
  std::uint64_t terms_used = 0;  // (p, nu) pairs with nu * n_p <= budget
};

/// Periodic-orbit expansion of the n-th eigenvalue of a two-bond chain,
/// truncated at nu * n_p <= max_events:
///
///   k_n = k^_n - pi / (2 S0)
///         - (1/pi) Re sum_p sum_nu (A_p^nu e^{i nu S_p k^_n} / nu)
///             { (1 - e^{-i nu w_p}) (i k^_n - 1 / (nu S_p))
///               + (i pi / S0) e^{-i nu w_p} },   w_p = pi S_p / S0.
///
/// Throws InvalidInput if `trig` does not belong to `chain` or the budget
/// is out of range.
LevelEstimate expand_level_detailed(const ChainGraph& chain, const TrigForm& trig,
                                    long mu, long n, int max_events,
                                    ExpansionOptions options = {});

double expand_level(const ChainGraph& chain, const TrigForm& trig, long mu,
                    long n, int max_events, ExpansionOptions options = {});

struct ExpansionReport {
  long n = 0;
  std::vector<int> budgets;
  std::vector<double> estimates;
  double exact = 0.0;
  std::vector<double> errors;
  std::vector<std::uint64_t> terms_used;
};

/// Estimates at each budget against the bracketed exact root. Budgets must
/// be nonempty and strictly increasing.
ExpansionReport convergence_report(const ChainGraph& chain, const TrigForm& trig,
                                   long mu, long n, std::span<const int> budgets,
                                   ExpansionOptions options = {});

/// Truncated density of states
///   rho(k) = S0 / pi + (1/pi) Re sum_p sum_nu T_p A_p^nu e^{i nu S_p k},
/// convolved with a unit-mass Gaussian of standard deviation `width`, which
/// damps each term by exp(-(nu S_p width)^2 / 2). The grid must be strictly
/// increasing and width > 0.
std::vector<double> density_truncated(const ChainGraph& chain, const TrigForm& trig,
                                      std::span<const double> grid, int max_events,
                                      double width, ExpansionOptions options = {});

/// Resolved worker count for `options`.
unsigned resolve_threads(const ExpansionOptions& options);

}  // namespace rqg
