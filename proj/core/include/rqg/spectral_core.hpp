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
#include <vector>

#include "rqg/graph_model.hpp"
#include "rqg/trig_form.hpp"

namespace rqg {

struct RegularityReport {
  double alpha = 0.0;  // sum |a_i|
  double u = 0.0;      // root-free half-width arccos(alpha) / S0
  double gap = 0.0;    // smallest possible spacing, 2u
  double cut = 0.0;    // largest possible spacing, 2 (pi / S0 - u)
  bool is_regular = false;  // 0 < alpha < 1
  bool is_trivial = false;  // alpha == 0
};

RegularityReport regularity(const TrigForm& trig);

/// Throws NotRegular unless 0 < alpha < 1.
void require_regular(const TrigForm& trig);

/// Offset integer that makes [separator(0), separator(1)] hold the first
/// positive root. The root at k = 0 of an odd secular function (identically
/// vanishing wave function) is not counted. Scans separator windows of width
/// pi / S0 upward from k = 0; throws BracketFailure if the first windows do
/// not change sign.
long find_mu(const TrigForm& trig);

/// (pi / S0) (n + mu - gamma + 1).
double separator_point(double s0, double gamma, long mu, long n) noexcept;
double separator(const TrigForm& trig, long mu, long n) noexcept;

struct RootResult {
  double k = 0.0;
  /// |secular| at the root, evaluated in interval-local coordinates
  /// k = separator(n - 1) + offset.
  double residual = 0.0;
  int iterations = 0;
};

/// Unique root in [separator(n-1), separator(n)] by bisection. Requires
/// alpha < 1; throws BracketFailure if the endpoints do not bracket.
RootResult bracket_root(const TrigForm& trig, long mu, long n);
double exact_root(const TrigForm& trig, long mu, long n);

struct FixedPointOptions {
  int max_iterations = 500;
  double tolerance = 1e-12;
};

struct FixedPointResult {
  double k = 0.0;
  int iterations = 0;
  bool converged = false;
  /// False if any iterate left [separator(n-1), separator(n)].
  bool stayed_in_interval = true;
};

/// Iterates the branch-selected arccos map
///   k <- (pi / S0)(n + mu - gamma) + (1 / S0) { arccos Phi(k)       n + mu even
///                                             { pi - arccos Phi(k)  n + mu odd
/// from the interval midpoint. Non-convergence is reported, never patched
/// with another solver.
FixedPointResult fixed_point_root(const TrigForm& trig, long mu, long n,
                                  FixedPointOptions options = {});

struct Spectrum {
  long mu = 0;
  std::vector<double> separators;  // k^_0 .. k^_N
  std::vector<double> levels;      // k_1 .. k_N
  std::vector<double> residuals;
};

/// First `count` levels by bracket_root. Throws BracketFailure naming the
/// failing index.
Spectrum spectrum(const TrigForm& trig, long mu, std::size_t count);

/// Roots of cos(S0 k + pi gamma) = 0 for alpha = 0 graphs: the first `count`
/// positive points (pi / S0)(j + 1/2 - gamma).
std::vector<double> trivial_levels(const TrigForm& trig, std::size_t count);

struct SpacingStats {
  double min_spacing = 0.0;
  double max_spacing = 0.0;
  double mean_spacing = 0.0;
  double lower_edge = 0.0;  // g
  double upper_edge = 0.0;  // c
  std::vector<std::size_t> counts;

  double bin_width() const noexcept;
};

/// Nearest-neighbour spacing histogram over [g, c] with equal-width bins.
/// Spacings outside [g - 1e-9, c + 1e-9] are an error.
SpacingStats spacing_stats(const Spectrum& spec, const RegularityReport& reg,
                           std::size_t bins);

/// max_n |#{levels < k^_n} - n| over n = 1..N.
long weyl_residual(const Spectrum& spec, const TrigForm& trig);

/// Right-hand side of the closed-form root map of the two-bond chain,
///   pi n / L + (-1)^n (1 / L) arcsin[r sin((L1 - L2) k)].
/// Its fixed points are the eigenvalues.
double step_root_map(const ChainGraph& chain, long n, double k);

}  // namespace rqg
