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
#include <span>
#include <variant>
#include <vector>

namespace rqg {

/// Scaling step potential on the unit interval: V = 0 for x < b and
/// V = lambda * E for x > b.
struct StepPotentialSpec {
  double b = 0.0;
  double lambda = 0.0;
};

/// Piecewise-constant scaling potential with m regions. Region i has width
/// widths[i] and height lambdas[i] * E.
struct ManhattanPotentialSpec {
  std::vector<double> widths;
  std::vector<double> lambdas;
};

using PotentialSpec = std::variant<StepPotentialSpec, ManhattanPotentialSpec>;

/// Linear chain graph with hard walls at both ends.
///
/// Bond i carries the reduced action L_i (phase per unit wave number).
/// Vertex j sits between bonds j and j+1 and reflects a wave arriving from
/// bond j with amplitude r_j, and a wave arriving from bond j+1 with -r_j.
/// Each wall reflects with amplitude -1.
///
/// The vertex coefficient is real; complex vertex scattering (e.g. delta
/// potentials) would extend this type.
class ChainGraph {
 public:
  static constexpr double kWallPhase = -1.0;

  ChainGraph(std::vector<double> bond_actions,
             std::vector<double> vertex_reflections);

  std::span<const double> bond_actions() const noexcept { return bonds_; }
  std::span<const double> vertex_reflections() const noexcept {
    return reflections_;
  }
  std::size_t bond_count() const noexcept { return bonds_.size(); }
  double wall_phase() const noexcept { return kWallPhase; }

  /// Sum of all bond actions.
  double total_action() const noexcept { return total_; }

  /// Relative local wave numbers beta_i, normalized so beta_1 = 1.
  /// Recovered from the reflection coefficients via
  /// beta_{j+1} / beta_j = (1 - r_j) / (1 + r_j).
  std::vector<double> relative_wave_numbers() const;

  friend bool operator==(const ChainGraph&, const ChainGraph&) = default;

 private:
  std::vector<double> bonds_;
  std::vector<double> reflections_;
  double total_ = 0.0;
};

void validate(const StepPotentialSpec& spec);
void validate(const ManhattanPotentialSpec& spec);

/// Two-bond chain: L1 = b, L2 = beta (1 - b), r = (1 - beta) / (1 + beta),
/// beta = sqrt(1 - lambda). Region 1 (x < b) is field free.
ChainGraph chain_from_step(const StepPotentialSpec& spec);

/// L_i = beta_i w_i and r_j = (beta_j - beta_{j+1}) / (beta_j + beta_{j+1}).
ChainGraph chain_from_manhattan(const ManhattanPotentialSpec& spec);

ChainGraph chain_from_potential(const PotentialSpec& spec);

/// Real secular function of the chain at wave number k > 0, evaluated by
/// 2x2 transfer matrices and normalized so that its expansion in sines has
/// leading term sin(S0 k) with unit coefficient. For two bonds this is
/// sin(L k) - r sin((L1 - L2) k).
double secular_value(const ChainGraph& chain, double k);

}  // namespace rqg
