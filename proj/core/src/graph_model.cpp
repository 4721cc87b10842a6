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

#include "rqg/graph_model.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include <fmt/format.h>

#include "rqg/errors.hpp"

namespace rqg {
namespace {

constexpr double kWidthSumTolerance = 1e-12;

void check_lambda(double lambda, const char* what) {
  if (!std::isfinite(lambda) || lambda < 0.0 || lambda >= 1.0) {
    throw InvalidInput(fmt::format(
        "{} = {} outside [0, 1): the local wave number sqrt(1 - lambda) "
        "must be real and positive",
        what, lambda));
  }
}

}  // namespace

ChainGraph::ChainGraph(std::vector<double> bond_actions,
                       std::vector<double> vertex_reflections)
    : bonds_(std::move(bond_actions)),
      reflections_(std::move(vertex_reflections)) {
  if (bonds_.empty()) {
    throw InvalidInput("chain graph needs at least one bond");
  }
  if (reflections_.size() + 1 != bonds_.size()) {
    throw InvalidInput(fmt::format(
        "chain with {} bonds needs {} internal vertices, got {}",
        bonds_.size(), bonds_.size() - 1, reflections_.size()));
  }
  for (std::size_t i = 0; i < bonds_.size(); ++i) {
    if (!std::isfinite(bonds_[i]) || bonds_[i] <= 0.0) {
      throw InvalidInput(
          fmt::format("bond action L_{} = {} must be positive", i + 1,
                      bonds_[i]));
    }
  }
  for (std::size_t j = 0; j < reflections_.size(); ++j) {
    if (!std::isfinite(reflections_[j]) || std::abs(reflections_[j]) >= 1.0) {
      throw InvalidInput(fmt::format(
          "reflection coefficient r_{} = {} must satisfy |r| < 1", j + 1,
          reflections_[j]));
    }
  }
  total_ = std::accumulate(bonds_.begin(), bonds_.end(), 0.0);
}

std::vector<double> ChainGraph::relative_wave_numbers() const {
  std::vector<double> beta(bonds_.size());
  beta[0] = 1.0;
  for (std::size_t j = 0; j < reflections_.size(); ++j) {
    beta[j + 1] = beta[j] * (1.0 - reflections_[j]) / (1.0 + reflections_[j]);
  }
  return beta;
}

void validate(const StepPotentialSpec& spec) {
  if (!std::isfinite(spec.b) || spec.b <= 0.0 || spec.b >= 1.0) {
    throw InvalidInput(
        fmt::format("step position b = {} must lie in (0, 1)", spec.b));
  }
  check_lambda(spec.lambda, "lambda");
}

void validate(const ManhattanPotentialSpec& spec) {
  if (spec.widths.empty()) {
    throw InvalidInput("manhattan potential needs at least one region");
  }
  if (spec.widths.size() != spec.lambdas.size()) {
    throw InvalidInput(
        fmt::format("manhattan potential has {} widths but {} lambdas",
                    spec.widths.size(), spec.lambdas.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < spec.widths.size(); ++i) {
    if (!std::isfinite(spec.widths[i]) || spec.widths[i] <= 0.0) {
      throw InvalidInput(fmt::format("region width {} = {} must be positive",
                                     i + 1, spec.widths[i]));
    }
    check_lambda(spec.lambdas[i], fmt::format("lambda_{}", i + 1).c_str());
    sum += spec.widths[i];
  }
  if (std::abs(sum - 1.0) > kWidthSumTolerance) {
    throw InvalidInput(
        fmt::format("region widths sum to {:.17g}, expected 1", sum));
  }
}

ChainGraph chain_from_step(const StepPotentialSpec& spec) {
  validate(spec);
  const double beta = std::sqrt(1.0 - spec.lambda);
  return ChainGraph({spec.b, beta * (1.0 - spec.b)},
                    {(1.0 - beta) / (1.0 + beta)});
}

ChainGraph chain_from_manhattan(const ManhattanPotentialSpec& spec) {
  validate(spec);
  const std::size_t m = spec.widths.size();
  std::vector<double> beta(m);
  std::vector<double> bonds(m);
  for (std::size_t i = 0; i < m; ++i) {
    beta[i] = std::sqrt(1.0 - spec.lambdas[i]);
    bonds[i] = beta[i] * spec.widths[i];
  }
  std::vector<double> refl(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    refl[j] = (beta[j] - beta[j + 1]) / (beta[j] + beta[j + 1]);
  }
  return ChainGraph(std::move(bonds), std::move(refl));
}

ChainGraph chain_from_potential(const PotentialSpec& spec) {
  return std::visit(
      [](const auto& s) -> ChainGraph {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StepPotentialSpec>) {
          return chain_from_step(s);
        } else {
          return chain_from_manhattan(s);
        }
      },
      spec);
}

double secular_value(const ChainGraph& chain, double k) {
  // State (psi, psi' / k) is continuous across every interface. Inside a
  // region with relative wave number beta and phase phi = L k it evolves by
  //   [ cos phi         sin phi / beta ]
  //   [ -beta sin phi   cos phi        ].
  // Starting from the left wall (psi = 0), psi at the right wall vanishes
  // exactly at the eigenvalues.
  const auto bonds = chain.bond_actions();
  const std::vector<double> beta = chain.relative_wave_numbers();

  double psi = 0.0;
  double dpsi = 1.0;
  for (std::size_t i = 0; i < bonds.size(); ++i) {
    const double phi = bonds[i] * k;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double next_psi = c * psi + s / beta[i] * dpsi;
    const double next_dpsi = -beta[i] * s * psi + c * dpsi;
    psi = next_psi;
    dpsi = next_dpsi;
  }

  // Coefficient of sin(S0 k) in psi: (1 / beta_1) prod_j
  // (beta_j + beta_{j+1}) / (2 beta_{j+1}).
  double norm = 1.0 / beta[0];
  for (std::size_t j = 0; j + 1 < beta.size(); ++j) {
    norm *= (beta[j] + beta[j + 1]) / (2.0 * beta[j + 1]);
  }
  return psi / norm;
}

}  // namespace rqg
