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
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "rqg/expansion.hpp"
#include "rqg/graph_model.hpp"
#include "rqg/spectral_core.hpp"

namespace rqg {

/// Parses {"type":"step","b":..,"lambda":..} or
/// {"type":"manhattan","widths":[..],"lambdas":[..]}. Unknown keys, wrong
/// types and invariant violations throw InvalidInput.
PotentialSpec potential_from_json(const nlohmann::json& doc);
PotentialSpec parse_potential(std::string_view text);
nlohmann::json to_json(const PotentialSpec& spec);

/// printf("%.17g").
std::string format_g17(double x);

/// Header `n,separator,level,residual`; one row per level.
void write_spectrum_csv(std::ostream& os, const Spectrum& spec);

nlohmann::json regularity_json(const RegularityReport& reg, long mu,
                               long weyl_residual);

/// Header `code,n,n1,n2,sigma,tau,chi,action,amplitude`; one row per prime
/// orbit in stream order.
void write_orbits_csv(std::ostream& os, const ChainGraph& chain, int max_events);

/// Header `bin_lo,bin_hi,count`.
void write_histogram_csv(std::ostream& os, const SpacingStats& stats);
nlohmann::json spacing_json(const SpacingStats& stats);

/// Header `k,rho`.
void write_density_csv(std::ostream& os, std::span<const double> grid,
                       std::span<const double> rho);

/// One object {n, budget, estimate, exact, error, terms_used} per budget.
nlohmann::json expansion_json(const ExpansionReport& rep);

}  // namespace rqg
