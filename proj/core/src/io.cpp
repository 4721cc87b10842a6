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

#include "rqg/io.hpp"

#include <ostream>
#include <set>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "rqg/errors.hpp"
#include "rqg/orbits.hpp"

namespace rqg {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& doc, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    if (!allowed.contains(key)) {
      throw InvalidInput(fmt::format("unknown key '{}' in potential spec", key));
    }
  }
}

double number_field(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw InvalidInput(fmt::format("potential spec is missing '{}'", key));
  }
  const json& v = doc.at(key);
  if (!v.is_number()) {
    throw InvalidInput(fmt::format("'{}' must be a number", key));
  }
  return v.get<double>();
}

std::vector<double> number_array(const json& doc, const char* key) {
  if (!doc.contains(key)) {
    throw InvalidInput(fmt::format("potential spec is missing '{}'", key));
  }
  const json& v = doc.at(key);
  if (!v.is_array()) throw InvalidInput(fmt::format("'{}' must be an array", key));
  std::vector<double> out;
  out.reserve(v.size());
  for (const json& x : v) {
    if (!x.is_number()) {
      throw InvalidInput(fmt::format("'{}' must contain only numbers", key));
    }
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

PotentialSpec potential_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("potential spec must be a JSON object");
  if (!doc.contains("type") || !doc.at("type").is_string()) {
    throw InvalidInput("potential spec needs a string 'type'");
  }
  const std::string type = doc.at("type").get<std::string>();
  if (type == "step") {
    reject_unknown_keys(doc, {"type", "b", "lambda"});
    StepPotentialSpec s{number_field(doc, "b"), number_field(doc, "lambda")};
    validate(s);
    return s;
  }
  if (type == "manhattan") {
    reject_unknown_keys(doc, {"type", "widths", "lambdas"});
    ManhattanPotentialSpec s{number_array(doc, "widths"), number_array(doc, "lambdas")};
    validate(s);
    return s;
  }
  throw InvalidInput(fmt::format("unknown potential type '{}'", type));
}

PotentialSpec parse_potential(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(fmt::format("malformed JSON: {}", e.what()));
  }
  return potential_from_json(doc);
}

json to_json(const PotentialSpec& spec) {
  return std::visit(
      [](const auto& s) -> json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, StepPotentialSpec>) {
          return {{"type", "step"}, {"b", s.b}, {"lambda", s.lambda}};
        } else {
          return {{"type", "manhattan"}, {"widths", s.widths}, {"lambdas", s.lambdas}};
        }
      },
      spec);
}

std::string format_g17(double x) { return fmt::format("{:.17g}", x); }

void write_spectrum_csv(std::ostream& os, const Spectrum& spec) {
  os << "n,separator,level,residual\n";
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    fmt::print(os, "{},{:.17g},{:.17g},{:.17g}\n", i + 1, spec.separators[i + 1],
               spec.levels[i], spec.residuals[i]);
  }
}

json regularity_json(const RegularityReport& reg, long mu, long weyl_residual) {
  return {{"alpha", reg.alpha},
          {"u", reg.u},
          {"gap", reg.gap},
          {"cut", reg.cut},
          {"is_regular", reg.is_regular},
          {"is_trivial", reg.is_trivial},
          {"mu", mu},
          {"weyl_residual", weyl_residual}};
}

void write_orbits_csv(std::ostream& os, const ChainGraph& chain, int max_events) {
  os << "code,n,n1,n2,sigma,tau,chi,action,amplitude\n";
  PrimeOrbitStream stream(chain, max_events);
  while (auto p = stream.next()) {
    fmt::print(os, "{},{},{},{},{},{},{},{:.17g},{:.17g}\n", p->code, p->n, p->n1,
               p->n2, p->sigma, p->tau, p->chi, p->action, p->amplitude);
  }
}

void write_histogram_csv(std::ostream& os, const SpacingStats& stats) {
  os << "bin_lo,bin_hi,count\n";
  const double w = stats.bin_width();
  for (std::size_t b = 0; b < stats.counts.size(); ++b) {
    const double lo = stats.lower_edge + w * static_cast<double>(b);
    const double hi = b + 1 == stats.counts.size() ? stats.upper_edge : lo + w;
    fmt::print(os, "{:.17g},{:.17g},{}\n", lo, hi, stats.counts[b]);
  }
}

json spacing_json(const SpacingStats& stats) {
  return {{"min_spacing", stats.min_spacing},
          {"max_spacing", stats.max_spacing},
          {"mean_spacing", stats.mean_spacing},
          {"gap", stats.lower_edge},
          {"cut", stats.upper_edge},
          {"bins", stats.counts.size()}};
}

void write_density_csv(std::ostream& os, std::span<const double> grid,
                       std::span<const double> rho) {
  if (grid.size() != rho.size()) throw InvalidInput("density grid and values differ in length");
  os << "k,rho\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    fmt::print(os, "{:.17g},{:.17g}\n", grid[i], rho[i]);
  }
}

json expansion_json(const ExpansionReport& rep) {
  json rows = json::array();
  for (std::size_t i = 0; i < rep.budgets.size(); ++i) {
    rows.push_back({{"n", rep.n},
                    {"budget", rep.budgets[i]},
                    {"estimate", rep.estimates[i]},
                    {"exact", rep.exact},
                    {"error", rep.errors[i]},
                    {"terms_used", rep.terms_used[i]}});
  }
  return rows;
}

}  // namespace rqg
