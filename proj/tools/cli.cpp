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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "rqg/errors.hpp"
#include "rqg/expansion.hpp"
#include "rqg/io.hpp"
#include "rqg/orbits.hpp"
#include "rqg/spectral_core.hpp"
#include "rqg/trig_form.hpp"
#include "rqg/verification.hpp"

namespace rqg::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Domain rejection that is not a regularity failure (e.g. orbit coding on a
/// chain with more than two bonds).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kConfigKeys = {
    "potential", "levels", "n", "budgets", "budget", "bins",
    "smoothing", "k_min", "k_max", "points"};

long integer_field(const json& doc, const char* key, long min) {
  const json& v = doc.at(key);
  if (!v.is_number_integer()) {
    throw InvalidInput(fmt::format("config '{}' must be an integer", key));
  }
  const long x = v.get<long>();
  if (x < min) throw InvalidInput(fmt::format("config '{}' must be >= {}", key, min));
  return x;
}

double real_field(const json& doc, const char* key) {
  const json& v = doc.at(key);
  if (!v.is_number()) throw InvalidInput(fmt::format("config '{}' must be a number", key));
  return v.get<double>();
}

std::vector<long> integer_list(const json& doc, const char* key, long min) {
  const json& v = doc.at(key);
  std::vector<long> out;
  if (v.is_array()) {
    if (v.empty()) throw InvalidInput(fmt::format("config '{}' must not be empty", key));
    for (const json& x : v) {
      if (!x.is_number_integer() || x.get<long>() < min) {
        throw InvalidInput(
            fmt::format("config '{}' must hold integers >= {}", key, min));
      }
      out.push_back(x.get<long>());
    }
  } else {
    out.push_back(integer_field(doc, key, min));
  }
  return out;
}

struct Output {
  fs::path path;
  std::string content;
};

// Writes every file only after all content exists; each file goes through a
// temporary so a failed write leaves no partial output behind.
void commit(const fs::path& dir, const std::vector<Output>& outputs, std::ostream& out) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoFailure(fmt::format("cannot create output directory {}: {}", dir.string(),
                                ec.message()));
  }
  for (const Output& o : outputs) {
    const fs::path target = dir / o.path;
    const fs::path tmp = fs::path(target.string() + ".tmp");
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      f << o.content;
      f.close();
      if (!f) {
        fs::remove(tmp, ec);
        throw IoFailure(fmt::format("cannot write {}", target.string()));
      }
    }
    fs::rename(tmp, target, ec);
    if (ec) {
      fs::remove(tmp, ec);
      throw IoFailure(fmt::format("cannot write {}: {}", target.string(), ec.message()));
    }
    fmt::print(out, "wrote {}\n", target.string());
  }
}

struct Pipeline {
  ChainGraph chain;
  TrigForm trig;
  RegularityReport reg;
  long mu;
};

Pipeline regular_pipeline(const RunConfig& cfg) {
  if (!cfg.potential) throw InvalidInput("config needs a 'potential'");
  ChainGraph chain = chain_from_potential(*cfg.potential);
  TrigForm trig = trig_form(chain);
  require_regular(trig);
  const RegularityReport reg = regularity(trig);
  const long mu = find_mu(trig);
  return {std::move(chain), std::move(trig), reg, mu};
}

void require_two_bonds(const ChainGraph& chain) {
  if (chain.bond_count() != 2) {
    throw Unsupported(fmt::format(
        "periodic-orbit coding is available for two-bond chains only; this "
        "potential gives {} bonds",
        chain.bond_count()));
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<Output> cmd_solve(const RunConfig& cfg) {
  const Pipeline p = regular_pipeline(cfg);
  const auto count = static_cast<std::size_t>(cfg.levels.value_or(100));
  const Spectrum spec = spectrum(p.trig, p.mu, count);
  std::ostringstream csv;
  write_spectrum_csv(csv, spec);
  json summary = regularity_json(p.reg, p.mu, weyl_residual(spec, p.trig));
  return {{"spectrum.csv", csv.str()}, {"regularity.json", dump(summary)}};
}

std::vector<Output> cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const Pipeline p = regular_pipeline(cfg);
  require_two_bonds(p.chain);
  const std::vector<long> levels =
      cfg.level_indices.empty() ? std::vector<long>{1, 10, 100} : cfg.level_indices;
  const std::vector<int> budgets =
      cfg.budgets.empty() ? std::vector<int>{5, 20} : cfg.budgets;
  json rows = json::array();
  for (long n : levels) {
    const ExpansionReport rep = convergence_report(p.chain, p.trig, p.mu, n, budgets);
    for (std::size_t i = 0; i < rep.budgets.size(); ++i) {
      fmt::print(out, "n={} budget={} estimate={:.6f} exact={:.6f} error={:.3g}\n", n,
                 rep.budgets[i], rep.estimates[i], rep.exact, rep.errors[i]);
    }
    for (json& row : expansion_json(rep)) rows.push_back(std::move(row));
  }
  return {{"expansion.json", dump(rows)}};
}

std::vector<Output> cmd_orbits(const RunConfig& cfg) {
  if (!cfg.potential) throw InvalidInput("config needs a 'potential'");
  const ChainGraph chain = chain_from_potential(*cfg.potential);
  require_two_bonds(chain);
  const int budget = cfg.budget.value_or(5);
  validate_event_budget(budget);
  std::ostringstream csv;
  write_orbits_csv(csv, chain, budget);
  return {{"orbits.csv", csv.str()}};
}

std::vector<Output> cmd_stats(const RunConfig& cfg) {
  const Pipeline p = regular_pipeline(cfg);
  const auto count = static_cast<std::size_t>(cfg.levels.value_or(10000));
  if (count < 2) throw InvalidInput("stats needs 'levels' >= 2");
  const Spectrum spec = spectrum(p.trig, p.mu, count);
  const SpacingStats st =
      spacing_stats(spec, p.reg, static_cast<std::size_t>(cfg.bins.value_or(20)));
  std::ostringstream csv;
  write_histogram_csv(csv, st);
  json summary = spacing_json(st);
  summary["levels"] = count;
  summary["weyl_residual"] = weyl_residual(spec, p.trig);
  return {{"spacing_histogram.csv", csv.str()}, {"spacing.json", dump(summary)}};
}

std::vector<Output> cmd_density(const RunConfig& cfg) {
  const Pipeline p = regular_pipeline(cfg);
  require_two_bonds(p.chain);
  const double lo = cfg.k_min.value_or(separator(p.trig, p.mu, 0));
  const double hi = cfg.k_max.value_or(separator(p.trig, p.mu, 20));
  const long points = cfg.points.value_or(2001);
  if (!(hi > lo)) throw InvalidInput("density needs k_max > k_min");
  if (points < 2) throw InvalidInput("density needs 'points' >= 2");
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  const std::vector<double> rho = density_truncated(
      p.chain, p.trig, grid, cfg.budget.value_or(20), cfg.smoothing.value_or(0.2));
  std::ostringstream csv;
  write_density_csv(csv, grid, rho);
  return {{"density.csv", csv.str()}};
}

}  // namespace

RunConfig config_from_json(const json& doc) {
  if (!doc.is_object()) throw InvalidInput("config must be a JSON object");
  RunConfig cfg;
  if (doc.contains("type")) {
    cfg.potential = potential_from_json(doc);
    return cfg;
  }
  for (const auto& [key, value] : doc.items()) {
    if (!kConfigKeys.contains(key)) {
      throw InvalidInput(fmt::format("unknown config key '{}'", key));
    }
  }
  if (doc.contains("potential")) cfg.potential = potential_from_json(doc.at("potential"));
  if (doc.contains("levels")) cfg.levels = integer_field(doc, "levels", 1);
  if (doc.contains("n")) cfg.level_indices = integer_list(doc, "n", 1);
  if (doc.contains("budgets")) {
    for (long b : integer_list(doc, "budgets", 0)) {
      validate_event_budget(static_cast<int>(std::min<long>(b, kMaxEventBudget + 1)));
      cfg.budgets.push_back(static_cast<int>(b));
    }
    if (!std::is_sorted(cfg.budgets.begin(), cfg.budgets.end(), std::less_equal<>{})) {
      throw InvalidInput("config 'budgets' must be strictly increasing");
    }
  }
  if (doc.contains("budget")) {
    const long b = integer_field(doc, "budget", 0);
    validate_event_budget(static_cast<int>(std::min<long>(b, kMaxEventBudget + 1)));
    cfg.budget = static_cast<int>(b);
  }
  if (doc.contains("bins")) cfg.bins = integer_field(doc, "bins", 1);
  if (doc.contains("smoothing")) {
    cfg.smoothing = real_field(doc, "smoothing");
    if (!(*cfg.smoothing > 0.0)) throw InvalidInput("config 'smoothing' must be positive");
  }
  if (doc.contains("k_min")) cfg.k_min = real_field(doc, "k_min");
  if (doc.contains("k_max")) cfg.k_max = real_field(doc, "k_max");
  if (doc.contains("points")) cfg.points = integer_field(doc, "points", 2);
  return cfg;
}

RunConfig load_config(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw InvalidInput(fmt::format("cannot read config file {}", path.string()));
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    throw InvalidInput(fmt::format("config {} is not valid JSON: {}", path.string(), e.what()));
  }
  return config_from_json(doc);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact spectra and periodic-orbit expansions of regular quantum graphs",
               "regular-qgraph"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  const auto add_common = [&](CLI::App* sub, bool config_required) {
    auto* opt = sub->add_option("--config", config_path, "JSON config file");
    if (config_required) opt->required();
    sub->add_option("--out", out_dir, "Output directory")->capture_default_str();
  };
  add_common(app.add_subcommand("solve", "Exact spectrum and regularity report"), true);
  add_common(app.add_subcommand("expand", "Periodic-orbit estimates of single levels"), true);
  add_common(app.add_subcommand("orbits", "Dump prime periodic orbits"), true);
  add_common(app.add_subcommand("stats", "Nearest-neighbour spacing histogram"), true);
  add_common(app.add_subcommand("density", "Smoothed truncated density of states"), true);
  add_common(app.add_subcommand("verify-paper", "Run the reference acceptance checks"), false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "verify-paper") {
      const auto results = verify::run_acceptance_suite();
      return verify::print_results(out, results) ? kOk : kFailure;
    }
    const RunConfig cfg = load_config(config_path);
    std::vector<Output> outputs;
    if (command == "solve") outputs = cmd_solve(cfg);
    else if (command == "expand") outputs = cmd_expand(cfg, out);
    else if (command == "orbits") outputs = cmd_orbits(cfg);
    else if (command == "stats") outputs = cmd_stats(cfg);
    else if (command == "density") outputs = cmd_density(cfg);
    commit(out_dir, outputs, out);
    return kOk;
  } catch (const NotRegular& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const BracketFailure& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace rqg::cli
