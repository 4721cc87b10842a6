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

#include "rqg/verification.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <set>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "rqg/orbits.hpp"
#include "rqg/spectral_core.hpp"
#include "rqg/trig_form.hpp"

namespace rqg::verify {
namespace {

// Reference values for the step chain b = 0.3, lambda = 0.5.
constexpr std::array<long, 3> kLevels = {1, 10, 100};
constexpr std::array<double, 3> kExact = {4.107149, 39.305209, 394.964713};
constexpr std::array<double, 3> kBudget5 = {4.1161, 39.2866, 394.9477};
constexpr std::array<double, 3> kBudget20 = {4.105130, 39.305212, 394.964555};

constexpr double kExactTol = 1e-5;
constexpr double kBudget5Tol = 1e-3;
constexpr double kBudget20Tol = 1e-4;
constexpr double kStructureSlack = 1e-9;
constexpr double kSolverAgreement = 1e-9;
constexpr double kAmplitudeTol = 1e-14;

constexpr std::uint64_t kTermsAt20 = 111321;
constexpr std::size_t kPrimesUpTo12 = 747;
constexpr std::size_t kStructureLevels = 10000;
constexpr long kCrossLevels = 1000;
constexpr int kZoneScanPoints = 64;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Setup {
  ChainGraph chain;
  TrigForm trig;
  long mu;
};

CriterionResult start(int id, std::string name) {
  CriterionResult c;
  c.id = id;
  c.name = std::move(name);
  return c;
}

Setup reference_setup() {
  ChainGraph chain = reference_chain();
  TrigForm trig = trig_form(chain);
  const long mu = find_mu(trig);
  return {std::move(chain), std::move(trig), mu};
}

std::string triple(const std::array<double, 3>& v) {
  return fmt::format("{:.6f} {:.6f} {:.6f}", v[0], v[1], v[2]);
}

CriterionResult exact_spectrum() {
  CriterionResult c = start(1, "exact spectrum k1 k10 k100");
  Stopwatch clock;
  const Setup s = reference_setup();
  std::array<double, 3> got{};
  bool ok = true;
  for (std::size_t i = 0; i < kLevels.size(); ++i) {
    got[i] = exact_root(s.trig, s.mu, kLevels[i]);
    ok = ok && std::abs(got[i] - kExact[i]) <= kExactTol;
  }
  c.seconds = clock.seconds();
  c.measured = triple(got);
  c.expected = triple(kExact);
  c.tolerance = "1e-5 abs, < 1 s";
  c.passed = ok && c.seconds < 1.0;
  return c;
}

CriterionResult truncated(int id, int budget, const std::array<double, 3>& expected,
                          double tol, double limit, std::uint64_t want_terms,
                          const ExpansionOptions& options) {
  CriterionResult c = start(id, fmt::format("orbit expansion at budget {}", budget));
  Stopwatch clock;
  const Setup s = reference_setup();
  std::array<double, 3> got{};
  bool ok = true;
  std::uint64_t terms = 0;
  for (std::size_t i = 0; i < kLevels.size(); ++i) {
    const LevelEstimate e =
        expand_level_detailed(s.chain, s.trig, s.mu, kLevels[i], budget, options);
    got[i] = e.estimate;
    terms = e.terms_used;
    ok = ok && std::abs(got[i] - expected[i]) <= tol;
  }
  c.seconds = clock.seconds();
  c.measured = fmt::format("{} ({} terms)", triple(got), terms);
  c.expected = fmt::format("{} ({} terms)", triple(expected), want_terms);
  c.tolerance = fmt::format("{:g} abs, < {:g} s", tol, limit);
  c.passed = ok && terms == want_terms && c.seconds < limit;
  return c;
}

CriterionResult orbit_census() {
  CriterionResult c = start(4, "orbit census at budget 20");
  Stopwatch clock;
  const ChainGraph chain = reference_chain();
  std::uint64_t streamed = 0;
  OrbitTermStream terms(chain, 20);
  while (terms.next()) ++streamed;
  const OrbitCounts formula = count_orbits(20);

  bool brute_ok = true;
  std::map<int, std::vector<std::string>> by_length;
  LyndonGenerator gen(12);
  while (gen.next()) by_length[static_cast<int>(gen.word().size())].push_back(gen.word());
  for (int n = 1; n <= 12; ++n) {
    auto& mine = by_length[n];
    std::sort(mine.begin(), mine.end());
    brute_ok = brute_ok && mine == brute_force_primes(n);
  }
  c.seconds = clock.seconds();
  c.measured = fmt::format("{} terms (formula {}), brute force n<=12 {}", streamed,
                           formula.terms_total, brute_ok ? "match" : "MISMATCH");
  c.expected = fmt::format("{} terms > 100000, brute force match", kTermsAt20);
  c.tolerance = "exact";
  c.passed = streamed == kTermsAt20 && formula.terms_total == kTermsAt20 &&
             streamed > 100000 && brute_ok;
  return c;
}

CriterionResult structure() {
  CriterionResult c = start(5, "structural invariants on 1e4 levels");
  Stopwatch clock;
  const Setup s = reference_setup();
  const RegularityReport reg = regularity(s.trig);
  const Spectrum spec = spectrum(s.trig, s.mu, kStructureLevels);
  const long weyl = weyl_residual(spec, s.trig);

  double min_d = spec.levels[1] - spec.levels[0];
  double max_d = min_d;
  for (std::size_t i = 1; i < spec.levels.size(); ++i) {
    const double d = spec.levels[i] - spec.levels[i - 1];
    min_d = std::min(min_d, d);
    max_d = std::max(max_d, d);
  }
  bool confined = true;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    confined = confined &&
               spec.levels[i] >= spec.separators[i] + reg.u - kStructureSlack &&
               spec.levels[i] <= spec.separators[i + 1] - reg.u + kStructureSlack;
  }

  // Scan each root-free zone (k^_n - u, k^_n + u) with the transfer-matrix
  // secular function: it must keep one sign and stay away from zero.
  std::size_t zones_with_root = 0;
  double zone_min = INFINITY;
  for (std::size_t n = 1; n <= kStructureLevels; ++n) {
    const double centre = spec.separators[n];
    int sign = 0;
    bool root = false;
    for (int j = -(kZoneScanPoints - 1); j <= kZoneScanPoints - 1; ++j) {
      const double k = centre + reg.u * j / kZoneScanPoints;
      const double v = secular_value(s.chain, k);
      zone_min = std::min(zone_min, std::abs(v));
      const int sg = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
      if (sg == 0 || (sign != 0 && sg != sign)) root = true;
      sign = sg;
    }
    if (root) ++zones_with_root;
  }

  c.seconds = clock.seconds();
  c.measured = fmt::format(
      "weyl {}, spacing [{:.6f}, {:.6f}], confined {}, zones with root {}, "
      "min |F| in zones {:.3g}",
      weyl, min_d, max_d, confined ? "yes" : "NO", zones_with_root, zone_min);
  c.expected = fmt::format("weyl 0, spacing within [{:.6f}, {:.6f}], no zone roots",
                           reg.gap, reg.cut);
  c.tolerance = "1e-9, < 10 s";
  c.passed = weyl == 0 && min_d >= reg.gap - kStructureSlack &&
             max_d <= reg.cut + kStructureSlack && confined && zones_with_root == 0 &&
             zone_min > 0.0 && c.seconds < 10.0;
  return c;
}

CriterionResult cross_validation() {
  CriterionResult c = start(6, "bisection vs fixed point, closed-form map");
  Stopwatch clock;
  const Setup s = reference_setup();
  double worst_agree = 0.0;
  double worst_map = 0.0;
  bool all_converged = true;
  for (long n = 1; n <= kCrossLevels; ++n) {
    const double k = exact_root(s.trig, s.mu, n);
    const FixedPointResult fp = fixed_point_root(s.trig, s.mu, n);
    all_converged = all_converged && fp.converged && fp.stayed_in_interval;
    worst_agree = std::max(worst_agree, std::abs(fp.k - k));
    worst_map = std::max(worst_map, std::abs(step_root_map(s.chain, n, k) - k));
  }
  c.seconds = clock.seconds();
  c.measured = fmt::format("max |bisect - fixed| {:.3g}, max map residual {:.3g}{}",
                           worst_agree, worst_map,
                           all_converged ? "" : ", fixed point DID NOT CONVERGE");
  c.expected = "both < 1e-9 over 1000 levels";
  c.tolerance = "1e-9";
  c.passed = all_converged && worst_agree <= kSolverAgreement && worst_map < kSolverAgreement;
  return c;
}

CriterionResult amplitude_oracle() {
  CriterionResult c = start(7, "amplitude closed form vs per-event product");
  Stopwatch clock;
  const ChainGraph chain = reference_chain();
  std::size_t count = 0;
  double worst = 0.0;
  PrimeOrbitStream stream(chain, 12);
  while (auto p = stream.next()) {
    ++count;
    worst = std::max(worst, std::abs(p->amplitude - amplitude_by_events(p->code, chain)));
  }
  c.seconds = clock.seconds();
  c.measured = fmt::format("{} orbits, max diff {:.3g}", count, worst);
  c.expected = fmt::format("{} orbits, diff <= 1e-14", kPrimesUpTo12);
  c.tolerance = "1e-14";
  c.passed = count == kPrimesUpTo12 && worst <= kAmplitudeTol;
  return c;
}

CriterionResult convergence(const ExpansionOptions& options) {
  CriterionResult c = start(8, "expansion error decreases from budget 5 to 20");
  Stopwatch clock;
  const Setup s = reference_setup();
  const std::array<int, 2> budgets = {5, 20};
  bool ok = true;
  std::string measured;
  for (long n : kLevels) {
    const ExpansionReport rep = convergence_report(s.chain, s.trig, s.mu, n, budgets, options);
    ok = ok && rep.errors[1] < rep.errors[0];
    measured += fmt::format("{}n={}: {:.2e} -> {:.2e}", measured.empty() ? "" : "; ", n,
                            rep.errors[0], rep.errors[1]);
  }
  c.seconds = clock.seconds();
  c.measured = measured;
  c.expected = "error(20) < error(5) for n = 1, 10, 100";
  c.tolerance = "strict";
  c.passed = ok;
  return c;
}

}  // namespace

ChainGraph reference_chain() { return chain_from_step({0.3, 0.5}); }

std::vector<std::string> brute_force_primes(int length) {
  std::set<std::string> found;
  const auto n = static_cast<std::size_t>(length);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::string w(n, '1');
    for (std::size_t i = 0; i < n; ++i) {
      if ((bits >> i) & 1U) w[i] = '2';
    }
    std::string best = w;
    bool periodic = false;
    for (std::size_t shift = 1; shift < n; ++shift) {
      const std::string rot = w.substr(shift) + w.substr(0, shift);
      if (rot == w) periodic = true;
      best = std::min(best, rot);
    }
    if (!periodic) found.insert(best);
  }
  return {found.begin(), found.end()};
}

std::vector<CriterionResult> run_acceptance_suite(ExpansionOptions options) {
  std::vector<CriterionResult> out;
  out.push_back(exact_spectrum());
  out.push_back(truncated(2, 5, kBudget5, kBudget5Tol, 1.0, 23, options));
  out.push_back(truncated(3, 20, kBudget20, kBudget20Tol, 30.0, kTermsAt20, options));
  out.push_back(orbit_census());
  out.push_back(structure());
  out.push_back(cross_validation());
  out.push_back(amplitude_oracle());
  out.push_back(convergence(options));
  return out;
}

bool print_results(std::ostream& os, const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const CriterionResult& r : results) {
    all = all && r.passed;
    fmt::print(os, "[{}] C{} {}: measured {} | expected {} | tol {} | {:.3f} s\n",
               r.passed ? "PASS" : "FAIL", r.id, r.name, r.measured, r.expected,
               r.tolerance, r.seconds);
  }
  fmt::print(os, "{} of {} criteria passed\n",
             std::count_if(results.begin(), results.end(),
                           [](const CriterionResult& r) { return r.passed; }),
             results.size());
  return all;
}

}  // namespace rqg::verify
