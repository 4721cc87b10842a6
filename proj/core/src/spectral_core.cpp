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

#include "rqg/spectral_core.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include <fmt/format.h>

#include "rqg/errors.hpp"

namespace rqg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxBisections = 200;
constexpr double kSpacingSlack = 1e-9;
// Windows scanned by find_mu past the one containing k = 0.
constexpr int kMuScanWindows = 4;

double parity_sign(long j) noexcept { return (j % 2 == 0) ? 1.0 : -1.0; }

// Secular function on [p_j, p_{j+1}] with p_j = pi (j - gamma) / S0, written
// in the local offset so the leading cosine carries no large argument:
// cos(S0 (p_j + d) + pi gamma) = (-1)^j cos(S0 d).
struct LocalSecular {
  const TrigForm& trig;
  long j;
  double origin;

  double operator()(double offset) const noexcept {
    return parity_sign(j) * std::cos(trig.s0() * offset) -
           trig.phi(origin + offset);
  }
};

struct LocalRoot {
  double offset;
  double value;
  int iterations;
};

// Bisection on [0, width] down to adjacent doubles (or the iteration cap).
// Precondition: f(0) and f(width) have strictly opposite signs.
LocalRoot bisect(const LocalSecular& f, double width) {
  double a = 0.0;
  double b = width;
  double fa = f(a);
  double fb = f(b);
  int it = 0;
  for (; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, 0.0, it + 1};
    if (std::signbit(fm) == std::signbit(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
      fb = fm;
    }
  }
  return std::abs(fa) <= std::abs(fb) ? LocalRoot{a, fa, it}
                                      : LocalRoot{b, fb, it};
}

bool brackets(double fa, double fb) noexcept {
  return (fa > 0.0 && fb < 0.0) || (fa < 0.0 && fb > 0.0);
}

}  // namespace

RegularityReport regularity(const TrigForm& trig) {
  RegularityReport rep;
  rep.alpha = trig.alpha();
  rep.is_trivial = rep.alpha == 0.0;
  rep.is_regular = rep.alpha > 0.0 && rep.alpha < 1.0;
  if (rep.alpha <= 1.0) {
    rep.u = std::acos(rep.alpha) / trig.s0();
    rep.gap = 2.0 * rep.u;
    rep.cut = 2.0 * (kPi / trig.s0() - rep.u);
  }
  return rep;
}

void require_regular(const TrigForm& trig) {
  const double alpha = trig.alpha();
  if (alpha == 0.0) {
    throw NotRegular(
        "trivial graph: alpha = 0, the spectrum is the bare cosine grid", alpha);
  }
  if (alpha >= 1.0) {
    throw NotRegular(
        fmt::format("graph is not regular: alpha = {:.17g} >= 1", alpha), alpha);
  }
}

double separator_point(double s0, double gamma, long mu, long n) noexcept {
  return kPi / s0 * (static_cast<double>(n + mu + 1) - gamma);
}

double separator(const TrigForm& trig, long mu, long n) noexcept {
  return separator_point(trig.s0(), trig.gamma(), mu, n);
}

long find_mu(const TrigForm& trig) {
  const double width = kPi / trig.s0();
  // Lower index of the window whose upper end is the first p_j >= 0.
  const long first = static_cast<long>(std::ceil(trig.gamma())) - 1;
  const bool zero_is_root = std::abs(trig.evaluate(0.0)) <= 1e-14;

  for (long j = first; j <= first + kMuScanWindows; ++j) {
    const double origin = kPi * (static_cast<double>(j) - trig.gamma()) / trig.s0();
    const LocalSecular f{trig, j, origin};
    if (!brackets(f(0.0), f(width))) {
      throw BracketFailure(
          fmt::format("no sign change on [{:.17g}, {:.17g}] while locating "
                      "the first root; input is not regular",
                      origin, origin + width),
          j);
    }
    const LocalRoot root = bisect(f, width);
    const double k = origin + root.offset;
    if (k < 0.0) continue;
    if (zero_is_root && k <= 1e-12 * width) continue;
    // Window [p_j, p_{j+1}] is I_1, so separator(0) = p_j.
    return j - 1;
  }
  throw BracketFailure("no nonnegative root in the scanned windows", first);
}

RootResult bracket_root(const TrigForm& trig, long mu, long n) {
  const double width = kPi / trig.s0();
  const double origin = separator(trig, mu, n - 1);
  const LocalSecular f{trig, n + mu, origin};
  const double fa = f(0.0);
  const double fb = f(width);
  if (!brackets(fa, fb)) {
    throw BracketFailure(
        fmt::format("level {}: secular function does not change sign on "
                    "[{:.17g}, {:.17g}] (values {:.3g}, {:.3g})",
                    n, origin, origin + width, fa, fb),
        n);
  }
  const LocalRoot root = bisect(f, width);
  return {origin + root.offset, std::abs(root.value), root.iterations};
}

double exact_root(const TrigForm& trig, long mu, long n) {
  return bracket_root(trig, mu, n).k;
}

FixedPointResult fixed_point_root(const TrigForm& trig, long mu, long n,
                                  FixedPointOptions options) {
  const double width = kPi / trig.s0();
  const double origin = separator(trig, mu, n - 1);
  const bool even = (n + mu) % 2 == 0;

  FixedPointResult res;
  double offset = 0.5 * width;
  for (int it = 1; it <= options.max_iterations; ++it) {
    const double phi = trig.phi(origin + offset);
    if (!(std::abs(phi) <= 1.0)) {
      res.k = origin + offset;
      res.iterations = it;
      return res;
    }
    const double angle = even ? std::acos(phi) : kPi - std::acos(phi);
    const double next = angle / trig.s0();
    if (next < 0.0 || next > width) res.stayed_in_interval = false;
    const double step = std::abs(next - offset);
    offset = next;
    if (step <= options.tolerance) {
      res.converged = true;
      res.iterations = it;
      break;
    }
    res.iterations = it;
  }
  res.k = origin + offset;
  return res;
}

Spectrum spectrum(const TrigForm& trig, long mu, std::size_t count) {
  if (count == 0) throw InvalidInput("spectrum needs at least one level");
  Spectrum s;
  s.mu = mu;
  s.separators.reserve(count + 1);
  s.levels.reserve(count);
  s.residuals.reserve(count);
  s.separators.push_back(separator(trig, mu, 0));
  for (std::size_t i = 1; i <= count; ++i) {
    const long n = static_cast<long>(i);
    const RootResult r = bracket_root(trig, mu, n);
    s.separators.push_back(separator(trig, mu, n));
    s.levels.push_back(r.k);
    s.residuals.push_back(r.residual);
  }
  return s;
}

std::vector<double> trivial_levels(const TrigForm& trig, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  long j = static_cast<long>(std::floor(trig.gamma() - 0.5));
  while (out.size() < count) {
    const double k = kPi / trig.s0() * (static_cast<double>(j) + 0.5 - trig.gamma());
    if (k > 0.0) out.push_back(k);
    ++j;
  }
  return out;
}

double SpacingStats::bin_width() const noexcept {
  return counts.empty() ? 0.0
                        : (upper_edge - lower_edge) / static_cast<double>(counts.size());
}

SpacingStats spacing_stats(const Spectrum& spec, const RegularityReport& reg,
                           std::size_t bins) {
  if (spec.levels.size() < 2) {
    throw InvalidInput("spacing statistics need at least two levels");
  }
  if (bins == 0) throw InvalidInput("spacing histogram needs at least one bin");
  if (!reg.is_regular) {
    throw NotRegular("spacing bounds are defined for regular graphs only",
                     reg.alpha);
  }

  SpacingStats st;
  st.lower_edge = reg.gap;
  st.upper_edge = reg.cut;
  st.counts.assign(bins, 0);
  const double w = st.bin_width();

  st.min_spacing = spec.levels[1] - spec.levels[0];
  st.max_spacing = st.min_spacing;
  double sum = 0.0;
  for (std::size_t i = 1; i < spec.levels.size(); ++i) {
    const double d = spec.levels[i] - spec.levels[i - 1];
    if (d < reg.gap - kSpacingSlack || d > reg.cut + kSpacingSlack) {
      throw InvalidInput(fmt::format(
          "spacing {:.17g} between levels {} and {} lies outside [{:.17g}, "
          "{:.17g}]",
          d, i, i + 1, reg.gap, reg.cut));
    }
    st.min_spacing = std::min(st.min_spacing, d);
    st.max_spacing = std::max(st.max_spacing, d);
    sum += d;
    const double pos = std::floor((d - reg.gap) / w);
    const auto bin = static_cast<std::size_t>(
        std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
    ++st.counts[bin];
  }
  st.mean_spacing = sum / static_cast<double>(spec.levels.size() - 1);
  return st;
}

long weyl_residual(const Spectrum& spec, const TrigForm& trig) {
  long worst = 0;
  for (std::size_t i = 1; i <= spec.levels.size(); ++i) {
    const long n = static_cast<long>(i);
    const double edge = separator(trig, spec.mu, n);
    const auto below = std::lower_bound(spec.levels.begin(), spec.levels.end(), edge) -
                       spec.levels.begin();
    worst = std::max(worst, std::labs(static_cast<long>(below) - n));
  }
  return worst;
}

double step_root_map(const ChainGraph& chain, long n, double k) {
  if (chain.bond_count() != 2) {
    throw InvalidInput(fmt::format(
        "closed-form root map needs a two-bond chain, got {} bonds",
        chain.bond_count()));
  }
  const auto bonds = chain.bond_actions();
  const double total = bonds[0] + bonds[1];
  const double r = chain.vertex_reflections()[0];
  return kPi * static_cast<double>(n) / total +
         parity_sign(n) / total * std::asin(r * std::sin((bonds[0] - bonds[1]) * k));
}

}  // namespace rqg
