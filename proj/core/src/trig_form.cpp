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

#include "rqg/trig_form.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "rqg/errors.hpp"

namespace rqg {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// 2^(m-1) raw terms are materialized.
constexpr std::size_t kMaxBranchingBonds = 24;

struct RawSine {
  double coefficient;
  double action;
};

}  // namespace

double canonical_phase(double gamma) noexcept {
  double g = std::fmod(gamma, 2.0);
  if (g < 0.0) g += 2.0;
  if (g >= 2.0) g -= 2.0;
  return g == 0.0 ? 0.0 : g;  // no negative zero
}

TrigTerm canonical_term(TrigTerm term) noexcept {
  if (term.action < 0.0) {
    term.action = -term.action;
    term.phase = -term.phase;
  }
  if (term.amplitude < 0.0) {
    term.amplitude = -term.amplitude;
    term.phase += 1.0;
  }
  term.phase = canonical_phase(term.phase);
  return term;
}

TrigForm TrigForm::make(double s0, double gamma, std::vector<TrigTerm> terms) {
  if (!std::isfinite(s0) || s0 <= 0.0) {
    throw InvalidInput(fmt::format("leading action S0 = {} must be positive", s0));
  }
  TrigForm form;
  form.s0_ = s0;
  form.gamma_ = canonical_phase(gamma);

  std::vector<TrigTerm> folded;
  folded.reserve(terms.size());
  for (const TrigTerm& raw : terms) {
    if (!std::isfinite(raw.amplitude) || !std::isfinite(raw.action) ||
        !std::isfinite(raw.phase)) {
      throw InvalidInput("trig term with non-finite field");
    }
    const TrigTerm t = canonical_term(raw);
    if (t.action == 0.0) {
      throw InvalidInput("trig term with zero action is a constant, not a "
                         "fluctuating term");
    }
    if (t.action >= s0) {
      throw InvalidInput(fmt::format(
          "trig term action {:.17g} is not below the leading action {:.17g}",
          t.action, s0));
    }
    if (t.amplitude == 0.0) continue;
    folded.push_back(t);
  }

  std::sort(folded.begin(), folded.end(),
            [](const TrigTerm& a, const TrigTerm& b) {
              if (a.action != b.action) return a.action > b.action;
              return a.phase < b.phase;
            });
  for (const TrigTerm& t : folded) {
    if (!form.terms_.empty() && form.terms_.back().action == t.action &&
        form.terms_.back().phase == t.phase) {
      form.terms_.back().amplitude += t.amplitude;
    } else {
      form.terms_.push_back(t);
    }
  }
  return form;
}

double TrigForm::alpha() const noexcept {
  double a = 0.0;
  for (const TrigTerm& t : terms_) a += std::abs(t.amplitude);
  return a;
}

double TrigForm::phi(double k) const noexcept {
  double sum = 0.0;
  for (const TrigTerm& t : terms_) {
    sum += t.amplitude * std::cos(t.action * k + kPi * t.phase);
  }
  return sum;
}

double TrigForm::leading(double k) const noexcept {
  return std::cos(s0_ * k + kPi * gamma_);
}

TrigForm trig_form(const ChainGraph& chain) {
  const auto bonds = chain.bond_actions();
  const auto refl = chain.vertex_reflections();
  const std::size_t m = bonds.size();
  if (m > kMaxBranchingBonds) {
    throw InvalidInput(fmt::format(
        "trig-form expansion supports at most {} bonds, got {}",
        kMaxBranchingBonds, m));
  }
  const double s0 = chain.total_action();

  // The normalized secular function is
  //   sum over sign patterns e (e_1 = +1) of
  //     prod_{j : e_j != e_{j+1}} (-r_j) * sin(k sum_i e_i L_i).
  // Bit i-1 of `pattern` set means e_i = -1.
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  std::vector<RawSine> raw;
  raw.reserve(count - 1);
  for (std::uint64_t pattern = 1; pattern < count; ++pattern) {
    const auto sign = [&](std::size_t i) {
      return i == 0 ? 1.0 : (((pattern >> (i - 1)) & 1U) ? -1.0 : 1.0);
    };
    double coefficient = 1.0;
    double action = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      action += sign(i) * bonds[i];
      if (i + 1 < m && sign(i) != sign(i + 1)) coefficient *= -refl[i];
    }
    if (action < 0.0) {
      action = -action;
      coefficient = -coefficient;
    }
    raw.push_back({coefficient, action});
  }

  // Raw actions are sums of m rounded terms; merge anything closer than the
  // accumulated rounding.
  const double tol = 4.0 * static_cast<double>(m) * kEps * s0;
  std::sort(raw.begin(), raw.end(),
            [](const RawSine& a, const RawSine& b) { return a.action < b.action; });

  std::vector<TrigTerm> terms;
  std::size_t i = 0;
  while (i < raw.size()) {
    double coefficient = 0.0;
    double magnitude = 0.0;
    double weighted_action = 0.0;
    std::size_t j = i;
    for (; j < raw.size() && raw[j].action - raw[i].action <= tol; ++j) {
      coefficient += raw[j].coefficient;
      magnitude += std::abs(raw[j].coefficient);
      weighted_action += raw[j].action;
    }
    const double action = weighted_action / static_cast<double>(j - i);
    i = j;

    if (action >= s0 - tol) {
      throw InvalidInput(fmt::format(
          "sub-leading action {:.17g} collides with the leading action "
          "{:.17g}; the leading term is not unique",
          action, s0));
    }
    if (action <= tol) continue;  // sin(0 k) vanishes identically
    if (std::abs(coefficient) <= 64.0 * kEps * magnitude) continue;

    // Phi carries the opposite sign: secular = sin(S0 k) - Phi(k), and
    // -c sin(S k) = -c cos(S k + 3 pi / 2).
    terms.push_back({-coefficient, action, 1.5});
  }

  // sin(S0 k) = cos(S0 k + 3 pi / 2).
  return TrigForm::make(s0, 1.5, std::move(terms));
}

}  // namespace rqg
