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

#include "rqg/orbits.hpp"

#include <cmath>

#include <fmt/format.h>

#include "rqg/errors.hpp"

namespace rqg {
namespace {

const ChainGraph& require_two_bonds(const ChainGraph& chain) {
  if (chain.bond_count() != 2) {
    throw InvalidInput(fmt::format(
        "orbit coding is defined for two-bond chains, got {} bonds",
        chain.bond_count()));
  }
  return chain;
}

bool valid_letters(std::string_view code) noexcept {
  if (code.empty()) return false;
  for (char c : code) {
    if (c != '1' && c != '2') return false;
  }
  return true;
}

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  return n > 1 ? -result : result;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

}  // namespace

void validate_event_budget(int max_events) {
  if (max_events < 0 || max_events > kMaxEventBudget) {
    throw InvalidInput(fmt::format(
        "scattering-event budget {} outside [0, {}]", max_events,
        kMaxEventBudget));
  }
}

LyndonGenerator::LyndonGenerator(int max_length) : max_length_(max_length) {
  validate_event_budget(max_length);
  word_.reserve(static_cast<std::size_t>(max_length));
}

bool LyndonGenerator::next() {
  if (!started_) {
    started_ = true;
    if (max_length_ < 1) return false;
    word_ = "1";
    return true;
  }
  if (word_.empty()) return false;
  // Duval: repeat the word up to the maximal length, drop trailing maximal
  // letters, increment the last one.
  const std::size_t period = word_.size();
  const auto target = static_cast<std::size_t>(max_length_);
  while (word_.size() < target) word_.push_back(word_[word_.size() - period]);
  while (!word_.empty() && word_.back() == '2') word_.pop_back();
  if (word_.empty()) return false;
  word_.back() = '2';
  return true;
}

bool is_lyndon(std::string_view code) noexcept {
  // A word is Lyndon iff it is strictly smaller than all its proper
  // rotations.
  const std::size_t n = code.size();
  if (n == 0) return false;
  for (std::size_t shift = 1; shift < n; ++shift) {
    for (std::size_t i = 0; i < n; ++i) {
      const char a = code[i];
      const char b = code[(i + shift) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i + 1 == n) return false;  // equal rotation: periodic
    }
  }
  return true;
}

PrimeOrbit orbit_attributes(std::string_view code, const ChainGraph& chain) {
  require_two_bonds(chain);
  if (!valid_letters(code) || !is_lyndon(code)) {
    throw InvalidInput(fmt::format(
        "orbit code '{}' is not a canonical aperiodic word over {{1,2}}", code));
  }
  const auto bonds = chain.bond_actions();
  const double r = chain.vertex_reflections()[0];

  PrimeOrbit p;
  p.code = std::string(code);
  p.n = static_cast<int>(code.size());
  int twos_after_two = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const char here = code[i];
    const char there = code[(i + 1) % code.size()];
    (here == '1' ? p.n1 : p.n2) += 1;
    if (here == there) {
      ++p.sigma;
      if (here == '2') ++twos_after_two;
    }
  }
  p.tau = p.n - p.sigma;
  p.chi = p.n + twos_after_two;
  p.action = 2.0 * (p.n1 * bonds[0] + p.n2 * bonds[1]);
  const double sign = (p.chi % 2 == 0) ? 1.0 : -1.0;
  p.amplitude = sign * std::pow(r, p.sigma) * std::pow(1.0 - r * r, p.tau / 2);
  return p;
}

double amplitude_by_events(std::string_view code, const ChainGraph& chain) {
  require_two_bonds(chain);
  if (!valid_letters(code)) {
    throw InvalidInput(fmt::format("orbit code '{}' has letters outside {{1,2}}", code));
  }
  const double r = chain.vertex_reflections()[0];
  double amp = 1.0;
  bool pending_transmission = false;
  for (std::size_t i = 0; i < code.size(); ++i) {
    amp *= chain.wall_phase();
    const char here = code[i];
    const char there = code[(i + 1) % code.size()];
    if (here == there) {
      amp *= (here == '1') ? r : -r;
    } else if (pending_transmission) {
      amp *= 1.0 - r * r;
      pending_transmission = false;
    } else {
      pending_transmission = true;
    }
  }
  return amp;
}

PrimeOrbitStream::PrimeOrbitStream(const ChainGraph& chain, int max_events)
    : chain_(require_two_bonds(chain)), words_(max_events) {}

std::optional<PrimeOrbit> PrimeOrbitStream::next() {
  if (!words_.next()) return std::nullopt;
  return orbit_attributes(words_.word(), chain_);
}

OrbitTermStream::OrbitTermStream(const ChainGraph& chain, int max_events)
    : primes_(chain, max_events), max_events_(max_events) {}

std::optional<OrbitTerm> OrbitTermStream::next() {
  if (current_ && (nu_ + 1) * current_->n <= max_events_) {
    ++nu_;
  } else {
    current_ = primes_.next();
    if (!current_) return std::nullopt;
    nu_ = 1;
  }
  return OrbitTerm{*current_, nu_, nu_ * current_->n};
}

OrbitCounts count_orbits(int max_events) {
  validate_event_budget(max_events);
  OrbitCounts counts;
  counts.primes_per_length.reserve(static_cast<std::size_t>(max_events));
  for (int n = 1; n <= max_events; ++n) {
    std::int64_t witt = 0;
    std::uint64_t necklaces = 0;
    for (int d = 1; d <= n; ++d) {
      if (n % d != 0) continue;
      const std::uint64_t power = std::uint64_t{1} << (n / d);
      witt += moebius(d) * static_cast<std::int64_t>(power);
      necklaces += static_cast<std::uint64_t>(euler_phi(d)) * power;
    }
    counts.primes_per_length.push_back(static_cast<std::uint64_t>(witt / n));
    counts.terms_total += necklaces / static_cast<std::uint64_t>(n);
  }
  return counts;
}

}  // namespace rqg
