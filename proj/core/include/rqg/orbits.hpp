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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rqg/graph_model.hpp"

namespace rqg {

/// Largest scattering-event budget accepted by the orbit streams
/// (term count grows like 2^N / N).
inline constexpr int kMaxEventBudget = 34;

/// Generates all Lyndon words over {'1', '2'} of length 1..max_length in
/// lexicographic order (Duval's successor iteration). Every word is the
/// minimal rotation of an aperiodic binary necklace.
class LyndonGenerator {
 public:
  explicit LyndonGenerator(int max_length);

  /// Advances to the next word; false once the sequence is exhausted.
  bool next();
  /// Valid after next() returned true.
  const std::string& word() const noexcept { return word_; }

 private:
  int max_length_;
  std::string word_;
  bool started_ = false;
};

/// Prime periodic orbit of the two-bond chain.
///
/// Letter c in the code is one round trip along bond c from the middle
/// vertex to its wall and back. Between consecutive letters the orbit is
/// reflected at the middle vertex (equal letters) or transmitted (unequal).
struct PrimeOrbit {
  std::string code;  // minimal rotation
  int n = 0;         // middle-vertex scattering events per period
  int n1 = 0;
  int n2 = 0;
  int sigma = 0;  // reflections at the middle vertex
  int tau = 0;    // transmissions through it
  int chi = 0;    // sign exponent: wall bounces plus reflections from bond 2
  double action = 0.0;     // S_p^0 = 2 (n1 L1 + n2 L2)
  double amplitude = 0.0;  // A_p = (-1)^chi r^sigma (1 - r^2)^(tau / 2)

  double period() const noexcept { return action; }  // T_p = S_p^0
};

/// Attributes from the combinatorial closed form. Throws InvalidInput if
/// the chain does not have exactly two bonds or the code is not a canonical
/// aperiodic word over {'1', '2'}.
PrimeOrbit orbit_attributes(std::string_view code, const ChainGraph& chain);

/// Amplitude as a product of per-event factors along the orbit: -1 per wall
/// bounce, +r for a middle-vertex reflection from bond 1, -r from bond 2,
/// and (1 - r^2) for each pair of transmissions.
double amplitude_by_events(std::string_view code, const ChainGraph& chain);

/// True if `code` is the lexicographically least rotation and not a power
/// of a shorter word.
bool is_lyndon(std::string_view code) noexcept;

/// Streams prime orbits with n <= max_events in Lyndon generation order.
class PrimeOrbitStream {
 public:
  PrimeOrbitStream(const ChainGraph& chain, int max_events);
  std::optional<PrimeOrbit> next();

 private:
  ChainGraph chain_;
  LyndonGenerator words_;
};

/// (p, nu) pair of the orbit sum. Owns a copy of its prime orbit so terms
/// stay valid after the stream advances.
struct OrbitTerm {
  PrimeOrbit orbit;
  int nu = 1;
  int total_events = 0;  // nu * n
};

/// Streams every (p, nu) with nu * n_p <= max_events exactly once: each
/// prime in Lyndon order followed by its repetitions nu = 1, 2, ...
/// A budget of 0 yields an empty stream.
class OrbitTermStream {
 public:
  OrbitTermStream(const ChainGraph& chain, int max_events);
  std::optional<OrbitTerm> next();

 private:
  PrimeOrbitStream primes_;
  int max_events_;
  std::optional<PrimeOrbit> current_;
  int nu_ = 0;
};

struct OrbitCounts {
  /// primes_per_length[n - 1] = number of prime orbits of length n.
  std::vector<std::uint64_t> primes_per_length;
  /// Number of (p, nu) terms with nu * n_p <= max_events.
  std::uint64_t terms_total = 0;
};

/// Closed-form counts: primes of length n are the binary Witt numbers
/// (1/n) sum_{d|n} mu(d) 2^(n/d); terms up to N are the necklace numbers
/// (1/n) sum_{d|n} phi(d) 2^(n/d) summed over n <= N.
OrbitCounts count_orbits(int max_events);

void validate_event_budget(int max_events);

}  // namespace rqg
