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

#include <vector>

#include "rqg/graph_model.hpp"

namespace rqg {

/// One cosine term a cos(S k + pi gamma) of the fluctuating part Phi.
struct TrigTerm {
  double amplitude = 0.0;
  double action = 0.0;
  double phase = 0.0;  // gamma_i, in units of pi

  friend bool operator==(const TrigTerm&, const TrigTerm&) = default;
};

/// Canonical secular form cos(S0 k + pi gamma) - Phi(k) with
/// Phi(k) = sum_i a_i cos(S_i k + pi gamma_i).
///
/// Canonical means: a_i > 0, 0 < S_i < S0, gamma and gamma_i in [0, 2),
/// terms sorted by descending S_i with ties broken by ascending gamma_i,
/// and no two terms sharing both action and phase.
class TrigForm {
 public:
  /// Builds the canonical form from arbitrary (signed) terms. Throws
  /// InvalidInput if s0 <= 0 or a term has S_i == 0 or |S_i| >= s0.
  static TrigForm make(double s0, double gamma, std::vector<TrigTerm> terms);

  double s0() const noexcept { return s0_; }
  double gamma() const noexcept { return gamma_; }
  const std::vector<TrigTerm>& terms() const noexcept { return terms_; }

  /// Sum of |a_i|.
  double alpha() const noexcept;

  double phi(double k) const noexcept;
  double leading(double k) const noexcept;
  double evaluate(double k) const noexcept { return leading(k) - phi(k); }

  friend bool operator==(const TrigForm&, const TrigForm&) = default;

 private:
  TrigForm() = default;

  double s0_ = 0.0;
  double gamma_ = 0.0;
  std::vector<TrigTerm> terms_;
};

/// Reduces a phase (in units of pi) into [0, 2).
double canonical_phase(double gamma) noexcept;

/// Folds a single term so that a > 0 and S > 0, using cos(-x) = cos(x) and
/// -cos(x) = cos(x + pi).
TrigTerm canonical_term(TrigTerm term) noexcept;

/// Expands the chain secular function into its trigonometric form by
/// branching over reflection and transmission at every internal vertex
/// (2^(m-1) raw sine terms), then folds into canonical form. The leading
/// action equals the total bond action. Throws InvalidInput when a raw
/// sub-leading action collides with S0 in floating point.
TrigForm trig_form(const ChainGraph& chain);

}  // namespace rqg
