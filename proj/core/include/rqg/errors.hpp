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

#include <stdexcept>
#include <string>

namespace rqg {

/// Input outside the domain of an operation (bad potential, bad chain,
/// budget out of range). Maps to a usage/validation failure.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The graph is valid but not regular (alpha >= 1) or trivially regular
/// (alpha == 0) where the regular pipeline was requested.
class NotRegular : public std::domain_error {
 public:
  NotRegular(const std::string& what, double alpha)
      : std::domain_error(what), alpha_(alpha) {}
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// A secular-function interval failed to bracket a root.
class BracketFailure : public std::runtime_error {
 public:
  BracketFailure(const std::string& what, long index)
      : std::runtime_error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

}  // namespace rqg
