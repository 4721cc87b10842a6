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

#include "rqg/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "rqg/detail/compensated_sum.hpp"
#include "rqg/errors.hpp"
#include "rqg/orbits.hpp"
#include "rqg/spectral_core.hpp"

namespace rqg {
namespace {

using cplx = std::complex<double>;
using detail::CompensatedComplexSum;
using detail::CompensatedSum;

constexpr double kPi = std::numbers::pi;
constexpr cplx kI{0.0, 1.0};
// Prime orbits held in memory at once.
constexpr std::size_t kBlocksPerBatch = 64;

void check_pair(const ChainGraph& chain, const TrigForm& trig) {
  const double total = chain.total_action();
  if (std::abs(trig.s0() - total) > 1e-12 * total) {
    throw InvalidInput(fmt::format(
        "trig form leading action {:.17g} does not match the chain's total "
        "action {:.17g}",
        trig.s0(), total));
  }
}

// Runs fn(i) for i in [0, count) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  const std::size_t workers = std::min<std::size_t>(threads, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
}

// Streams prime orbits in batches of whole blocks and hands each batch to
// `consume`.
template <class Consume>
void for_each_batch(const ChainGraph& chain, int max_events,
                    std::size_t batch_size, Consume&& consume) {
  PrimeOrbitStream stream(chain, max_events);
  std::vector<PrimeOrbit> batch;
  batch.reserve(batch_size);
  while (true) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto p = stream.next();
      if (!p) break;
      batch.push_back(std::move(*p));
    }
    if (batch.empty()) return;
    consume(std::span<const PrimeOrbit>(batch));
    if (batch.size() < batch_size) return;
  }
}

void require_finite(cplx z, const PrimeOrbit& p, int nu) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::runtime_error(
        fmt::format("non-finite orbit term for code {} nu {}", p.code, nu));
  }
}

}  // namespace

unsigned resolve_threads(const ExpansionOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("RQG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

LevelEstimate expand_level_detailed(const ChainGraph& chain, const TrigForm& trig,
                                    long mu, long n, int max_events,
                                    ExpansionOptions options) {
  check_pair(chain, trig);
  validate_event_budget(max_events);
  if (n < 1) throw InvalidInput(fmt::format("level index {} must be >= 1", n));
  if (options.block_size == 0) throw InvalidInput("block size must be positive");

  const double s0 = trig.s0();
  const double top = separator(trig, mu, n);
  const unsigned threads = resolve_threads(options);

  CompensatedComplexSum total;
  std::uint64_t terms = 0;
  std::vector<CompensatedComplexSum> partial;
  std::vector<std::uint64_t> partial_terms;

  const std::size_t block = options.block_size;
  for_each_batch(chain, max_events, block * kBlocksPerBatch,
                 [&](std::span<const PrimeOrbit> batch) {
    const std::size_t blocks = (batch.size() + block - 1) / block;
    partial.assign(blocks, {});
    partial_terms.assign(blocks, 0);
    parallel_for(blocks, threads, [&](std::size_t b) {
      const std::size_t end = std::min(batch.size(), (b + 1) * block);
      for (std::size_t i = b * block; i < end; ++i) {
        const PrimeOrbit& p = batch[i];
        const double omega = kPi * p.action / s0;
        double amp_power = 1.0;
        for (int nu = 1; nu * p.n <= max_events; ++nu) {
          amp_power *= p.amplitude;
          const double nud = nu;
          const cplx back = std::polar(1.0, -nud * omega);
          const cplx bracket = (1.0 - back) * (kI * top - 1.0 / (nud * p.action)) +
                               (kI * kPi / s0) * back;
          const cplx z = amp_power * std::polar(1.0, nud * p.action * top) / nud * bracket;
          require_finite(z, p, nu);
          partial[b].add(z);
          ++partial_terms[b];
        }
      }
    });
    for (std::size_t b = 0; b < blocks; ++b) {
      total.add(partial[b]);
      terms += partial_terms[b];
    }
  });

  LevelEstimate est;
  est.estimate = top - kPi / (2.0 * s0) - total.value().real() / kPi;
  est.terms_used = terms;
  return est;
}

double expand_level(const ChainGraph& chain, const TrigForm& trig, long mu,
                    long n, int max_events, ExpansionOptions options) {
  return expand_level_detailed(chain, trig, mu, n, max_events, options).estimate;
}

ExpansionReport convergence_report(const ChainGraph& chain, const TrigForm& trig,
                                   long mu, long n, std::span<const int> budgets,
                                   ExpansionOptions options) {
  if (budgets.empty()) throw InvalidInput("convergence report needs at least one budget");
  for (std::size_t i = 1; i < budgets.size(); ++i) {
    if (budgets[i] <= budgets[i - 1]) {
      throw InvalidInput("budgets must be strictly increasing");
    }
  }
  ExpansionReport rep;
  rep.n = n;
  rep.budgets.assign(budgets.begin(), budgets.end());
  rep.exact = exact_root(trig, mu, n);
  for (int budget : budgets) {
    const LevelEstimate e = expand_level_detailed(chain, trig, mu, n, budget, options);
    rep.estimates.push_back(e.estimate);
    rep.errors.push_back(std::abs(e.estimate - rep.exact));
    rep.terms_used.push_back(e.terms_used);
  }
  return rep;
}

std::vector<double> density_truncated(const ChainGraph& chain, const TrigForm& trig,
                                      std::span<const double> grid, int max_events,
                                      double width, ExpansionOptions options) {
  check_pair(chain, trig);
  validate_event_budget(max_events);
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw InvalidInput(fmt::format("smoothing width {} must be positive", width));
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw InvalidInput("density grid must be strictly increasing");
    }
  }

  const unsigned threads = resolve_threads(options);
  std::vector<CompensatedSum> acc(grid.size());
  for_each_batch(chain, max_events, options.block_size * kBlocksPerBatch,
                 [&](std::span<const PrimeOrbit> batch) {
    parallel_for(grid.size(), threads, [&](std::size_t g) {
      const double k = grid[g];
      for (const PrimeOrbit& p : batch) {
        double amp_power = 1.0;
        for (int nu = 1; nu * p.n <= max_events; ++nu) {
          amp_power *= p.amplitude;
          const double len = nu * p.action;
          const double damp = std::exp(-0.5 * (len * width) * (len * width));
          acc[g].add(p.period() * amp_power * damp * std::cos(len * k));
        }
      }
    });
  });

  const double mean = trig.s0() / kPi;
  std::vector<double> rho(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    rho[g] = mean + acc[g].value() / kPi;
  }
  return rho;
}

}  // namespace rqg
