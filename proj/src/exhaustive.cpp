// Copyright 2026 The hpfold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

#include "hpfold/solvers.hpp"

namespace hpfold {

namespace {

Bits bits_of(std::uint64_t index, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (index >> i) & 1U;
  return b;
}

}  // namespace

SolveResult exhaustive(const CompiledQubo& q, ExhaustiveOptions options) {
  if (q.n > kMaxExhaustiveVariables) {
    throw std::out_of_range("exhaustive search is limited to " +
                            std::to_string(kMaxExhaustiveVariables) + " variables, got " +
                            std::to_string(q.n));
  }
  SolveResult result;
  result.solver = "exhaustive";
  result.provenance = {{"states", std::to_string(std::uint64_t{1} << q.n)}};

  const std::uint64_t dim = std::uint64_t{1} << q.n;
  if (options.keep_spectrum) result.spectrum.assign(dim, 0.0);

  std::vector<double> field = q.linear;
  Bits bits(q.n, 0);
  double energy = q.constant;

  // Max-heap on (energy, index) holding the lowest states seen so far.
  using Entry = std::pair<double, std::uint64_t>;
  std::priority_queue<Entry> lowest;
  auto offer = [&](double e, std::uint64_t index) {
    if (options.keep_lowest == 0) return;
    if (lowest.size() < options.keep_lowest) {
      lowest.emplace(e, index);
    } else if (Entry{e, index} < lowest.top()) {
      lowest.pop();
      lowest.emplace(e, index);
    }
  };

  double best = energy;
  std::uint64_t best_index = 0;
  offer(energy, 0);
  if (options.keep_spectrum) result.spectrum[0] = energy;

  for (std::uint64_t k = 1; k < dim; ++k) {
    const auto i = static_cast<std::size_t>(std::countr_zero(k));
    const double d = bits[i] ? -field[i] : field[i];
    bits[i] ^= 1;
    const double sign = bits[i] ? 1.0 : -1.0;
    for (const auto& [j, c] : q.neighbors[i]) field[j] += sign * c;
    energy += d;

    const std::uint64_t index = k ^ (k >> 1);
    if (options.keep_spectrum) result.spectrum[index] = energy;
    if (energy < best) {
      best = energy;
      best_index = index;
    }
    offer(energy, index);
  }

  std::vector<std::uint64_t> kept;
  kept.reserve(lowest.size());
  while (!lowest.empty()) {
    kept.push_back(lowest.top().second);
    lowest.pop();
  }
  std::vector<std::pair<double, std::uint64_t>> exact;
  exact.reserve(kept.size());
  for (std::uint64_t index : kept) exact.emplace_back(q.energy(bits_of(index, q.n)), index);
  std::sort(exact.begin(), exact.end());
  for (const auto& [e, index] : exact) result.samples.add(bits_of(index, q.n), 1, e);

  result.best_bits = bits_of(best_index, q.n);
  result.best_value = q.energy(result.best_bits);
  result.trace.push_back({1, result.best_value, result.best_value});
  return result;
}

SolveResult exhaustive(const QuboProblem& q, ExhaustiveOptions options) {
  SolveResult result = exhaustive(compile_qubo(q.polynomial, q.num_variables()), options);
  result.best_value = q.evaluate(result.best_bits);
  return result;
}

}  // namespace hpfold
