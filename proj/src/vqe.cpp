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
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "hpfold/solvers.hpp"

namespace hpfold {

namespace {

Bits bits_of(std::uint64_t index, std::size_t n) {
  Bits b(n);
  for (std::size_t i = 0; i < n; ++i) b[i] = (index >> i) & 1U;
  return b;
}

// Multinomial sampling from a probability vector by inverse CDF.
class Sampler {
 public:
  explicit Sampler(std::mt19937_64& rng) : rng_(rng) {}

  void sample(const std::vector<double>& probs, std::size_t shots,
              std::map<std::uint64_t, std::uint64_t>& counts) {
    cdf_.resize(probs.size());
    std::partial_sum(probs.begin(), probs.end(), cdf_.begin());
    const double total = cdf_.back();
    std::uniform_real_distribution<double> unit(0.0, total);
    for (std::size_t s = 0; s < shots; ++s) {
      auto it = std::upper_bound(cdf_.begin(), cdf_.end(), unit(rng_));
      if (it == cdf_.end()) --it;
      ++counts[static_cast<std::uint64_t>(it - cdf_.begin())];
    }
  }

 private:
  std::mt19937_64& rng_;
  std::vector<double> cdf_;
};

// CVaR of the exact measurement distribution; `ascending` orders the basis
// states by energy.
double exact_cvar(const std::vector<double>& probs, const std::vector<double>& energies,
                  const std::vector<std::uint64_t>& ascending, double alpha) {
  double taken = 0.0;
  double acc = 0.0;
  for (std::uint64_t idx : ascending) {
    if (taken >= alpha) break;
    const double part = std::min(probs[idx], alpha - taken);
    acc += part * energies[idx];
    taken += part;
  }
  return acc / taken;
}

std::vector<std::uint64_t> energy_order(const std::vector<double>& energies) {
  std::vector<std::uint64_t> order(energies.size());
  std::iota(order.begin(), order.end(), std::uint64_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint64_t a, std::uint64_t b) { return energies[a] < energies[b]; });
  return order;
}

}  // namespace

double vqe_exact_objective(const IsingOperator& op, const AnsatzSpec& ansatz,
                           std::span<const double> parameters, double alpha) {
  ansatz.check();
  if (op.n != ansatz.qubits) throw std::invalid_argument("operator and ansatz sizes differ");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("cvar alpha must lie in (0, 1]");
  const std::vector<double> energies = ising_spectrum(op);
  Statevector state(ansatz.qubits);
  apply_ansatz(state, ansatz, parameters);
  return exact_cvar(state.probabilities(), energies, energy_order(energies), alpha);
}

SolveResult vqe_statevector(const IsingOperator& op, const AnsatzSpec& ansatz,
                            const VqeSettings& settings) {
  ansatz.check(settings.qubit_budget);
  if (op.n != ansatz.qubits) {
    throw std::invalid_argument("operator acts on " + std::to_string(op.n) +
                                " qubits but the ansatz has " + std::to_string(ansatz.qubits));
  }
  if (!(settings.alpha > 0.0 && settings.alpha <= 1.0)) {
    throw std::invalid_argument("cvar alpha must lie in (0, 1]");
  }

  const std::vector<double> energies = ising_spectrum(op);
  const std::vector<std::uint64_t> ascending = energy_order(energies);

  std::mt19937_64 rng(settings.seed);
  std::vector<double> start = settings.initial_parameters;
  if (start.empty()) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    start.resize(ansatz.parameter_count());
    for (double& p : start) p = angle(rng);
  } else if (start.size() != ansatz.parameter_count()) {
    throw std::invalid_argument("initial parameter vector has " + std::to_string(start.size()) +
                                " entries, ansatz needs " +
                                std::to_string(ansatz.parameter_count()));
  }

  Statevector state(ansatz.qubits);
  Sampler sampler(rng);
  std::map<std::uint64_t, std::uint64_t> measured;

  auto objective = [&](std::span<const double> params) {
    apply_ansatz(state, ansatz, params);
    const std::vector<double> probs = state.probabilities();
    if (settings.shots == 0) return exact_cvar(probs, energies, ascending, settings.alpha);
    std::map<std::uint64_t, std::uint64_t> shot_counts;
    sampler.sample(probs, settings.shots, shot_counts);
    std::vector<std::pair<double, double>> ew;
    ew.reserve(shot_counts.size());
    for (const auto& [idx, c] : shot_counts) {
      ew.emplace_back(energies[idx], static_cast<double>(c));
      if (settings.keep_optimization_shots) measured[idx] += c;
    }
    return cvar(std::move(ew), settings.alpha);
  };

  SolveResult result;
  result.solver = "vqe";
  result.seed = settings.seed;
  result.provenance = {
      {"qubits", std::to_string(ansatz.qubits)},
      {"reps", std::to_string(ansatz.reps)},
      {"entangler", ansatz.entangler == Entangler::kLinear ? "linear" : "circular"},
      {"alpha", std::to_string(settings.alpha)},
      {"shots", std::to_string(settings.shots)},
  };

  NelderMeadOptions nm;
  nm.max_iterations = settings.max_iterations;
  nm.stagnation_iterations = settings.stagnation_iterations;
  nm.initial_step = settings.initial_step;
  const NelderMeadResult opt = nelder_mead(
      objective, start, nm, [&](std::size_t it, double current, double best) {
        result.trace.push_back({it, current, best});
      });
  result.parameters = opt.best;
  result.provenance["iterations"] = std::to_string(opt.iterations);
  result.provenance["evaluations"] = std::to_string(opt.evaluations);
  result.provenance["simplex_restarts"] = std::to_string(opt.restarts);

  apply_ansatz(state, ansatz, opt.best);
  const std::vector<double> final_probs = state.probabilities();
  if (settings.final_shots > 0) sampler.sample(final_probs, settings.final_shots, measured);
  if (measured.empty()) {
    const auto top = std::max_element(final_probs.begin(), final_probs.end());
    measured[static_cast<std::uint64_t>(top - final_probs.begin())] = 1;
  }

  std::uint64_t best_index = measured.begin()->first;
  for (const auto& [idx, c] : measured) {
    result.samples.add(bits_of(idx, op.n), c, energies[idx]);
    if (energies[idx] < energies[best_index]) best_index = idx;
  }
  result.best_bits = bits_of(best_index, op.n);
  result.best_value = ising_energy(op, result.best_bits);
  return result;
}

}  // namespace hpfold
