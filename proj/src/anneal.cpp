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
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "hpfold/solvers.hpp"

namespace hpfold {

void AnnealSchedule::check() const {
  if (!(t_final > 0.0) || !std::isfinite(t_initial) || t_initial < t_final) {
    throw std::invalid_argument("annealing needs t_initial >= t_final > 0");
  }
  if (sweeps < 1) throw std::invalid_argument("annealing needs at least one sweep");
  if (restarts < 1) throw std::invalid_argument("annealing needs at least one restart");
}

AnnealSchedule AnnealSchedule::defaults_for(const QuboProblem& q, std::uint64_t seed) {
  AnnealSchedule s;
  double max_abs = 0.0;
  for (const auto& [m, c] : q.polynomial.terms()) {
    if (!m.empty()) max_abs = std::max(max_abs, std::abs(c));
  }
  s.t_initial = std::max(10.0 * max_abs, s.t_final);
  s.seed = seed;
  return s;
}

namespace {

// Energy and local fields of the current assignment. field[i] is the change
// in energy from raising bit i with all other bits held.
struct FieldState {
  Bits bits;
  std::vector<double> field;
  double energy = 0.0;

  void reset(const CompiledQubo& q, Bits start) {
    bits = std::move(start);
    field = q.linear;
    for (std::size_t i = 0; i < q.n; ++i) {
      if (!bits[i]) continue;
      for (const auto& [j, c] : q.neighbors[i]) field[j] += c;
    }
    recompute_energy(q);
  }

  void recompute_energy(const CompiledQubo& q) {
    double e = q.constant;
    for (std::size_t i = 0; i < q.n; ++i) {
      if (bits[i]) e += 0.5 * (q.linear[i] + field[i]);
    }
    energy = e;
  }

  double delta(std::size_t i) const { return bits[i] ? -field[i] : field[i]; }

  void flip(const CompiledQubo& q, std::size_t i, double d) {
    bits[i] ^= 1;
    const double sign = bits[i] ? 1.0 : -1.0;
    for (const auto& [j, c] : q.neighbors[i]) field[j] += sign * c;
    energy += d;
  }
};

}  // namespace

SolveResult anneal(const CompiledQubo& q, const AnnealSchedule& schedule) {
  schedule.check();
  SolveResult result;
  result.solver = "anneal";
  result.seed = schedule.seed;
  result.provenance = {
      {"t_initial", std::to_string(schedule.t_initial)},
      {"t_final", std::to_string(schedule.t_final)},
      {"sweeps", std::to_string(schedule.sweeps)},
      {"restarts", std::to_string(schedule.restarts)},
  };

  std::mt19937_64 rng(schedule.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::bernoulli_distribution coin(0.5);

  std::vector<double> temps(schedule.sweeps);
  for (std::size_t s = 0; s < schedule.sweeps; ++s) {
    const double frac = schedule.sweeps == 1
                            ? 0.0
                            : static_cast<double>(s) / static_cast<double>(schedule.sweeps - 1);
    temps[s] = schedule.t_initial * std::pow(schedule.t_final / schedule.t_initial, frac);
  }

  std::vector<std::size_t> order(q.n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  bool have_best = false;
  FieldState st;
  // Trace point s is the lowest end-of-sweep energy over all restarts.
  std::vector<double> sweep_min(schedule.sweeps, std::numeric_limits<double>::infinity());
  for (std::size_t r = 0; r < schedule.restarts; ++r) {
    Bits start(q.n);
    for (auto& b : start) b = coin(rng) ? 1 : 0;
    st.reset(q, std::move(start));

    for (std::size_t s = 0; s < schedule.sweeps; ++s) {
      const double t = temps[s];
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i : order) {
        const double d = st.delta(i);
        if (d <= 0.0 || unit(rng) < std::exp(-d / t)) st.flip(q, i, d);
      }
      st.recompute_energy(q);

      if (!have_best || st.energy < result.best_value - 1e-9) {
        have_best = true;
        result.best_value = st.energy;
        result.best_bits = st.bits;
        result.sweeps_to_best = s + 1;
      }
      if (schedule.record_sweeps || s + 1 == schedule.sweeps) {
        result.samples.add(st.bits, 1, st.energy);
      }
      sweep_min[s] = std::min(sweep_min[s], st.energy);
    }
  }
  result.trace.reserve(schedule.sweeps);
  double running = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < schedule.sweeps; ++s) {
    running = std::min(running, sweep_min[s]);
    result.trace.push_back({s + 1, sweep_min[s], running});
  }
  result.best_value = q.energy(result.best_bits);
  return result;
}

SolveResult anneal(const QuboProblem& q, const AnnealSchedule& schedule) {
  SolveResult result = anneal(compile_qubo(q.polynomial, q.num_variables()), schedule);
  result.best_value = q.evaluate(result.best_bits);
  return result;
}

}  // namespace hpfold
