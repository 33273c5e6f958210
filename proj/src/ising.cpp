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

#include "hpfold/ising.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace hpfold {

IsingOperator qubo_to_ising(const BinaryPolynomial& p, std::size_t n) {
  if (p.degree() > 2) throw std::invalid_argument("polynomial is not quadratic");
  if (p.variable_span() > n) {
    throw std::invalid_argument("polynomial references variables beyond n");
  }
  IsingOperator op;
  op.n = n;
  auto add_h = [&](std::uint32_t i, double c) {
    if ((op.h[i] += c) == 0.0) op.h.erase(i);
  };
  for (const auto& [m, c] : p.terms()) {
    switch (m.size()) {
      case 0:
        op.constant += c;
        break;
      case 1:
        op.constant += c / 2;
        add_h(m[0], -c / 2);
        break;
      default: {
        op.constant += c / 4;
        add_h(m[0], -c / 4);
        add_h(m[1], -c / 4);
        op.J[{m[0], m[1]}] += c / 4;
        break;
      }
    }
  }
  for (auto it = op.h.begin(); it != op.h.end();) {
    it = std::abs(it->second) < BinaryPolynomial::kPruneThreshold ? op.h.erase(it)
                                                                  : std::next(it);
  }
  return op;
}

IsingOperator qubo_to_ising(const QuboProblem& q) {
  return qubo_to_ising(q.polynomial, q.num_variables());
}

double ising_energy(const IsingOperator& op, std::span<const std::uint8_t> bits) {
  if (bits.size() != op.n) {
    throw std::invalid_argument("bitstring length " + std::to_string(bits.size()) +
                                " does not match operator size " + std::to_string(op.n));
  }
  auto spin = [&](std::uint32_t i) { return bits[i] ? -1.0 : 1.0; };
  double e = op.constant;
  for (const auto& [i, c] : op.h) e += c * spin(i);
  for (const auto& [ij, c] : op.J) e += c * spin(ij.first) * spin(ij.second);
  return e;
}

std::vector<double> ising_spectrum(const IsingOperator& op) {
  if (op.n >= 40) throw std::length_error("spectrum too large");
  const std::uint64_t dim = std::uint64_t{1} << op.n;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj(op.n);
  std::vector<double> field(op.n, 0.0);
  std::vector<double> z(op.n, 1.0);
  double e = op.constant;
  for (const auto& [i, c] : op.h) {
    field[i] += c;
    e += c;
  }
  for (const auto& [ij, c] : op.J) {
    adj[ij.first].emplace_back(ij.second, c);
    adj[ij.second].emplace_back(ij.first, c);
    field[ij.first] += c;
    field[ij.second] += c;
    e += c;
  }
  std::vector<double> spectrum(dim);
  spectrum[0] = e;
  // Gray-code walk: step k flips the lowest set bit of k.
  for (std::uint64_t k = 1; k < dim; ++k) {
    const auto i = static_cast<std::uint32_t>(std::countr_zero(k));
    e -= 2.0 * z[i] * field[i];
    const double dz = -2.0 * z[i];
    z[i] = -z[i];
    for (const auto& [j, c] : adj[i]) field[j] += c * dz;
    spectrum[k ^ (k >> 1)] = e;
  }
  return spectrum;
}

void SampleSet::add(const Bits& bits, std::uint64_t count, double energy) {
  if (count == 0) return;
  std::string key = bits_to_string(bits);
  auto [it, inserted] = index_.try_emplace(std::move(key), samples_.size());
  if (inserted) {
    samples_.push_back({bits, count, energy});
  } else {
    samples_[it->second].count += count;
  }
  shots_ += count;
}

void SampleSet::merge(const SampleSet& other) {
  for (const Sample& s : other.samples_) add(s.bits, s.count, s.energy);
}

double cvar(std::vector<std::pair<double, double>> energy_weights, double alpha) {
  if (energy_weights.empty()) throw std::invalid_argument("cvar of an empty sample");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("cvar alpha must lie in (0, 1]");
  }
  double total = 0.0;
  for (const auto& [e, w] : energy_weights) {
    if (w < 0.0) throw std::invalid_argument("negative sample weight");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("sample weights sum to zero");
  std::sort(energy_weights.begin(), energy_weights.end());
  const double mass = alpha * total;
  double taken = 0.0;
  double acc = 0.0;
  for (const auto& [e, w] : energy_weights) {
    if (taken >= mass) break;
    const double part = std::min(w, mass - taken);
    acc += part * e;
    taken += part;
  }
  return acc / taken;
}

double cvar(std::span<const double> energies, double alpha) {
  std::vector<std::pair<double, double>> ew;
  ew.reserve(energies.size());
  for (double e : energies) ew.emplace_back(e, 1.0);
  return cvar(std::move(ew), alpha);
}

double cvar(const SampleSet& samples, double alpha) {
  std::vector<std::pair<double, double>> ew;
  ew.reserve(samples.distinct());
  for (const Sample& s : samples.samples()) {
    ew.emplace_back(s.energy, static_cast<double>(s.count));
  }
  return cvar(std::move(ew), alpha);
}

}  // namespace hpfold
