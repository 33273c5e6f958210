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
#include <stdexcept>
#include <string>

#include "hpfold/solvers.hpp"

namespace hpfold {

void AnsatzSpec::check(std::size_t qubit_budget) const {
  if (qubits < 1) throw std::invalid_argument("ansatz needs at least one qubit");
  if (qubits > qubit_budget) {
    throw std::out_of_range("ansatz needs " + std::to_string(qubits) +
                            " qubits, statevector budget is " + std::to_string(qubit_budget));
  }
  if (reps < 1 || reps > 2) throw std::invalid_argument("ansatz repetitions must be 1 or 2");
}

Statevector::Statevector(std::size_t qubits) : qubits_(qubits) {
  if (qubits_ == 0 || qubits_ > 30) throw std::out_of_range("unsupported qubit count");
  amps_.assign(std::size_t{1} << qubits_, {0.0, 0.0});
  amps_[0] = 1.0;
}

void Statevector::reset() {
  std::fill(amps_.begin(), amps_.end(), std::complex<double>{0.0, 0.0});
  amps_[0] = 1.0;
}

void Statevector::apply_ry(std::size_t q, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) continue;
    const auto a0 = amps_[i];
    const auto a1 = amps_[i | bit];
    amps_[i] = c * a0 - s * a1;
    amps_[i | bit] = s * a0 + c * a1;
  }
}

void Statevector::apply_rz(std::size_t q, double phi) {
  const std::complex<double> lo = std::polar(1.0, -phi / 2);
  const std::complex<double> hi = std::polar(1.0, phi / 2);
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps_.size(); ++i) amps_[i] *= (i & bit) ? hi : lo;
}

void Statevector::apply_cx(std::size_t control, std::size_t target) {
  if (control == target) throw std::invalid_argument("CNOT control equals target");
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(amps_[i], amps_[i | tbit]);
  }
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_[i]);
  return p;
}

void apply_ansatz(Statevector& state, const AnsatzSpec& ansatz,
                  std::span<const double> parameters) {
  if (state.qubits() != ansatz.qubits) {
    throw std::invalid_argument("statevector and ansatz qubit counts differ");
  }
  if (parameters.size() != ansatz.parameter_count()) {
    throw std::invalid_argument("ansatz expects " + std::to_string(ansatz.parameter_count()) +
                                " parameters, got " + std::to_string(parameters.size()));
  }
  state.reset();
  const std::size_t n = ansatz.qubits;
  std::size_t p = 0;
  for (std::size_t layer = 0; layer <= ansatz.reps; ++layer) {
    for (std::size_t q = 0; q < n; ++q) state.apply_ry(q, parameters[p++]);
    for (std::size_t q = 0; q < n; ++q) state.apply_rz(q, parameters[p++]);
    if (layer == ansatz.reps) break;
    for (std::size_t q = 0; q + 1 < n; ++q) state.apply_cx(q, q + 1);
    if (ansatz.entangler == Entangler::kCircular && n > 2) state.apply_cx(n - 1, 0);
  }
}

}  // namespace hpfold
