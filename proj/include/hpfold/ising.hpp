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

#ifndef HPFOLD_ISING_HPP
#define HPFOLD_ISING_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hpfold/encoder.hpp"
#include "hpfold/layout.hpp"
#include "hpfold/polynomial.hpp"

namespace hpfold {

// Spin convention: bit 0 <-> z = +1, bit 1 <-> z = -1, i.e. x = (1 - z) / 2.
inline constexpr const char* kSpinConvention = "bit0:z=+1,bit1:z=-1";

// Diagonal operator  constant + sum_i h_i Z_i + sum_{i<j} J_ij Z_i Z_j.
struct IsingOperator {
  std::size_t n = 0;
  double constant = 0.0;
  std::map<std::uint32_t, double> h;
  std::map<std::pair<std::uint32_t, std::uint32_t>, double> J;
};

IsingOperator qubo_to_ising(const BinaryPolynomial& p, std::size_t n);
IsingOperator qubo_to_ising(const QuboProblem& q);

// Throws std::invalid_argument if bits.size() != op.n.
double ising_energy(const IsingOperator& op, std::span<const std::uint8_t> bits);

// Energies of all 2^n basis states, bit i of the index is variable i.
std::vector<double> ising_spectrum(const IsingOperator& op);

struct Sample {
  Bits bits;
  std::uint64_t count = 0;
  double energy = 0.0;
};

// Distinct bitstrings with multiplicities, kept in first-seen order.
class SampleSet {
 public:
  // Merges with an existing entry for the same bitstring.
  void add(const Bits& bits, std::uint64_t count, double energy);
  void merge(const SampleSet& other);

  const std::vector<Sample>& samples() const { return samples_; }
  std::size_t distinct() const { return samples_.size(); }
  std::uint64_t shots() const { return shots_; }
  bool empty() const { return samples_.empty(); }

 private:
  std::vector<Sample> samples_;
  std::unordered_map<std::string, std::size_t> index_;
  std::uint64_t shots_ = 0;
};

// Mean of the lowest alpha fraction of a weighted energy distribution. The
// sample straddling the alpha boundary contributes in proportion, so the
// value is continuous in alpha. Throws std::invalid_argument on empty input,
// non-positive total weight or alpha outside (0, 1].
double cvar(std::vector<std::pair<double, double>> energy_weights, double alpha);
double cvar(std::span<const double> energies, double alpha);
double cvar(const SampleSet& samples, double alpha);

}  // namespace hpfold

#endif  // HPFOLD_ISING_HPP
