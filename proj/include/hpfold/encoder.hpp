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

#ifndef HPFOLD_ENCODER_HPP
#define HPFOLD_ENCODER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "hpfold/layout.hpp"
#include "hpfold/model.hpp"
#include "hpfold/polynomial.hpp"

namespace hpfold {

// Weights of the penalized objective
//   l0*Obj + l1*C1s_mod - l2*C2 - l3*C3 + l4*C4.
struct PenaltyConfig {
  double lambda0 = 1.0;
  double lambda1 = 10.0;
  double lambda2 = 1.0;
  double lambda3 = 0.5;
  double lambda4 = 10.0;
  // Set when the sequence has no non-bonded H pairs and lambda0 fell back to 1.
  bool degenerate_objective = false;

  // Throws std::invalid_argument on a negative or non-finite weight.
  void check() const;
};

struct PenaltyOverrides {
  std::optional<double> lambda0, lambda1, lambda2, lambda3, lambda4;
};

inline constexpr double kDefaultLambda3Hint = 0.5;

struct PenaltyTermCounts {
  std::size_t n0 = 0;  // objective terms
  std::size_t n2 = 0;  // overlap terms
  std::size_t n3 = 0;  // crossing terms
};

PenaltyTermCounts penalty_term_counts(const HpSequence& seq);

// lambda2 = 1, lambda3 = hint, lambda0 balances l0*n0 = l2*n2 + l3*n3, and
// lambda1 = lambda4 = 10 * max(l0, l2, l3). Overrides win over every rule and
// are applied before the dependent weights are derived.
PenaltyConfig calibrate_penalties(const HpSequence& seq,
                                  double lambda3_hint = kDefaultLambda3Hint,
                                  const PenaltyOverrides& overrides = {});

// One rewarded axis per overlap pair (i, j) and per crossing pair (r, k).
struct AxisDraw {
  std::map<BeadPair, Axis> overlap;
  std::map<BeadPair, Axis> crossing;

  Axis overlap_axis(std::size_t i, std::size_t j) const;
  Axis crossing_axis(std::size_t r, std::size_t k) const;
  bool operator==(const AxisDraw&) const = default;
};

// Overlap pairs 1 <= i <= N-2, i+2 <= j <= N.
std::vector<BeadPair> overlap_pairs(std::size_t n_beads);
// Crossing pairs 1 <= r <= N-3, r+2 <= k <= N-1.
std::vector<BeadPair> crossing_pairs(std::size_t n_beads);

// Exact ties go to x, then y.
Axis argmax_axis(double x, double y, double z);

// Argmax of three standard normal draws per pair. Overlap pairs are drawn
// first, then crossing pairs, each in lexicographic order.
Axis draw_axis(std::mt19937_64& rng);
AxisDraw draw_axes(std::mt19937_64& rng, const VariableLayout& layout);
AxisDraw draw_axes(std::uint64_t seed, const VariableLayout& layout);

// A single bit of a turn as a polynomial: the variable, or the canonical
// constant for a fixed turn.
BinaryPolynomial turn_bit(const VariableLayout& layout, std::size_t turn,
                          Axis axis, Half half);
// x_a - x_b (linear).
BinaryPolynomial turn_component(const VariableLayout& layout, std::size_t turn,
                                Axis axis);
// x_a + x_b - 2 x_a x_b. A fixed turn yields its constant square.
BinaryPolynomial turn_square(const VariableLayout& layout, std::size_t turn,
                             Axis axis);
// Sum of turn components over turns [first, last].
BinaryPolynomial turn_sum(const VariableLayout& layout, std::size_t first,
                          std::size_t last, Axis axis);

// Weighted squared H-H distances, expanded to degree <= 2.
BinaryPolynomial build_objective(const HpSequence& seq, const VariableLayout& layout);

enum class ContinuityForm {
  kStericAllowed,   // C1, degree up to 6
  kStericPenalized, // C1s, degree up to 4
  kQubo,            // C1s_mod, degree 2
};

BinaryPolynomial build_continuity(const VariableLayout& layout, ContinuityForm form);

// Overlap reward C2, entered with a negative sign. Throws std::out_of_range
// if the draw is missing a pair.
BinaryPolynomial build_overlap(const VariableLayout& layout, const AxisDraw& draw);

// Crossing reward C3 on X_rk = t_k + t_r + 2 * sum_{r<j<k} t_j.
BinaryPolynomial build_crossing(const VariableLayout& layout, const AxisDraw& draw);

// C4 = sum_i x_a x_b + y_a y_b + z_a z_b over encoded turns.
BinaryPolynomial build_pair_exclusion(const VariableLayout& layout);

struct QuboProblem {
  BinaryPolynomial polynomial;
  VariableLayout layout{2};
  PenaltyConfig penalties;
  AxisDraw axis_draw;
  std::uint64_t rng_seed = 0;
  std::string sequence;

  std::size_t num_variables() const { return layout.num_variables(); }
  double evaluate(std::span<const std::uint8_t> bits) const;
};

// Throws std::logic_error if the result is not quadratic.
QuboProblem assemble(const HpSequence& seq, const VariableLayout& layout,
                     const PenaltyConfig& penalties, const AxisDraw& draw,
                     std::uint64_t rng_seed = 0);

// Bits-length checked evaluation.
double evaluate(const BinaryPolynomial& p, std::span<const std::uint8_t> bits);

// Dense-row form of a QUBO used by the solvers: constant, linear vector and
// symmetric neighbour lists.
struct CompiledQubo {
  std::size_t n = 0;
  double constant = 0.0;
  std::vector<double> linear;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> neighbors;
  double max_abs_coefficient = 0.0;

  double energy(std::span<const std::uint8_t> bits) const;
};

// Throws std::invalid_argument on degree > 2 or variables beyond n.
CompiledQubo compile_qubo(const BinaryPolynomial& p, std::size_t n);

}  // namespace hpfold

#endif  // HPFOLD_ENCODER_HPP
