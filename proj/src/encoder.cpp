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

#include "hpfold/encoder.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hpfold {

void PenaltyConfig::check() const {
  const double all[] = {lambda0, lambda1, lambda2, lambda3, lambda4};
  for (std::size_t i = 0; i < 5; ++i) {
    if (!std::isfinite(all[i]) || all[i] < 0.0) {
      throw std::invalid_argument("penalty lambda" + std::to_string(i) +
                                  " must be finite and non-negative");
    }
  }
}

PenaltyTermCounts penalty_term_counts(const HpSequence& seq) {
  const std::size_t n = seq.size();
  PenaltyTermCounts counts;
  counts.n0 = hydrophobic_pairs(seq).size();
  counts.n2 = (n - 2) * (n - 1) / 2;
  counts.n3 = n >= 3 ? (n - 3) * (n - 2) / 2 : 0;
  return counts;
}

PenaltyConfig calibrate_penalties(const HpSequence& seq, double lambda3_hint,
                                  const PenaltyOverrides& overrides) {
  const PenaltyTermCounts counts = penalty_term_counts(seq);
  PenaltyConfig cfg;
  cfg.lambda2 = overrides.lambda2.value_or(1.0);
  cfg.lambda3 = overrides.lambda3.value_or(lambda3_hint);
  if (overrides.lambda0) {
    cfg.lambda0 = *overrides.lambda0;
  } else if (counts.n0 == 0) {
    cfg.lambda0 = 1.0;
    cfg.degenerate_objective = true;
  } else {
    cfg.lambda0 = (cfg.lambda2 * static_cast<double>(counts.n2) +
                   cfg.lambda3 * static_cast<double>(counts.n3)) /
                  static_cast<double>(counts.n0);
  }
  const double logical = 10.0 * std::max({cfg.lambda0, cfg.lambda2, cfg.lambda3});
  cfg.lambda1 = overrides.lambda1.value_or(logical);
  cfg.lambda4 = overrides.lambda4.value_or(logical);
  cfg.check();
  return cfg;
}

Axis AxisDraw::overlap_axis(std::size_t i, std::size_t j) const {
  auto it = overlap.find({i, j});
  if (it == overlap.end()) {
    throw std::out_of_range("axis draw has no overlap pair (" + std::to_string(i) +
                            "," + std::to_string(j) + ")");
  }
  return it->second;
}

Axis AxisDraw::crossing_axis(std::size_t r, std::size_t k) const {
  auto it = crossing.find({r, k});
  if (it == crossing.end()) {
    throw std::out_of_range("axis draw has no crossing pair (" + std::to_string(r) +
                            "," + std::to_string(k) + ")");
  }
  return it->second;
}

std::vector<BeadPair> overlap_pairs(std::size_t n_beads) {
  std::vector<BeadPair> pairs;
  for (std::size_t i = 1; i + 2 <= n_beads; ++i) {
    for (std::size_t j = i + 2; j <= n_beads; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::vector<BeadPair> crossing_pairs(std::size_t n_beads) {
  std::vector<BeadPair> pairs;
  for (std::size_t r = 1; r + 3 <= n_beads; ++r) {
    for (std::size_t k = r + 2; k + 1 <= n_beads; ++k) pairs.emplace_back(r, k);
  }
  return pairs;
}

Axis argmax_axis(double x, double y, double z) {
  if (x >= y && x >= z) return Axis::X;
  if (y >= z) return Axis::Y;
  return Axis::Z;
}

Axis draw_axis(std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double x = normal(rng);
  const double y = normal(rng);
  const double z = normal(rng);
  return argmax_axis(x, y, z);
}

AxisDraw draw_axes(std::mt19937_64& rng, const VariableLayout& layout) {
  AxisDraw draw;
  for (const BeadPair& p : overlap_pairs(layout.n_beads())) draw.overlap[p] = draw_axis(rng);
  for (const BeadPair& p : crossing_pairs(layout.n_beads())) draw.crossing[p] = draw_axis(rng);
  return draw;
}

AxisDraw draw_axes(std::uint64_t seed, const VariableLayout& layout) {
  std::mt19937_64 rng(seed);
  return draw_axes(rng, layout);
}

BinaryPolynomial turn_bit(const VariableLayout& layout, std::size_t turn,
                          Axis axis, Half half) {
  if (turn < 1 || turn > layout.n_turns()) {
    throw std::out_of_range("turn " + std::to_string(turn) + " out of range");
  }
  if (!layout.is_encoded(turn)) {
    return BinaryPolynomial::constant(canonical_bit(layout.fixed_turn()[axis], half));
  }
  return BinaryPolynomial::variable(
      static_cast<std::uint32_t>(layout.index(turn, axis, half)));
}

BinaryPolynomial turn_component(const VariableLayout& layout, std::size_t turn,
                                Axis axis) {
  return turn_bit(layout, turn, axis, Half::A) - turn_bit(layout, turn, axis, Half::B);
}

BinaryPolynomial turn_square(const VariableLayout& layout, std::size_t turn, Axis axis) {
  return square(turn_component(layout, turn, axis));
}

BinaryPolynomial turn_sum(const VariableLayout& layout, std::size_t first,
                          std::size_t last, Axis axis) {
  BinaryPolynomial sum;
  for (std::size_t t = first; t <= last; ++t) sum += turn_component(layout, t, axis);
  return sum;
}

BinaryPolynomial build_objective(const HpSequence& seq, const VariableLayout& layout) {
  if (seq.size() != layout.n_beads()) {
    throw std::invalid_argument("layout and sequence lengths differ");
  }
  BinaryPolynomial obj;
  for (const auto& [j, k] : hydrophobic_pairs(seq)) {
    const double w = seq.weight(j, k);
    for (Axis a : kAxes) obj += w * square(turn_sum(layout, j, k - 1, a));
  }
  return obj;
}

BinaryPolynomial build_continuity(const VariableLayout& layout, ContinuityForm form) {
  BinaryPolynomial total;
  for (std::size_t t = 1; t <= layout.n_turns(); ++t) {
    const BinaryPolynomial sx = turn_square(layout, t, Axis::X);
    const BinaryPolynomial sy = turn_square(layout, t, Axis::Y);
    const BinaryPolynomial sz = turn_square(layout, t, Axis::Z);
    BinaryPolynomial term = BinaryPolynomial::constant(1.0) - sx - sy - sz;
    if (form == ContinuityForm::kQubo) {
      // (x_a + x_b)(y_a + y_b) equals x_t^2 y_t^2 once x_a x_b = y_a y_b = 0.
      auto either = [&](Axis a) {
        return turn_bit(layout, t, a, Half::A) + turn_bit(layout, t, a, Half::B);
      };
      const BinaryPolynomial ex = either(Axis::X);
      const BinaryPolynomial ey = either(Axis::Y);
      const BinaryPolynomial ez = either(Axis::Z);
      term += ex * ey + ey * ez + ez * ex;
    } else {
      term += sx * sy + sy * sz + sz * sx;
      if (form == ContinuityForm::kStericAllowed) term -= sx * sy * sz;
    }
    total += term;
  }
  return total;
}

BinaryPolynomial build_overlap(const VariableLayout& layout, const AxisDraw& draw) {
  BinaryPolynomial total;
  for (const auto& [i, j] : overlap_pairs(layout.n_beads())) {
    const Axis a = draw.overlap_axis(i, j);
    total += square(turn_sum(layout, i, j - 1, a));
  }
  return total;
}

BinaryPolynomial build_crossing(const VariableLayout& layout, const AxisDraw& draw) {
  BinaryPolynomial total;
  for (const auto& [r, k] : crossing_pairs(layout.n_beads())) {
    const Axis a = draw.crossing_axis(r, k);
    BinaryPolynomial x = turn_component(layout, k, a) + turn_component(layout, r, a);
    if (k > r + 1) x += 2.0 * turn_sum(layout, r + 1, k - 1, a);
    total += square(x);
  }
  return total;
}

BinaryPolynomial build_pair_exclusion(const VariableLayout& layout) {
  BinaryPolynomial total;
  for (std::size_t t = layout.first_encoded_turn(); t <= layout.n_turns(); ++t) {
    for (Axis a : kAxes) {
      total.add_term({static_cast<std::uint32_t>(layout.index(t, a, Half::A)),
                      static_cast<std::uint32_t>(layout.index(t, a, Half::B))},
                     1.0);
    }
  }
  return total;
}

double QuboProblem::evaluate(std::span<const std::uint8_t> bits) const {
  return hpfold::evaluate(polynomial, bits);
}

QuboProblem assemble(const HpSequence& seq, const VariableLayout& layout,
                     const PenaltyConfig& penalties, const AxisDraw& draw,
                     std::uint64_t rng_seed) {
  penalties.check();
  QuboProblem q;
  q.layout = layout;
  q.polynomial = penalties.lambda0 * build_objective(seq, layout) +
                 penalties.lambda1 * build_continuity(layout, ContinuityForm::kQubo) -
                 penalties.lambda2 * build_overlap(layout, draw) -
                 penalties.lambda3 * build_crossing(layout, draw) +
                 penalties.lambda4 * build_pair_exclusion(layout);
  if (q.polynomial.degree() > 2) {
    throw std::logic_error("assembled objective is not quadratic");
  }
  q.penalties = penalties;
  q.axis_draw = draw;
  q.rng_seed = rng_seed;
  q.sequence = seq.to_string();
  return q;
}

double evaluate(const BinaryPolynomial& p, std::span<const std::uint8_t> bits) {
  if (p.variable_span() > bits.size()) {
    throw std::out_of_range("assignment does not cover every variable");
  }
  return p.evaluate(bits);
}

double CompiledQubo::energy(std::span<const std::uint8_t> bits) const {
  if (bits.size() != n) throw std::invalid_argument("bit count mismatch");
  double e = constant;
  for (std::size_t i = 0; i < n; ++i) {
    if (!bits[i]) continue;
    e += linear[i];
    for (const auto& [j, q] : neighbors[i]) {
      if (j > i && bits[j]) e += q;
    }
  }
  return e;
}

CompiledQubo compile_qubo(const BinaryPolynomial& p, std::size_t n) {
  if (p.degree() > 2) throw std::invalid_argument("polynomial is not quadratic");
  if (p.variable_span() > n) {
    throw std::invalid_argument("polynomial references variables beyond n");
  }
  CompiledQubo q;
  q.n = n;
  q.linear.assign(n, 0.0);
  q.neighbors.assign(n, {});
  for (const auto& [m, c] : p.terms()) {
    if (!m.empty()) q.max_abs_coefficient = std::max(q.max_abs_coefficient, std::abs(c));
    switch (m.size()) {
      case 0: q.constant += c; break;
      case 1: q.linear[m[0]] += c; break;
      default:
        q.neighbors[m[0]].emplace_back(m[1], c);
        q.neighbors[m[1]].emplace_back(m[0], c);
        break;
    }
  }
  return q;
}

}  // namespace hpfold
