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

#include "hpfold/layout.hpp"

#include <stdexcept>

namespace hpfold {

char axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

Axis axis_from_name(char name) {
  switch (name) {
    case 'x': case 'X': return Axis::X;
    case 'y': case 'Y': return Axis::Y;
    case 'z': case 'Z': return Axis::Z;
  }
  throw std::invalid_argument(std::string("unknown axis '") + name + "'");
}

std::string bits_to_string(const Bits& bits) {
  std::string s(bits.size(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) s[i] = '1';
  }
  return s;
}

Bits bits_from_string(const std::string& text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits.push_back(static_cast<std::uint8_t>(c - '0'));
    } else {
      throw std::invalid_argument("bitstring may only contain '0' and '1'");
    }
  }
  return bits;
}

bool is_unit_step(const Turn& t) {
  auto ok = [](int v) { return v >= -1 && v <= 1; };
  return ok(t.x) && ok(t.y) && ok(t.z);
}

VariableLayout::VariableLayout(std::size_t n_beads, bool first_turn_fixed,
                               Turn fixed_turn)
    : n_beads_(n_beads),
      first_turn_fixed_(first_turn_fixed),
      fixed_turn_(fixed_turn) {
  if (n_beads_ < 2) {
    throw std::invalid_argument("a layout needs at least two beads");
  }
  if (first_turn_fixed_) {
    if (!is_unit_step(fixed_turn_) || fixed_turn_ == Turn{0, 0, 0}) {
      throw std::invalid_argument("fixed first turn must be a lattice move");
    }
  }
}

bool VariableLayout::is_encoded(std::size_t turn) const {
  return turn >= first_encoded_turn() && turn <= n_turns();
}

std::size_t VariableLayout::index(std::size_t turn, Axis axis, Half half) const {
  if (!is_encoded(turn)) {
    throw std::out_of_range("turn " + std::to_string(turn) +
                            " has no variables in this layout");
  }
  return 6 * (turn - first_encoded_turn()) +
         2 * static_cast<std::size_t>(axis) + static_cast<std::size_t>(half);
}

VariableLayout::Slot VariableLayout::slot(std::size_t variable) const {
  if (variable >= num_variables()) {
    throw std::out_of_range("variable index out of range");
  }
  return Slot{first_encoded_turn() + variable / 6,
              static_cast<Axis>((variable % 6) / 2),
              static_cast<Half>(variable % 2)};
}

std::uint8_t canonical_bit(int component, Half half) {
  if (component > 0) return half == Half::A ? 1 : 0;
  if (component < 0) return half == Half::B ? 1 : 0;
  return 0;
}

}  // namespace hpfold
