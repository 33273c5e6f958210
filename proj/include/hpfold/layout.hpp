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

#ifndef HPFOLD_LAYOUT_HPP
#define HPFOLD_LAYOUT_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hpfold {

// Bead and turn numbers in the public API are 1-based: bead 1 sits at the
// origin and turn i joins bead i to bead i+1.

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };
enum class Half : std::uint8_t { A = 0, B = 1 };

inline constexpr Axis kAxes[3] = {Axis::X, Axis::Y, Axis::Z};

char axis_name(Axis axis);
Axis axis_from_name(char name);

// Integer lattice vector. Used both for turns (components in {-1,0,1}) and
// for bead coordinates.
struct Vec3 {
  int x = 0;
  int y = 0;
  int z = 0;

  int operator[](Axis a) const {
    return a == Axis::X ? x : (a == Axis::Y ? y : z);
  }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  auto operator<=>(const Vec3&) const = default;
};

using Turn = Vec3;
using Coord = Vec3;
using TurnVector = std::vector<Turn>;

// One binary value per variable, 0 or 1.
using Bits = std::vector<std::uint8_t>;

std::string bits_to_string(const Bits& bits);
Bits bits_from_string(const std::string& text);

// True iff every component is in {-1, 0, 1}.
bool is_unit_step(const Turn& t);

// Maps (turn, axis, half) to a contiguous variable index. Each encoded turn
// owns six consecutive variables ordered x_a, x_b, y_a, y_b, z_a, z_b. When
// the first turn is fixed it is not encoded and turn 2 starts at index 0.
class VariableLayout {
 public:
  struct Slot {
    std::size_t turn;
    Axis axis;
    Half half;
  };

  explicit VariableLayout(std::size_t n_beads, bool first_turn_fixed = true,
                          Turn fixed_turn = {1, 0, 0});

  std::size_t n_beads() const { return n_beads_; }
  std::size_t n_turns() const { return n_beads_ - 1; }
  bool first_turn_fixed() const { return first_turn_fixed_; }
  const Turn& fixed_turn() const { return fixed_turn_; }

  std::size_t first_encoded_turn() const { return first_turn_fixed_ ? 2 : 1; }
  std::size_t encoded_turns() const {
    return n_turns() - (first_turn_fixed_ ? 1 : 0);
  }
  std::size_t num_variables() const { return 6 * encoded_turns(); }

  bool is_encoded(std::size_t turn) const;

  // Throws std::out_of_range for a fixed or nonexistent turn.
  std::size_t index(std::size_t turn, Axis axis, Half half) const;
  Slot slot(std::size_t variable) const;

  bool operator==(const VariableLayout&) const = default;

 private:
  std::size_t n_beads_;
  bool first_turn_fixed_;
  Turn fixed_turn_;
};

// The canonical bit pair for one turn component: +1 -> (1,0), -1 -> (0,1),
// 0 -> (0,0).
std::uint8_t canonical_bit(int component, Half half);

}  // namespace hpfold

#endif  // HPFOLD_LAYOUT_HPP
