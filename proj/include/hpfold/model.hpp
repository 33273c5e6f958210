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

#ifndef HPFOLD_MODEL_HPP
#define HPFOLD_MODEL_HPP

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hpfold/layout.hpp"

namespace hpfold {

enum class Bead : char { H = 'H', P = 'P' };

using BeadPair = std::pair<std::size_t, std::size_t>;  // 1-based, first < second

// An HP chain with optional per-pair interaction weights between H beads.
// Unset weights default to 1.
class HpSequence {
 public:
  // Case-insensitive; throws std::invalid_argument on anything but H/P or on
  // fewer than two beads.
  static HpSequence parse(std::string_view text);

  std::size_t size() const { return beads_.size(); }
  Bead bead(std::size_t i) const { return beads_.at(i - 1); }
  bool is_h(std::size_t i) const { return bead(i) == Bead::H; }
  std::size_t h_count() const;

  double weight(std::size_t j, std::size_t k) const;
  // Only H-H pairs may carry a weight.
  void set_weight(std::size_t j, std::size_t k, double w);
  const std::map<BeadPair, double>& weights() const { return weights_; }

  std::string to_string() const;

 private:
  explicit HpSequence(std::vector<Bead> beads) : beads_(std::move(beads)) {}

  std::vector<Bead> beads_;
  std::map<BeadPair, double> weights_;
};

// Weight matrix CSV: one "j,k,w" row per pair, 1-based bead numbers. Blank
// lines, '#' comments and a non-numeric header row are skipped.
void load_weights_csv(HpSequence& seq, const std::string& path);

// All non-bonded H-H pairs (k > j + 1), lexicographic.
std::vector<BeadPair> hydrophobic_pairs(const HpSequence& seq);

// Number of bonded H-H neighbours along the chain.
int bonded_h_pairs(const HpSequence& seq);

// M(M-1)/2 - c with M the H count and c the bonded H-H count.
int max_contacts(const HpSequence& seq);

// The 26 non-zero moves of the cubic lattice with face, edge and body
// diagonals, in a fixed order: axis moves, planar diagonals, body diagonals.
const std::array<Turn, 26>& lattice_moves();

inline bool is_body_diagonal(const Turn& t) {
  return t.x != 0 && t.y != 0 && t.z != 0;
}

// turn = (x_a - x_b, y_a - y_b, z_a - z_b) per encoded turn; a fixed first
// turn is prepended. Throws std::invalid_argument on a bit count mismatch.
TurnVector decode_bitstring(std::span<const std::uint8_t> bits,
                            const VariableLayout& layout);

// Canonical inverse of decode_bitstring. Throws if a turn has a component
// outside {-1,0,1}, the count is wrong, or a fixed first turn disagrees.
Bits encode_turns(const TurnVector& turns, const VariableLayout& layout);

struct Conformation {
  std::vector<Coord> coords;
};

// coords[0] is the origin and coords[i+1] - coords[i] = turns[i].
Conformation turns_to_coordinates(const TurnVector& turns);

// Chebyshev distance 1 between non-bonded H beads counts as one contact.
// Throws std::invalid_argument on a length mismatch.
int count_contacts(const Conformation& conf, const HpSequence& seq);

struct ValidationOptions {
  bool allow_steric = true;
};

struct PairExclusion {
  std::size_t step;
  Axis axis;
  bool operator==(const PairExclusion&) const = default;
};

struct FeasibilityReport {
  std::vector<std::size_t> continuity_violations;   // turn numbers
  std::vector<BeadPair> overlap_violations;         // bead pairs
  std::vector<BeadPair> crossing_violations;        // (r, k) bond pairs
  std::vector<PairExclusion> pair_exclusion_violations;

  bool feasible() const {
    return continuity_violations.empty() && overlap_violations.empty() &&
           crossing_violations.empty() && pair_exclusion_violations.empty();
  }
  std::size_t violation_count() const {
    return continuity_violations.size() + overlap_violations.size() +
           crossing_violations.size() + pair_exclusion_violations.size();
  }
};

// Geometric checks on a turn vector. Pair exclusion needs the raw bits, see
// validate_assignment.
FeasibilityReport validate(const TurnVector& turns, const HpSequence& seq,
                           ValidationOptions options = {});

// validate() on the decoded bits plus the x_a = x_b = 1 pair-exclusion check.
FeasibilityReport validate_assignment(std::span<const std::uint8_t> bits,
                                      const VariableLayout& layout,
                                      const HpSequence& seq,
                                      ValidationOptions options = {});

struct EnumerationResult {
  int best_contacts = 0;
  TurnVector turns;
  Conformation witness;
  std::size_t feasible_count = 0;
};

inline constexpr std::size_t kMaxEnumerationBeads = 7;

// Exhaustive search over all 26^(N-2) turn sequences with the first turn
// fixed to (1,0,0). Throws std::out_of_range above kMaxEnumerationBeads.
EnumerationResult enumerate_optimal(const HpSequence& seq, bool allow_steric);

}  // namespace hpfold

#endif  // HPFOLD_MODEL_HPP
