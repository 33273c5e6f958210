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

#include "hpfold/model.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hpfold {

HpSequence HpSequence::parse(std::string_view text) {
  std::vector<Bead> beads;
  beads.reserve(text.size());
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'H': beads.push_back(Bead::H); break;
      case 'P': beads.push_back(Bead::P); break;
      default:
        throw std::invalid_argument(std::string("invalid bead '") + c +
                                    "': sequences use only H and P");
    }
  }
  if (beads.size() < 2) {
    throw std::invalid_argument("a sequence needs at least two beads");
  }
  return HpSequence(std::move(beads));
}

std::size_t HpSequence::h_count() const {
  return static_cast<std::size_t>(
      std::count(beads_.begin(), beads_.end(), Bead::H));
}

double HpSequence::weight(std::size_t j, std::size_t k) const {
  if (j > k) std::swap(j, k);
  auto it = weights_.find({j, k});
  return it == weights_.end() ? 1.0 : it->second;
}

void HpSequence::set_weight(std::size_t j, std::size_t k, double w) {
  if (j > k) std::swap(j, k);
  if (j < 1 || k > size() || j == k) {
    throw std::out_of_range("weight pair (" + std::to_string(j) + "," +
                            std::to_string(k) + ") is not a bead pair");
  }
  if (!is_h(j) || !is_h(k)) {
    throw std::invalid_argument("weights are only defined between H beads");
  }
  weights_[{j, k}] = w;
}

std::string HpSequence::to_string() const {
  std::string s;
  s.reserve(beads_.size());
  for (Bead b : beads_) s.push_back(static_cast<char>(b));
  return s;
}

void load_weights_csv(HpSequence& seq, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open weights file " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    long j = 0, k = 0;
    double w = 0.0;
    if (!(fields >> j >> k >> w)) {
      if (line_no == 1) continue;  // header
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": expected 'j,k,w'");
    }
    if (j < 1 || k < 1) {
      throw std::invalid_argument(path + ":" + std::to_string(line_no) +
                                  ": bead numbers start at 1");
    }
    seq.set_weight(static_cast<std::size_t>(j), static_cast<std::size_t>(k), w);
  }
}

std::vector<BeadPair> hydrophobic_pairs(const HpSequence& seq) {
  std::vector<BeadPair> pairs;
  for (std::size_t j = 1; j <= seq.size(); ++j) {
    if (!seq.is_h(j)) continue;
    for (std::size_t k = j + 2; k <= seq.size(); ++k) {
      if (seq.is_h(k)) pairs.emplace_back(j, k);
    }
  }
  return pairs;
}

int bonded_h_pairs(const HpSequence& seq) {
  int c = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (seq.is_h(i) && seq.is_h(i + 1)) ++c;
  }
  return c;
}

int max_contacts(const HpSequence& seq) {
  const int m = static_cast<int>(seq.h_count());
  return m * (m - 1) / 2 - bonded_h_pairs(seq);
}

const std::array<Turn, 26>& lattice_moves() {
  static const std::array<Turn, 26> moves = [] {
    std::array<Turn, 26> m{};
    std::size_t n = 0;
    for (int nonzero = 1; nonzero <= 3; ++nonzero) {
      for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y)
          for (int z = -1; z <= 1; ++z) {
            if ((x != 0) + (y != 0) + (z != 0) == nonzero) m[n++] = {x, y, z};
          }
    }
    return m;
  }();
  return moves;
}

TurnVector decode_bitstring(std::span<const std::uint8_t> bits,
                            const VariableLayout& layout) {
  if (bits.size() != layout.num_variables()) {
    throw std::invalid_argument(
        "bitstring has " + std::to_string(bits.size()) + " bits, layout needs " +
        std::to_string(layout.num_variables()));
  }
  TurnVector turns;
  turns.reserve(layout.n_turns());
  if (layout.first_turn_fixed()) turns.push_back(layout.fixed_turn());
  for (std::size_t base = 0; base < bits.size(); base += 6) {
    auto diff = [&](std::size_t off) {
      return static_cast<int>(bits[base + off] != 0) -
             static_cast<int>(bits[base + off + 1] != 0);
    };
    turns.push_back({diff(0), diff(2), diff(4)});
  }
  return turns;
}

Bits encode_turns(const TurnVector& turns, const VariableLayout& layout) {
  if (turns.size() != layout.n_turns()) {
    throw std::invalid_argument("turn count does not match the layout");
  }
  if (layout.first_turn_fixed() && turns.front() != layout.fixed_turn()) {
    throw std::invalid_argument("first turn differs from the fixed turn");
  }
  Bits bits(layout.num_variables(), 0);
  for (std::size_t t = layout.first_encoded_turn(); t <= layout.n_turns(); ++t) {
    const Turn& turn = turns[t - 1];
    if (!is_unit_step(turn)) {
      throw std::invalid_argument("turn components must be in {-1,0,1}");
    }
    for (Axis a : kAxes) {
      for (Half h : {Half::A, Half::B}) {
        bits[layout.index(t, a, h)] = canonical_bit(turn[a], h);
      }
    }
  }
  return bits;
}

Conformation turns_to_coordinates(const TurnVector& turns) {
  Conformation conf;
  conf.coords.reserve(turns.size() + 1);
  conf.coords.push_back({0, 0, 0});
  for (const Turn& t : turns) conf.coords.push_back(conf.coords.back() + t);
  return conf;
}

namespace {

bool within_unit_cube(const Coord& a, const Coord& b) {
  const Coord d = a - b;
  return d != Coord{0, 0, 0} && std::abs(d.x) <= 1 && std::abs(d.y) <= 1 &&
         std::abs(d.z) <= 1;
}

}  // namespace

int count_contacts(const Conformation& conf, const HpSequence& seq) {
  if (conf.coords.size() != seq.size()) {
    throw std::invalid_argument("conformation and sequence lengths differ");
  }
  int contacts = 0;
  for (const auto& [j, k] : hydrophobic_pairs(seq)) {
    if (within_unit_cube(conf.coords[j - 1], conf.coords[k - 1])) ++contacts;
  }
  return contacts;
}

FeasibilityReport validate(const TurnVector& turns, const HpSequence& seq,
                           ValidationOptions options) {
  if (turns.size() + 1 != seq.size()) {
    throw std::invalid_argument("turn count must be sequence length - 1");
  }
  FeasibilityReport report;
  for (std::size_t i = 0; i < turns.size(); ++i) {
    const Turn& t = turns[i];
    if (t == Turn{0, 0, 0} || (!options.allow_steric && is_body_diagonal(t))) {
      report.continuity_violations.push_back(i + 1);
    }
  }

  const auto coords = turns_to_coordinates(turns).coords;
  const std::size_t n = coords.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 2; j <= n; ++j) {
      if (coords[i - 1] == coords[j - 1]) report.overlap_violations.emplace_back(i, j);
    }
  }
  // Bond (k, k+1) crosses bond (r, r+1) when their midpoints coincide.
  for (std::size_t r = 1; r + 3 <= n; ++r) {
    const Coord mid_r = coords[r - 1] + coords[r];
    for (std::size_t k = r + 2; k + 1 <= n; ++k) {
      if (coords[k - 1] + coords[k] == mid_r) report.crossing_violations.emplace_back(r, k);
    }
  }
  return report;
}

FeasibilityReport validate_assignment(std::span<const std::uint8_t> bits,
                                      const VariableLayout& layout,
                                      const HpSequence& seq,
                                      ValidationOptions options) {
  if (layout.n_beads() != seq.size()) {
    throw std::invalid_argument("layout and sequence lengths differ");
  }
  FeasibilityReport report = validate(decode_bitstring(bits, layout), seq, options);
  for (std::size_t t = layout.first_encoded_turn(); t <= layout.n_turns(); ++t) {
    for (Axis a : kAxes) {
      if (bits[layout.index(t, a, Half::A)] && bits[layout.index(t, a, Half::B)]) {
        report.pair_exclusion_violations.push_back({t, a});
      }
    }
  }
  return report;
}

namespace {

// Depth-first walk over turn sequences. A violation among the first beads
// survives every extension, so partial walks are cut as soon as the newly
// placed bead or bond conflicts; complete walks go through validate().
class Enumerator {
 public:
  Enumerator(const HpSequence& seq, bool allow_steric)
      : seq_(seq), allow_steric_(allow_steric) {}

  EnumerationResult run() {
    const std::size_t n = seq_.size();
    turns_.assign(1, Turn{1, 0, 0});
    coords_ = {{0, 0, 0}, {1, 0, 0}};
    result_.best_contacts = -1;
    if (n == 2) {
      leaf();
    } else {
      extend();
    }
    return result_;
  }

 private:
  void extend() {
    if (coords_.size() == seq_.size()) {
      leaf();
      return;
    }
    for (const Turn& move : lattice_moves()) {
      if (!allow_steric_ && is_body_diagonal(move)) continue;
      const Coord next = coords_.back() + move;
      if (conflicts(next)) continue;
      turns_.push_back(move);
      coords_.push_back(next);
      extend();
      coords_.pop_back();
      turns_.pop_back();
    }
  }

  bool conflicts(const Coord& next) const {
    const std::size_t m = coords_.size();  // next becomes bead m + 1
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (coords_[i] == next) return true;
    }
    const Coord mid_new = coords_[m - 1] + next;
    for (std::size_t r = 0; r + 2 < m; ++r) {
      if (coords_[r] + coords_[r + 1] == mid_new) return true;
    }
    return false;
  }

  void leaf() {
    const FeasibilityReport report =
        validate(turns_, seq_, ValidationOptions{allow_steric_});
    if (!report.feasible()) return;
    ++result_.feasible_count;
    Conformation conf{coords_};
    const int c = count_contacts(conf, seq_);
    if (c > result_.best_contacts) {
      result_.best_contacts = c;
      result_.turns = turns_;
      result_.witness = std::move(conf);
    }
  }

  const HpSequence& seq_;
  bool allow_steric_;
  TurnVector turns_;
  std::vector<Coord> coords_;
  EnumerationResult result_;
};

}  // namespace

EnumerationResult enumerate_optimal(const HpSequence& seq, bool allow_steric) {
  if (seq.size() > kMaxEnumerationBeads) {
    throw std::out_of_range("enumeration is limited to " +
                            std::to_string(kMaxEnumerationBeads) + " beads");
  }
  return Enumerator(seq, allow_steric).run();
}

}  // namespace hpfold
