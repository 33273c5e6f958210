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

// Seeded random instance generators shared by the property tests.
#ifndef HPFOLD_TESTS_GENERATORS_HPP
#define HPFOLD_TESTS_GENERATORS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hpfold/layout.hpp"
#include "hpfold/model.hpp"
#include "hpfold/polynomial.hpp"

namespace hpfold::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& rng() { return rng_; }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  std::string hp_string(std::size_t n) {
    std::string s(n, 'P');
    for (char& c : s) c = coin() ? 'H' : 'P';
    return s;
  }

  Bits bits(std::size_t n) {
    Bits b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(integer(0, 1));
    return b;
  }

  // Any of the 27 component triples, (0,0,0) included.
  Turn any_turn() { return {integer(-1, 1), integer(-1, 1), integer(-1, 1)}; }

  TurnVector turns(std::size_t count) {
    TurnVector t(count);
    for (auto& x : t) x = any_turn();
    return t;
  }

  // Random degree <= 2 polynomial with up to `max_terms` terms.
  BinaryPolynomial quadratic(std::size_t n, std::size_t max_terms) {
    BinaryPolynomial p;
    p.add_term({}, real(-5, 5));
    const auto terms = static_cast<std::size_t>(integer(1, static_cast<int>(max_terms)));
    for (std::size_t t = 0; t < terms; ++t) {
      const auto i = static_cast<std::uint32_t>(integer(0, static_cast<int>(n) - 1));
      const auto j = static_cast<std::uint32_t>(integer(0, static_cast<int>(n) - 1));
      p.add_term(coin() ? BinaryPolynomial::Monomial{i} : BinaryPolynomial::Monomial{i, j},
                 real(-5, 5));
    }
    return p;
  }

  // Self-avoiding walk over the 26 lattice moves, grown with restarts when it
  // traps itself. Crossings are allowed; callers filter as needed.
  TurnVector self_avoiding_walk(std::size_t n_beads) {
    const auto& moves = lattice_moves();
    for (;;) {
      TurnVector turns;
      std::set<Coord> seen{{0, 0, 0}};
      Coord at{0, 0, 0};
      bool stuck = false;
      while (turns.size() + 1 < n_beads && !stuck) {
        std::vector<Turn> open;
        for (const Turn& m : moves) {
          if (!seen.count(at + m)) open.push_back(m);
        }
        if (open.empty()) {
          stuck = true;
          break;
        }
        const Turn m = open[static_cast<std::size_t>(integer(0, static_cast<int>(open.size()) - 1))];
        at = at + m;
        seen.insert(at);
        turns.push_back(m);
      }
      if (!stuck) return turns;
    }
  }

 private:
  std::mt19937_64 rng_;
};

// Bond pairs (r, k), 1-based with k >= r + 2, whose midpoints coincide.
inline std::vector<BeadPair> midpoint_coincidences(const std::vector<Coord>& coords) {
  std::vector<BeadPair> out;
  const std::size_t bonds = coords.size() - 1;
  for (std::size_t r = 1; r <= bonds; ++r) {
    for (std::size_t k = r + 2; k <= bonds; ++k) {
      if (coords[r - 1] + coords[r] == coords[k - 1] + coords[k]) out.emplace_back(r, k);
    }
  }
  return out;
}

// Squared Euclidean distance summed over non-bonded H pairs, straight from
// the coordinates.
inline double direct_objective(const TurnVector& turns, const HpSequence& seq) {
  const auto coords = turns_to_coordinates(turns).coords;
  double total = 0.0;
  for (const auto& [j, k] : hydrophobic_pairs(seq)) {
    const Coord d = coords[k - 1] - coords[j - 1];
    total += seq.weight(j, k) * (d.x * d.x + d.y * d.y + d.z * d.z);
  }
  return total;
}

}  // namespace hpfold::testing

#endif  // HPFOLD_TESTS_GENERATORS_HPP
