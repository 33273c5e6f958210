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

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "generators.hpp"
#include "hpfold/layout.hpp"
#include "hpfold/model.hpp"

namespace hpfold {
namespace {

using testing::Gen;

TEST(HpSequence, ParsesBeadsAndHydrophobicPositions) {
  const HpSequence seq = HpSequence::parse("HPPHPPHPHH");
  ASSERT_EQ(seq.size(), 10u);
  std::set<std::size_t> h;
  for (std::size_t i = 1; i <= seq.size(); ++i) {
    if (seq.is_h(i)) h.insert(i);
  }
  EXPECT_EQ(h, (std::set<std::size_t>{1, 4, 7, 9, 10}));
  EXPECT_EQ(seq.h_count(), 5u);
}

TEST(HpSequence, MinimalAndInvalidInputs) {
  EXPECT_EQ(HpSequence::parse("HP").size(), 2u);
  EXPECT_EQ(HpSequence::parse("hpH").to_string(), "HPH");
  EXPECT_THROW(HpSequence::parse("HXP"), std::invalid_argument);
  EXPECT_THROW(HpSequence::parse("H"), std::invalid_argument);
  EXPECT_THROW(HpSequence::parse(""), std::invalid_argument);
}

TEST(HpSequence, WeightsAreSymmetricAndOnlyBetweenHBeads) {
  HpSequence seq = HpSequence::parse("HPHH");
  EXPECT_EQ(seq.weight(1, 3), 1.0);
  seq.set_weight(3, 1, 2.5);
  EXPECT_EQ(seq.weight(1, 3), 2.5);
  EXPECT_EQ(seq.weight(3, 1), 2.5);
  EXPECT_THROW(seq.set_weight(1, 2, 1.0), std::invalid_argument);
  EXPECT_THROW(seq.set_weight(1, 9, 1.0), std::out_of_range);
}

TEST(HydrophobicPairs, ExcludesBondedPairs) {
  EXPECT_EQ(hydrophobic_pairs(HpSequence::parse("HPPHPPHPHH")).size(), 9u);
  EXPECT_TRUE(hydrophobic_pairs(HpSequence::parse("HH")).empty());
  EXPECT_EQ(hydrophobic_pairs(HpSequence::parse("HPH")), (std::vector<BeadPair>{{1, 3}}));
}

TEST(MaxContacts, FormulaValues) {
  EXPECT_EQ(max_contacts(HpSequence::parse("PPHPPHPPHP")), 3);
  EXPECT_EQ(max_contacts(HpSequence::parse("HPPHPPHPHH")), 9);
  EXPECT_EQ(max_contacts(HpSequence::parse("HHPPHPHPHP")), 9);
  EXPECT_EQ(max_contacts(HpSequence::parse("HHHHPPHPHH")), 17);
  EXPECT_EQ(max_contacts(HpSequence::parse("HHHH")), 3);
  // 9 H beads, 7 bonded H pairs: 36 - 7. Reference results quote 28 here; the
  // formula value is kept.
  EXPECT_EQ(max_contacts(HpSequence::parse("HHHHHPHHHH")), 29);
}

TEST(LatticeMoves, TwentySixDistinctNonZeroUnitSteps) {
  const auto& moves = lattice_moves();
  std::set<Turn> distinct(moves.begin(), moves.end());
  EXPECT_EQ(distinct.size(), 26u);
  EXPECT_EQ(distinct.count(Turn{0, 0, 0}), 0u);
  int diagonals = 0;
  for (const Turn& m : moves) {
    EXPECT_TRUE(is_unit_step(m));
    diagonals += is_body_diagonal(m) ? 1 : 0;
  }
  EXPECT_EQ(diagonals, 8);
}

TEST(VariableLayout, CountsMatchFixedAndFreeFirstTurn) {
  EXPECT_EQ(VariableLayout(10, true).num_variables(), 48u);
  EXPECT_EQ(VariableLayout(10, false).num_variables(), 54u);
  EXPECT_EQ(VariableLayout(20, false).num_variables(), 114u);
  EXPECT_EQ(VariableLayout(3, true).num_variables(), 6u);
  EXPECT_EQ(VariableLayout(2, true).num_variables(), 0u);
}

TEST(VariableLayout, IndexIsABijection) {
  for (bool fixed : {true, false}) {
    const VariableLayout layout(7, fixed);
    std::set<std::size_t> seen;
    for (std::size_t t = layout.first_encoded_turn(); t <= layout.n_turns(); ++t) {
      for (Axis a : kAxes) {
        for (Half h : {Half::A, Half::B}) {
          const std::size_t v = layout.index(t, a, h);
          ASSERT_LT(v, layout.num_variables());
          EXPECT_TRUE(seen.insert(v).second);
          const auto slot = layout.slot(v);
          EXPECT_EQ(slot.turn, t);
          EXPECT_EQ(slot.axis, a);
          EXPECT_EQ(slot.half, h);
        }
      }
    }
    EXPECT_EQ(seen.size(), layout.num_variables());
  }
  EXPECT_THROW(VariableLayout(7, true).index(1, Axis::X, Half::A), std::out_of_range);
}

TEST(Decode, BitExamples) {
  const VariableLayout one_turn(2, false);
  EXPECT_EQ(decode_bitstring(Bits{0, 1, 0, 0, 1, 0}, one_turn), (TurnVector{{-1, 0, 1}}));
  EXPECT_EQ(decode_bitstring(Bits{1, 1, 1, 1, 1, 1}, one_turn), (TurnVector{{0, 0, 0}}));

  const VariableLayout layout(5, false);
  EXPECT_EQ(decode_bitstring(Bits(layout.num_variables(), 0), layout), TurnVector(4));

  const VariableLayout fixed(3, true);
  const TurnVector turns = decode_bitstring(Bits{0, 0, 1, 0, 0, 0}, fixed);
  EXPECT_EQ(turns, (TurnVector{{1, 0, 0}, {0, 1, 0}}));
  EXPECT_THROW(decode_bitstring(Bits{0, 1}, fixed), std::invalid_argument);
}

TEST(Decode, EncodeRoundTripProperty) {
  Gen gen(101);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 12));
    const VariableLayout layout(n, gen.coin());
    TurnVector turns = gen.turns(n - 1);
    if (layout.first_turn_fixed()) turns[0] = layout.fixed_turn();
    const Bits bits = encode_turns(turns, layout);
    ASSERT_EQ(bits.size(), layout.num_variables());
    EXPECT_EQ(decode_bitstring(bits, layout), turns);
  }
}

TEST(Coordinates, PrefixSums) {
  EXPECT_EQ(turns_to_coordinates({}).coords, (std::vector<Coord>{{0, 0, 0}}));
  EXPECT_EQ(turns_to_coordinates({{1, 0, 0}, {0, 1, 0}}).coords,
            (std::vector<Coord>{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}));
  EXPECT_EQ(turns_to_coordinates({{-1, 0, 1}}).coords,
            (std::vector<Coord>{{0, 0, 0}, {-1, 0, 1}}));
}

TEST(Coordinates, DifferencesRecoverTurnsProperty) {
  Gen gen(7);
  for (int trial = 0; trial < 300; ++trial) {
    const TurnVector turns = gen.turns(static_cast<std::size_t>(gen.integer(0, 15)));
    const auto coords = turns_to_coordinates(turns).coords;
    ASSERT_EQ(coords.size(), turns.size() + 1);
    EXPECT_EQ(coords.front(), (Coord{0, 0, 0}));
    for (std::size_t i = 0; i < turns.size(); ++i) EXPECT_EQ(coords[i + 1] - coords[i], turns[i]);
  }
}

TEST(Contacts, ChebyshevNeighbourhood) {
  const HpSequence hph = HpSequence::parse("HPH");
  EXPECT_EQ(count_contacts({{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}}, hph), 1);
  EXPECT_EQ(count_contacts({{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}}, hph), 0);
  // Body diagonal: (0,0,0) to (1,1,1).
  EXPECT_EQ(count_contacts({{{0, 0, 0}, {1, 0, 0}, {1, 1, 1}}}, hph), 1);
  // Bonded H pairs never count.
  EXPECT_EQ(count_contacts({{{0, 0, 0}, {1, 0, 0}}}, HpSequence::parse("HH")), 0);
}

TEST(Contacts, NeverExceedMaxContactsProperty) {
  Gen gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 12));
    const HpSequence seq = HpSequence::parse(gen.hp_string(n));
    const auto conf = turns_to_coordinates(gen.self_avoiding_walk(n));
    const int c = count_contacts(conf, seq);
    EXPECT_GE(c, 0);
    EXPECT_LE(c, max_contacts(seq));
  }
}

TEST(Validate, ViolationExamples) {
  const HpSequence four = HpSequence::parse("PPPP");
  // (0,0,0) (1,1,0) (1,0,0) (0,1,0): bonds 1 and 3 share a midpoint.
  const FeasibilityReport crossing = validate({{1, 1, 0}, {0, -1, 0}, {-1, 1, 0}}, four);
  EXPECT_EQ(crossing.crossing_violations, (std::vector<BeadPair>{{1, 3}}));
  EXPECT_TRUE(crossing.overlap_violations.empty());
  EXPECT_FALSE(crossing.feasible());

  const HpSequence three = HpSequence::parse("HPH");
  const FeasibilityReport zero = validate({{1, 0, 0}, {0, 0, 0}}, three);
  EXPECT_EQ(zero.continuity_violations, (std::vector<std::size_t>{2}));

  const FeasibilityReport back = validate({{1, 0, 0}, {-1, 0, 0}}, three);
  EXPECT_EQ(back.overlap_violations, (std::vector<BeadPair>{{1, 3}}));

  EXPECT_TRUE(validate({{1, 0, 0}, {0, 1, 0}}, three).feasible());
  EXPECT_THROW(validate({{1, 0, 0}}, three), std::invalid_argument);
}

TEST(Validate, StericFlagControlsBodyDiagonals) {
  const HpSequence seq = HpSequence::parse("HPH");
  const TurnVector turns{{1, 0, 0}, {-1, 1, 1}};
  EXPECT_TRUE(validate(turns, seq, {.allow_steric = true}).feasible());
  EXPECT_EQ(validate(turns, seq, {.allow_steric = false}).continuity_violations,
            (std::vector<std::size_t>{2}));
}

TEST(Validate, PairExclusionOnlyFromBits) {
  const VariableLayout layout(3, true);
  const HpSequence seq = HpSequence::parse("HPH");
  // Second turn: x_a = x_b = 1 and y_a = 1 decodes to (0,1,0).
  const Bits bits{1, 1, 1, 0, 0, 0};
  EXPECT_TRUE(validate(decode_bitstring(bits, layout), seq).feasible());
  const FeasibilityReport r = validate_assignment(bits, layout, seq);
  ASSERT_EQ(r.pair_exclusion_violations.size(), 1u);
  EXPECT_EQ(r.pair_exclusion_violations[0], (PairExclusion{2, Axis::X}));
  EXPECT_EQ(r.violation_count(), 1u);
}

TEST(Validate, CrossingsMatchMidpointOracleProperty) {
  Gen gen(99);
  const HpSequence seq = HpSequence::parse("PPPPPPPPP");
  for (int trial = 0; trial < 500; ++trial) {
    const TurnVector turns = gen.self_avoiding_walk(seq.size());
    const auto coords = turns_to_coordinates(turns).coords;
    const FeasibilityReport r = validate(turns, seq);
    EXPECT_TRUE(r.overlap_violations.empty());
    EXPECT_TRUE(r.continuity_violations.empty());
    EXPECT_EQ(r.crossing_violations, testing::midpoint_coincidences(coords));
  }
}

TEST(Enumerate, SmallOptima) {
  EXPECT_EQ(enumerate_optimal(HpSequence::parse("HPPH"), true).best_contacts, 1);
  EXPECT_EQ(enumerate_optimal(HpSequence::parse("HPH"), true).best_contacts, 1);
  EXPECT_EQ(enumerate_optimal(HpSequence::parse("PPP"), true).best_contacts, 0);
  EXPECT_EQ(enumerate_optimal(HpSequence::parse("HH"), true).best_contacts, 0);
  EXPECT_THROW(enumerate_optimal(HpSequence::parse("HPHPHPHP"), true), std::out_of_range);
}

TEST(Enumerate, WitnessIsFeasibleAndAchievesOptimum) {
  Gen gen(5);
  for (int trial = 0; trial < 20; ++trial) {
    const HpSequence seq =
        HpSequence::parse(gen.hp_string(static_cast<std::size_t>(gen.integer(3, 6))));
    for (bool steric : {true, false}) {
      const EnumerationResult e = enumerate_optimal(seq, steric);
      EXPECT_TRUE(validate(e.turns, seq, {.allow_steric = steric}).feasible());
      EXPECT_EQ(count_contacts(e.witness, seq), e.best_contacts);
      EXPECT_LE(e.best_contacts, max_contacts(seq));
      EXPECT_GT(e.feasible_count, 0u);
    }
  }
}

TEST(Enumerate, StericFreedomNeverHurts) {
  for (const char* s : {"HPPH", "HPHPH", "HHPHH", "HPPPPH"}) {
    const HpSequence seq = HpSequence::parse(s);
    EXPECT_GE(enumerate_optimal(seq, true).best_contacts,
              enumerate_optimal(seq, false).best_contacts)
        << s;
  }
}

}  // namespace
}  // namespace hpfold
