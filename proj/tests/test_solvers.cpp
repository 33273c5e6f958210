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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "generators.hpp"
#include "hpfold/encoder.hpp"
#include "hpfold/ising.hpp"
#include "hpfold/model.hpp"
#include "hpfold/solvers.hpp"

namespace hpfold {
namespace {

using testing::Gen;
using Poly = BinaryPolynomial;

QuboProblem folding_problem(const std::string& s, std::uint64_t seed, bool fixed = true) {
  const HpSequence seq = HpSequence::parse(s);
  const VariableLayout layout(seq.size(), fixed);
  return assemble(seq, layout, calibrate_penalties(seq), draw_axes(seed, layout), seed);
}

AnnealSchedule quick_schedule(const QuboProblem& q, std::uint64_t seed) {
  AnnealSchedule s = AnnealSchedule::defaults_for(q, seed);
  s.sweeps = 300;
  s.restarts = 4;
  return s;
}

// ---------------------------------------------------------------- anneal

TEST(Anneal, DefaultScheduleScalesWithCoefficients) {
  const QuboProblem q = folding_problem("HPPH", 1);
  const AnnealSchedule s = AnnealSchedule::defaults_for(q, 9);
  EXPECT_DOUBLE_EQ(s.t_initial, 10.0 * compile_qubo(q.polynomial, q.num_variables()).max_abs_coefficient);
  EXPECT_EQ(s.t_final, 0.01);
  EXPECT_EQ(s.sweeps, 2000u);
  EXPECT_EQ(s.restarts, 20u);
  EXPECT_EQ(s.seed, 9u);
}

TEST(Anneal, ScheduleValidation) {
  AnnealSchedule s;
  s.t_final = 0.0;
  EXPECT_THROW(s.check(), std::invalid_argument);
  s.t_final = 2.0;
  s.t_initial = 1.0;
  EXPECT_THROW(s.check(), std::invalid_argument);
  s.t_initial = 2.0;
  s.sweeps = 0;
  EXPECT_THROW(s.check(), std::invalid_argument);
}

TEST(Anneal, TrivialInstances) {
  AnnealSchedule s;
  s.sweeps = 50;
  s.restarts = 3;
  const SolveResult one = anneal(compile_qubo(Poly::variable(0), 1), s);
  EXPECT_EQ(one.best_bits, Bits{0});
  EXPECT_EQ(one.best_value, 0.0);

  const SolveResult pair = anneal(compile_qubo(-1.0 * Poly::variable(0) * Poly::variable(1), 2), s);
  EXPECT_EQ(pair.best_bits, (Bits{1, 1}));
  EXPECT_EQ(pair.best_value, -1.0);
}

TEST(Anneal, ZeroTemperatureIsDescent) {
  Gen gen(21);
  for (int trial = 0; trial < 10; ++trial) {
    const QuboProblem q = folding_problem(gen.hp_string(6), static_cast<std::uint64_t>(trial));
    AnnealSchedule s;
    s.t_initial = 1e-6;
    s.t_final = 1e-6;
    s.sweeps = 100;
    s.restarts = 1;
    s.seed = static_cast<std::uint64_t>(trial);
    const SolveResult r = anneal(q, s);
    ASSERT_EQ(r.trace.size(), 100u);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
      EXPECT_LE(r.trace[i].objective, r.trace[i - 1].objective + 1e-9);
    }
  }
}

TEST(Anneal, SameSeedSameResult) {
  const QuboProblem q = folding_problem("HPPHPH", 4);
  const SolveResult a = anneal(q, quick_schedule(q, 77));
  const SolveResult b = anneal(q, quick_schedule(q, 77));
  EXPECT_EQ(a.best_bits, b.best_bits);
  EXPECT_EQ(a.best_value, b.best_value);
  EXPECT_EQ(a.sweeps_to_best, b.sweeps_to_best);
  ASSERT_EQ(a.trace.size(), b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    EXPECT_EQ(a.trace[i].objective, b.trace[i].objective);
  }
  ASSERT_EQ(a.samples.distinct(), b.samples.distinct());
  for (std::size_t i = 0; i < a.samples.distinct(); ++i) {
    EXPECT_EQ(a.samples.samples()[i].bits, b.samples.samples()[i].bits);
    EXPECT_EQ(a.samples.samples()[i].count, b.samples.samples()[i].count);
  }
}

TEST(Anneal, TraceAndSamplesAreConsistent) {
  const QuboProblem q = folding_problem("HPHPPH", 2);
  const SolveResult r = anneal(q, quick_schedule(q, 3));
  EXPECT_EQ(r.trace.size(), 300u);
  EXPECT_EQ(r.samples.shots(), 300u * 4u);
  EXPECT_NEAR(r.trace.back().best_so_far, r.best_value, 1e-9);
  EXPECT_GE(r.sweeps_to_best, 1u);
  EXPECT_LE(r.sweeps_to_best, 300u);
  for (const Sample& s : r.samples.samples()) EXPECT_NEAR(s.energy, q.evaluate(s.bits), 1e-9);
}

// ---------------------------------------------------------------- exhaustive

TEST(Exhaustive, MatchesBruteForceProperty) {
  Gen gen(55);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 12));
    const Poly p = gen.quadratic(n, 25);
    double best = INFINITY;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      Bits b(n);
      for (std::size_t i = 0; i < n; ++i) b[i] = (m >> i) & 1U;
      best = std::min(best, p.evaluate(b));
    }
    const SolveResult r = exhaustive(compile_qubo(p, n), {.keep_lowest = 16, .keep_spectrum = true});
    EXPECT_NEAR(r.best_value, best, 1e-9);
    EXPECT_NEAR(p.evaluate(r.best_bits), best, 1e-9);
    EXPECT_EQ(r.spectrum.size(), std::size_t{1} << n);
    EXPECT_LE(r.samples.distinct(), 16u);
    // Retained states are the lowest ones, in ascending order.
    const auto& s = r.samples.samples();
    for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(s[i - 1].energy, s[i].energy);
    std::vector<double> sorted = r.spectrum;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_NEAR(s.back().energy, sorted[s.size() - 1], 1e-9);
  }
}

TEST(Exhaustive, SingleVariableClosedForm) {
  for (double c : {-2.0, 0.0, 3.0}) {
    const Poly p = c * Poly::variable(0) + Poly::constant(1.0);
    const SolveResult r = exhaustive(compile_qubo(p, 1));
    EXPECT_EQ(r.best_value, std::min(1.0, 1.0 + c));
  }
}

TEST(Exhaustive, RejectsLargeProblems) {
  EXPECT_THROW(exhaustive(folding_problem("HPPHPPH", 1)), std::out_of_range);
}

TEST(Exhaustive, HphPostSelectsOneContact) {
  const HpSequence seq = HpSequence::parse("HPH");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const QuboProblem q = folding_problem("HPH", seed);
    ASSERT_EQ(q.num_variables(), 6u);
    const SolveResult best = postselect(exhaustive(q).samples, q, seq);
    EXPECT_TRUE(best.feasible);
    EXPECT_EQ(best.contacts, 1);
  }
}

TEST(Exhaustive, BoundsAnnealAndSamplesProperty) {
  Gen gen(66);
  int agree = 0;
  constexpr int kRuns = 40;
  for (int trial = 0; trial < kRuns; ++trial) {
    const QuboProblem q =
        folding_problem(gen.hp_string(static_cast<std::size_t>(gen.integer(3, 5))),
                        static_cast<std::uint64_t>(trial));
    ASSERT_LE(q.num_variables(), 20u);
    const SolveResult ex = exhaustive(q);
    const SolveResult an = anneal(q, AnnealSchedule::defaults_for(q, static_cast<std::uint64_t>(trial)));
    EXPECT_LE(ex.best_value, an.best_value + 1e-9);
    for (const Sample& s : an.samples.samples()) EXPECT_LE(an.best_value, s.energy + 1e-9);
    agree += std::abs(ex.best_value - an.best_value) <= 1e-9 ? 1 : 0;
  }
  EXPECT_GE(agree, static_cast<int>(std::ceil(0.95 * kRuns)));
}

// ---------------------------------------------------------------- statevector

TEST(Statevector, Gates) {
  Statevector s(2);
  s.apply_ry(0, std::numbers::pi);
  auto p = s.probabilities();
  EXPECT_NEAR(p[1], 1.0, 1e-12);
  s.apply_cx(0, 1);
  p = s.probabilities();
  EXPECT_NEAR(p[3], 1.0, 1e-12);
  s.apply_rz(1, 0.7);
  EXPECT_NEAR(s.probabilities()[3], 1.0, 1e-12);
  s.reset();
  EXPECT_NEAR(s.probabilities()[0], 1.0, 1e-12);
  s.apply_ry(1, std::numbers::pi / 2);
  p = s.probabilities();
  EXPECT_NEAR(p[0], 0.5, 1e-12);
  EXPECT_NEAR(p[2], 0.5, 1e-12);
}

TEST(Ansatz, ParameterCountAndChecks) {
  EXPECT_EQ((AnsatzSpec{6, 1, Entangler::kLinear}.parameter_count()), 24u);
  EXPECT_EQ((AnsatzSpec{6, 2, Entangler::kLinear}.parameter_count()), 36u);
  EXPECT_THROW((AnsatzSpec{6, 3, Entangler::kLinear}.check()), std::invalid_argument);
  EXPECT_THROW((AnsatzSpec{23, 1, Entangler::kLinear}.check()), std::out_of_range);
  Statevector s(3);
  EXPECT_THROW(apply_ansatz(s, AnsatzSpec{3, 1, Entangler::kLinear}, std::vector<double>(5)),
               std::invalid_argument);
}

TEST(Ansatz, PreservesNormProperty) {
  Gen gen(13);
  for (int trial = 0; trial < 50; ++trial) {
    const AnsatzSpec spec{static_cast<std::size_t>(gen.integer(1, 7)),
                          static_cast<std::size_t>(gen.integer(1, 2)),
                          gen.coin() ? Entangler::kLinear : Entangler::kCircular};
    std::vector<double> params(spec.parameter_count());
    for (double& v : params) v = gen.real(-std::numbers::pi, std::numbers::pi);
    Statevector s(spec.qubits);
    apply_ansatz(s, spec, params);
    EXPECT_NEAR(s.norm(), 1.0, 1e-10);
  }
}

TEST(Ansatz, ZeroParametersGiveAllZeroBasisState) {
  const QuboProblem q = folding_problem("HPPH", 3);
  const IsingOperator op = qubo_to_ising(q);
  const AnsatzSpec spec{op.n, 1, Entangler::kLinear};
  const std::vector<double> zeros(spec.parameter_count(), 0.0);
  Statevector s(spec.qubits);
  apply_ansatz(s, spec, zeros);
  EXPECT_NEAR(s.probabilities()[0], 1.0, 1e-12);
  for (double alpha : {0.05, 0.5, 1.0}) {
    EXPECT_NEAR(vqe_exact_objective(op, spec, zeros, alpha), ising_energy(op, Bits(op.n, 0)), 1e-9);
  }
}

TEST(Ansatz, FullTailIsExpectationProperty) {
  Gen gen(15);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    const IsingOperator op = qubo_to_ising(gen.quadratic(n, 12), n);
    const AnsatzSpec spec{n, 1, Entangler::kLinear};
    std::vector<double> params(spec.parameter_count());
    for (double& v : params) v = gen.real(-3, 3);
    Statevector s(n);
    apply_ansatz(s, spec, params);
    const auto probs = s.probabilities();
    const auto energies = ising_spectrum(op);
    double expectation = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) expectation += probs[i] * energies[i];
    EXPECT_NEAR(vqe_exact_objective(op, spec, params, 1.0), expectation, 1e-9);
  }
}

// ---------------------------------------------------------------- VQE

TEST(NelderMead, FindsQuadraticMinimum) {
  auto f = [](std::span<const double> p) {
    return (p[0] - 1.0) * (p[0] - 1.0) + 3.0 * (p[1] + 2.0) * (p[1] + 2.0);
  };
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0}, {.max_iterations = 400});
  EXPECT_NEAR(r.best[0], 1.0, 1e-4);
  EXPECT_NEAR(r.best[1], -2.0, 1e-4);
  EXPECT_LE(r.iterations, 400u);
}

TEST(Vqe, ConstantOperatorRunsToIterationCap) {
  IsingOperator op;
  op.n = 1;
  op.constant = 2.5;
  VqeSettings st;
  st.max_iterations = 40;
  st.shots = 0;
  const SolveResult r = vqe_statevector(op, {1, 1, Entangler::kLinear}, st);
  EXPECT_EQ(r.provenance.at("iterations"), "40");
  for (const TracePoint& t : r.trace) EXPECT_DOUBLE_EQ(t.objective, 2.5);
  EXPECT_DOUBLE_EQ(r.best_value, 2.5);
}

TEST(Vqe, SingleQubitConverges) {
  const IsingOperator op = qubo_to_ising(Poly::variable(0), 1);
  VqeSettings st;
  st.alpha = 1.0;
  st.shots = 0;
  st.max_iterations = 200;
  st.seed = 5;
  const SolveResult r = vqe_statevector(op, {1, 1, Entangler::kLinear}, st);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_LE(r.trace.back().best_so_far, 0.01);
  EXPECT_LE(r.trace.size(), 200u);
}

TEST(Vqe, HphFindsOptimalContact) {
  const HpSequence seq = HpSequence::parse("HPH");
  const int optimum = enumerate_optimal(seq, true).best_contacts;
  const QuboProblem q = folding_problem("HPH", 0);
  VqeSettings st;
  st.seed = 1;
  const SolveResult r = vqe_statevector(qubo_to_ising(q), {6, 1, Entangler::kLinear}, st);
  EXPECT_EQ(r.samples.shots(), st.final_shots);
  const SolveResult best = postselect(r.samples, q, seq);
  EXPECT_TRUE(best.feasible);
  EXPECT_EQ(best.contacts, optimum);
}

TEST(Vqe, SameSeedSameResult) {
  const QuboProblem q = folding_problem("HPH", 2);
  VqeSettings st;
  st.seed = 8;
  st.max_iterations = 60;
  const IsingOperator op = qubo_to_ising(q);
  const SolveResult a = vqe_statevector(op, {6, 1, Entangler::kCircular}, st);
  const SolveResult b = vqe_statevector(op, {6, 1, Entangler::kCircular}, st);
  EXPECT_EQ(a.parameters, b.parameters);
  EXPECT_EQ(a.best_bits, b.best_bits);
  ASSERT_EQ(a.samples.distinct(), b.samples.distinct());
  for (std::size_t i = 0; i < a.samples.distinct(); ++i) {
    EXPECT_EQ(a.samples.samples()[i].bits, b.samples.samples()[i].bits);
    EXPECT_EQ(a.samples.samples()[i].count, b.samples.samples()[i].count);
  }
}

TEST(Vqe, ResumeParametersAreChecked) {
  const IsingOperator op = qubo_to_ising(Poly::variable(0), 1);
  VqeSettings st;
  st.initial_parameters = {0.1, 0.2, 0.3};
  EXPECT_THROW(vqe_statevector(op, {1, 1, Entangler::kLinear}, st), std::invalid_argument);
  st.initial_parameters = {0.0, 0.0, 0.0, 0.0};
  st.max_iterations = 5;
  EXPECT_NO_THROW(vqe_statevector(op, {1, 1, Entangler::kLinear}, st));
  EXPECT_THROW(vqe_statevector(op, {2, 1, Entangler::kLinear}, VqeSettings{}), std::invalid_argument);
}

// ---------------------------------------------------------------- postselect

TEST(Postselect, FeasibilityDominatesContacts) {
  const HpSequence seq = HpSequence::parse("HHHHHHH");
  const VariableLayout layout(seq.size(), true);
  QuboProblem q = folding_problem(seq.to_string(), 1);
  Gen gen(3);
  std::optional<Bits> feasible3, infeasible5;
  for (int i = 0; i < 200000 && !(feasible3 && infeasible5); ++i) {
    TurnVector t = gen.turns(seq.size() - 1);
    t[0] = layout.fixed_turn();
    const FeasibilityReport r = validate(t, seq);
    const int c = count_contacts(turns_to_coordinates(t), seq);
    if (r.feasible() && c == 3 && !feasible3) feasible3 = encode_turns(t, layout);
    if (!r.feasible() && c == 5 && !infeasible5) infeasible5 = encode_turns(t, layout);
  }
  ASSERT_TRUE(feasible3 && infeasible5);
  SampleSet s;
  s.add(*infeasible5, 1, q.evaluate(*infeasible5));
  s.add(*feasible3, 1, q.evaluate(*feasible3));
  const SolveResult best = postselect(s, q, seq);
  EXPECT_TRUE(best.feasible);
  EXPECT_EQ(best.contacts, 3);
  EXPECT_EQ(best.best_bits, *feasible3);
}

TEST(Postselect, NoFeasibleSampleIsFlagged) {
  const HpSequence seq = HpSequence::parse("HPH");
  const QuboProblem q = folding_problem("HPH", 1);
  SampleSet s;
  s.add(Bits(6, 0), 1, q.evaluate(Bits(6, 0)));  // zero second turn
  const Bits two{1, 1, 1, 1, 0, 0};               // zero turn plus two exclusions
  s.add(two, 1, q.evaluate(two));
  const SolveResult best = postselect(s, q, seq);
  EXPECT_FALSE(best.feasible);
  EXPECT_EQ(best.best_bits, Bits(6, 0));
  EXPECT_EQ(best.report.violation_count(), 1u);
  EXPECT_FALSE(postselect(SampleSet{}, q, seq).feasible);
}

TEST(Postselect, TopKLimitsCandidates) {
  const HpSequence seq = HpSequence::parse("HPH");
  const QuboProblem q = folding_problem("HPH", 1);
  const SolveResult ex = exhaustive(q);
  EXPECT_EQ(postselect(ex.samples, q, seq, 5).candidates, 5u);
  EXPECT_EQ(postselect(ex.samples, q, seq).candidates, 64u);
}

TEST(Postselect, OrderInvariantProperty) {
  const HpSequence seq = HpSequence::parse("HPPHPH");
  const QuboProblem q = folding_problem(seq.to_string(), 6);
  const SolveResult run = anneal(q, quick_schedule(q, 1));
  std::vector<Sample> shuffled = run.samples.samples();
  std::mt19937_64 rng(4);
  const SolveResult reference = postselect(run.samples, q, seq, 50);
  for (int trial = 0; trial < 5; ++trial) {
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    SampleSet s;
    for (const Sample& x : shuffled) s.add(x.bits, x.count, x.energy);
    const SolveResult r = postselect(s, q, seq, 50);
    EXPECT_EQ(r.best_bits, reference.best_bits);
    EXPECT_EQ(r.contacts, reference.contacts);
  }
}

}  // namespace
}  // namespace hpfold
