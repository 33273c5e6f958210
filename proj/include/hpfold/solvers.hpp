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

#ifndef HPFOLD_SOLVERS_HPP
#define HPFOLD_SOLVERS_HPP

#include <complex>
#include <functional>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hpfold/encoder.hpp"
#include "hpfold/ising.hpp"
#include "hpfold/model.hpp"

namespace hpfold {

struct TracePoint {
  std::size_t iteration = 0;
  double objective = 0.0;
  double best_so_far = 0.0;
};

struct SolveResult {
  std::string solver;
  std::uint64_t seed = 0;
  Bits best_bits;
  double best_value = 0.0;
  std::vector<TracePoint> trace;
  SampleSet samples;
  std::map<std::string, std::string> provenance;

  // Annealing: sweep (within its restart) at which the winning restart first
  // reached best_value.
  std::size_t sweeps_to_best = 0;
  // VQE: best parameter vector.
  std::vector<double> parameters;
  // Exhaustive: energies of all 2^n states when requested.
  std::vector<double> spectrum;

  // Filled by postselect.
  TurnVector turns;
  std::optional<Conformation> conformation;
  int contacts = 0;
  FeasibilityReport report;
  bool feasible = false;
  std::size_t candidates = 0;
};

// ---------------------------------------------------------------- annealing

struct AnnealSchedule {
  double t_initial = 1.0;
  double t_final = 0.01;
  std::size_t sweeps = 2000;
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  // Record every end-of-sweep state into the sample population.
  bool record_sweeps = true;

  // Throws std::invalid_argument unless t_initial >= t_final > 0 and
  // sweeps, restarts >= 1.
  void check() const;

  // t_initial = 10 * max |coefficient| of the problem, other fields default.
  static AnnealSchedule defaults_for(const QuboProblem& q, std::uint64_t seed);
};

// Single-flip Metropolis annealing on a geometric temperature ladder. Each
// sweep visits every variable once in a fresh random order.
SolveResult anneal(const QuboProblem& q, const AnnealSchedule& schedule);
SolveResult anneal(const CompiledQubo& q, const AnnealSchedule& schedule);

// --------------------------------------------------------------- exhaustive

inline constexpr std::size_t kMaxExhaustiveVariables = 24;

struct ExhaustiveOptions {
  std::size_t keep_lowest = 4000;  // states retained as the sample population
  bool keep_spectrum = false;
};

// Full 2^n scan in Gray-code order. Throws std::out_of_range above
// kMaxExhaustiveVariables.
SolveResult exhaustive(const QuboProblem& q, ExhaustiveOptions options = {});
SolveResult exhaustive(const CompiledQubo& q, ExhaustiveOptions options = {});

// --------------------------------------------------------------------- VQE

enum class Entangler { kLinear, kCircular };

inline constexpr std::size_t kDefaultQubitBudget = 22;

// Rotation layers of RY then RZ on every qubit, separated by CNOT chains;
// reps entangling blocks give reps + 1 rotation layers.
struct AnsatzSpec {
  std::size_t qubits = 1;
  std::size_t reps = 1;
  Entangler entangler = Entangler::kLinear;

  std::size_t parameter_count() const { return 2 * qubits * (reps + 1); }
  // Throws std::invalid_argument / std::out_of_range.
  void check(std::size_t qubit_budget = kDefaultQubitBudget) const;
};

// Amplitudes indexed by basis state; bit q of the index is qubit q.
class Statevector {
 public:
  explicit Statevector(std::size_t qubits);

  std::size_t qubits() const { return qubits_; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }

  void reset();
  void apply_ry(std::size_t q, double theta);
  void apply_rz(std::size_t q, double phi);
  void apply_cx(std::size_t control, std::size_t target);

  double norm() const;
  std::vector<double> probabilities() const;

 private:
  std::size_t qubits_;
  std::vector<std::complex<double>> amps_;
};

// Resets the state to |0...0> and applies the ansatz.
void apply_ansatz(Statevector& state, const AnsatzSpec& ansatz,
                  std::span<const double> parameters);

struct VqeSettings {
  double alpha = 0.05;
  // 0 evaluates CVaR on exact basis probabilities.
  std::size_t shots = 1024;
  // Shots drawn at the final parameters for the returned sample set.
  std::size_t final_shots = 4000;
  std::size_t max_iterations = 500;
  // Iterations without improvement before the simplex is rebuilt.
  std::size_t stagnation_iterations = 50;
  double initial_step = 0.5;
  std::uint64_t seed = 0;
  std::size_t qubit_budget = kDefaultQubitBudget;
  // Start point; uniform in [-pi, pi] when empty.
  std::vector<double> initial_parameters;
  // Also pool the shots drawn while optimizing into the returned sample set.
  bool keep_optimization_shots = false;
};

// CVaR of the exact output distribution of the ansatz at `parameters`; the
// shots = 0 objective of vqe_statevector.
double vqe_exact_objective(const IsingOperator& op, const AnsatzSpec& ansatz,
                           std::span<const double> parameters, double alpha);

// CVaR objective on the exact ansatz state, minimized with a restarting
// Nelder-Mead simplex. The sample set holds the final_shots measurements of
// the optimized state.
SolveResult vqe_statevector(const IsingOperator& op, const AnsatzSpec& ansatz,
                            const VqeSettings& settings);

// ------------------------------------------------------------ postselection

inline constexpr std::size_t kDefaultTopK = 4000;

// Ranks distinct bitstrings by QUBO energy (ties by bitstring), keeps the
// lowest top_k, decodes and validates each, and returns the feasible one with
// the most contacts (ties: lower energy first). When none is feasible the
// least-violating candidate is returned with feasible = false.
SolveResult postselect(const SampleSet& samples, const QuboProblem& q,
                       const HpSequence& seq, std::size_t top_k = kDefaultTopK,
                       ValidationOptions options = {});

// ------------------------------------------------------- derivative free

struct NelderMeadOptions {
  std::size_t max_iterations = 500;
  std::size_t stagnation_iterations = 50;
  double initial_step = 0.5;
  double tolerance = 1e-10;
};

struct NelderMeadResult {
  std::vector<double> best;
  double best_value = 0.0;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  std::size_t restarts = 0;
};

// Minimizes f. The callback sees (iteration, current simplex best, overall
// best) after each iteration.
NelderMeadResult nelder_mead(
    const std::function<double(std::span<const double>)>& f,
    std::vector<double> start, const NelderMeadOptions& options,
    const std::function<void(std::size_t, double, double)>& on_iteration = {});

}  // namespace hpfold

#endif  // HPFOLD_SOLVERS_HPP
