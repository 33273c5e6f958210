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

#ifndef HPFOLD_PIPELINE_HPP
#define HPFOLD_PIPELINE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hpfold/encoder.hpp"
#include "hpfold/model.hpp"
#include "hpfold/solvers.hpp"

namespace hpfold {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SolverKind { kAnneal, kExhaustive, kVqe };

const char* solver_name(SolverKind kind);

struct RunConfig {
  std::string sequence;
  std::string sequence_file;
  std::string weights_file;
  SolverKind solver = SolverKind::kAnneal;
  std::size_t draws = 50;

  // annealing
  std::size_t restarts = 20;
  std::size_t sweeps = 2000;
  std::optional<double> t_initial;
  double t_final = 0.01;

  // VQE
  double alpha = 0.05;
  std::size_t shots = 1024;
  std::size_t reps = 1;
  Entangler entangler = Entangler::kLinear;
  std::size_t max_iterations = 500;
  std::string resume_params;

  std::size_t top_k = kDefaultTopK;
  bool fix_first_turn = true;
  bool allow_steric = true;
  PenaltyOverrides overrides;
  double lambda3_hint = kDefaultLambda3Hint;
  std::uint64_t seed = 0;
  std::size_t workers = 0;  // 0: hardware concurrency

  std::string out_dir;
  std::vector<std::string> formats = {"json", "xyz", "csv"};
  std::string export_qubo;

  // Sets one option by its command-line name without leading dashes, e.g.
  // set("top-k", "4000"). Throws ConfigError.
  void set(std::string_view key, std::string_view value);

  // Cross-field validation. Throws ConfigError.
  void check() const;

  // From `sequence` or `sequence_file`, with the weight file applied.
  HpSequence load_sequence() const;
};

// Seed derivation shared by every stage: splitmix64 of (seed, draw, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t draw, std::uint64_t stream);

struct DrawSummary {
  std::size_t draw = 0;
  std::uint64_t seed = 0;
  bool feasible = false;
  int contacts = 0;
  double selected_energy = 0.0;
  double solver_best = 0.0;
  std::size_t sweeps_to_best = 0;
  std::vector<TracePoint> trace;
};

struct PipelineResult {
  RunConfig config;
  HpSequence sequence = HpSequence::parse("HP");
  int max_contacts = 0;
  std::vector<DrawSummary> draws;
  std::size_t best_draw = 0;
  QuboProblem best_qubo;
  SolveResult best_solve;  // raw solver output of the winning draw
  SolveResult best;        // post-selected conformation of the winning draw
};

// For each seeded axis draw: assemble, solve, post-select; keeps the best
// draw (feasible first, then contacts, then QUBO energy, then draw index).
PipelineResult run_pipeline(const RunConfig& config);

// Solves one draw; exposed for tests and experiments.
DrawSummary run_draw(const RunConfig& config, const HpSequence& seq, std::size_t draw,
                     QuboProblem* qubo_out = nullptr, SolveResult* solve_out = nullptr,
                     SolveResult* selected_out = nullptr);

nlohmann::json result_to_json(const PipelineResult& result);

// Writes result.json/qubo.json/samples.json (json), conformation.xyz (xyz)
// and trace.csv/draws.csv (csv) into dir. Throws IoError.
void emit(const PipelineResult& result, const std::filesystem::path& dir,
          const std::vector<std::string>& formats);

}  // namespace hpfold

#endif  // HPFOLD_PIPELINE_HPP
