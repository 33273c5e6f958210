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

#ifndef HPFOLD_IO_HPP
#define HPFOLD_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "hpfold/encoder.hpp"
#include "hpfold/ising.hpp"
#include "hpfold/model.hpp"
#include "hpfold/solvers.hpp"

namespace hpfold {

// File-system failure; the message carries the offending path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

// QUBO export:
// {"format":"hpfold-qubo","version":1,"num_variables":n,"constant":c,
//  "linear":[[i,c],...],"quadratic":[[i,j,c],...],
//  "metadata":{"sequence","seed","layout","penalties","axis_draw"}}
nlohmann::json qubo_to_json(const QuboProblem& q);
QuboProblem qubo_from_json(const nlohmann::json& doc);

// Ising export: constant, h list, J list and the spin convention string.
nlohmann::json ising_to_json(const IsingOperator& op);
IsingOperator ising_from_json(const nlohmann::json& doc);

// [{"bitstring":"0101","count":3,"energy":-1.5},...]
nlohmann::json samples_to_json(const SampleSet& samples);
SampleSet samples_from_json(const nlohmann::json& doc);

// Flat JSON number array.
nlohmann::json parameters_to_json(const std::vector<double>& params);
std::vector<double> parameters_from_json(const nlohmann::json& doc);

// "iteration,objective,best_so_far" rows.
std::string trace_to_csv(const std::vector<TracePoint>& trace);

// One "kind x y z" line per bead.
std::string conformation_to_xyz(const Conformation& conf, const HpSequence& seq);

nlohmann::json report_to_json(const FeasibilityReport& report);

// Re-derives coordinates, violations and contacts from the turns (and bits,
// when present) of a result document and compares them with what the
// document claims.
struct ResultCheck {
  bool consistent = false;
  bool feasible = false;
  int contacts = 0;
  std::string problem;  // first mismatch found, empty when consistent
};
ResultCheck check_result_document(const nlohmann::json& doc);

}  // namespace hpfold

#endif  // HPFOLD_IO_HPP
