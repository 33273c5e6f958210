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

#include <algorithm>
#include <string>
#include <tuple>

#include "hpfold/solvers.hpp"

namespace hpfold {

SolveResult postselect(const SampleSet& samples, const QuboProblem& q,
                       const HpSequence& seq, std::size_t top_k,
                       ValidationOptions options) {
  SolveResult out;
  out.solver = "postselect";
  out.seed = q.rng_seed;
  out.samples = samples;
  if (samples.empty() || top_k == 0) return out;

  struct Ranked {
    double energy;
    std::string key;
    const Sample* sample;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(samples.distinct());
  for (const Sample& s : samples.samples()) {
    ranked.push_back({q.evaluate(s.bits), bits_to_string(s.bits), &s});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return std::tie(a.energy, a.key) < std::tie(b.energy, b.key);
  });
  if (ranked.size() > top_k) ranked.resize(top_k);
  out.candidates = ranked.size();

  const Ranked* chosen = nullptr;
  FeasibilityReport chosen_report;
  int chosen_contacts = -1;
  for (const Ranked& r : ranked) {
    FeasibilityReport report = validate_assignment(r.sample->bits, q.layout, seq, options);
    const int contacts =
        count_contacts(turns_to_coordinates(decode_bitstring(r.sample->bits, q.layout)), seq);
    bool better = false;
    if (!chosen) {
      better = true;
    } else if (report.feasible() != chosen_report.feasible()) {
      better = report.feasible();
    } else if (report.feasible()) {
      // Ranked order already breaks contact ties by energy.
      better = contacts > chosen_contacts;
    } else {
      better = report.violation_count() < chosen_report.violation_count();
    }
    if (better) {
      chosen = &r;
      chosen_report = std::move(report);
      chosen_contacts = contacts;
    }
  }

  out.best_bits = chosen->sample->bits;
  out.best_value = chosen->energy;
  out.turns = decode_bitstring(out.best_bits, q.layout);
  out.conformation = turns_to_coordinates(out.turns);
  out.contacts = chosen_contacts;
  out.report = std::move(chosen_report);
  out.feasible = out.report.feasible();
  return out;
}

}  // namespace hpfold
