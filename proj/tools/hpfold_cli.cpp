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

// hpfold: fold an HP sequence on the cubic lattice through a QUBO encoding.
//
// Exit status: 0 on success (including an infeasible best result, which is
// flagged in the output), 2 on a configuration error, 3 on an I/O error and
// 1 on anything else.

#include <cstdio>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "hpfold/hpfold.h"

namespace {

int exit_code(hpf_status s) {
  switch (s) {
    case HPF_OK: return 0;
    case HPF_ERR_CONFIG:
    case HPF_ERR_INVALID_ARGUMENT:
    case HPF_ERR_OUT_OF_RANGE: return 2;
    case HPF_ERR_IO: return 3;
    default: return 1;
  }
}

int report(hpf_status s, const char* stage) {
  std::fprintf(stderr, "hpfold: %s: %s\n", stage, hpf_last_error());
  return exit_code(s);
}

struct ConfigDeleter {
  void operator()(hpf_config* c) const { hpf_config_free(c); }
};
struct ResultDeleter {
  void operator()(hpf_result* r) const { hpf_result_free(r); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice protein folding on the cubic lattice via QUBO / Ising encodings"};
  app.set_version_flag("--version", std::string(hpf_version()));
  app.set_config("--config", "", "TOML/INI file of option = value pairs; flags override it");
  app.option_defaults()->always_capture_default(false);

  // Every value is forwarded verbatim to the library, which owns parsing and
  // validation. Options are listed as (flag, help).
  const std::vector<std::pair<std::string, std::string>> value_options = {
      {"--seq", "HP sequence, e.g. HPPHPPHPHH"},
      {"--seq-file", "file holding the sequence ('>' and '#' lines are skipped)"},
      {"--solver", "anneal | exhaustive | vqe (default anneal)"},
      {"--draws", "number of seeded axis draws (default 50)"},
      {"--restarts", "annealing restarts per draw (default 20)"},
      {"--sweeps", "annealing sweeps per restart (default 2000)"},
      {"--t-initial", "initial annealing temperature (default 10 x max |coefficient|)"},
      {"--t-final", "final annealing temperature (default 0.01)"},
      {"--alpha", "CVaR tail fraction for VQE (default 0.05)"},
      {"--shots", "shots per VQE objective evaluation; 0 uses exact probabilities (default 1024)"},
      {"--reps", "ansatz repetitions, 1 or 2 (default 1)"},
      {"--entangler", "linear | circular (default linear)"},
      {"--max-iterations", "VQE optimizer iterations (default 500)"},
      {"--top-k", "lowest-energy distinct samples considered by post-selection (default 4000)"},
      {"--lambda0", "objective weight override"},
      {"--lambda1", "continuity weight override"},
      {"--lambda2", "overlap reward override"},
      {"--lambda3", "crossing reward override"},
      {"--lambda4", "pair-exclusion weight override"},
      {"--lambda3-hint", "crossing reward used by calibration (default 0.5)"},
      {"--weights-file", "CSV of 'j,k,w' interaction weights between H beads"},
      {"--seed", "master seed (default 0)"},
      {"--workers", "worker threads for draws (default: hardware concurrency)"},
      {"--out-dir", "directory for result artifacts (default hpfold-out)"},
      {"--format", "comma-separated subset of json,xyz,csv (default all)"},
      {"--export-qubo", "also write the winning QUBO to this path"},
      {"--resume-params", "JSON array of initial VQE parameters"},
  };
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> handles;
  for (const auto& [flag, help] : value_options) {
    handles[flag] = app.add_option(flag, values[flag], help);
  }
  bool fix_first_turn = true;
  bool allow_steric = true;
  CLI::Option* fix_opt = app.add_flag("--fix-first-turn,!--no-fix-first-turn", fix_first_turn,
                                      "pin the first turn to (1,0,0) (default on)");
  CLI::Option* steric_opt = app.add_flag("--allow-steric,!--disallow-steric", allow_steric,
                                         "accept body-diagonal turns as feasible (default on)");
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "print nothing on success");
  handles["--seq"]->excludes(handles["--seq-file"]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  hpf_config* raw_cfg = nullptr;
  if (hpf_status s = hpf_config_create(&raw_cfg); s != HPF_OK) return report(s, "config");
  std::unique_ptr<hpf_config, ConfigDeleter> cfg(raw_cfg);

  std::string out_dir = "hpfold-out";
  for (const auto& [flag, help] : value_options) {
    if (handles[flag]->count() == 0) continue;
    if (flag == "--out-dir") out_dir = values[flag];
    const std::string key = flag.substr(2);
    if (hpf_status s = hpf_config_set(cfg.get(), key.c_str(), values[flag].c_str()); s != HPF_OK) {
      return report(s, flag.c_str());
    }
  }
  if (fix_opt->count() > 0) {
    hpf_config_set(cfg.get(), "fix-first-turn", fix_first_turn ? "true" : "false");
  }
  if (steric_opt->count() > 0) {
    hpf_config_set(cfg.get(), "allow-steric", allow_steric ? "true" : "false");
  }
  if (hpf_status s = hpf_config_validate(cfg.get()); s != HPF_OK) return report(s, "config");

  hpf_result* raw_res = nullptr;
  if (hpf_status s = hpf_run(cfg.get(), &raw_res); s != HPF_OK) return report(s, "run");
  std::unique_ptr<hpf_result, ResultDeleter> res(raw_res);

  if (hpf_status s = hpf_result_write(res.get(), out_dir.c_str()); s != HPF_OK) {
    return report(s, "write");
  }

  if (!quiet) {
    const bool feasible = hpf_result_feasible(res.get()) != 0;
    std::printf("contacts %d of max %d%s\n", hpf_result_contacts(res.get()),
                hpf_result_max_contacts(res.get()),
                feasible ? "" : " (INFEASIBLE: no valid conformation among the samples)");
    std::printf("bits %s\nqubo_energy %.17g\nartifacts %s\n", hpf_result_bits(res.get()),
                hpf_result_qubo_energy(res.get()), out_dir.c_str());
  }
  return 0;
}
