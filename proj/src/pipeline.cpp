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

#include "hpfold/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "hpfold/io.hpp"

namespace hpfold {

using nlohmann::json;

const char* solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::kAnneal: return "anneal";
    case SolverKind::kExhaustive: return "exhaustive";
    case SolverKind::kVqe: return "vqe";
  }
  return "unknown";
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

template <typename T>
T parse_unsigned(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (v.empty() || ec != std::errc{} || ptr != v.data() + v.size()) {
    throw ConfigError("--" + std::string(key) + ": expected a non-negative integer, got '" +
                      std::string(text) + "'");
  }
  return out;
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string v = trim(text);
  try {
    std::size_t used = 0;
    const double d = std::stod(v, &used);
    if (used != v.size() || !std::isfinite(d)) throw std::invalid_argument("trailing");
    return d;
  } catch (const std::exception&) {
    throw ConfigError("--" + std::string(key) + ": expected a number, got '" +
                      std::string(text) + "'");
  }
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string v = lower(trim(text));
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw ConfigError("--" + std::string(key) + ": expected true or false, got '" +
                    std::string(text) + "'");
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    item = lower(trim(item));
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

void RunConfig::set(std::string_view key_in, std::string_view value) {
  std::string key = trim(key_in);
  while (!key.empty() && key.front() == '-') key.erase(key.begin());
  std::replace(key.begin(), key.end(), '_', '-');

  auto lambda = [&](std::optional<double>& slot) {
    const double v = parse_double(key, value);
    if (v < 0.0) throw ConfigError("--" + key + " must be non-negative");
    slot = v;
  };

  if (key == "seq") {
    sequence = trim(value);
  } else if (key == "seq-file") {
    sequence_file = trim(value);
  } else if (key == "weights-file") {
    weights_file = trim(value);
  } else if (key == "solver") {
    const std::string v = lower(trim(value));
    if (v == "anneal") solver = SolverKind::kAnneal;
    else if (v == "exhaustive") solver = SolverKind::kExhaustive;
    else if (v == "vqe") solver = SolverKind::kVqe;
    else throw ConfigError("--solver must be anneal, exhaustive or vqe, got '" + v + "'");
  } else if (key == "draws") {
    draws = parse_unsigned<std::size_t>(key, value);
  } else if (key == "restarts") {
    restarts = parse_unsigned<std::size_t>(key, value);
  } else if (key == "sweeps") {
    sweeps = parse_unsigned<std::size_t>(key, value);
  } else if (key == "t-initial") {
    t_initial = parse_double(key, value);
  } else if (key == "t-final") {
    t_final = parse_double(key, value);
  } else if (key == "alpha") {
    alpha = parse_double(key, value);
  } else if (key == "shots") {
    shots = parse_unsigned<std::size_t>(key, value);
  } else if (key == "reps") {
    reps = parse_unsigned<std::size_t>(key, value);
  } else if (key == "entangler") {
    const std::string v = lower(trim(value));
    if (v == "linear") entangler = Entangler::kLinear;
    else if (v == "circular") entangler = Entangler::kCircular;
    else throw ConfigError("--entangler must be linear or circular");
  } else if (key == "max-iterations") {
    max_iterations = parse_unsigned<std::size_t>(key, value);
  } else if (key == "resume-params") {
    resume_params = trim(value);
  } else if (key == "top-k") {
    top_k = parse_unsigned<std::size_t>(key, value);
  } else if (key == "fix-first-turn") {
    fix_first_turn = parse_bool(key, value);
  } else if (key == "allow-steric") {
    allow_steric = parse_bool(key, value);
  } else if (key == "lambda0") {
    lambda(overrides.lambda0);
  } else if (key == "lambda1") {
    lambda(overrides.lambda1);
  } else if (key == "lambda2") {
    lambda(overrides.lambda2);
  } else if (key == "lambda3") {
    lambda(overrides.lambda3);
  } else if (key == "lambda4") {
    lambda(overrides.lambda4);
  } else if (key == "lambda3-hint") {
    lambda3_hint = parse_double(key, value);
  } else if (key == "seed") {
    seed = parse_unsigned<std::uint64_t>(key, value);
  } else if (key == "workers") {
    workers = parse_unsigned<std::size_t>(key, value);
  } else if (key == "out-dir") {
    out_dir = trim(value);
  } else if (key == "format") {
    formats = split_list(value);
  } else if (key == "export-qubo") {
    export_qubo = trim(value);
  } else {
    throw ConfigError("unknown option '" + key + "'");
  }
}

void RunConfig::check() const {
  if (sequence.empty() == sequence_file.empty()) {
    throw ConfigError("give exactly one of --seq or --seq-file");
  }
  if (draws < 1) throw ConfigError("--draws must be at least 1");
  if (top_k < 1) throw ConfigError("--top-k must be at least 1");
  if (restarts < 1) throw ConfigError("--restarts must be at least 1");
  if (sweeps < 1) throw ConfigError("--sweeps must be at least 1");
  if (!(t_final > 0.0)) throw ConfigError("--t-final must be positive");
  if (t_initial && *t_initial < t_final) throw ConfigError("--t-initial must be >= --t-final");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ConfigError("--alpha must lie in (0, 1]");
  if (reps < 1 || reps > 2) throw ConfigError("--reps must be 1 or 2");
  if (lambda3_hint < 0.0) throw ConfigError("--lambda3-hint must be non-negative");
  for (const std::string& f : formats) {
    if (f != "json" && f != "xyz" && f != "csv") {
      throw ConfigError("--format accepts json, xyz and csv, got '" + f + "'");
    }
  }
  if (!resume_params.empty() && solver != SolverKind::kVqe) {
    throw ConfigError("--resume-params only applies to --solver vqe");
  }
}

HpSequence RunConfig::load_sequence() const {
  std::string text = sequence;
  if (text.empty()) {
    std::istringstream in(read_text_file(sequence_file));
    std::string line;
    while (std::getline(in, line)) {
      const std::string t = trim(line);
      if (t.empty() || t.front() == '>' || t.front() == '#') continue;
      text += t;
    }
  }
  HpSequence seq = [&] {
    try {
      return HpSequence::parse(text);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  if (!weights_file.empty()) {
    try {
      load_weights_csv(seq, weights_file);
    } catch (const std::ios_base::failure& e) {
      throw IoError(e.what());
    } catch (const std::logic_error& e) {
      throw ConfigError(e.what());
    }
  }
  return seq;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t draw, std::uint64_t stream) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ draw) ^ (stream * 0x632be59bd9b4e019ULL));
}

DrawSummary run_draw(const RunConfig& config, const HpSequence& seq, std::size_t draw,
                     QuboProblem* qubo_out, SolveResult* solve_out,
                     SolveResult* selected_out) {
  const VariableLayout layout(seq.size(), config.fix_first_turn);
  const std::uint64_t draw_seed = derive_seed(config.seed, draw, 0);
  const std::uint64_t solver_seed = derive_seed(config.seed, draw, 1);

  const PenaltyConfig penalties =
      calibrate_penalties(seq, config.lambda3_hint, config.overrides);
  const AxisDraw axes = draw_axes(draw_seed, layout);
  QuboProblem q = assemble(seq, layout, penalties, axes, draw_seed);

  SolveResult solved;
  switch (config.solver) {
    case SolverKind::kAnneal: {
      AnnealSchedule sched = AnnealSchedule::defaults_for(q, solver_seed);
      sched.restarts = config.restarts;
      sched.sweeps = config.sweeps;
      sched.t_final = config.t_final;
      if (config.t_initial) sched.t_initial = *config.t_initial;
      sched.t_initial = std::max(sched.t_initial, sched.t_final);
      solved = anneal(q, sched);
      break;
    }
    case SolverKind::kExhaustive: {
      if (q.num_variables() > kMaxExhaustiveVariables) {
        throw ConfigError("exhaustive search needs <= " +
                          std::to_string(kMaxExhaustiveVariables) + " variables, this problem has " +
                          std::to_string(q.num_variables()));
      }
      solved = exhaustive(q, ExhaustiveOptions{config.top_k, false});
      solved.seed = solver_seed;
      break;
    }
    case SolverKind::kVqe: {
      const AnsatzSpec ansatz{q.num_variables(), config.reps, config.entangler};
      if (ansatz.qubits > kDefaultQubitBudget) {
        throw ConfigError("VQE needs " + std::to_string(ansatz.qubits) +
                          " qubits; the statevector budget is " +
                          std::to_string(kDefaultQubitBudget));
      }
      VqeSettings settings;
      settings.alpha = config.alpha;
      settings.shots = config.shots;
      settings.max_iterations = config.max_iterations;
      settings.seed = solver_seed;
      if (!config.resume_params.empty()) {
        settings.initial_parameters = parameters_from_json(read_json_file(config.resume_params));
        if (settings.initial_parameters.size() != ansatz.parameter_count()) {
          throw ConfigError("--resume-params holds " +
                            std::to_string(settings.initial_parameters.size()) +
                            " values, the ansatz needs " +
                            std::to_string(ansatz.parameter_count()));
        }
      }
      solved = vqe_statevector(qubo_to_ising(q), ansatz, settings);
      solved.best_value = q.evaluate(solved.best_bits);
      break;
    }
  }

  SolveResult selected = postselect(solved.samples, q, seq, config.top_k,
                                    ValidationOptions{config.allow_steric});
  DrawSummary summary;
  summary.draw = draw;
  summary.seed = draw_seed;
  summary.feasible = selected.feasible;
  summary.contacts = selected.contacts;
  summary.selected_energy = selected.best_value;
  summary.solver_best = solved.best_value;
  summary.sweeps_to_best = solved.sweeps_to_best;
  summary.trace = solved.trace;

  if (qubo_out) *qubo_out = std::move(q);
  if (solve_out) *solve_out = std::move(solved);
  if (selected_out) *selected_out = std::move(selected);
  return summary;
}

namespace {

bool better_draw(const DrawSummary& a, const DrawSummary& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (a.contacts != b.contacts) return a.contacts > b.contacts;
  return std::tie(a.selected_energy, a.draw) < std::tie(b.selected_energy, b.draw);
}

}  // namespace

PipelineResult run_pipeline(const RunConfig& config) {
  config.check();
  PipelineResult result;
  result.config = config;
  result.sequence = config.load_sequence();
  result.max_contacts = max_contacts(result.sequence);
  result.draws.resize(config.draws);

  std::size_t workers = config.workers ? config.workers : std::thread::hardware_concurrency();
  workers = std::clamp<std::size_t>(workers, 1, config.draws);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t d = next++; d < config.draws; d = next++) {
      try {
        result.draws[d] = run_draw(config, result.sequence, d);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = config.draws;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  result.best_draw = 0;
  for (std::size_t d = 1; d < result.draws.size(); ++d) {
    if (better_draw(result.draws[d], result.draws[result.best_draw])) result.best_draw = d;
  }
  // Regenerate the full artifacts of the winning draw; every draw is a pure
  // function of (config, draw index).
  run_draw(config, result.sequence, result.best_draw, &result.best_qubo, &result.best_solve,
           &result.best);
  return result;
}

json result_to_json(const PipelineResult& r) {
  const RunConfig& c = r.config;
  json turns = json::array();
  for (const Turn& t : r.best.turns) turns.push_back({t.x, t.y, t.z});
  json coords = json::array();
  if (r.best.conformation) {
    for (const Coord& p : r.best.conformation->coords) coords.push_back({p.x, p.y, p.z});
  }
  json draws = json::array();
  for (const DrawSummary& d : r.draws) {
    draws.push_back({{"draw", d.draw},
                     {"seed", d.seed},
                     {"feasible", d.feasible},
                     {"contacts", d.contacts},
                     {"selected_energy", d.selected_energy},
                     {"solver_best", d.solver_best},
                     {"sweeps_to_best", d.sweeps_to_best}});
  }
  const PenaltyConfig& p = r.best_qubo.penalties;
  const Turn fixed = r.best_qubo.layout.fixed_turn();
  return {
      {"format", "hpfold-result"},
      {"version", 1},
      {"sequence", r.sequence.to_string()},
      {"solver", solver_name(c.solver)},
      {"seed", c.seed},
      {"num_draws", c.draws},
      {"best_draw", r.best_draw},
      {"draw_seed", r.best_qubo.rng_seed},
      {"first_turn_fixed", c.fix_first_turn},
      {"fixed_turn", {fixed.x, fixed.y, fixed.z}},
      {"allow_steric", c.allow_steric},
      {"top_k", c.top_k},
      {"candidates", r.best.candidates},
      {"bits", bits_to_string(r.best.best_bits)},
      {"qubo_energy", r.best.best_value},
      {"turns", turns},
      {"coords", coords},
      {"contacts", r.best.contacts},
      {"energy", -r.best.contacts},
      {"max_contacts", r.max_contacts},
      {"feasible", r.best.feasible},
      {"violations", report_to_json(r.best.report)},
      {"penalties",
       {{"lambda0", p.lambda0}, {"lambda1", p.lambda1}, {"lambda2", p.lambda2},
        {"lambda3", p.lambda3}, {"lambda4", p.lambda4},
        {"degenerate_objective", p.degenerate_objective}}},
      {"solver_provenance", r.best_solve.provenance},
      {"draws", draws},
  };
}

void emit(const PipelineResult& r, const std::filesystem::path& dir,
          const std::vector<std::string>& formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());

  auto wants = [&](const char* f) {
    return std::find(formats.begin(), formats.end(), f) != formats.end();
  };
  if (wants("json")) {
    write_text_file(dir / "result.json", result_to_json(r).dump(2) + "\n");
    write_text_file(dir / "qubo.json", qubo_to_json(r.best_qubo).dump(2) + "\n");
    write_text_file(dir / "samples.json", samples_to_json(r.best_solve.samples).dump() + "\n");
    if (r.config.solver == SolverKind::kVqe) {
      write_text_file(dir / "ising.json", ising_to_json(qubo_to_ising(r.best_qubo)).dump(2) + "\n");
      write_text_file(dir / "params.json", parameters_to_json(r.best_solve.parameters).dump() + "\n");
    }
  }
  if (wants("xyz") && r.best.conformation) {
    write_text_file(dir / "conformation.xyz", conformation_to_xyz(*r.best.conformation, r.sequence));
  }
  if (wants("csv")) {
    std::ostringstream trace;
    trace.precision(17);
    trace << "draw,iteration,objective,best_so_far\n";
    for (const DrawSummary& d : r.draws) {
      for (const TracePoint& t : d.trace) {
        trace << d.draw << ',' << t.iteration << ',' << t.objective << ',' << t.best_so_far << '\n';
      }
    }
    write_text_file(dir / "trace.csv", trace.str());
    std::ostringstream draws;
    draws.precision(17);
    draws << "draw,seed,feasible,contacts,selected_energy,solver_best,sweeps_to_best\n";
    for (const DrawSummary& d : r.draws) {
      draws << d.draw << ',' << d.seed << ',' << (d.feasible ? 1 : 0) << ',' << d.contacts << ','
            << d.selected_energy << ',' << d.solver_best << ',' << d.sweeps_to_best << '\n';
    }
    write_text_file(dir / "draws.csv", draws.str());
  }
  if (!r.config.export_qubo.empty()) {
    write_text_file(r.config.export_qubo, qubo_to_json(r.best_qubo).dump(2) + "\n");
  }
}

}  // namespace hpfold
