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

#include "hpfold/io.hpp"

#include <fstream>
#include <sstream>

namespace hpfold {

using nlohmann::json;

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

namespace {

json turn_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

Vec3 vec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("expected [x,y,z]");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json penalties_json(const PenaltyConfig& p) {
  return {{"lambda0", p.lambda0}, {"lambda1", p.lambda1}, {"lambda2", p.lambda2},
          {"lambda3", p.lambda3}, {"lambda4", p.lambda4},
          {"degenerate_objective", p.degenerate_objective}};
}

json draw_json(const std::map<BeadPair, Axis>& draw) {
  json arr = json::array();
  for (const auto& [pair, axis] : draw) {
    arr.push_back({pair.first, pair.second, std::string(1, axis_name(axis))});
  }
  return arr;
}

std::map<BeadPair, Axis> draw_from_json(const json& arr) {
  std::map<BeadPair, Axis> out;
  for (const json& e : arr) {
    const std::string axis = e.at(2).get<std::string>();
    if (axis.size() != 1) throw std::invalid_argument("axis must be one of x, y, z");
    out[{e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>()}] = axis_from_name(axis[0]);
  }
  return out;
}

}  // namespace

json qubo_to_json(const QuboProblem& q) {
  json linear = json::array();
  json quadratic = json::array();
  double constant = 0.0;
  for (const auto& [m, c] : q.polynomial.terms()) {
    if (m.empty()) {
      constant = c;
    } else if (m.size() == 1) {
      linear.push_back({m[0], c});
    } else {
      quadratic.push_back({m[0], m[1], c});
    }
  }
  const auto& L = q.layout;
  return {
      {"format", "hpfold-qubo"},
      {"version", 1},
      {"num_variables", q.num_variables()},
      {"constant", constant},
      {"linear", linear},
      {"quadratic", quadratic},
      {"metadata",
       {{"sequence", q.sequence},
        {"seed", q.rng_seed},
        {"layout",
         {{"n_beads", L.n_beads()},
          {"first_turn_fixed", L.first_turn_fixed()},
          {"fixed_turn", turn_json(L.fixed_turn())},
          {"variable_order", "per turn: x_a,x_b,y_a,y_b,z_a,z_b"}}},
        {"penalties", penalties_json(q.penalties)},
        {"axis_draw",
         {{"overlap", draw_json(q.axis_draw.overlap)},
          {"crossing", draw_json(q.axis_draw.crossing)}}}}},
  };
}

QuboProblem qubo_from_json(const json& doc) {
  if (doc.value("format", "") != "hpfold-qubo") {
    throw std::invalid_argument("not an hpfold-qubo document");
  }
  const json& meta = doc.at("metadata");
  const json& lay = meta.at("layout");
  QuboProblem q;
  q.layout = VariableLayout(lay.at("n_beads").get<std::size_t>(),
                            lay.at("first_turn_fixed").get<bool>(),
                            vec_from_json(lay.at("fixed_turn")));
  if (doc.at("num_variables").get<std::size_t>() != q.layout.num_variables()) {
    throw std::invalid_argument("num_variables disagrees with the layout");
  }
  q.polynomial.add_term({}, doc.at("constant").get<double>());
  for (const json& e : doc.at("linear")) {
    q.polynomial.add_term({e.at(0).get<std::uint32_t>()}, e.at(1).get<double>());
  }
  for (const json& e : doc.at("quadratic")) {
    q.polynomial.add_term({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()},
                          e.at(2).get<double>());
  }
  if (q.polynomial.variable_span() > q.num_variables()) {
    throw std::invalid_argument("QUBO references variables beyond num_variables");
  }
  const json& pen = meta.at("penalties");
  q.penalties.lambda0 = pen.at("lambda0").get<double>();
  q.penalties.lambda1 = pen.at("lambda1").get<double>();
  q.penalties.lambda2 = pen.at("lambda2").get<double>();
  q.penalties.lambda3 = pen.at("lambda3").get<double>();
  q.penalties.lambda4 = pen.at("lambda4").get<double>();
  q.penalties.degenerate_objective = pen.value("degenerate_objective", false);
  q.axis_draw.overlap = draw_from_json(meta.at("axis_draw").at("overlap"));
  q.axis_draw.crossing = draw_from_json(meta.at("axis_draw").at("crossing"));
  q.rng_seed = meta.at("seed").get<std::uint64_t>();
  q.sequence = meta.at("sequence").get<std::string>();
  return q;
}

json ising_to_json(const IsingOperator& op) {
  json h = json::array();
  for (const auto& [i, c] : op.h) h.push_back({i, c});
  json J = json::array();
  for (const auto& [ij, c] : op.J) J.push_back({ij.first, ij.second, c});
  return {{"format", "hpfold-ising"}, {"version", 1},
          {"num_spins", op.n},       {"spin_convention", kSpinConvention},
          {"constant", op.constant}, {"h", h},
          {"J", J}};
}

IsingOperator ising_from_json(const json& doc) {
  if (doc.value("format", "") != "hpfold-ising") {
    throw std::invalid_argument("not an hpfold-ising document");
  }
  if (doc.value("spin_convention", "") != kSpinConvention) {
    throw std::invalid_argument("unsupported spin convention");
  }
  IsingOperator op;
  op.n = doc.at("num_spins").get<std::size_t>();
  op.constant = doc.at("constant").get<double>();
  for (const json& e : doc.at("h")) op.h[e.at(0).get<std::uint32_t>()] = e.at(1).get<double>();
  for (const json& e : doc.at("J")) {
    op.J[{e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>()}] = e.at(2).get<double>();
  }
  return op;
}

json samples_to_json(const SampleSet& samples) {
  json arr = json::array();
  for (const Sample& s : samples.samples()) {
    arr.push_back({{"bitstring", bits_to_string(s.bits)}, {"count", s.count}, {"energy", s.energy}});
  }
  return arr;
}

SampleSet samples_from_json(const json& doc) {
  SampleSet set;
  for (const json& e : doc) {
    set.add(bits_from_string(e.at("bitstring").get<std::string>()),
            e.at("count").get<std::uint64_t>(), e.at("energy").get<double>());
  }
  return set;
}

json parameters_to_json(const std::vector<double>& params) { return json(params); }

std::vector<double> parameters_from_json(const json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("parameter file must hold a JSON array");
  std::vector<double> out;
  out.reserve(doc.size());
  for (const json& e : doc) out.push_back(e.get<double>());
  return out;
}

std::string trace_to_csv(const std::vector<TracePoint>& trace) {
  std::ostringstream out;
  out.precision(17);
  out << "iteration,objective,best_so_far\n";
  for (const TracePoint& t : trace) {
    out << t.iteration << ',' << t.objective << ',' << t.best_so_far << '\n';
  }
  return out.str();
}

std::string conformation_to_xyz(const Conformation& conf, const HpSequence& seq) {
  if (conf.coords.size() != seq.size()) {
    throw std::invalid_argument("conformation and sequence lengths differ");
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < conf.coords.size(); ++i) {
    const Coord& c = conf.coords[i];
    out << static_cast<char>(seq.bead(i + 1)) << ' ' << c.x << ' ' << c.y << ' ' << c.z << '\n';
  }
  return out.str();
}

json report_to_json(const FeasibilityReport& report) {
  json pe = json::array();
  for (const PairExclusion& p : report.pair_exclusion_violations) {
    pe.push_back({p.step, std::string(1, axis_name(p.axis))});
  }
  json overlap = json::array();
  for (const auto& [i, j] : report.overlap_violations) overlap.push_back({i, j});
  json crossing = json::array();
  for (const auto& [r, k] : report.crossing_violations) crossing.push_back({r, k});
  return {{"continuity", report.continuity_violations},
          {"overlap", overlap},
          {"crossing", crossing},
          {"pair_exclusion", pe}};
}

ResultCheck check_result_document(const json& doc) {
  ResultCheck check;
  try {
    const HpSequence seq = HpSequence::parse(doc.at("sequence").get<std::string>());
    TurnVector turns;
    for (const json& t : doc.at("turns")) turns.push_back(vec_from_json(t));
    for (const Turn& t : turns) {
      if (!is_unit_step(t)) {
        check.problem = "turn component outside {-1,0,1}";
        return check;
      }
    }
    const ValidationOptions opts{doc.value("allow_steric", true)};
    FeasibilityReport report;
    if (doc.contains("bits")) {
      const VariableLayout layout(seq.size(), doc.at("first_turn_fixed").get<bool>(),
                                  doc.contains("fixed_turn") ? vec_from_json(doc.at("fixed_turn"))
                                                             : Turn{1, 0, 0});
      const Bits bits = bits_from_string(doc.at("bits").get<std::string>());
      if (decode_bitstring(bits, layout) != turns) {
        check.problem = "bits do not decode to the stored turns";
        return check;
      }
      report = validate_assignment(bits, layout, seq, opts);
    } else {
      report = validate(turns, seq, opts);
    }
    const Conformation conf = turns_to_coordinates(turns);
    std::vector<Coord> stored;
    for (const json& c : doc.at("coords")) stored.push_back(vec_from_json(c));
    if (stored != conf.coords) {
      check.problem = "coordinates are not the prefix sums of the turns";
      return check;
    }
    check.feasible = report.feasible();
    check.contacts = count_contacts(conf, seq);
    if (check.feasible != doc.at("feasible").get<bool>()) {
      check.problem = "stored feasibility flag disagrees with re-validation";
      return check;
    }
    if (check.contacts != doc.at("contacts").get<int>()) {
      check.problem = "stored contact count disagrees with recount";
      return check;
    }
    if (doc.contains("violations") && doc.at("violations") != report_to_json(report)) {
      check.problem = "stored violations disagree with re-validation";
      return check;
    }
    if (doc.contains("max_contacts") && check.contacts > doc.at("max_contacts").get<int>()) {
      check.problem = "contacts exceed max_contacts";
      return check;
    }
    check.consistent = true;
  } catch (const std::exception& e) {
    check.problem = e.what();
  }
  return check;
}

}  // namespace hpfold
