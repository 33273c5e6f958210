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

#include "hpfold/hpfold.h"

#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "hpfold/encoder.hpp"
#include "hpfold/io.hpp"
#include "hpfold/model.hpp"
#include "hpfold/pipeline.hpp"

struct hpf_sequence {
  hpfold::HpSequence seq;
};

struct hpf_config {
  hpfold::RunConfig config;
};

struct hpf_result {
  hpfold::PipelineResult result;
  std::string bits;
  std::string json;
};

struct hpf_qubo {
  hpfold::QuboProblem qubo;
};

namespace {

thread_local std::string g_last_error;

hpf_status fail(hpf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps exceptions escaping the core onto status codes. Must only be called
// from inside a catch block.
hpf_status translate_current_exception() {
  try {
    throw;
  } catch (const hpfold::ConfigError& e) {
    return fail(HPF_ERR_CONFIG, e.what());
  } catch (const hpfold::IoError& e) {
    return fail(HPF_ERR_IO, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(HPF_ERR_IO, e.what());
  } catch (const std::out_of_range& e) {
    return fail(HPF_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HPF_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HPF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HPF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HPF_ERR_INTERNAL, "unknown error");
  }
}

template <typename F>
hpf_status guarded(F&& body) {
  try {
    body();
    return HPF_OK;
  } catch (...) {
    return translate_current_exception();
  }
}

#define HPF_REQUIRE(cond, what) \
  if (!(cond)) return fail(HPF_ERR_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

const char* hpf_version(void) { return "0.1.0"; }

const char* hpf_last_error(void) { return g_last_error.c_str(); }

const char* hpf_status_name(hpf_status status) {
  switch (status) {
    case HPF_OK: return "ok";
    case HPF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HPF_ERR_CONFIG: return "configuration error";
    case HPF_ERR_IO: return "i/o error";
    case HPF_ERR_OUT_OF_RANGE: return "out of range";
    case HPF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

hpf_status hpf_sequence_parse(const char* text, hpf_sequence** out) {
  HPF_REQUIRE(text && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hpf_sequence{hpfold::HpSequence::parse(text)}; });
}

void hpf_sequence_free(hpf_sequence* seq) { delete seq; }

size_t hpf_sequence_length(const hpf_sequence* seq) { return seq ? seq->seq.size() : 0; }

int hpf_sequence_max_contacts(const hpf_sequence* seq) {
  return seq ? hpfold::max_contacts(seq->seq) : 0;
}

hpf_status hpf_sequence_set_weight(hpf_sequence* seq, size_t j, size_t k, double w) {
  HPF_REQUIRE(seq, "null sequence");
  return guarded([&] { seq->seq.set_weight(j, k, w); });
}

hpf_status hpf_sequence_load_weights(hpf_sequence* seq, const char* csv_path) {
  HPF_REQUIRE(seq && csv_path, "null argument");
  return guarded([&] { hpfold::load_weights_csv(seq->seq, csv_path); });
}

hpf_status hpf_config_create(hpf_config** out) {
  HPF_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new hpf_config{}; });
}

void hpf_config_free(hpf_config* cfg) { delete cfg; }

hpf_status hpf_config_set(hpf_config* cfg, const char* key, const char* value) {
  HPF_REQUIRE(cfg && key && value, "null argument");
  return guarded([&] { cfg->config.set(key, value); });
}

hpf_status hpf_config_validate(const hpf_config* cfg) {
  HPF_REQUIRE(cfg, "null config");
  return guarded([&] { cfg->config.check(); });
}

hpf_status hpf_run(const hpf_config* cfg, hpf_result** out) {
  HPF_REQUIRE(cfg && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto res = std::make_unique<hpf_result>(hpf_result{hpfold::run_pipeline(cfg->config), {}, {}});
    res->bits = hpfold::bits_to_string(res->result.best.best_bits);
    res->json = hpfold::result_to_json(res->result).dump(2);
    *out = res.release();
  });
}

void hpf_result_free(hpf_result* res) { delete res; }

int hpf_result_contacts(const hpf_result* res) { return res ? res->result.best.contacts : 0; }

int hpf_result_max_contacts(const hpf_result* res) { return res ? res->result.max_contacts : 0; }

int hpf_result_feasible(const hpf_result* res) {
  return res && res->result.best.feasible ? 1 : 0;
}

size_t hpf_result_num_beads(const hpf_result* res) {
  return res ? res->result.sequence.size() : 0;
}

double hpf_result_qubo_energy(const hpf_result* res) {
  return res ? res->result.best.best_value : 0.0;
}

hpf_status hpf_result_coords(const hpf_result* res, int* xyz, size_t capacity) {
  HPF_REQUIRE(res && xyz, "null argument");
  const auto& conf = res->result.best.conformation;
  if (!conf) return fail(HPF_ERR_INTERNAL, "result carries no conformation");
  if (capacity < 3 * conf->coords.size()) {
    return fail(HPF_ERR_OUT_OF_RANGE, "coordinate buffer needs " +
                                          std::to_string(3 * conf->coords.size()) + " ints");
  }
  for (std::size_t i = 0; i < conf->coords.size(); ++i) {
    xyz[3 * i] = conf->coords[i].x;
    xyz[3 * i + 1] = conf->coords[i].y;
    xyz[3 * i + 2] = conf->coords[i].z;
  }
  return HPF_OK;
}

const char* hpf_result_bits(const hpf_result* res) { return res ? res->bits.c_str() : ""; }

const char* hpf_result_json(const hpf_result* res) { return res ? res->json.c_str() : ""; }

hpf_status hpf_result_write(const hpf_result* res, const char* dir) {
  HPF_REQUIRE(res && dir, "null argument");
  return guarded([&] { hpfold::emit(res->result, dir, res->result.config.formats); });
}

hpf_status hpf_result_export_qubo(const hpf_result* res, const char* path) {
  HPF_REQUIRE(res && path, "null argument");
  return guarded([&] {
    hpfold::write_text_file(path, hpfold::qubo_to_json(res->result.best_qubo).dump(2) + "\n");
  });
}

hpf_status hpf_qubo_build(const hpf_sequence* seq, uint64_t seed, int fix_first_turn,
                          double lambda3_hint, hpf_qubo** out) {
  HPF_REQUIRE(seq && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    const hpfold::VariableLayout layout(seq->seq.size(), fix_first_turn != 0);
    const auto penalties = hpfold::calibrate_penalties(seq->seq, lambda3_hint);
    const auto draw = hpfold::draw_axes(seed, layout);
    *out = new hpf_qubo{hpfold::assemble(seq->seq, layout, penalties, draw, seed)};
  });
}

void hpf_qubo_free(hpf_qubo* q) { delete q; }

size_t hpf_qubo_num_variables(const hpf_qubo* q) { return q ? q->qubo.num_variables() : 0; }

hpf_status hpf_qubo_evaluate(const hpf_qubo* q, const uint8_t* bits, size_t n, double* energy) {
  HPF_REQUIRE(q && bits && energy, "null argument");
  if (n != q->qubo.num_variables()) {
    return fail(HPF_ERR_OUT_OF_RANGE, "expected " + std::to_string(q->qubo.num_variables()) +
                                          " bits, got " + std::to_string(n));
  }
  for (size_t i = 0; i < n; ++i) HPF_REQUIRE(bits[i] <= 1, "bits must be 0 or 1");
  return guarded([&] { *energy = q->qubo.evaluate(hpfold::Bits(bits, bits + n)); });
}

hpf_status hpf_qubo_write(const hpf_qubo* q, const char* path) {
  HPF_REQUIRE(q && path, "null argument");
  return guarded(
      [&] { hpfold::write_text_file(path, hpfold::qubo_to_json(q->qubo).dump(2) + "\n"); });
}

}  // extern "C"
