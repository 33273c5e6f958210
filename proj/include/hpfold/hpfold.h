/*
 * Copyright 2026 The hpfold Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the hpfold library.
 *
 * All objects are opaque handles created and destroyed by the library. Every
 * function that can fail returns an hpf_status; on failure the message of the
 * most recent error on the calling thread is available from hpf_last_error().
 * Strings returned by the library stay valid until the owning handle is freed
 * (or, for hpf_last_error, until the next failing call on the same thread).
 */
#ifndef HPFOLD_HPFOLD_H
#define HPFOLD_HPFOLD_H

#include <stddef.h>
#include <stdint.h>

#if defined(HPFOLD_BUILDING_LIBRARY)
#define HPF_API __attribute__((visibility("default")))
#else
#define HPF_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hpf_status {
  HPF_OK = 0,
  HPF_ERR_INVALID_ARGUMENT = 1,
  HPF_ERR_CONFIG = 2,
  HPF_ERR_IO = 3,
  HPF_ERR_OUT_OF_RANGE = 4,
  HPF_ERR_INTERNAL = 5
} hpf_status;

typedef struct hpf_sequence hpf_sequence;
typedef struct hpf_config hpf_config;
typedef struct hpf_result hpf_result;
typedef struct hpf_qubo hpf_qubo;

HPF_API const char* hpf_version(void);
HPF_API const char* hpf_last_error(void);
HPF_API const char* hpf_status_name(hpf_status status);

/* Sequences over {H, P}, case-insensitive, at least two beads. */
HPF_API hpf_status hpf_sequence_parse(const char* text, hpf_sequence** out);
HPF_API void hpf_sequence_free(hpf_sequence* seq);
HPF_API size_t hpf_sequence_length(const hpf_sequence* seq);
HPF_API int hpf_sequence_max_contacts(const hpf_sequence* seq);
/* Bead numbers are 1-based; both beads must be H. */
HPF_API hpf_status hpf_sequence_set_weight(hpf_sequence* seq, size_t j, size_t k, double w);
HPF_API hpf_status hpf_sequence_load_weights(hpf_sequence* seq, const char* csv_path);

/* Run configuration. Keys are the command-line option names without the
 * leading dashes ("seq", "solver", "draws", "top-k", ...). */
HPF_API hpf_status hpf_config_create(hpf_config** out);
HPF_API void hpf_config_free(hpf_config* cfg);
HPF_API hpf_status hpf_config_set(hpf_config* cfg, const char* key, const char* value);
HPF_API hpf_status hpf_config_validate(const hpf_config* cfg);

/* Runs every draw and keeps the best post-selected conformation. */
HPF_API hpf_status hpf_run(const hpf_config* cfg, hpf_result** out);
HPF_API void hpf_result_free(hpf_result* res);
HPF_API int hpf_result_contacts(const hpf_result* res);
HPF_API int hpf_result_max_contacts(const hpf_result* res);
HPF_API int hpf_result_feasible(const hpf_result* res);
HPF_API size_t hpf_result_num_beads(const hpf_result* res);
HPF_API double hpf_result_qubo_energy(const hpf_result* res);
/* Fills xyz[3*i .. 3*i+2] for bead i; capacity is the number of ints. */
HPF_API hpf_status hpf_result_coords(const hpf_result* res, int* xyz, size_t capacity);
HPF_API const char* hpf_result_bits(const hpf_result* res);
HPF_API const char* hpf_result_json(const hpf_result* res);
/* Writes the artifacts selected by the config's formats into dir. */
HPF_API hpf_status hpf_result_write(const hpf_result* res, const char* dir);
HPF_API hpf_status hpf_result_export_qubo(const hpf_result* res, const char* path);

/* QUBO for one seeded axis draw with calibrated penalties. */
HPF_API hpf_status hpf_qubo_build(const hpf_sequence* seq, uint64_t seed, int fix_first_turn,
                                  double lambda3_hint, hpf_qubo** out);
HPF_API void hpf_qubo_free(hpf_qubo* q);
HPF_API size_t hpf_qubo_num_variables(const hpf_qubo* q);
/* bits holds num_variables bytes, each 0 or 1. */
HPF_API hpf_status hpf_qubo_evaluate(const hpf_qubo* q, const uint8_t* bits, size_t n,
                                     double* energy);
HPF_API hpf_status hpf_qubo_write(const hpf_qubo* q, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* HPFOLD_HPFOLD_H */
