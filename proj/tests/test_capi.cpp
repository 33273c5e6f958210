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

// Exercises the shared library strictly through its C header.
#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "hpfold/hpfold.h"

namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hpfold_capi_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

hpf_config* hph_config(const char* solver) {
  hpf_config* cfg = nullptr;
  EXPECT_EQ(hpf_config_create(&cfg), HPF_OK);
  EXPECT_EQ(hpf_config_set(cfg, "seq", "HPH"), HPF_OK);
  EXPECT_EQ(hpf_config_set(cfg, "solver", solver), HPF_OK);
  EXPECT_EQ(hpf_config_set(cfg, "draws", "2"), HPF_OK);
  EXPECT_EQ(hpf_config_set(cfg, "seed", "3"), HPF_OK);
  EXPECT_EQ(hpf_config_set(cfg, "workers", "1"), HPF_OK);
  return cfg;
}

TEST(CApi, VersionAndStatusNames) {
  EXPECT_STREQ(hpf_version(), "0.1.0");
  EXPECT_STREQ(hpf_status_name(HPF_OK), "ok");
  EXPECT_STRNE(hpf_status_name(HPF_ERR_CONFIG), hpf_status_name(HPF_ERR_IO));
}

TEST(CApi, SequenceLifecycle) {
  hpf_sequence* seq = nullptr;
  ASSERT_EQ(hpf_sequence_parse("HPPHPPHPHH", &seq), HPF_OK);
  EXPECT_EQ(hpf_sequence_length(seq), 10u);
  EXPECT_EQ(hpf_sequence_max_contacts(seq), 9);
  EXPECT_EQ(hpf_sequence_set_weight(seq, 1, 4, 2.0), HPF_OK);
  EXPECT_EQ(hpf_sequence_set_weight(seq, 1, 2, 2.0), HPF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(hpf_sequence_set_weight(seq, 0, 4, 2.0), HPF_ERR_OUT_OF_RANGE);
  EXPECT_NE(std::string(hpf_last_error()), "");
  EXPECT_EQ(hpf_sequence_load_weights(seq, "/nonexistent/w.csv"), HPF_ERR_IO);
  hpf_sequence_free(seq);

  hpf_sequence* bad = nullptr;
  EXPECT_EQ(hpf_sequence_parse("HPX", &bad), HPF_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
  EXPECT_EQ(hpf_sequence_parse(nullptr, &bad), HPF_ERR_INVALID_ARGUMENT);
  hpf_sequence_free(nullptr);
}

TEST(CApi, ConfigErrors) {
  hpf_config* cfg = nullptr;
  ASSERT_EQ(hpf_config_create(&cfg), HPF_OK);
  EXPECT_EQ(hpf_config_set(cfg, "solver", "qaoa"), HPF_ERR_CONFIG);
  EXPECT_NE(std::string(hpf_last_error()).find("qaoa"), std::string::npos);
  EXPECT_EQ(hpf_config_set(cfg, "bogus", "1"), HPF_ERR_CONFIG);
  EXPECT_EQ(hpf_config_validate(cfg), HPF_ERR_CONFIG);  // no sequence yet
  EXPECT_EQ(hpf_config_set(cfg, "seq", "HPH"), HPF_OK);
  EXPECT_EQ(hpf_config_validate(cfg), HPF_OK);
  EXPECT_EQ(hpf_config_set(cfg, "draws", "0"), HPF_OK);
  hpf_result* res = nullptr;
  EXPECT_EQ(hpf_run(cfg, &res), HPF_ERR_CONFIG);
  EXPECT_EQ(res, nullptr);
  hpf_config_free(cfg);
}

TEST(CApi, RunExhaustiveHph) {
  hpf_config* cfg = hph_config("exhaustive");
  hpf_result* res = nullptr;
  ASSERT_EQ(hpf_run(cfg, &res), HPF_OK) << hpf_last_error();
  EXPECT_EQ(hpf_result_contacts(res), 1);
  EXPECT_EQ(hpf_result_max_contacts(res), 1);
  EXPECT_EQ(hpf_result_feasible(res), 1);
  ASSERT_EQ(hpf_result_num_beads(res), 3u);
  EXPECT_EQ(std::string(hpf_result_bits(res)).size(), 6u);

  std::vector<int> xyz(9, 99);
  EXPECT_EQ(hpf_result_coords(res, xyz.data(), 8), HPF_ERR_OUT_OF_RANGE);
  ASSERT_EQ(hpf_result_coords(res, xyz.data(), xyz.size()), HPF_OK);
  EXPECT_EQ(xyz[0], 0);
  EXPECT_EQ(xyz[1], 0);
  EXPECT_EQ(xyz[2], 0);
  EXPECT_EQ(xyz[3], 1);  // first turn fixed along +x
  // Ends of a one-contact trimer are a unit step apart.
  const int dx = xyz[6] - xyz[0], dy = xyz[7] - xyz[1], dz = xyz[8] - xyz[2];
  EXPECT_EQ(dx * dx + dy * dy + dz * dz, 1);

  const std::string json = hpf_result_json(res);
  EXPECT_NE(json.find("\"hpfold-result\""), std::string::npos);

  const fs::path dir = scratch("write");
  EXPECT_EQ(hpf_result_write(res, dir.string().c_str()), HPF_OK);
  EXPECT_TRUE(fs::exists(dir / "result.json"));
  EXPECT_EQ(hpf_result_export_qubo(res, (dir / "q.json").string().c_str()), HPF_OK);
  EXPECT_TRUE(fs::exists(dir / "q.json"));
  EXPECT_EQ(hpf_result_write(res, (dir / "result.json" / "x").string().c_str()), HPF_ERR_IO);

  hpf_result_free(res);
  hpf_config_free(cfg);
}

TEST(CApi, QuboBuildAndEvaluate) {
  hpf_sequence* seq = nullptr;
  ASSERT_EQ(hpf_sequence_parse("HPH", &seq), HPF_OK);
  hpf_qubo* q = nullptr;
  ASSERT_EQ(hpf_qubo_build(seq, 5, 1, 0.5, &q), HPF_OK) << hpf_last_error();
  ASSERT_EQ(hpf_qubo_num_variables(q), 6u);

  // Second turn +x, encoded as x_a = 1: a straight chain with no contacts.
  std::vector<std::uint8_t> bits(6, 0);
  bits[0] = 1;
  double straight = NAN;
  EXPECT_EQ(hpf_qubo_evaluate(q, bits.data(), bits.size(), &straight), HPF_OK);
  // Second turn -x folds the chain back onto the first bead.
  bits[0] = 0;
  bits[1] = 1;
  double folded = NAN;
  EXPECT_EQ(hpf_qubo_evaluate(q, bits.data(), bits.size(), &folded), HPF_OK);
  EXPECT_TRUE(std::isfinite(straight));
  EXPECT_TRUE(std::isfinite(folded));
  double energy = 0.0;
  EXPECT_EQ(hpf_qubo_evaluate(q, bits.data(), 5, &energy), HPF_ERR_OUT_OF_RANGE);
  bits[0] = 2;
  EXPECT_EQ(hpf_qubo_evaluate(q, bits.data(), bits.size(), &energy), HPF_ERR_INVALID_ARGUMENT);

  const fs::path dir = scratch("qubo");
  EXPECT_EQ(hpf_qubo_write(q, (dir / "q.json").string().c_str()), HPF_OK);
  EXPECT_GT(fs::file_size(dir / "q.json"), 0u);

  hpf_qubo_free(q);
  hpf_sequence_free(seq);
}

}  // namespace
