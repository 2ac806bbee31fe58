// Copyright 2026 The qtk Authors
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

#include "qtk/qtk.h"

#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

struct Text {
  char *ptr = nullptr;
  ~Text() { qtk_string_free(ptr); }
  nlohmann::json json() const { return nlohmann::json::parse(ptr); }
};

struct Spec {
  qtk_spec *ptr = nullptr;
  ~Spec() { qtk_spec_destroy(ptr); }
};

struct State {
  qtk_state *ptr = nullptr;
  ~State() { qtk_state_destroy(ptr); }
};

constexpr const char *kSign = R"({"method": "sign", "n": 3, "oracle": {"type": "builtin", "name": "parity"}})";

}  // namespace

TEST(CApi, version_and_status_names) {
  EXPECT_STREQ(qtk_version(), "0.1.0");
  EXPECT_STREQ(qtk_status_name(QTK_OK), "ok");
  EXPECT_STRNE(qtk_status_name(QTK_ERR_VALIDATION), qtk_status_name(QTK_ERR_PARSE));
}

TEST(CApi, state_round_trip) {
  const double amps[] = {0.6, 0.0, 0.0, 0.8};
  State s;
  ASSERT_EQ(qtk_state_from_amplitudes(amps, 2, &s.ptr), QTK_OK);
  int n = 0;
  size_t dim = 0;
  ASSERT_EQ(qtk_state_num_qubits(s.ptr, &n), QTK_OK);
  ASSERT_EQ(qtk_state_dim(s.ptr, &dim), QTK_OK);
  EXPECT_EQ(n, 1);
  EXPECT_EQ(dim, 2u);
  std::vector<double> out(4);
  ASSERT_EQ(qtk_state_amplitudes(s.ptr, out.data(), out.size()), QTK_OK);
  EXPECT_EQ(out[0], 0.6);
  EXPECT_EQ(out[3], 0.8);
  EXPECT_EQ(qtk_state_amplitudes(s.ptr, out.data(), 3), QTK_ERR_DOMAIN);

  const double bad[] = {1.0, 0.0, 1.0, 0.0};
  State b;
  EXPECT_EQ(qtk_state_from_amplitudes(bad, 2, &b.ptr), QTK_ERR_VALIDATION);
  EXPECT_EQ(b.ptr, nullptr);
  EXPECT_STRNE(qtk_last_error(), "");
}

TEST(CApi, structured_and_dense_routes_agree) {
  Spec spec;
  ASSERT_EQ(qtk_spec_parse(kSign, 0, &spec.ptr), QTK_OK);
  Text method;
  ASSERT_EQ(qtk_spec_method(spec.ptr, &method.ptr), QTK_OK);
  EXPECT_STREQ(method.ptr, "sign");
  State in, structured, dense;
  ASSERT_EQ(qtk_state_random(3, 9, &in.ptr), QTK_OK);
  qtk_report report{};
  double anc = 0.0;
  ASSERT_EQ(qtk_spec_apply(spec.ptr, in.ptr, 1, &structured.ptr, &report, &anc), QTK_OK);
  ASSERT_EQ(qtk_spec_apply_dense(spec.ptr, in.ptr, &dense.ptr), QTK_OK);
  double fidelity = 0.0;
  ASSERT_EQ(qtk_state_fidelity(structured.ptr, dense.ptr, &fidelity), QTK_OK);
  EXPECT_NEAR(fidelity, 1.0, 1e-12);
  EXPECT_EQ(report.oracle_calls, 1);
  EXPECT_EQ(report.ancilla_qubits, 1);
  EXPECT_NEAR(anc, 1.0, 1e-12);
  EXPECT_EQ(qtk_spec_apply(spec.ptr, in.ptr, 1, &structured.ptr, nullptr, nullptr), QTK_OK);
}

TEST(CApi, n_override_and_width_mismatch) {
  Spec spec;
  ASSERT_EQ(qtk_spec_parse(kSign, 5, &spec.ptr), QTK_OK);
  int n = 0;
  ASSERT_EQ(qtk_spec_num_qubits(spec.ptr, &n), QTK_OK);
  EXPECT_EQ(n, 5);
  State in, out;
  ASSERT_EQ(qtk_state_basis(3, 0, &in.ptr), QTK_OK);
  EXPECT_NE(qtk_spec_apply(spec.ptr, in.ptr, 1, &out.ptr, nullptr, nullptr), QTK_OK);
}

TEST(CApi, error_codes) {
  Spec spec;
  EXPECT_EQ(qtk_spec_parse("{not json", 0, &spec.ptr), QTK_ERR_PARSE);
  EXPECT_NE(std::string(qtk_last_error()).find("parse"), std::string::npos);
  EXPECT_EQ(qtk_spec_parse(R"({"method": "naive", "n": 1, "phases": [1, 2]})", 0, &spec.ptr), QTK_ERR_VALIDATION);
  EXPECT_EQ(qtk_spec_parse(nullptr, 0, &spec.ptr), QTK_ERR_NULL_ARGUMENT);
  EXPECT_EQ(qtk_spec_parse(kSign, 0, nullptr), QTK_ERR_NULL_ARGUMENT);
  EXPECT_EQ(spec.ptr, nullptr);
  State s;
  EXPECT_EQ(qtk_state_basis(2, 4, &s.ptr), QTK_ERR_DOMAIN);
}

TEST(CApi, drivers_write_json) {
  Spec spec;
  ASSERT_EQ(qtk_spec_parse(kSign, 0, &spec.ptr), QTK_OK);
  int pass = -1;
  Text verify;
  ASSERT_EQ(qtk_verify(spec.ptr, 10, 3, 1e-9, &verify.ptr, &pass), QTK_OK);
  EXPECT_EQ(pass, 1);
  EXPECT_EQ(verify.json().at("trials"), 10);

  Text resources;
  ASSERT_EQ(qtk_resources(spec.ptr, 3, &resources.ptr, &pass), QTK_OK);
  EXPECT_EQ(pass, 1);
  EXPECT_EQ(resources.json().at("claims"), "pass");

  int verdict = 7;
  Text few;
  ASSERT_EQ(qtk_rotation_stats(2, 10, 1, &few.ptr, &verdict), QTK_OK);
  EXPECT_EQ(verdict, -1);
  Text many;
  ASSERT_EQ(qtk_rotation_stats(2, 2000, 1, &many.ptr, &verdict), QTK_OK);
  EXPECT_EQ(verdict, 1);

  int decomposable = -1;
  Text cz;
  ASSERT_EQ(qtk_decompose(R"({"phases": [1, 1, 1, -1]})", 16, &cz.ptr, &decomposable), QTK_OK);
  EXPECT_EQ(decomposable, 0);
  EXPECT_EQ(cz.json().at("witness"), 3);
  Text capped;
  EXPECT_EQ(qtk_decompose(R"({"phases": [1, 1, 1, 1, 1, 1, 1, 1]})", 2, &capped.ptr, &decomposable), QTK_ERR_DOMAIN);
  Text pairwise;
  ASSERT_EQ(qtk_decompose_pairwise(R"({"phases": [1, 1, 1, 1, 1, 1, 1, 1]})", 20, 1, &pairwise.ptr, &decomposable),
            QTK_OK);
  EXPECT_EQ(decomposable, 1);

  Text demo;
  ASSERT_EQ(qtk_demo("grouped-mixing", 2, 1, 1e-9, &demo.ptr, &pass), QTK_OK);
  EXPECT_EQ(pass, 1);
  Text none;
  EXPECT_EQ(qtk_demo("teleport", 2, 1, 1e-9, &none.ptr, &pass), QTK_ERR_DOMAIN);
}
