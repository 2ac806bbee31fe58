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

// Seeded drivers behind the command-line tool: structured-versus-dense
// verification, single-run resource reports, rotation statistics and the
// bundled demos.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/method.hpp"
#include "json.hpp"

namespace qtk {

struct VerifyResult {
  std::string method;
  int num_qubits = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  double tolerance = kTolerance;
  /// max over trials of 1 - |<structured|dense>|.
  double worst_deficit = 0.0;
  /// max over trials of 1 - ancilla fidelity with the declared final state.
  /// Not applicable to the gamma experiment, which makes no such claim.
  double worst_ancilla_deficit = 0.0;
  bool pass = false;
};

/// Trial t draws a Gaussian random state and a per-trial generator from
/// one master Rng seeded with `seed`, so results depend only on the seed.
VerifyResult verify_method(const MethodSpec &spec, int trials, std::uint64_t seed, double tolerance = kTolerance);

struct ResourcesResult {
  ResourceReport report;
  ClaimCheck claims;
};

ResourcesResult measure_resources(const MethodSpec &spec, std::uint64_t seed);

struct RotationStats {
  int m = 1;
  int trials = 0;
  std::uint64_t seed = 0;
  double mean_calls = 0.0;
  double mean_measurements = 0.0;
  std::int64_t max_calls = 0;
  double expected_calls = 0.0;
  double quoted_closed_form = 0.0;
  /// Accepted distance from expected_calls: 0.05 at 10,000 trials, scaled
  /// by sqrt(10000 / trials) below that.
  double band = 0.05;
  /// Worst 1 - fidelity against the dense rotation over all trials.
  double worst_deficit = 0.0;
  /// false below 100 trials, where no verdict is given.
  bool has_verdict = false;
  bool pass = false;
};

inline constexpr int kMinRotationTrials = 100;

RotationStats rotation_stats(int m, int trials, std::uint64_t seed, int num_qubits = 3);

struct DemoResult {
  nlohmann::json document;
  bool pass = false;
};

std::vector<std::string> demo_names();

/// Throws DomainError for an unknown name.
DemoResult run_demo(const std::string &name, int num_qubits, std::uint64_t seed, double tolerance = kTolerance);

nlohmann::json to_json(const VerifyResult &result);
nlohmann::json to_json(const ResourcesResult &result);
nlohmann::json to_json(const RotationStats &stats);
nlohmann::json to_json(const DecompositionVerdict &verdict);

}  // namespace qtk
