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

#include "core/verify.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"
#include "core/spec_io.hpp"

namespace qtk {
namespace {

using nlohmann::json;

json amplitudes_to_json(const StateVector &state) {
  json out = json::array();
  for (const auto &a : state.amplitudes()) out.push_back(complex_to_json(a));
  return out;
}

std::vector<std::uint64_t> swap_table(std::uint64_t size, std::uint64_t a, std::uint64_t b) {
  std::vector<std::uint64_t> table(size);
  for (std::uint64_t x = 0; x < size; ++x) table[x] = x == a ? b : x == b ? a : x;
  return table;
}

DemoResult grover_sign_step(int n, std::uint64_t seed, double tolerance) {
  if (n < 2 || n > 16) throw DomainError("grover-sign-step needs 2 <= n <= 16");
  Rng rng(seed);
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t target = rng.below(size);
  const StateVector start = walsh_hadamard(StateVector::basis(n, 0));

  // Mark the target with a sign change, then invert about the mean with
  // W diag(-1, 1, ..., 1) W.
  auto marked = apply_sign_change(start, ClassicalOracle::marked_item(n, target));
  const MethodSpec diffusion{n, WdwSpec{SignPattern{ClassicalOracle::marked_item(n, 0)}}, {}};
  auto mixed = run_method(diffusion, marked.state, rng);

  std::vector<Complex> mark_phases(size, 1.0);
  mark_phases[target] = -1.0;
  const StateVector dense = reference_apply(diffusion, apply_diagonal_dense(start, mark_phases));

  const double fidelity = fidelity_up_to_global_phase(mixed.state, dense);
  const double probability = std::norm(mixed.state[target]);
  const double theta = std::asin(std::pow(2.0, -0.5 * n));
  const double expected = std::pow(std::sin(3.0 * theta), 2);
  const ResourceReport parts[] = {marked.report, mixed.report};
  auto total = merge(parts);
  total.method = "grover-sign-step";

  DemoResult out;
  out.pass = 1.0 - fidelity <= tolerance && std::abs(probability - expected) <= tolerance;
  out.document = {{"demo", "grover-sign-step"},
                  {"n", n},
                  {"seed", seed},
                  {"marked_item", target},
                  {"success_probability", probability},
                  {"expected_probability", expected},
                  {"fidelity_deficit", 1.0 - fidelity},
                  {"steps", json::array({report_to_json(marked.report), report_to_json(mixed.report)})},
                  {"total", report_to_json(total)},
                  {"pass", out.pass}};
  return out;
}

DemoResult exchange_permutation(int n, std::uint64_t seed, double tolerance) {
  if (n < 1 || n > 12) throw DomainError("exchange-permutation needs 1 <= n <= 12");
  Rng rng(seed);
  const std::uint64_t size = std::uint64_t{1} << n;
  const std::uint64_t target = 1 + rng.below(size - 1);
  const auto table = swap_table(size, 0, target);
  // The exchange is its own inverse, but g_inv is still a separate oracle
  // with its own call counter.
  const PermutationSpec spec{ClassicalOracle::from_table(n, n, table), ClassicalOracle::from_table(n, n, table)};
  validate_permutation(spec);

  auto from_zero = apply_permutation_inplace(StateVector::basis(n, 0), spec);
  const StateVector random = StateVector::random(n, rng);
  auto mixed = apply_permutation_inplace(random, spec);
  const double deficit = std::max(1.0 - fidelity_up_to_global_phase(from_zero.state, StateVector::basis(n, target)),
                                  1.0 - fidelity_up_to_global_phase(mixed.state, apply_permutation_dense(random, table)));

  DemoResult out;
  out.pass = deficit <= tolerance && 1.0 - from_zero.ancilla_fidelity <= tolerance;
  out.document = {
      {"demo", "exchange-permutation"},
      {"n", n},
      {"seed", seed},
      {"marked_item", target},
      {"caveat",
       "This exchanges |0...0> with the marked item only because g and g_inv are given as tables that already "
       "name the marked item. An oracle that merely recognizes the marked item cannot supply g_inv, so the "
       "exchange is not a way to find it."},
      {"zero_maps_to", target},
      {"fidelity_deficit", deficit},
      {"report", report_to_json(from_zero.report)},
      {"pass", out.pass}};
  return out;
}

DemoResult grouped_mixing(std::uint64_t seed, double tolerance) {
  // Groups {0, 3} and {1, 2}; H mixes group 0, group 1 is left alone.
  const int n = 2;
  const double s = 1.0 / std::sqrt(2.0);
  Block h(2, 2);
  h << s, s, s, -s;
  GroupedMixSpec spec{ClassicalOracle::from_table(n, 1, {0, 1, 1, 0}), ClassicalOracle::from_table(n, 1, {0, 0, 1, 1}),
                      ClassicalOracle::from_table(n, n, {0, 3, 1, 2}),
                      BlockDiagonalSpec{2, ClassicalOracle::high_bits(n, 1), {h, Block::Identity(2, 2)}}};
  const MethodSpec method{n, spec, {}};
  validate_method(method);

  Rng rng(seed);
  json rows = json::array();
  double deficit = 0.0;
  double ancilla_deficit = 0.0;
  ResourceReport report;
  for (std::uint64_t x = 0; x < 4; ++x) {
    const auto in = StateVector::basis(n, x);
    auto run = run_method(method, in, rng);
    deficit = std::max(deficit, 1.0 - fidelity_up_to_global_phase(run.state, reference_apply(method, in)));
    ancilla_deficit = std::max(ancilla_deficit, 1.0 - run.ancilla_fidelity);
    report = run.report;
    rows.push_back({{"input", x}, {"output", amplitudes_to_json(run.state)}});
  }
  DemoResult out;
  out.pass = deficit <= tolerance && ancilla_deficit <= tolerance;
  out.document = {{"demo", "grouped-mixing"},
                  {"n", n},
                  {"seed", seed},
                  {"groups", json::array({json::array({0, 3}), json::array({1, 2})})},
                  {"basis_images", rows},
                  {"fidelity_deficit", deficit},
                  {"report", report_to_json(report)},
                  {"pass", out.pass}};
  return out;
}

}  // namespace

VerifyResult verify_method(const MethodSpec &spec, int trials, std::uint64_t seed, double tolerance) {
  if (trials < 1) throw DomainError("trials must be positive");
  validate_method(spec);
  VerifyResult out;
  out.method = method_name(spec);
  out.num_qubits = spec.num_qubits;
  out.trials = trials;
  out.seed = seed;
  out.tolerance = tolerance;
  const bool joint = reference_is_joint(spec);

  Rng master(seed);
  for (int t = 0; t < trials; ++t) {
    const StateVector input = StateVector::random(spec.num_qubits, master);
    Rng trial_rng(master.next());
    const RunResult run = run_method(spec, input, trial_rng);
    const StateVector expected = reference_apply(spec, input);
    const double fidelity = fidelity_up_to_global_phase(joint ? run.joint : run.state, expected);
    out.worst_deficit = std::max(out.worst_deficit, 1.0 - fidelity);
    if (!joint) out.worst_ancilla_deficit = std::max(out.worst_ancilla_deficit, 1.0 - run.ancilla_fidelity);
  }
  out.pass = out.worst_deficit <= tolerance && out.worst_ancilla_deficit <= tolerance;
  return out;
}

ResourcesResult measure_resources(const MethodSpec &spec, std::uint64_t seed) {
  validate_method(spec);
  Rng rng(seed);
  const StateVector input = StateVector::random(spec.num_qubits, rng);
  auto run = run_method(spec, input, rng);
  ResourcesResult out{run.report, check_claims(run.report)};
  return out;
}

RotationStats rotation_stats(int m, int trials, std::uint64_t seed, int num_qubits) {
  if (m < 1 || m > 62) throw DomainError("m must be in [1, 62]");
  if (trials < 1) throw DomainError("trials must be positive");
  RotationStats out;
  out.m = m;
  out.trials = trials;
  out.seed = seed;
  out.expected_calls = expected_calls_root2m(m).value();
  out.quoted_closed_form = quoted_closed_form_calls(m);

  const RootRotation rotation{ClassicalOracle::parity(num_qubits), m};
  const auto target = dense_phases(rotation, num_qubits);
  Rng master(seed);
  std::int64_t calls = 0;
  std::int64_t measurements = 0;
  for (int t = 0; t < trials; ++t) {
    const StateVector input = StateVector::random(num_qubits, master);
    Rng trial_rng(master.next());
    const auto outcome = apply_root2m_rotation(input, rotation.f, m, trial_rng);
    calls += outcome.report.oracle_calls;
    measurements += outcome.report.measurements;
    out.max_calls = std::max(out.max_calls, outcome.report.oracle_calls);
    out.worst_deficit = std::max(
        out.worst_deficit, 1.0 - fidelity_up_to_global_phase(outcome.state, apply_diagonal_dense(input, target)));
  }
  out.mean_calls = static_cast<double>(calls) / trials;
  out.mean_measurements = static_cast<double>(measurements) / trials;
  out.band = 0.05 * std::sqrt(std::max(1.0, 10000.0 / trials));
  out.has_verdict = trials >= kMinRotationTrials;
  out.pass = out.has_verdict && std::abs(out.mean_calls - out.expected_calls) <= out.band &&
             out.worst_deficit <= kTolerance;
  return out;
}

std::vector<std::string> demo_names() { return {"grover-sign-step", "exchange-permutation", "grouped-mixing"}; }

DemoResult run_demo(const std::string &name, int num_qubits, std::uint64_t seed, double tolerance) {
  if (name == "grover-sign-step") return grover_sign_step(num_qubits, seed, tolerance);
  if (name == "exchange-permutation") return exchange_permutation(num_qubits, seed, tolerance);
  if (name == "grouped-mixing") return grouped_mixing(seed, tolerance);
  throw DomainError("unknown demo '" + name + "'");
}

json to_json(const VerifyResult &r) {
  return {{"method", r.method},
          {"n", r.num_qubits},
          {"trials", r.trials},
          {"seed", r.seed},
          {"tolerance", r.tolerance},
          {"worst_fidelity_deficit", r.worst_deficit},
          {"worst_ancilla_deficit", r.worst_ancilla_deficit},
          {"pass", r.pass}};
}

json to_json(const ResourcesResult &r) {
  json out = report_to_json(r.report);
  out["claims"] = r.claims.pass ? "pass" : "fail";
  out["claim_diffs"] = r.claims.diffs;
  return out;
}

json to_json(const RotationStats &s) {
  json out = {{"m", s.m},
              {"trials", s.trials},
              {"seed", s.seed},
              {"mean_oracle_calls", s.mean_calls},
              {"mean_measurements", s.mean_measurements},
              {"max_oracle_calls", s.max_calls},
              {"recursion_expected_calls", s.expected_calls},
              {"quoted_closed_form", s.quoted_closed_form},
              {"band", s.band},
              {"worst_fidelity_deficit", s.worst_deficit}};
  out["pass"] = s.has_verdict ? json(s.pass) : json(nullptr);
  return out;
}

json to_json(const DecompositionVerdict &v) {
  json factors = json::array();
  for (const auto &g : v.factors.factors) factors.push_back(complex_to_json(g));
  return {{"decomposable", v.decomposable},
          {"factors", factors},
          {"witness", v.witness ? json(*v.witness) : json(nullptr)},
          {"global_phase", complex_to_json(v.global_phase)}};
}

}  // namespace qtk
