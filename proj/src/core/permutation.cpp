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

#include "core/permutation.hpp"

#include <string>

#include "core/errors.hpp"

namespace qtk {
namespace {

constexpr std::size_t kSpotChecks = 4096;
constexpr std::uint64_t kSpotCheckSeed = 0x9e3779b97f4a7c15ULL;

}  // namespace

void validate_permutation(const PermutationSpec &spec) {
  const int n = spec.g.input_bits();
  if (spec.g.output_bits() != n || spec.g_inv.input_bits() != n || spec.g_inv.output_bits() != n)
    throw ValidationError("g and g_inv must both map n bits to n bits");
  if (n <= kExhaustivePermutationBits) {
    const auto table = spec.g.table();
    try {
      require_bijection(table, table.size());
    } catch (const ValidationError &) {
      throw ValidationError("g is not a bijection");
    }
    for (std::uint64_t x = 0; x < table.size(); ++x) {
      if (spec.g_inv.eval(table[x]) != x)
        throw ValidationError("g_inv(g(" + std::to_string(x) + ")) != " + std::to_string(x));
    }
    return;
  }
  Rng rng(kSpotCheckSeed);
  for (std::size_t i = 0; i < kSpotChecks; ++i) {
    const std::uint64_t x = rng.below(spec.g.domain_size());
    if (spec.g_inv.eval(spec.g.eval(x)) != x)
      throw ValidationError("g_inv(g(" + std::to_string(x) + ")) != " + std::to_string(x));
  }
}

StateVector swap_registers(const StateVector &state, const RegisterLayout &layout) {
  if (layout.main_bits != layout.ancilla_bits) throw DomainError("swap_registers needs registers of equal width");
  if (state.num_qubits() != layout.total_bits()) throw DomainError("state does not match the register layout");
  std::vector<Complex> out(state.dim());
  for (std::uint64_t index = 0; index < state.dim(); ++index)
    out[layout.join(layout.ancilla_of(index), layout.main_of(index))] = state[index];
  return StateVector(std::move(out));
}

Outcome apply_permutation_inplace(const StateVector &state, const PermutationSpec &spec) {
  const int n = state.num_qubits();
  if (spec.g.input_bits() != n || spec.g.output_bits() != n || spec.g_inv.input_bits() != n ||
      spec.g_inv.output_bits() != n)
    throw ValidationError("permutation width does not match the register");
  const RegisterLayout layout{n, n};
  const std::uint64_t g_calls = spec.g.calls();
  const std::uint64_t g_inv_calls = spec.g_inv.calls();

  StateVector joint = apply_uf_xor(attach_ancillas(state, n), layout, spec.g);

  // Every populated component must erase to x = 0; anything else means
  // g_inv does not invert g on this support.
  for (std::uint64_t index = 0; index < joint.dim(); ++index) {
    if (std::abs(joint[index]) <= kTolerance) continue;
    const std::uint64_t x = layout.main_of(index);
    if (spec.g_inv.eval(layout.ancilla_of(index)) != x)
      throw InvariantError("g_inv(g(x)) != x at x = " + std::to_string(x));
  }
  joint = apply_uf_xor_into_main(joint, layout, spec.g_inv);
  joint = swap_registers(joint, layout);

  ResourceReport report;
  report.method = "permutation";
  report.params = {{"n", n}};
  report.oracle_calls = static_cast<std::int64_t>((spec.g.calls() - g_calls) + (spec.g_inv.calls() - g_inv_calls));
  report.ancilla_qubits = n;
  report.elementary_ops = n;
  auto detached = detach_clean_ancillas(joint, layout);
  return Outcome{std::move(detached.main), std::move(joint), layout, std::move(report), detached.fidelity, {}};
}

std::vector<std::uint64_t> permutation_table(const ClassicalOracle &g) { return g.table(); }

}  // namespace qtk
