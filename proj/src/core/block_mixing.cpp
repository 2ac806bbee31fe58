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

#include "core/block_mixing.hpp"

#include <bit>
#include <string>

#include "core/errors.hpp"

namespace qtk {
namespace {

std::int64_t ceil_log2(std::uint64_t value) { return value <= 1 ? 0 : std::bit_width(value - 1); }

}  // namespace

int selector_ancillas(std::size_t alpha) {
  return static_cast<int>(std::max<std::int64_t>(1, ceil_log2(alpha)));
}

void validate_block_diagonal(const BlockDiagonalSpec &spec, int num_qubits) {
  const std::uint64_t k = spec.block_size;
  const std::uint64_t size = std::uint64_t{1} << num_qubits;
  if (k < 2 || !std::has_single_bit(k) || k > size)
    throw ValidationError("block size " + std::to_string(k) + " must be a power of two in [2, 2^n]");
  if (spec.blocks.empty()) throw ValidationError("block-diagonal spec has no blocks");
  if (spec.blocks.size() > size / k)
    throw ValidationError(std::to_string(spec.blocks.size()) + " distinct blocks exceed the " +
                          std::to_string(size / k) + " block positions");
  const auto dim = static_cast<Eigen::Index>(k);
  for (std::size_t l = 0; l < spec.blocks.size(); ++l) {
    const Block &b = spec.blocks[l];
    if (b.rows() != dim || b.cols() != dim)
      throw ValidationError("block " + std::to_string(l) + " is not " + std::to_string(k) + "x" + std::to_string(k));
    if (!b.allFinite()) throw ValidationError("block " + std::to_string(l) + " has non-finite entries");
    const double defect = (b.adjoint() * b - Block::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (defect > kTolerance) throw ValidationError("block " + std::to_string(l) + " is not unitary");
  }
  if (spec.selector.input_bits() != num_qubits) throw ValidationError("selector width does not match the register");
  for (std::uint64_t x = 0; x < size; ++x) {
    const std::uint64_t label = spec.selector.eval(x);
    if (label >= spec.blocks.size())
      throw ValidationError("selector label " + std::to_string(label) + " at x = " + std::to_string(x) +
                            " has no block");
    if (label != spec.selector.eval(x & ~(k - 1)))
      throw ValidationError("selector is not constant on the aligned block containing x = " + std::to_string(x));
  }
}

ClassicalOracle grouping_oracle(const GroupedMixSpec &spec) {
  const int n = spec.group_number.input_bits();
  const std::uint64_t k = spec.blocks.block_size;
  auto group = spec.group_number;
  auto member = spec.member_id;
  return ClassicalOracle(
      n, n,
      [group, member, k](std::uint64_t x) {
        const std::uint64_t id = member.eval(x);
        if (id >= k) throw ValidationError("member id " + std::to_string(id) + " is not below k");
        return group.eval(x) * k + id;
      },
      "grouping");
}

void validate_grouped_mix(const GroupedMixSpec &spec, int num_qubits) {
  if (spec.group_number.input_bits() != num_qubits || spec.member_id.input_bits() != num_qubits)
    throw ValidationError("grouping oracles must take the full register");
  validate_block_diagonal(spec.blocks, num_qubits);
  try {
    validate_permutation(PermutationSpec{grouping_oracle(spec), spec.g_inv});
  } catch (const InvariantError &e) {
    throw ValidationError(std::string("grouping does not fit the register: ") + e.what());
  }
}

StateVector walsh_hadamard(const StateVector &state) {
  StateVector out = state;
  for (int q = 0; q < state.num_qubits(); ++q) out = apply_single_qubit(out, q, SingleQubitGate::hadamard());
  return out;
}

MixResult wdw_mixing(const StateVector &state, const DiagonalSpec &d, Rng &rng) {
  const int n = state.num_qubits();
  auto inner = apply_diagonal(walsh_hadamard(state), d, rng);
  ResourceReport report = inner.report;
  report.method = "wdw:" + inner.report.method;
  report.params["n"] = n;
  report.elementary_ops += 2 * n;
  return {walsh_hadamard(inner.state), std::move(report), inner.ancilla_fidelity};
}

Outcome apply_block_diagonal(const StateVector &state, const BlockDiagonalSpec &spec) {
  const int n = state.num_qubits();
  validate_block_diagonal(spec, n);
  const std::uint64_t k = spec.block_size;
  const std::size_t alpha = spec.blocks.size();
  const int m = selector_ancillas(alpha);
  const RegisterLayout layout{n, m};
  const auto selector = spec.selector.with_output_bits(m);
  const std::uint64_t calls_before = selector.calls();

  StateVector joint = apply_uf_xor(attach_ancillas(state, n == 0 ? 0 : m), layout, selector);
  std::vector<Complex> amps(joint.amplitudes().begin(), joint.amplitudes().end());
  const auto dim = static_cast<Eigen::Index>(k);
  Eigen::VectorXcd chunk(dim);
  // One block application per label, controlled on the ancilla value.
  for (std::uint64_t label = 0; label < alpha; ++label) {
    const Block &b = spec.blocks[label];
    for (std::uint64_t base = 0; base < (std::uint64_t{1} << n); base += k) {
      const std::uint64_t offset = layout.join(base, label);
      for (Eigen::Index i = 0; i < dim; ++i) chunk(i) = amps[offset + static_cast<std::uint64_t>(i)];
      if (chunk.squaredNorm() == 0.0) continue;
      const Eigen::VectorXcd mixed = b * chunk;
      for (Eigen::Index i = 0; i < dim; ++i) amps[offset + static_cast<std::uint64_t>(i)] = mixed(i);
    }
  }
  joint = apply_uf_xor(StateVector(std::move(amps)), layout, selector);

  ResourceReport report;
  report.method = "block";
  report.params = {{"n", n}, {"k", static_cast<std::int64_t>(k)}, {"alpha", static_cast<std::int64_t>(alpha)}};
  report.oracle_calls = static_cast<std::int64_t>(selector.calls() - calls_before);
  report.ancilla_qubits = m;
  report.elementary_ops = static_cast<std::int64_t>(alpha);
  report.modeled_block_cost = static_cast<std::int64_t>(alpha * k * k) * ceil_log2(k);
  auto detached = detach_clean_ancillas(joint, layout);
  return Outcome{std::move(detached.main), std::move(joint), layout, std::move(report), detached.fidelity, {}};
}

Outcome apply_grouped_mixing(const StateVector &state, const GroupedMixSpec &spec) {
  const int n = state.num_qubits();
  validate_grouped_mix(spec, n);
  const auto g = grouping_oracle(spec);

  auto forward = apply_permutation_inplace(state, PermutationSpec{g, spec.g_inv});
  auto mixed = apply_block_diagonal(forward.state, spec.blocks);
  auto back = apply_permutation_inplace(mixed.state, PermutationSpec{spec.g_inv, g});

  ResourceLedger ledger;
  ledger.add(forward.report);
  ledger.add(mixed.report);
  ledger.add(back.report);
  auto report = ledger.finish("grouped", mixed.report.params);
  const double fidelity = std::min({forward.ancilla_fidelity, mixed.ancilla_fidelity, back.ancilla_fidelity});
  return Outcome{back.state, std::move(back.joint), back.layout, std::move(report), fidelity, {}};
}

BlockDiagonalSpec adjoint(const BlockDiagonalSpec &spec) {
  BlockDiagonalSpec out = spec;
  for (auto &b : out.blocks) b = b.adjoint().eval();
  return out;
}

}  // namespace qtk
