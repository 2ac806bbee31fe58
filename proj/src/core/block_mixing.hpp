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

// Amplitude mixing: Walsh-Hadamard, W D W, block-diagonal matrices chosen by
// a selector oracle, and blocks conjugated by a grouping permutation.

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "core/diagonal.hpp"
#include "core/oracle.hpp"
#include "core/permutation.hpp"
#include "core/registers.hpp"
#include "core/statevector.hpp"

namespace qtk {

using Block = Eigen::MatrixXcd;

/// M = diag(B_f(0), B_f(k), ...): the aligned k-block starting at x is
/// multiplied by blocks[selector(x)]. The selector may depend only on the
/// high n - log2(k) bits of x.
struct BlockDiagonalSpec {
  std::uint64_t block_size = 2;
  ClassicalOracle selector;
  std::vector<Block> blocks;
};

/// Reorders states by g(x) = group_number(x) * k + member_id(x), mixes with
/// a block-diagonal M, and restores the order with g_inv. The selector is
/// evaluated on the reordered index.
struct GroupedMixSpec {
  ClassicalOracle group_number;
  ClassicalOracle member_id;
  ClassicalOracle g_inv;
  BlockDiagonalSpec blocks;
};

/// Throws ValidationError on a non-unitary block, a selector that is not
/// constant on aligned k-blocks, or labels outside {0..alpha-1}.
void validate_block_diagonal(const BlockDiagonalSpec &spec, int num_qubits);

/// The oracle x -> group_number(x) * k + member_id(x).
ClassicalOracle grouping_oracle(const GroupedMixSpec &spec);

/// Throws ValidationError unless the grouping is a bijection inverted by g_inv.
void validate_grouped_mix(const GroupedMixSpec &spec, int num_qubits);

/// n Hadamards.
StateVector walsh_hadamard(const StateVector &state);

struct MixResult {
  StateVector state;
  ResourceReport report;
  /// Ancilla fidelity reported by the inner diagonal method.
  double ancilla_fidelity = 1.0;
};

/// W D W; the report is the inner diagonal method's plus 2n Hadamards.
MixResult wdw_mixing(const StateVector &state, const DiagonalSpec &d, Rng &rng);

/// U_f into ceil(log2 alpha) ancillas, each block applied controlled on the
/// ancilla label, U_f again. Blocks are multiplied densely; their gate cost is
/// reported as modeled_block_cost = alpha k^2 ceil(log2 k).
Outcome apply_block_diagonal(const StateVector &state, const BlockDiagonalSpec &spec);

Outcome apply_grouped_mixing(const StateVector &state, const GroupedMixSpec &spec);

/// Same spec with every block replaced by its adjoint.
BlockDiagonalSpec adjoint(const BlockDiagonalSpec &spec);

/// Ancilla width used for an alpha-label selector.
int selector_ancillas(std::size_t alpha);

}  // namespace qtk
