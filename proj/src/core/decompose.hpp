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

// Tensor-product decomposition of diagonal unitaries into single-qubit
// phase gates diag(1, g_k).

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "core/registers.hpp"
#include "core/statevector.hpp"

namespace qtk {

/// g_0..g_{n-1}; qubit k gets diag(1, g_k).
struct FactorSet {
  std::vector<Complex> factors;
};

inline constexpr int kDefaultDecomposeMaxQubits = 16;

/// factors[k] = d_{2^k}. The diagonal must already be divided by d_0.
FactorSet extract_candidate_factors(std::span<const Complex> phases);

struct DecompositionVerdict {
  bool decomposable = false;
  /// Candidate factors of the normalized diagonal (meaningful when decomposable).
  FactorSet factors;
  /// Smallest j with d_j / d_0 != prod_k g_k^{b_k(j)}.
  std::optional<std::uint64_t> witness;
  /// d_0, divided out before testing.
  Complex global_phase{1.0, 0.0};
};

/// Exhaustive test over all 2^n entries. Throws DomainError above max_qubits.
DecompositionVerdict is_decomposable(std::span<const Complex> phases, int max_qubits = kDefaultDecomposeMaxQubits);

/// x and x_prime differ exactly in `bit` and x > x_prime.
struct BitPair {
  std::uint64_t x;
  std::uint64_t x_prime;
  int bit;
};

/// Necessary condition d_x / d_x' = d_{2^k} / d_0 on the sampled pairs.
/// false means "certainly not decomposable"; true means "not ruled out".
bool pairwise_necessary_check(std::span<const Complex> phases, std::span<const BitPair> pairs);

/// Random well-formed pairs for a 2^num_qubits diagonal.
std::vector<BitPair> random_bit_pairs(int num_qubits, std::size_t count, Rng &rng);

/// n phase gates, no oracle calls, no ancillas.
Outcome apply_decomposed(const StateVector &state, const FactorSet &factors);

/// The full diagonal G_{n-1} (x) ... (x) G_0.
std::vector<Complex> tensor_diagonal(const FactorSet &factors);

}  // namespace qtk
