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

// Oracle-driven diagonal phase changes.
//
// Every method takes the main register, allocates its own ancillas above it,
// runs the construction on the joint state and projects the ancillas onto
// their declared final value. The returned Outcome keeps the joint state so
// callers can inspect ancilla hygiene and entanglement.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "core/oracle.hpp"
#include "core/registers.hpp"
#include "core/resources.hpp"
#include "core/statevector.hpp"

namespace qtk {

/// Phases d_x given entry by entry.
struct ExplicitPhases {
  std::vector<Complex> phases;
};

/// d_x = table[f(x)] for a small table of r phases.
struct DistinctPhases {
  ClassicalOracle f;
  std::vector<Complex> table;
};

/// d_x = -1 where f(x) = 1.
struct SignPattern {
  ClassicalOracle f;
};

/// d_x = exp(2 pi i f(x) / 2^m) with boolean f, by repeated measurement.
struct RootRotation {
  ClassicalOracle f;
  int m = 1;
};

/// d_x = omega^f(x), omega = exp(2 pi i / k), k a power of two.
struct RootOfUnity {
  ClassicalOracle f;
  std::uint64_t k = 2;
};

/// The (|0> + gamma|1>) ancilla experiment. It does not realize a diagonal
/// in general; apply_diagonal rejects it.
struct GammaAncilla {
  ClassicalOracle f;
  Complex gamma{1.0, 0.0};
};

/// d_x = exp(2 pi i 0.b_1 b_2 ... b_k) with b_j = bits[j - 1](x).
struct BitPhases {
  std::vector<ClassicalOracle> bits;
};

using DiagonalSpec =
    std::variant<ExplicitPhases, DistinctPhases, SignPattern, RootRotation, RootOfUnity, GammaAncilla, BitPhases>;

/// O(N) construction: for every y, U_delta_y, diag(1, d_y) on the ancilla,
/// U_delta_y again. 2N oracle calls, one ancilla.
Outcome synthesize_naive(const StateVector &state, const ExplicitPhases &spec);

/// Same on a caller-supplied joint state (main in the low layout.main_bits
/// qubits, one ancilla above). Throws PreconditionError unless the ancilla
/// is |0>.
std::pair<StateVector, ResourceReport> synthesize_naive_registers(const StateVector &joint,
                                                                  const RegisterLayout &layout,
                                                                  const ExplicitPhases &spec);

Outcome apply_distinct_phases(const StateVector &state, const DistinctPhases &spec);

Outcome apply_sign_change(const StateVector &state, const ClassicalOracle &f);

/// Joint n+1 qubit state with the ancilla prepared as (|0> + gamma|1>)/sqrt2
/// and U_f applied; nothing is measured. Outcome::state is left equal to
/// the input main register.
Outcome apply_gamma_ancilla(const StateVector &state, const ClassicalOracle &f, Complex gamma);

Outcome apply_root2m_rotation(const StateVector &state, const ClassicalOracle &f, int m, Rng &rng);

/// Average oracle calls of apply_root2m_rotation as an exact fraction.
struct Fraction {
  std::uint64_t numerator;
  std::uint64_t denominator;
  double value() const { return static_cast<double>(numerator) / static_cast<double>(denominator); }
};

/// E(1) = 1, E(m) = 1 + E(m-1)/2, so E(m) = 2 - 2^(1-m). Valid for 1 <= m <= 63.
Fraction expected_calls_root2m(int m);

/// The closed form (2^(m-1) - 1) / 2^(m-2) often quoted for this average.
/// It gives 1 at m = 2 although the m = 2 procedure averages 1.5 calls
/// (one call, plus a second one half of the time), so it is reported for
/// comparison only.
double quoted_closed_form_calls(int m);

struct RootRegister {
  StateVector state;
  std::int64_t elementary_ops;
};

/// R = k^(-1/2) sum_h omega^(k-h) |h> on log2(k) qubits, built from |0...0>
/// with one Hadamard and one phase gate per qubit.
RootRegister prepare_root_register(std::uint64_t k);

Outcome apply_kth_root(const StateVector &state, const ClassicalOracle &f, std::uint64_t k);

enum class ApproxStrategy {
  /// One modular addition of each f_j into the top j qubits of a shared
  /// root-of-unity register: precision calls, precision ancillas.
  kSharedRootRegister,
  /// Compute f_j into one ancilla, phase it, uncompute: 2 * precision
  /// calls, one ancilla.
  kPhaseTablePerBit,
};

Outcome approx_diagonal(const StateVector &state, const BitPhases &spec,
                        ApproxStrategy strategy = ApproxStrategy::kSharedRootRegister);

/// Builds the bit oracles f_1..f_k of a real phase function p (phase
/// exp(2 pi i p)) by truncating the binary expansion of frac(p).
BitPhases bit_phases_from_real(int input_bits, const std::function<double(std::uint64_t)> &p, int precision);

/// frac(p) truncated to `precision` binary digits.
double truncate_phase(double p, int precision);

/// Dispatches on the variant. GammaAncilla is rejected with ValidationError.
Outcome apply_diagonal(const StateVector &state, const DiagonalSpec &spec, Rng &rng);

/// The diagonal d_x the spec is meant to realize, evaluated entry by entry
/// with ClassicalOracle::eval (never counted as a call). This is the
/// reference route for verification.
std::vector<Complex> dense_phases(const DiagonalSpec &spec, int num_qubits);

/// Short method name used in reports ("naive", "distinct", ...).
std::string method_name(const DiagonalSpec &spec);

}  // namespace qtk
