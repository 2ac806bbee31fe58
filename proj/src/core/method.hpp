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

// A method spec names one synthesis route together with its instance. It can
// be run through the structured construction or through a dense reference
// that never touches ancillas or oracle transforms.

#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "core/block_mixing.hpp"
#include "core/decompose.hpp"
#include "core/diagonal.hpp"
#include "core/permutation.hpp"
#include "core/registers.hpp"
#include "core/resources.hpp"
#include "core/statevector.hpp"

namespace qtk {

/// W D W with D given by any diagonal spec.
struct WdwSpec {
  DiagonalSpec inner;
};

using MethodBody =
    std::variant<DiagonalSpec, FactorSet, PermutationSpec, BlockDiagonalSpec, GroupedMixSpec, WdwSpec>;

struct MethodSpec {
  int num_qubits = 1;
  MethodBody body;
  /// Only consulted for BitPhases bodies.
  ApproxStrategy approx_strategy = ApproxStrategy::kSharedRootRegister;
};

/// Report-style name: "sign", "decomposed", "wdw:sign", ...
std::string method_name(const MethodSpec &spec);

/// Throws ValidationError if the instance is inconsistent with num_qubits
/// (oracle widths, table lengths, bijectivity, block unitarity).
void validate_method(const MethodSpec &spec);

struct RunResult {
  StateVector state;
  ResourceReport report;
  /// Fidelity of the ancillas with their declared final state. For the
  /// gamma experiment this is the fidelity with the prepared ancilla.
  double ancilla_fidelity = 1.0;
  /// The joint state, kept for the gamma experiment whose target is joint.
  StateVector joint;
  RegisterLayout layout;
};

/// Structured route.
RunResult run_method(const MethodSpec &spec, const StateVector &state, Rng &rng);

/// Dense route: entrywise phases, index scatters, explicit block loops and
/// the (-1)^{x.y} Walsh matrix. For the gamma experiment, returns the joint
/// state sum_x a_x |x> (x) (|f(x)> + gamma |1 - f(x)>) / sqrt2.
StateVector reference_apply(const MethodSpec &spec, const StateVector &state);

/// True when the reference is a joint main+ancilla state (gamma only).
bool reference_is_joint(const MethodSpec &spec);

}  // namespace qtk
