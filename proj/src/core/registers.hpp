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

// Helpers for a combined main+ancilla register (see RegisterLayout).

#pragma once

#include <cstdint>
#include <vector>

#include "core/oracle.hpp"
#include "core/resources.hpp"
#include "core/statevector.hpp"

namespace qtk {

/// Result of running a method on a main register with its own ancillas.
struct Outcome {
  /// Main register after the ancillas were projected onto their declared
  /// final value.
  StateVector state;
  /// Full main+ancilla state before the projection.
  StateVector joint;
  RegisterLayout layout;
  ResourceReport report;
  /// <d|rho_anc|d> for the declared final ancilla state d; 1 without ancillas.
  double ancilla_fidelity = 1.0;
  std::vector<int> measurement_outcomes;
};

/// |0...0>_ancilla (x) main.
StateVector attach_ancillas(const StateVector &main, int ancilla_bits);

/// PreconditionError unless the ancilla register holds |0...0>.
void require_clean_ancillas(const StateVector &joint, const RegisterLayout &layout);

/// <d|rho_anc|d> where rho_anc is the ancilla's reduced state.
double ancilla_fidelity(const StateVector &joint, const RegisterLayout &layout, const StateVector &declared);

struct Detached {
  StateVector main;
  double fidelity;
};

/// Projects the ancillas onto `declared` and renormalizes the main register.
/// Throws InvariantError when the ancilla fidelity is below 1 - kTolerance,
/// i.e. when the ancillas were left entangled or in the wrong state.
Detached detach_ancillas(const StateVector &joint, const RegisterLayout &layout, const StateVector &declared);

/// Same with declared = |0...0>.
Detached detach_clean_ancillas(const StateVector &joint, const RegisterLayout &layout);

/// Singular values (descending) of the amplitude matrix across the
/// main/ancilla cut. Rank 1 means the registers are unentangled.
std::vector<double> schmidt_coefficients(const StateVector &joint, const RegisterLayout &layout);

/// Multiplies every amplitude with (index & mask) == pattern by `phase`:
/// one multiply-controlled phase gate.
StateVector apply_pattern_phase(const StateVector &state, std::uint64_t mask, std::uint64_t pattern, Complex phase);

}  // namespace qtk
