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

#pragma once

#include "core/oracle.hpp"
#include "core/registers.hpp"
#include "core/statevector.hpp"

namespace qtk {

/// A bijection g on n bits together with its inverse. Without g_inv there is
/// no way to erase the input register, which is why it is mandatory.
struct PermutationSpec {
  ClassicalOracle g;
  ClassicalOracle g_inv;
};

/// Bijections up to this width are checked exhaustively; wider ones are
/// spot-checked on a fixed pseudo-random sample.
inline constexpr int kExhaustivePermutationBits = 12;

/// Throws ValidationError when g is not an n -> n bijection or g_inv does
/// not invert it. Spec loaders call this up front.
void validate_permutation(const PermutationSpec &spec);

/// |x> -> |g(x)> using n ancillas:
///   |x, 0> -> |x, g(x)> -> |x XOR g_inv(g(x)), g(x)> = |0, g(x)>,
/// then a register swap moves g(x) back into the main register.
/// One call of g, one of g_inv, n swap gates. A component whose x does not
/// erase (g_inv(g(x)) != x) raises InvariantError.
Outcome apply_permutation_inplace(const StateVector &state, const PermutationSpec &spec);

/// |x, y> -> |y, x> for equal-width registers, as main_bits qubit swaps.
StateVector swap_registers(const StateVector &state, const RegisterLayout &layout);

/// Index table of g, for the dense reference.
std::vector<std::uint64_t> permutation_table(const ClassicalOracle &g);

}  // namespace qtk
