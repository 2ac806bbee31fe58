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

// Dense state-vector simulator. Basis index x labels |x>, qubit 0 is the
// least significant bit. Every operation takes its input by const reference
// (or by value when it can reuse the buffer) and returns a fresh state.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qtk {

using Complex = std::complex<double>;

/// Deterministic generator: std::mt19937_64 seeded with the 64-bit seed.
/// uniform() takes the top 53 bits of one draw, so outcome sequences depend
/// only on the seed and not on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Standard normal deviate (Box-Muller on uniform()).
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// 2x2 unitary, validated on construction.
class SingleQubitGate {
 public:
  /// Rows are {entries[0], entries[1]} and {entries[2], entries[3]}.
  explicit SingleQubitGate(const std::array<Complex, 4> &entries);

  static SingleQubitGate identity();
  static SingleQubitGate hadamard();
  static SingleQubitGate pauli_x();
  /// diag(1, phase); |phase| must be 1.
  static SingleQubitGate phase(Complex phase);

  const Complex &operator()(int row, int col) const { return entries_[2 * row + col]; }
  SingleQubitGate adjoint() const;

 private:
  std::array<Complex, 4> entries_;
};

class StateVector {
 public:
  /// Takes ownership of the amplitudes; the length must be 2^n with n >= 1,
  /// every entry finite, and the norm 1 within kTolerance.
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector basis(int num_qubits, std::uint64_t index);
  /// Independent complex Gaussian amplitudes, normalized.
  static StateVector random(int num_qubits, Rng &rng);
  /// Scales the input to unit norm before validating it.
  static StateVector normalized(std::vector<Complex> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  const Complex &operator[](std::size_t index) const { return amplitudes_[index]; }
  double norm_squared() const;

 private:
  int num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

struct Measurement {
  int bit;
  StateVector state;
};

StateVector new_basis_state(int num_qubits, std::uint64_t index);

StateVector apply_single_qubit(const StateVector &state, int qubit, const SingleQubitGate &gate);

/// Brute-force a_x <- d_x a_x. This is the reference every diagonal method
/// is checked against.
StateVector apply_diagonal_dense(const StateVector &state, std::span<const Complex> phases);

/// New amplitude at perm[x] is the old amplitude at x.
StateVector apply_permutation_dense(const StateVector &state, std::span<const std::uint64_t> perm);

/// |<a|b>|, clamped to [0, 1].
double fidelity_up_to_global_phase(const StateVector &a, const StateVector &b);

Measurement measure_qubit(const StateVector &state, int qubit, Rng &rng);

/// a occupies the high qubits, b the low qubits.
StateVector tensor(const StateVector &a, const StateVector &b);

/// Throws ValidationError unless perm is a bijection on {0..size-1}.
void require_bijection(std::span<const std::uint64_t> perm, std::size_t size);

}  // namespace qtk
