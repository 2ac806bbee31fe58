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

#include "core/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "core/errors.hpp"

namespace qtk {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below requires a positive bound");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

double Rng::normal() {
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

SingleQubitGate::SingleQubitGate(const std::array<Complex, 4> &entries) : entries_(entries) {
  for (const auto &e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      throw ValidationError("gate entry is not finite");
  }
  // U^dagger U = I entrywise.
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Complex sum = std::conj(entries_[r]) * entries_[c] + std::conj(entries_[2 + r]) * entries_[2 + c];
      const Complex expected = (r == c) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
      if (std::abs(sum - expected) > kTolerance) throw ValidationError("single-qubit gate is not unitary");
    }
  }
}

SingleQubitGate SingleQubitGate::identity() { return SingleQubitGate({1.0, 0.0, 0.0, 1.0}); }

SingleQubitGate SingleQubitGate::hadamard() {
  const double s = std::numbers::sqrt2 / 2.0;
  return SingleQubitGate({s, s, s, -s});
}

SingleQubitGate SingleQubitGate::pauli_x() { return SingleQubitGate({0.0, 1.0, 1.0, 0.0}); }

SingleQubitGate SingleQubitGate::phase(Complex phase) { return SingleQubitGate({1.0, 0.0, 0.0, phase}); }

SingleQubitGate SingleQubitGate::adjoint() const {
  return SingleQubitGate({std::conj(entries_[0]), std::conj(entries_[2]), std::conj(entries_[1]),
                          std::conj(entries_[3])});
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  const std::size_t size = amplitudes_.size();
  if (size < 2 || !std::has_single_bit(size))
    throw ValidationError("state length " + std::to_string(size) + " is not 2^n with n >= 1");
  num_qubits_ = std::countr_zero(size);
  for (const auto &a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw ValidationError("state amplitude is not finite");
  }
  if (std::abs(norm_squared() - 1.0) > kTolerance)
    throw ValidationError("state is not normalized (norm^2 = " + std::to_string(norm_squared()) + ")");
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
  if (num_qubits < 1 || num_qubits > 62) throw DomainError("qubit count must be in [1, 62]");
  const std::uint64_t size = std::uint64_t{1} << num_qubits;
  if (index >= size) throw DomainError("basis index " + std::to_string(index) + " out of range");
  std::vector<Complex> amps(size);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

StateVector StateVector::random(int num_qubits, Rng &rng) {
  if (num_qubits < 1 || num_qubits > 62) throw DomainError("qubit count must be in [1, 62]");
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  for (auto &a : amps) a = Complex(rng.normal(), rng.normal());
  return normalized(std::move(amps));
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  double total = 0.0;
  for (const auto &a : amplitudes) total += std::norm(a);
  if (!(total > 0.0) || !std::isfinite(total)) throw ValidationError("cannot normalize a zero or non-finite vector");
  const double scale = 1.0 / std::sqrt(total);
  for (auto &a : amplitudes) a *= scale;
  return StateVector(std::move(amplitudes));
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto &a : amplitudes_) total += std::norm(a);
  return total;
}

StateVector new_basis_state(int num_qubits, std::uint64_t index) { return StateVector::basis(num_qubits, index); }

StateVector apply_single_qubit(const StateVector &state, int qubit, const SingleQubitGate &gate) {
  if (qubit < 0 || qubit >= state.num_qubits())
    throw DomainError("qubit " + std::to_string(qubit) + " out of range");
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < out.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = out[i];
      const Complex a1 = out[i + stride];
      out[i] = gate(0, 0) * a0 + gate(0, 1) * a1;
      out[i + stride] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
  }
  return StateVector(std::move(out));
}

StateVector apply_diagonal_dense(const StateVector &state, std::span<const Complex> phases) {
  if (phases.size() != state.dim())
    throw ValidationError("diagonal has " + std::to_string(phases.size()) + " entries, state has " +
                          std::to_string(state.dim()));
  std::vector<Complex> out(state.dim());
  for (std::size_t x = 0; x < out.size(); ++x) {
    if (std::abs(std::abs(phases[x]) - 1.0) > kTolerance)
      throw ValidationError("diagonal entry " + std::to_string(x) + " is not unit modulus");
    out[x] = phases[x] * state[x];
  }
  return StateVector(std::move(out));
}

void require_bijection(std::span<const std::uint64_t> perm, std::size_t size) {
  if (perm.size() != size) throw ValidationError("permutation table has the wrong length");
  std::vector<bool> seen(size, false);
  for (std::uint64_t target : perm) {
    if (target >= size || seen[target]) throw ValidationError("permutation table is not a bijection");
    seen[target] = true;
  }
}

StateVector apply_permutation_dense(const StateVector &state, std::span<const std::uint64_t> perm) {
  require_bijection(perm, state.dim());
  std::vector<Complex> out(state.dim());
  for (std::size_t x = 0; x < out.size(); ++x) out[perm[x]] = state[x];
  return StateVector(std::move(out));
}

double fidelity_up_to_global_phase(const StateVector &a, const StateVector &b) {
  if (a.num_qubits() != b.num_qubits()) throw DomainError("fidelity of states with different qubit counts");
  Complex overlap = 0.0;
  for (std::size_t x = 0; x < a.dim(); ++x) overlap += std::conj(a[x]) * b[x];
  return std::clamp(std::abs(overlap), 0.0, 1.0);
}

Measurement measure_qubit(const StateVector &state, int qubit, Rng &rng) {
  if (qubit < 0 || qubit >= state.num_qubits())
    throw DomainError("qubit " + std::to_string(qubit) + " out of range");
  const std::uint64_t mask = std::uint64_t{1} << qubit;
  double p0 = 0.0;
  double p1 = 0.0;
  for (std::size_t x = 0; x < state.dim(); ++x) ((x & mask) ? p1 : p0) += std::norm(state[x]);
  if (std::abs(p0 + p1 - 1.0) > kTolerance)
    throw InvariantError("measurement probabilities sum to " + std::to_string(p0 + p1));

  const int bit = rng.uniform() < p1 ? 1 : 0;
  const double scale = 1.0 / std::sqrt(bit ? p1 : p0);
  std::vector<Complex> out(state.dim());
  for (std::size_t x = 0; x < state.dim(); ++x) {
    if (((x & mask) != 0) == (bit == 1)) out[x] = state[x] * scale;
  }
  return {bit, StateVector(std::move(out))};
}

StateVector tensor(const StateVector &a, const StateVector &b) {
  if (a.num_qubits() + b.num_qubits() > 62) throw DomainError("tensor product too large");
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t hi = 0; hi < a.dim(); ++hi) {
    for (std::size_t lo = 0; lo < b.dim(); ++lo) out[hi * b.dim() + lo] = a[hi] * b[lo];
  }
  return StateVector(std::move(out));
}

}  // namespace qtk
