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

#include "core/registers.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace qtk {
namespace {

void check_layout(const StateVector &joint, const RegisterLayout &layout) {
  if (joint.num_qubits() != layout.total_bits())
    throw ValidationError("joint state has " + std::to_string(joint.num_qubits()) + " qubits, layout spans " +
                          std::to_string(layout.total_bits()));
}

std::vector<Complex> project(const StateVector &joint, const RegisterLayout &layout, const StateVector &declared) {
  std::vector<Complex> main(std::size_t{1} << layout.main_bits);
  for (std::uint64_t index = 0; index < joint.dim(); ++index)
    main[layout.main_of(index)] += std::conj(declared[layout.ancilla_of(index)]) * joint[index];
  return main;
}

}  // namespace

StateVector attach_ancillas(const StateVector &main, int ancilla_bits) {
  if (ancilla_bits < 0) throw DomainError("negative ancilla count");
  if (ancilla_bits == 0) return main;
  return tensor(StateVector::basis(ancilla_bits, 0), main);
}

void require_clean_ancillas(const StateVector &joint, const RegisterLayout &layout) {
  check_layout(joint, layout);
  for (std::uint64_t index = 0; index < joint.dim(); ++index) {
    if (layout.ancilla_of(index) != 0 && std::abs(joint[index]) > kTolerance)
      throw PreconditionError("ancilla register is not in |0...0>");
  }
}

double ancilla_fidelity(const StateVector &joint, const RegisterLayout &layout, const StateVector &declared) {
  check_layout(joint, layout);
  if (layout.ancilla_bits == 0) return 1.0;
  if (declared.num_qubits() != layout.ancilla_bits) throw DomainError("declared ancilla state has the wrong width");
  double total = 0.0;
  for (const auto &a : project(joint, layout, declared)) total += std::norm(a);
  return std::min(total, 1.0);
}

Detached detach_ancillas(const StateVector &joint, const RegisterLayout &layout, const StateVector &declared) {
  check_layout(joint, layout);
  if (layout.ancilla_bits == 0) return {joint, 1.0};
  if (declared.num_qubits() != layout.ancilla_bits) throw DomainError("declared ancilla state has the wrong width");
  auto main = project(joint, layout, declared);
  double total = 0.0;
  for (const auto &a : main) total += std::norm(a);
  if (total < 1.0 - kTolerance)
    throw InvariantError("ancilla register left at fidelity " + std::to_string(total) +
                         " with its declared final state");
  return {StateVector::normalized(std::move(main)), std::min(total, 1.0)};
}

Detached detach_clean_ancillas(const StateVector &joint, const RegisterLayout &layout) {
  if (layout.ancilla_bits == 0) return detach_ancillas(joint, layout, joint);
  return detach_ancillas(joint, layout, StateVector::basis(layout.ancilla_bits, 0));
}

std::vector<double> schmidt_coefficients(const StateVector &joint, const RegisterLayout &layout) {
  check_layout(joint, layout);
  const Eigen::Index rows = Eigen::Index{1} << layout.main_bits;
  const Eigen::Index cols = Eigen::Index{1} << layout.ancilla_bits;
  Eigen::MatrixXcd amplitudes(rows, cols);
  for (std::uint64_t index = 0; index < joint.dim(); ++index)
    amplitudes(static_cast<Eigen::Index>(layout.main_of(index)), static_cast<Eigen::Index>(layout.ancilla_of(index))) =
        joint[index];
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(amplitudes);
  const auto &values = svd.singularValues();
  return {values.data(), values.data() + values.size()};
}

StateVector apply_pattern_phase(const StateVector &state, std::uint64_t mask, std::uint64_t pattern, Complex phase) {
  if (std::abs(std::abs(phase) - 1.0) > kTolerance) throw ValidationError("controlled phase is not unit modulus");
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (std::uint64_t index = 0; index < out.size(); ++index) {
    if ((index & mask) == pattern) out[index] *= phase;
  }
  return StateVector(std::move(out));
}

}  // namespace qtk
