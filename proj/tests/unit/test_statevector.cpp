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

#include <gtest/gtest.h>

#include <cmath>

#include "core/errors.hpp"
#include "support/reference.hpp"

using namespace qtk;
using namespace qtk::testing;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

StateVector plus() { return StateVector({kS, kS}); }

}  // namespace

TEST(StateVector, basis_states) {
  EXPECT_EQ(amps_of(new_basis_state(1, 0)), (Amps{1.0, 0.0}));
  EXPECT_EQ(amps_of(new_basis_state(2, 3)), (Amps{0.0, 0.0, 0.0, 1.0}));
  const auto s = new_basis_state(3, 5);
  for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(s[x], x == 5 ? Complex(1.0) : Complex(0.0));
  EXPECT_THROW(new_basis_state(2, 4), DomainError);
}

TEST(StateVector, constructor_rejects_bad_input) {
  EXPECT_THROW(StateVector({1.0, 0.0, 0.0}), ValidationError);
  EXPECT_THROW(StateVector({1.0}), ValidationError);
  EXPECT_THROW(StateVector({1.0, 1.0}), ValidationError);
  EXPECT_THROW(StateVector({NAN, 0.0}), ValidationError);
}

TEST(StateVector, hadamard_identity_and_z) {
  const auto h = apply_single_qubit(new_basis_state(1, 0), 0, SingleQubitGate::hadamard());
  EXPECT_LT(max_abs_diff(amps_of(h), {kS, kS}), 1e-12);

  Rng rng(3);
  const auto psi = StateVector::random(3, rng);
  for (int q = 0; q < 3; ++q)
    EXPECT_EQ(amps_of(apply_single_qubit(psi, q, SingleQubitGate::identity())), amps_of(psi));

  const auto z = apply_single_qubit(plus(), 0, SingleQubitGate::phase(-1.0));
  EXPECT_LT(max_abs_diff(amps_of(z), {kS, -kS}), 1e-12);
}

TEST(StateVector, gate_errors) {
  EXPECT_THROW(SingleQubitGate({1.0, 1.0, 0.0, 1.0}), ValidationError);
  EXPECT_THROW(SingleQubitGate::phase(2.0), ValidationError);
  EXPECT_THROW(apply_single_qubit(plus(), 1, SingleQubitGate::hadamard()), DomainError);
}

TEST(StateVector, single_qubit_gate_matches_kronecker_matrix) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const auto u = random_unitary(2, rng);
    const SingleQubitGate gate({u(0, 0), u(0, 1), u(1, 0), u(1, 1)});
    Eigen::MatrixXcd full = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = n - 1; k >= 0; --k) {
      const Eigen::MatrixXcd factor = k == q ? u : Eigen::MatrixXcd::Identity(2, 2);
      Eigen::MatrixXcd next(full.rows() * 2, full.cols() * 2);
      for (Eigen::Index i = 0; i < full.rows(); ++i)
        for (Eigen::Index j = 0; j < full.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = full(i, j) * factor;
      full = next;
    }
    const auto psi = StateVector::random(n, rng);
    const auto expected = from_eigen(full * to_eigen(psi));
    EXPECT_LT(max_abs_diff(amps_of(apply_single_qubit(psi, q, gate)), amps_of(expected)), 1e-12);
  }
}

TEST(StateVector, norm_preserved_and_adjoint_round_trip) {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const auto psi = StateVector::random(n, rng);
    const auto u = random_unitary(2, rng);
    const SingleQubitGate gate({u(0, 0), u(0, 1), u(1, 0), u(1, 1)});
    const int q = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const auto out = apply_single_qubit(psi, q, gate);
    EXPECT_NEAR(out.norm_squared(), 1.0, 1e-9);
    EXPECT_GE(fidelity_up_to_global_phase(apply_single_qubit(out, q, gate.adjoint()), psi), 1.0 - 1e-9);
  }
}

TEST(StateVector, dense_diagonal) {
  Rng rng(8);
  const auto psi = StateVector::random(2, rng);
  EXPECT_EQ(amps_of(apply_diagonal_dense(psi, Amps(4, 1.0))), amps_of(psi));
  EXPECT_LT(max_abs_diff(amps_of(apply_diagonal_dense(plus(), Amps{1.0, -1.0})), {kS, -kS}), 1e-12);

  const auto phi = StateVector::random(3, rng);
  const auto d = random_phases(8, rng);
  const auto out = apply_diagonal_dense(phi, d);
  for (std::size_t x = 0; x < 8; ++x) EXPECT_EQ(out[x], d[x] * phi[x]);

  EXPECT_THROW(apply_diagonal_dense(plus(), Amps{1.0}), ValidationError);
  EXPECT_THROW(apply_diagonal_dense(plus(), Amps{1.0, 0.5}), ValidationError);
}

TEST(StateVector, dense_permutation) {
  Rng rng(9);
  const auto psi = StateVector::random(3, rng);
  const std::vector<std::uint64_t> identity{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(amps_of(apply_permutation_dense(psi, identity)), amps_of(psi));
  const std::vector<std::uint64_t> swap01{1, 0};
  EXPECT_EQ(amps_of(apply_permutation_dense(new_basis_state(1, 0), swap01)), amps_of(new_basis_state(1, 1)));

  const auto perm = random_permutation(8, rng);
  const auto out = apply_permutation_dense(psi, perm);
  const auto expected = from_eigen(permutation_matrix(perm) * to_eigen(psi));
  EXPECT_LT(max_abs_diff(amps_of(out), amps_of(expected)), 1e-15);

  const std::vector<std::uint64_t> repeated{0, 0, 1, 2, 3, 4, 5, 6};
  EXPECT_THROW(apply_permutation_dense(psi, repeated), ValidationError);
}

TEST(StateVector, fidelity) {
  Rng rng(1);
  const auto psi = StateVector::random(3, rng);
  EXPECT_NEAR(fidelity_up_to_global_phase(psi, psi), 1.0, 1e-12);
  Amps rotated = amps_of(psi);
  for (auto &a : rotated) a *= Complex(0.0, 1.0);
  EXPECT_NEAR(fidelity_up_to_global_phase(psi, StateVector(rotated)), 1.0, 1e-12);
  EXPECT_EQ(fidelity_up_to_global_phase(new_basis_state(1, 0), new_basis_state(1, 1)), 0.0);
  EXPECT_THROW(fidelity_up_to_global_phase(new_basis_state(1, 0), new_basis_state(2, 0)), DomainError);
}

TEST(StateVector, measure_deterministic) {
  Rng rng(2);
  const auto m = measure_qubit(new_basis_state(1, 0), 0, rng);
  EXPECT_EQ(m.bit, 0);
  EXPECT_EQ(amps_of(m.state), (Amps{1.0, 0.0}));
  EXPECT_THROW(measure_qubit(new_basis_state(1, 0), 1, rng), DomainError);
}

TEST(StateVector, measure_frequencies_follow_born_rule) {
  Rng rng(20240601);
  int ones = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) ones += measure_qubit(plus(), 0, rng).bit;
  EXPECT_NEAR(static_cast<double>(ones) / trials, 0.5, 0.02);
}

TEST(StateVector, measure_projects_and_renormalizes) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto psi = StateVector::random(3, rng);
    const int q = static_cast<int>(rng.below(3));
    const auto m = measure_qubit(psi, q, rng);
    Amps projected = amps_of(psi);
    double weight = 0.0;
    for (std::size_t x = 0; x < projected.size(); ++x) {
      if (static_cast<int>((x >> q) & 1) != m.bit) projected[x] = 0.0;
      weight += std::norm(projected[x]);
    }
    for (auto &a : projected) a /= std::sqrt(weight);
    EXPECT_NEAR(m.state.norm_squared(), 1.0, 1e-9);
    EXPECT_NEAR(fidelity_up_to_global_phase(m.state, StateVector(projected)), 1.0, 1e-9);
  }
}

TEST(StateVector, measurement_is_seed_deterministic) {
  Rng a(77);
  Rng b(77);
  Rng shared(0);
  const auto psi = StateVector::random(4, shared);
  for (int t = 0; t < 200; ++t) {
    const int q = t % 4;
    EXPECT_EQ(measure_qubit(psi, q, a).bit, measure_qubit(psi, q, b).bit);
  }
}

TEST(StateVector, tensor) {
  EXPECT_EQ(amps_of(tensor(new_basis_state(1, 0), new_basis_state(1, 0))), amps_of(new_basis_state(2, 0)));
  EXPECT_LT(max_abs_diff(amps_of(tensor(plus(), new_basis_state(1, 1))), {0.0, kS, 0.0, kS}), 1e-12);
  Rng rng(6);
  const auto a = StateVector::random(2, rng);
  const auto b = StateVector::random(1, rng);
  EXPECT_LT(max_abs_diff(amps_of(tensor(a, b)), kron(amps_of(a), amps_of(b))), 1e-15);
}

TEST(Rng, below_stays_in_range_and_uniform_in_unit_interval) {
  Rng rng(123);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(rng.below(7), 7u);
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_EQ(Rng(5).next(), Rng(5).next());
}
