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

#include "core/oracle.hpp"

#include <gtest/gtest.h>

#include <thread>

#include "core/errors.hpp"
#include "support/reference.hpp"

using namespace qtk;
using namespace qtk::testing;

namespace {

ClassicalOracle random_table_oracle(int in, int out, Rng &rng) {
  std::vector<std::uint64_t> values(std::size_t{1} << in);
  for (auto &v : values) v = rng.below(std::uint64_t{1} << out);
  return ClassicalOracle::from_table(in, out, values);
}

}  // namespace

TEST(Oracle, eval_checks_domain_and_range) {
  const auto f = ClassicalOracle::from_table(2, 1, {0, 1, 1, 0});
  EXPECT_EQ(f.eval(1), 1u);
  EXPECT_THROW(f.eval(4), DomainError);
  const ClassicalOracle bad(2, 1, [](std::uint64_t x) { return x; });
  EXPECT_EQ(bad.eval(1), 1u);
  EXPECT_THROW(bad.eval(2), InvariantError);
  EXPECT_THROW(ClassicalOracle::from_table(2, 1, {0, 1, 2, 0}), ValidationError);
  EXPECT_THROW(ClassicalOracle::from_table(2, 1, {0, 1}), ValidationError);
}

TEST(Oracle, builtins) {
  EXPECT_EQ(ClassicalOracle::parity(3).table(), (std::vector<std::uint64_t>{0, 1, 1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(ClassicalOracle::hamming_weight(2).table(), (std::vector<std::uint64_t>{0, 1, 1, 2}));
  EXPECT_EQ(ClassicalOracle::marked_item(2, 2).table(), (std::vector<std::uint64_t>{0, 0, 1, 0}));
  EXPECT_EQ(ClassicalOracle::mod(3, 3).table(), (std::vector<std::uint64_t>{0, 1, 2, 0, 1, 2, 0, 1}));
  EXPECT_EQ(ClassicalOracle::bit_of_table(2, {3, 2, 1, 0}, 1).table(), (std::vector<std::uint64_t>{1, 1, 0, 0}));
  EXPECT_EQ(ClassicalOracle::cyclic_shift(2, 1).table(), (std::vector<std::uint64_t>{1, 2, 3, 0}));
  EXPECT_EQ(ClassicalOracle::cyclic_shift(2, -1).table(), (std::vector<std::uint64_t>{3, 0, 1, 2}));
  EXPECT_EQ(ClassicalOracle::bit_reversal(3).table(), (std::vector<std::uint64_t>{0, 4, 2, 6, 1, 5, 3, 7}));
  EXPECT_EQ(ClassicalOracle::xor_mask(2, 3).table(), (std::vector<std::uint64_t>{3, 2, 1, 0}));
  EXPECT_EQ(ClassicalOracle::high_bits(3, 1).table(), (std::vector<std::uint64_t>{0, 0, 1, 1, 2, 2, 3, 3}));
  EXPECT_EQ(ClassicalOracle::constant(2, 2, 3).table(), (std::vector<std::uint64_t>{3, 3, 3, 3}));
  EXPECT_EQ(ClassicalOracle::identity(2).table(), (std::vector<std::uint64_t>{0, 1, 2, 3}));
}

TEST(Oracle, xor_zero_function_is_identity) {
  Rng rng(1);
  const RegisterLayout layout{3, 2};
  const auto psi = StateVector::random(5, rng);
  EXPECT_EQ(amps_of(apply_uf_xor(psi, layout, ClassicalOracle::constant(3, 2, 0))), amps_of(psi));
}

TEST(Oracle, xor_writes_f_into_ancilla) {
  // sum_x a_x |x, 0> -> sum_x a_x |x, f(x)> with f(x) = x on one bit each.
  const Complex a0(0.6, 0.0);
  const Complex a1(0.0, 0.8);
  const StateVector in({a0, a1, 0.0, 0.0});
  const auto out = apply_uf_xor(in, RegisterLayout{1, 1}, ClassicalOracle::identity(1));
  EXPECT_EQ(amps_of(out), (Amps{a0, 0.0, 0.0, a1}));
}

TEST(Oracle, xor_is_an_involution) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(4));
    const int m = 1 + static_cast<int>(rng.below(3));
    const auto f = random_table_oracle(n, m, rng);
    const RegisterLayout layout{n, m};
    const auto psi = StateVector::random(n + m, rng);
    EXPECT_EQ(amps_of(apply_uf_xor(apply_uf_xor(psi, layout, f), layout, f)), amps_of(psi));
  }
}

TEST(Oracle, xor_counts_one_call_per_application) {
  const auto f = ClassicalOracle::parity(3);
  const auto copy = f;
  Rng rng(3);
  const auto psi = StateVector::random(4, rng);
  apply_uf_xor(psi, RegisterLayout{3, 1}, f);
  apply_uf_xor(psi, RegisterLayout{3, 1}, copy);
  f.eval(1);
  EXPECT_EQ(f.calls(), 2u);
  EXPECT_EQ(f.with_output_bits(2).calls(), 2u);
}

TEST(Oracle, call_counter_is_atomic) {
  const auto f = ClassicalOracle::parity(2);
  std::vector<std::thread> workers;
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([f] {
      for (int i = 0; i < 1000; ++i) f.record_call();
    });
  for (auto &w : workers) w.join();
  EXPECT_EQ(f.calls(), 8000u);
}

TEST(Oracle, xor_width_mismatch) {
  Rng rng(4);
  const auto psi = StateVector::random(3, rng);
  EXPECT_THROW(apply_uf_xor(psi, RegisterLayout{2, 1}, ClassicalOracle::hamming_weight(2)), ValidationError);
  EXPECT_THROW(apply_uf_xor(psi, RegisterLayout{1, 2}, ClassicalOracle::parity(2)), ValidationError);
  EXPECT_THROW(apply_uf_xor(psi, RegisterLayout{2, 2}, ClassicalOracle::parity(2)), ValidationError);
}

TEST(Oracle, modadd_examples) {
  Rng rng(5);
  const auto psi = StateVector::random(4, rng);
  const RegisterLayout layout{2, 2};
  EXPECT_EQ(amps_of(apply_uf_modadd(psi, layout, ClassicalOracle::constant(2, 2, 0), 4)), amps_of(psi));

  // |x, 3> + 1 mod 4 -> |x, 0>.
  const auto in = new_basis_state(4, layout.join(2, 3));
  const auto out = apply_uf_modadd(in, layout, ClassicalOracle::constant(2, 1, 1), 4);
  EXPECT_EQ(amps_of(out), amps_of(new_basis_state(4, layout.join(2, 0))));

  const auto f = ClassicalOracle::mod(2, 4);
  EXPECT_EQ(amps_of(apply_uf_modsub(apply_uf_modadd(psi, layout, f, 4), layout, f, 4)), amps_of(psi));
}

TEST(Oracle, modadd_then_add_of_complement_is_identity) {
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(3));
    const std::uint64_t k = std::uint64_t{1} << m;
    const auto f = random_table_oracle(n, m, rng);
    const ClassicalOracle complement(n, m, [f, k](std::uint64_t x) { return (k - f.eval(x)) % k; });
    const RegisterLayout layout{n, m};
    const auto psi = StateVector::random(n + m, rng);
    const auto back = apply_uf_modadd(apply_uf_modadd(psi, layout, f, k), layout, complement, k);
    EXPECT_EQ(amps_of(back), amps_of(psi));
  }
}

TEST(Oracle, modadd_errors) {
  Rng rng(7);
  const auto psi = StateVector::random(4, rng);
  EXPECT_THROW(apply_uf_modadd(psi, RegisterLayout{2, 2}, ClassicalOracle::mod(2, 3), 3), ValidationError);
  EXPECT_THROW(apply_uf_modadd(psi, RegisterLayout{2, 2}, ClassicalOracle::mod(2, 3), 8), ValidationError);
  EXPECT_THROW(apply_uf_modadd(psi, RegisterLayout{3, 1}, ClassicalOracle::mod(3, 4), 2), ValidationError);
}

TEST(Oracle, as_permutation_examples) {
  const RegisterLayout layout{1, 1};
  EXPECT_EQ(as_permutation(OracleTransform::kXor, layout, ClassicalOracle::constant(1, 1, 0)),
            (std::vector<std::uint64_t>{0, 1, 2, 3}));
  // Index x + 2a: |x=1, a=0> (1) -> |1, 1> (3) and |1, 1> (3) -> |1, 0> (1).
  EXPECT_EQ(as_permutation(OracleTransform::kXor, layout, ClassicalOracle::identity(1)),
            (std::vector<std::uint64_t>{0, 3, 2, 1}));
}

TEST(Oracle, as_permutation_matches_state_action) {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const int m = 1 + static_cast<int>(rng.below(2));
    const auto f = random_table_oracle(n, m, rng);
    const RegisterLayout layout{n, m};
    const auto psi = StateVector::random(n + m, rng);
    const std::uint64_t k = std::uint64_t{1} << m;
    EXPECT_EQ(amps_of(apply_permutation_dense(psi, as_permutation(OracleTransform::kXor, layout, f))),
              amps_of(apply_uf_xor(psi, layout, f)));
    EXPECT_EQ(amps_of(apply_permutation_dense(psi, as_permutation(OracleTransform::kModAdd, layout, f))),
              amps_of(apply_uf_modadd(psi, layout, f, k)));
  }
}

TEST(Oracle, both_transforms_are_bijections_exhaustively) {
  Rng rng(9);
  for (int n = 1; n <= 6; ++n) {
    for (int m = 1; n + m <= 12 && m <= 6; ++m) {
      const auto f = random_table_oracle(n, m, rng);
      const RegisterLayout layout{n, m};
      const auto size = std::size_t{1} << (n + m);
      EXPECT_NO_THROW(require_bijection(as_permutation(OracleTransform::kXor, layout, f), size));
      EXPECT_NO_THROW(require_bijection(as_permutation(OracleTransform::kModAdd, layout, f), size));
    }
  }
}

TEST(Oracle, modadd_mod_two_equals_xor) {
  Rng rng(10);
  for (int n = 1; n <= 4; ++n) {
    const auto f = random_table_oracle(n, 1, rng);
    const RegisterLayout layout{n, 1};
    EXPECT_EQ(as_permutation(OracleTransform::kModAdd, layout, f), as_permutation(OracleTransform::kXor, layout, f));
  }
}

TEST(Oracle, as_permutation_flags_broken_oracle) {
  // Values do not fit the one-bit ancilla, so the induced map leaves the space.
  const ClassicalOracle wide(1, 2, [](std::uint64_t) { return 2; });
  EXPECT_THROW(as_permutation(OracleTransform::kXor, RegisterLayout{1, 1}, wide), InvariantError);
}

TEST(RegisterLayout, join_and_split) {
  const RegisterLayout layout{3, 2};
  EXPECT_EQ(layout.total_bits(), 5);
  EXPECT_EQ(layout.join(5, 2), 5u + (2u << 3));
  EXPECT_EQ(layout.main_of(layout.join(5, 2)), 5u);
  EXPECT_EQ(layout.ancilla_of(layout.join(5, 2)), 2u);
}
