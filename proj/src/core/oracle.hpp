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

#include <atomic>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "core/statevector.hpp"

namespace qtk {

/// A classical total function {0..2^input_bits-1} -> {0..2^output_bits-1}.
///
/// Copies share both the function and the call counter, so a copy handed to
/// a synthesis routine tallies against the same oracle. eval() is classical
/// and never counted; record_call() is bumped once per coherent application
/// over a whole register.
class ClassicalOracle {
 public:
  using Function = std::function<std::uint64_t(std::uint64_t)>;

  ClassicalOracle(int input_bits, int output_bits, Function fn, std::string name = "function");

  static ClassicalOracle from_table(int input_bits, int output_bits, std::vector<std::uint64_t> values);

  // Builtins.
  static ClassicalOracle identity(int bits);
  static ClassicalOracle constant(int input_bits, int output_bits, std::uint64_t value);
  static ClassicalOracle parity(int input_bits);
  static ClassicalOracle hamming_weight(int input_bits);
  static ClassicalOracle marked_item(int input_bits, std::uint64_t target);
  /// x mod modulus, with just enough output bits to hold modulus-1.
  static ClassicalOracle mod(int input_bits, std::uint64_t modulus);
  static ClassicalOracle bit_of_table(int input_bits, std::vector<std::uint64_t> table, int bit);
  static ClassicalOracle cyclic_shift(int bits, std::int64_t shift);
  static ClassicalOracle bit_reversal(int bits);
  static ClassicalOracle xor_mask(int bits, std::uint64_t mask);
  /// x >> shift, i.e. the index of the aligned 2^shift-sized block holding x.
  static ClassicalOracle high_bits(int input_bits, int shift);

  int input_bits() const { return input_bits_; }
  int output_bits() const { return output_bits_; }
  std::uint64_t domain_size() const { return std::uint64_t{1} << input_bits_; }
  const std::string &name() const { return *name_; }

  /// Throws DomainError for x outside the domain and InvariantError when
  /// the function leaves its declared range.
  std::uint64_t eval(std::uint64_t x) const;
  /// eval() over the whole domain.
  std::vector<std::uint64_t> table() const;

  /// Same function and call counter with a different declared output
  /// width. eval() still rejects values that do not fit.
  ClassicalOracle with_output_bits(int output_bits) const;

  void record_call() const { calls_->fetch_add(1, std::memory_order_relaxed); }
  std::uint64_t calls() const { return calls_->load(std::memory_order_relaxed); }

 private:
  int input_bits_;
  int output_bits_;
  std::shared_ptr<const Function> fn_;
  std::shared_ptr<const std::string> name_;
  std::shared_ptr<std::atomic<std::uint64_t>> calls_;
};

/// Main register on qubits 0..main_bits-1, ancilla on the next ancilla_bits.
struct RegisterLayout {
  int main_bits = 0;
  int ancilla_bits = 0;

  int total_bits() const { return main_bits + ancilla_bits; }
  std::uint64_t main_mask() const { return (std::uint64_t{1} << main_bits) - 1; }
  std::uint64_t ancilla_mask() const { return (std::uint64_t{1} << ancilla_bits) - 1; }
  std::uint64_t main_of(std::uint64_t index) const { return index & main_mask(); }
  std::uint64_t ancilla_of(std::uint64_t index) const { return (index >> main_bits) & ancilla_mask(); }
  std::uint64_t join(std::uint64_t main, std::uint64_t ancilla) const { return main | (ancilla << main_bits); }
};

/// |x, a> -> |x, a XOR f(x)>. One oracle call.
StateVector apply_uf_xor(const StateVector &state, const RegisterLayout &layout, const ClassicalOracle &f);

/// |x, a> -> |x XOR f(a), a>: the same transform with the ancilla register
/// as the oracle's input. One oracle call.
StateVector apply_uf_xor_into_main(const StateVector &state, const RegisterLayout &layout,
                                   const ClassicalOracle &f);

/// |x, a> -> |x, (a + f(x)) mod k> with k = 2^ancilla_bits. One oracle call.
///
/// With offset_bits = s the sum is a + f(x) * 2^s, which is modular addition
/// of f into the top ancilla_bits - s qubits alone; f must then fit in
/// those qubits.
StateVector apply_uf_modadd(const StateVector &state, const RegisterLayout &layout, const ClassicalOracle &f,
                            std::uint64_t modulus, int offset_bits = 0);

/// |x, a> -> |x, (a - f(x)) mod k>, the inverse of apply_uf_modadd.
StateVector apply_uf_modsub(const StateVector &state, const RegisterLayout &layout, const ClassicalOracle &f,
                            std::uint64_t modulus, int offset_bits = 0);

enum class OracleTransform { kXor, kModAdd };

/// Basis permutation induced by the given transform on the combined
/// main+ancilla register. Throws InvariantError if it is not a bijection.
std::vector<std::uint64_t> as_permutation(OracleTransform kind, const RegisterLayout &layout,
                                          const ClassicalOracle &f);

}  // namespace qtk
