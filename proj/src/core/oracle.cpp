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

#include <algorithm>
#include <bit>
#include <string>

#include "core/errors.hpp"

namespace qtk {
namespace {

constexpr int kMaxOracleBits = 40;

int bits_to_hold(std::uint64_t max_value) { return std::max(1, static_cast<int>(std::bit_width(max_value))); }

std::uint64_t mask_of(int bits) { return (std::uint64_t{1} << bits) - 1; }

void check_state(const StateVector &state, const RegisterLayout &layout) {
  if (layout.main_bits < 1 || layout.ancilla_bits < 0)
    throw ValidationError("register layout needs main_bits >= 1 and ancilla_bits >= 0");
  if (state.num_qubits() != layout.total_bits())
    throw ValidationError("state has " + std::to_string(state.num_qubits()) + " qubits but layout spans " +
                          std::to_string(layout.total_bits()));
}

}  // namespace

ClassicalOracle::ClassicalOracle(int input_bits, int output_bits, Function fn, std::string name)
    : input_bits_(input_bits),
      output_bits_(output_bits),
      fn_(std::make_shared<const Function>(std::move(fn))),
      name_(std::make_shared<const std::string>(std::move(name))),
      calls_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (input_bits < 1 || input_bits > kMaxOracleBits) throw ValidationError("oracle input_bits out of range");
  if (output_bits < 0 || output_bits > kMaxOracleBits) throw ValidationError("oracle output_bits out of range");
  if (!*fn_) throw ValidationError("oracle function is empty");
}

std::uint64_t ClassicalOracle::eval(std::uint64_t x) const {
  if (x >= domain_size())
    throw DomainError("oracle '" + name() + "' evaluated outside its domain at " + std::to_string(x));
  const std::uint64_t y = (*fn_)(x);
  if (y > mask_of(output_bits_))
    throw InvariantError("oracle '" + name() + "' returned " + std::to_string(y) + " which exceeds " +
                         std::to_string(output_bits_) + " output bits");
  return y;
}

std::vector<std::uint64_t> ClassicalOracle::table() const {
  std::vector<std::uint64_t> out(domain_size());
  for (std::uint64_t x = 0; x < out.size(); ++x) out[x] = eval(x);
  return out;
}

ClassicalOracle ClassicalOracle::with_output_bits(int output_bits) const {
  if (output_bits < 0 || output_bits > kMaxOracleBits) throw ValidationError("oracle output_bits out of range");
  ClassicalOracle copy = *this;
  copy.output_bits_ = output_bits;
  return copy;
}

ClassicalOracle ClassicalOracle::from_table(int input_bits, int output_bits, std::vector<std::uint64_t> values) {
  if (input_bits < 1 || input_bits > 24) throw ValidationError("table oracle input_bits must be in [1, 24]");
  if (values.size() != (std::size_t{1} << input_bits))
    throw ValidationError("table oracle needs exactly 2^input_bits values, got " + std::to_string(values.size()));
  for (auto v : values) {
    if (v > mask_of(output_bits)) throw ValidationError("table value " + std::to_string(v) + " exceeds output_bits");
  }
  auto shared = std::make_shared<const std::vector<std::uint64_t>>(std::move(values));
  return ClassicalOracle(input_bits, output_bits, [shared](std::uint64_t x) { return (*shared)[x]; }, "table");
}

ClassicalOracle ClassicalOracle::identity(int bits) {
  return ClassicalOracle(bits, bits, [](std::uint64_t x) { return x; }, "identity");
}

ClassicalOracle ClassicalOracle::constant(int input_bits, int output_bits, std::uint64_t value) {
  return ClassicalOracle(input_bits, output_bits, [value](std::uint64_t) { return value; }, "constant");
}

ClassicalOracle ClassicalOracle::parity(int input_bits) {
  return ClassicalOracle(
      input_bits, 1, [](std::uint64_t x) { return static_cast<std::uint64_t>(std::popcount(x) & 1); }, "parity");
}

ClassicalOracle ClassicalOracle::hamming_weight(int input_bits) {
  return ClassicalOracle(
      input_bits, bits_to_hold(static_cast<std::uint64_t>(input_bits)),
      [](std::uint64_t x) { return static_cast<std::uint64_t>(std::popcount(x)); }, "hamming_weight");
}

ClassicalOracle ClassicalOracle::marked_item(int input_bits, std::uint64_t target) {
  if (input_bits < 64 && target >= (std::uint64_t{1} << input_bits))
    throw ValidationError("marked item lies outside the oracle domain");
  return ClassicalOracle(
      input_bits, 1, [target](std::uint64_t x) { return std::uint64_t{x == target}; }, "marked_item");
}

ClassicalOracle ClassicalOracle::mod(int input_bits, std::uint64_t modulus) {
  if (modulus == 0) throw ValidationError("mod oracle needs a positive modulus");
  return ClassicalOracle(
      input_bits, bits_to_hold(modulus - 1), [modulus](std::uint64_t x) { return x % modulus; }, "mod");
}

ClassicalOracle ClassicalOracle::bit_of_table(int input_bits, std::vector<std::uint64_t> table, int bit) {
  if (table.size() != (std::size_t{1} << input_bits)) throw ValidationError("bit_of_table needs 2^input_bits entries");
  if (bit < 0 || bit > 63) throw ValidationError("bit_of_table bit index out of range");
  auto shared = std::make_shared<const std::vector<std::uint64_t>>(std::move(table));
  return ClassicalOracle(
      input_bits, 1, [shared, bit](std::uint64_t x) { return ((*shared)[x] >> bit) & 1; }, "bit_of_table");
}

ClassicalOracle ClassicalOracle::cyclic_shift(int bits, std::int64_t shift) {
  const std::uint64_t size = std::uint64_t{1} << bits;
  const auto offset = static_cast<std::uint64_t>(((shift % static_cast<std::int64_t>(size)) +
                                                  static_cast<std::int64_t>(size)) %
                                                 static_cast<std::int64_t>(size));
  return ClassicalOracle(
      bits, bits, [offset, size](std::uint64_t x) { return (x + offset) & (size - 1); }, "cyclic_shift");
}

ClassicalOracle ClassicalOracle::bit_reversal(int bits) {
  return ClassicalOracle(
      bits, bits,
      [bits](std::uint64_t x) {
        std::uint64_t y = 0;
        for (int b = 0; b < bits; ++b) y |= ((x >> b) & 1) << (bits - 1 - b);
        return y;
      },
      "bit_reversal");
}

ClassicalOracle ClassicalOracle::xor_mask(int bits, std::uint64_t mask) {
  if (mask > mask_of(bits)) throw ValidationError("xor mask wider than the register");
  return ClassicalOracle(bits, bits, [mask](std::uint64_t x) { return x ^ mask; }, "xor_mask");
}

ClassicalOracle ClassicalOracle::high_bits(int input_bits, int shift) {
  if (shift < 0 || shift >= input_bits) throw ValidationError("high_bits shift must be in [0, input_bits)");
  return ClassicalOracle(
      input_bits, input_bits - shift, [shift](std::uint64_t x) { return x >> shift; }, "high_bits");
}

StateVector apply_uf_xor(const StateVector &state, const RegisterLayout &layout, const ClassicalOracle &f) {
  check_state(state, layout);
  if (f.input_bits() != layout.main_bits || f.output_bits() > layout.ancilla_bits)
    throw ValidationError("oracle '" + f.name() + "' (" + std::to_string(f.input_bits()) + " -> " +
                          std::to_string(f.output_bits()) + " bits) does not fit the register layout");
  const auto values = f.table();
  f.record_call();
  std::vector<Complex> out(state.dim());
  for (std::uint64_t index = 0; index < state.dim(); ++index) {
    const std::uint64_t x = layout.main_of(index);
    out[layout.join(x, layout.ancilla_of(index) ^ values[x])] = state[index];
  }
  return StateVector(std::move(out));
}

StateVector apply_uf_xor_into_main(const StateVector &state, const RegisterLayout &layout,
                                   const ClassicalOracle &f) {
  check_state(state, layout);
  if (f.input_bits() != layout.ancilla_bits || f.output_bits() > layout.main_bits)
    throw ValidationError("oracle '" + f.name() + "' does not fit the reversed register layout");
  const auto values = f.table();
  f.record_call();
  std::vector<Complex> out(state.dim());
  for (std::uint64_t index = 0; index < state.dim(); ++index) {
    const std::uint64_t a = layout.ancilla_of(index);
    out[layout.join(layout.main_of(index) ^ values[a], a)] = state[index];
  }
  return StateVector(std::move(out));
}

namespace {

StateVector modular_shift(const StateVector &state, const RegisterLayout &layout, const ClassicalOracle &f,
                          std::uint64_t modulus, int offset_bits, bool subtract) {
  check_state(state, layout);
  if (layout.ancilla_bits < 1 || modulus != (std::uint64_t{1} << layout.ancilla_bits))
    throw ValidationError("modulus " + std::to_string(modulus) + " must equal 2^ancilla_bits");
  if (offset_bits < 0 || offset_bits >= layout.ancilla_bits)
    throw ValidationError("offset_bits must be in [0, ancilla_bits)");
  if (f.input_bits() != layout.main_bits) throw ValidationError("oracle input width does not match main register");
  auto values = f.table();
  const std::uint64_t range = modulus >> offset_bits;
  for (auto &v : values) {
    if (v >= range) throw ValidationError("oracle value " + std::to_string(v) + " outside {0.." +
                                          std::to_string(range - 1) + "}");
    v <<= offset_bits;
  }
  f.record_call();
  std::vector<Complex> out(state.dim());
  for (std::uint64_t index = 0; index < state.dim(); ++index) {
    const std::uint64_t x = layout.main_of(index);
    const std::uint64_t a = layout.ancilla_of(index);
    const std::uint64_t shifted = subtract ? (a + modulus - values[x]) % modulus : (a + values[x]) % modulus;
    out[layout.join(x, shifted)] = state[index];
  }
  return StateVector(std::move(out));
}

}  // namespace

StateVector apply_uf_modadd(const StateVector &state, const RegisterLayout &layout, const ClassicalOracle &f,
                            std::uint64_t modulus, int offset_bits) {
  return modular_shift(state, layout, f, modulus, offset_bits, false);
}

StateVector apply_uf_modsub(const StateVector &state, const RegisterLayout &layout, const ClassicalOracle &f,
                            std::uint64_t modulus, int offset_bits) {
  return modular_shift(state, layout, f, modulus, offset_bits, true);
}

std::vector<std::uint64_t> as_permutation(OracleTransform kind, const RegisterLayout &layout,
                                          const ClassicalOracle &f) {
  if (layout.total_bits() > 30) throw DomainError("as_permutation is limited to 30 combined qubits");
  if (f.input_bits() != layout.main_bits) throw ValidationError("oracle input width does not match main register");
  const std::uint64_t size = std::uint64_t{1} << layout.total_bits();
  const std::uint64_t modulus = std::uint64_t{1} << layout.ancilla_bits;
  std::vector<std::uint64_t> perm(size);
  for (std::uint64_t index = 0; index < size; ++index) {
    const std::uint64_t x = index & layout.main_mask();
    const std::uint64_t a = index >> layout.main_bits;
    const std::uint64_t fx = f.eval(x);
    const std::uint64_t image = kind == OracleTransform::kXor ? (a ^ fx) : (a + fx) % modulus;
    perm[index] = x | (image << layout.main_bits);
  }
  try {
    require_bijection(perm, size);
  } catch (const ValidationError &) {
    throw InvariantError("oracle transform for '" + f.name() + "' is not a basis permutation");
  }
  return perm;
}

}  // namespace qtk
