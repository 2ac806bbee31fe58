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

#include "core/diagonal.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "core/errors.hpp"

namespace qtk {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit(double turns) { return std::polar(1.0, kTwoPi * turns); }

/// Oracle call accounting by counter deltas over the oracles a method uses.
class CallTally {
 public:
  void watch(const ClassicalOracle &f) { watched_.emplace_back(f, f.calls()); }
  std::int64_t calls() const {
    std::int64_t total = 0;
    for (const auto &[oracle, start] : watched_) total += static_cast<std::int64_t>(oracle.calls() - start);
    return total;
  }

 private:
  std::vector<std::pair<ClassicalOracle, std::uint64_t>> watched_;
};

/// A joint state being driven gate by gate, counting elementary ops.
struct Circuit {
  Circuit(StateVector j, RegisterLayout l) : joint(std::move(j)), layout(l) {}

  StateVector joint;
  RegisterLayout layout;
  std::int64_t ops = 0;
  std::int64_t measurements = 0;
  std::vector<int> outcomes;

  void gate(int qubit, const SingleQubitGate &g) {
    joint = apply_single_qubit(joint, qubit, g);
    ++ops;
  }
  int ancilla(int j = 0) const { return layout.main_bits + j; }
};

void require_boolean(const ClassicalOracle &f, int main_bits, const char *what) {
  if (f.input_bits() != main_bits)
    throw ValidationError(std::string(what) + " oracle takes " + std::to_string(f.input_bits()) +
                          " bits but the register has " + std::to_string(main_bits));
  for (std::uint64_t x = 0; x < f.domain_size(); ++x) {
    if (f.eval(x) > 1) throw ValidationError(std::string(what) + " oracle is not boolean at x = " + std::to_string(x));
  }
}

void require_unit(const Complex &z, const char *what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(std::abs(z) - 1.0) > kTolerance)
    throw ValidationError(std::string(what) + " is not a unit-modulus complex number");
}

bool is_power_of_two(std::uint64_t k) { return k >= 2 && std::has_single_bit(k); }

/// Ancilla |0> -> (|0> - |1>)/sqrt2, U_f, and back to |0>.
void sign_change_step(Circuit &c, const ClassicalOracle &f) {
  c.gate(c.ancilla(), SingleQubitGate::pauli_x());
  c.gate(c.ancilla(), SingleQubitGate::hadamard());
  c.joint = apply_uf_xor(c.joint, c.layout, f);
  c.gate(c.ancilla(), SingleQubitGate::hadamard());
  c.gate(c.ancilla(), SingleQubitGate::pauli_x());
}

/// Gates taking |0...0> on log2(k) qubits to the root register R: qubit j
/// carries (|0> + omega^(-2^j)|1>)/sqrt2.
std::vector<std::pair<int, SingleQubitGate>> root_register_gates(std::uint64_t k) {
  const int m = std::countr_zero(k);
  std::vector<std::pair<int, SingleQubitGate>> gates;
  for (int j = 0; j < m; ++j) {
    gates.emplace_back(j, SingleQubitGate::hadamard());
    gates.emplace_back(j, SingleQubitGate::phase(unit(-static_cast<double>(std::uint64_t{1} << j) /
                                                      static_cast<double>(k))));
  }
  return gates;
}

Outcome finish(Circuit &&c, const CallTally &tally, std::string method, std::map<std::string, std::int64_t> params,
               const StateVector &declared_ancilla) {
  ResourceReport report;
  report.method = std::move(method);
  report.params = std::move(params);
  report.oracle_calls = tally.calls();
  report.ancilla_qubits = c.layout.ancilla_bits;
  report.elementary_ops = c.ops;
  report.measurements = c.measurements;
  auto detached = detach_ancillas(c.joint, c.layout, declared_ancilla);
  return Outcome{std::move(detached.main), std::move(c.joint), c.layout, std::move(report), detached.fidelity,
                 std::move(c.outcomes)};
}

StateVector zero_register(int bits) { return StateVector::basis(bits, 0); }

}  // namespace

std::pair<StateVector, ResourceReport> synthesize_naive_registers(const StateVector &joint,
                                                                  const RegisterLayout &layout,
                                                                  const ExplicitPhases &spec) {
  if (layout.ancilla_bits != 1) throw ValidationError("naive synthesis uses exactly one ancilla qubit");
  require_clean_ancillas(joint, layout);
  const std::uint64_t size = std::uint64_t{1} << layout.main_bits;
  if (spec.phases.size() != size)
    throw ValidationError("expected " + std::to_string(size) + " phases, got " + std::to_string(spec.phases.size()));
  for (const auto &d : spec.phases) require_unit(d, "phase");

  Circuit c{joint, layout};
  std::int64_t calls = 0;
  for (std::uint64_t y = 0; y < size; ++y) {
    const auto delta = ClassicalOracle::marked_item(layout.main_bits, y);
    c.joint = apply_uf_xor(c.joint, layout, delta);
    c.gate(c.ancilla(), SingleQubitGate::phase(spec.phases[y]));
    c.joint = apply_uf_xor(c.joint, layout, delta);
    calls += static_cast<std::int64_t>(delta.calls());
  }
  ResourceReport report;
  report.method = "naive";
  report.params = {{"n", layout.main_bits}};
  report.oracle_calls = calls;
  report.ancilla_qubits = 1;
  report.elementary_ops = c.ops;
  return {std::move(c.joint), std::move(report)};
}

Outcome synthesize_naive(const StateVector &state, const ExplicitPhases &spec) {
  const RegisterLayout layout{state.num_qubits(), 1};
  auto [joint, report] = synthesize_naive_registers(attach_ancillas(state, 1), layout, spec);
  auto detached = detach_clean_ancillas(joint, layout);
  return Outcome{std::move(detached.main), std::move(joint), layout, std::move(report), detached.fidelity, {}};
}

Outcome apply_distinct_phases(const StateVector &state, const DistinctPhases &spec) {
  const int n = state.num_qubits();
  const std::uint64_t r = spec.table.size();
  if (r == 0) throw ValidationError("distinct-phase table is empty");
  for (const auto &p : spec.table) require_unit(p, "distinct phase");
  if (spec.f.input_bits() != n) throw ValidationError("selector oracle width does not match the register");
  for (std::uint64_t x = 0; x < spec.f.domain_size(); ++x) {
    const auto v = spec.f.eval(x);
    if (v >= r)
      throw ValidationError("oracle value " + std::to_string(v) + " at x = " + std::to_string(x) +
                            " has no entry in a table of " + std::to_string(r) + " phases");
  }
  // P is padded to k = 2^m entries with 1.
  const std::uint64_t k = std::max<std::uint64_t>(2, std::bit_ceil(r));
  const int m = std::countr_zero(k);
  const auto f = spec.f.with_output_bits(m);

  CallTally tally;
  tally.watch(f);
  Circuit c{attach_ancillas(state, m), RegisterLayout{n, m}};
  c.joint = apply_uf_xor(c.joint, c.layout, f);
  const std::uint64_t ancilla_mask = c.layout.ancilla_mask() << n;
  for (std::uint64_t h = 0; h < r; ++h) {
    c.joint = apply_pattern_phase(c.joint, ancilla_mask, h << n, spec.table[h]);
    ++c.ops;
  }
  c.joint = apply_uf_xor(c.joint, c.layout, f);
  return finish(std::move(c), tally, "distinct", {{"n", n}, {"r", static_cast<std::int64_t>(r)}}, zero_register(m));
}

Outcome apply_sign_change(const StateVector &state, const ClassicalOracle &f) {
  const int n = state.num_qubits();
  require_boolean(f, n, "sign-change");
  CallTally tally;
  tally.watch(f);
  Circuit c{attach_ancillas(state, 1), RegisterLayout{n, 1}};
  sign_change_step(c, f);
  return finish(std::move(c), tally, "sign", {{"n", n}}, zero_register(1));
}

Outcome apply_gamma_ancilla(const StateVector &state, const ClassicalOracle &f, Complex gamma) {
  const int n = state.num_qubits();
  require_boolean(f, n, "gamma");
  require_unit(gamma, "gamma");
  CallTally tally;
  tally.watch(f);
  Circuit c{attach_ancillas(state, 1), RegisterLayout{n, 1}};
  c.gate(c.ancilla(), SingleQubitGate::hadamard());
  c.gate(c.ancilla(), SingleQubitGate::phase(gamma));
  const double s = std::numbers::sqrt2 / 2.0;
  const StateVector prepared(std::vector<Complex>{s, s * gamma});
  c.joint = apply_uf_xor(c.joint, c.layout, f);

  ResourceReport report;
  report.method = "gamma";
  report.params = {{"n", n}};
  report.oracle_calls = tally.calls();
  report.ancilla_qubits = 1;
  report.elementary_ops = c.ops;
  const double fidelity = ancilla_fidelity(c.joint, c.layout, prepared);
  return Outcome{state, std::move(c.joint), c.layout, std::move(report), fidelity, {}};
}

Outcome apply_root2m_rotation(const StateVector &state, const ClassicalOracle &f, int m, Rng &rng) {
  if (m < 1 || m > 62) throw DomainError("root rotation needs 1 <= m <= 62");
  const int n = state.num_qubits();
  require_boolean(f, n, "root-rotation");
  CallTally tally;
  tally.watch(f);
  Circuit c{attach_ancillas(state, 1), RegisterLayout{n, 1}};

  // Level j rotates X_1 by exp(2 pi i / 2^j). Measuring 1 leaves X_1 rotated
  // the wrong way, which the next level fixes by rotating twice as far.
  for (int level = m;; --level) {
    if (level == 1) {
      sign_change_step(c, f);
      break;
    }
    c.gate(c.ancilla(), SingleQubitGate::hadamard());
    c.gate(c.ancilla(), SingleQubitGate::phase(unit(1.0 / static_cast<double>(std::uint64_t{1} << level))));
    c.joint = apply_uf_xor(c.joint, c.layout, f);
    auto measured = measure_qubit(c.joint, c.ancilla(), rng);
    ++c.measurements;
    c.outcomes.push_back(measured.bit);
    c.joint = std::move(measured.state);
    if (measured.bit == 0) break;
    c.gate(c.ancilla(), SingleQubitGate::pauli_x());
  }
  return finish(std::move(c), tally, "root2m", {{"n", n}, {"m", m}}, zero_register(1));
}

Fraction expected_calls_root2m(int m) {
  if (m < 1 || m > 63) throw DomainError("expected_calls_root2m needs 1 <= m <= 63");
  // E(m) = (2^m - 1) / 2^(m-1).
  const std::uint64_t denominator = std::uint64_t{1} << (m - 1);
  return {2 * denominator - 1, denominator};
}

double quoted_closed_form_calls(int m) {
  if (m < 1 || m > 63) throw DomainError("quoted_closed_form_calls needs 1 <= m <= 63");
  return (std::ldexp(1.0, m - 1) - 1.0) / std::ldexp(1.0, m - 2);
}

RootRegister prepare_root_register(std::uint64_t k) {
  if (!is_power_of_two(k) || k > (std::uint64_t{1} << 30))
    throw DomainError("root register size must be a power of two in [2, 2^30]");
  StateVector state = StateVector::basis(std::countr_zero(k), 0);
  std::int64_t ops = 0;
  for (const auto &[qubit, gate] : root_register_gates(k)) {
    state = apply_single_qubit(state, qubit, gate);
    ++ops;
  }
  return {std::move(state), ops};
}

Outcome apply_kth_root(const StateVector &state, const ClassicalOracle &f, std::uint64_t k) {
  if (!is_power_of_two(k) || k > (std::uint64_t{1} << 30))
    throw DomainError("k must be a power of two in [2, 2^30]");
  const int n = state.num_qubits();
  const int m = std::countr_zero(k);
  if (f.input_bits() != n) throw ValidationError("root-of-unity oracle width does not match the register");
  for (std::uint64_t x = 0; x < f.domain_size(); ++x) {
    if (f.eval(x) >= k) throw ValidationError("oracle value at x = " + std::to_string(x) + " is not below k");
  }
  CallTally tally;
  tally.watch(f);
  Circuit c{attach_ancillas(state, m), RegisterLayout{n, m}};
  for (const auto &[qubit, gate] : root_register_gates(k)) c.gate(c.ancilla(qubit), gate);
  c.joint = apply_uf_modadd(c.joint, c.layout, f, k);
  // The ancillas stay in R; it is input independent and not uncomputed.
  return finish(std::move(c), tally, "kthroot", {{"n", n}, {"k", static_cast<std::int64_t>(k)}},
                prepare_root_register(k).state);
}

Outcome approx_diagonal(const StateVector &state, const BitPhases &spec, ApproxStrategy strategy) {
  const int n = state.num_qubits();
  const int precision = static_cast<int>(spec.bits.size());
  if (precision < 1) throw DomainError("approximation needs at least one bit of precision");
  if (precision > 30) throw DomainError("approximation precision is limited to 30 bits");
  for (const auto &f : spec.bits) require_boolean(f, n, "phase-bit");
  CallTally tally;
  for (const auto &f : spec.bits) tally.watch(f);
  std::map<std::string, std::int64_t> params{{"n", n}, {"precision", precision}};

  if (strategy == ApproxStrategy::kPhaseTablePerBit) {
    Circuit c{attach_ancillas(state, 1), RegisterLayout{n, 1}};
    for (int j = 1; j <= precision; ++j) {
      const auto &f = spec.bits[j - 1];
      c.joint = apply_uf_xor(c.joint, c.layout, f);
      c.gate(c.ancilla(), SingleQubitGate::phase(unit(std::ldexp(1.0, -j))));
      c.joint = apply_uf_xor(c.joint, c.layout, f);
    }
    params["strategy"] = 1;
    return finish(std::move(c), tally, "approx", std::move(params), zero_register(1));
  }

  // A register R for k = 2^precision. Adding f_j * 2^(precision - j) mod k
  // kicks back omega^(f_j 2^(precision-j)) = exp(2 pi i f_j / 2^j).
  const std::uint64_t k = std::uint64_t{1} << precision;
  Circuit c{attach_ancillas(state, precision), RegisterLayout{n, precision}};
  for (const auto &[qubit, gate] : root_register_gates(k)) c.gate(c.ancilla(qubit), gate);
  for (int j = 1; j <= precision; ++j) c.joint = apply_uf_modadd(c.joint, c.layout, spec.bits[j - 1], k, precision - j);
  params["strategy"] = 0;
  return finish(std::move(c), tally, "approx", std::move(params), prepare_root_register(k).state);
}

double truncate_phase(double p, int precision) {
  if (precision < 1 || precision > 52) throw DomainError("precision must be in [1, 52]");
  if (!std::isfinite(p)) throw ValidationError("phase value is not finite");
  const double frac = p - std::floor(p);
  return std::floor(std::ldexp(frac, precision)) / std::ldexp(1.0, precision);
}

BitPhases bit_phases_from_real(int input_bits, const std::function<double(std::uint64_t)> &p, int precision) {
  if (precision < 1 || precision > 30) throw DomainError("precision must be in [1, 30]");
  if (input_bits < 1 || input_bits > 24) throw DomainError("real phase tables are limited to 24 input bits");
  const std::uint64_t size = std::uint64_t{1} << input_bits;
  auto digits = std::make_shared<std::vector<std::uint64_t>>(size);
  for (std::uint64_t x = 0; x < size; ++x)
    (*digits)[x] = static_cast<std::uint64_t>(std::ldexp(truncate_phase(p(x), precision), precision));
  BitPhases out;
  for (int j = 1; j <= precision; ++j) {
    const int shift = precision - j;
    out.bits.emplace_back(
        input_bits, 1, [digits, shift](std::uint64_t x) { return ((*digits)[x] >> shift) & 1; },
        "phase_bit_" + std::to_string(j));
  }
  return out;
}

Outcome apply_diagonal(const StateVector &state, const DiagonalSpec &spec, Rng &rng) {
  return std::visit(
      [&](const auto &s) -> Outcome {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExplicitPhases>) {
          return synthesize_naive(state, s);
        } else if constexpr (std::is_same_v<T, DistinctPhases>) {
          return apply_distinct_phases(state, s);
        } else if constexpr (std::is_same_v<T, SignPattern>) {
          return apply_sign_change(state, s.f);
        } else if constexpr (std::is_same_v<T, RootRotation>) {
          return apply_root2m_rotation(state, s.f, s.m, rng);
        } else if constexpr (std::is_same_v<T, RootOfUnity>) {
          return apply_kth_root(state, s.f, s.k);
        } else if constexpr (std::is_same_v<T, BitPhases>) {
          return approx_diagonal(state, s);
        } else {
          throw ValidationError("the gamma-ancilla construction entangles the registers and realizes no diagonal");
        }
      },
      spec);
}

std::vector<Complex> dense_phases(const DiagonalSpec &spec, int num_qubits) {
  if (num_qubits < 1 || num_qubits > 30) throw DomainError("dense phases limited to 30 qubits");
  const std::uint64_t size = std::uint64_t{1} << num_qubits;
  std::vector<Complex> d(size);
  std::visit(
      [&](const auto &s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ExplicitPhases>) {
          if (s.phases.size() != size) throw ValidationError("explicit phase count does not match the register");
          d = s.phases;
        } else if constexpr (std::is_same_v<T, DistinctPhases>) {
          for (std::uint64_t x = 0; x < size; ++x) {
            const auto v = s.f.eval(x);
            if (v >= s.table.size()) throw ValidationError("oracle value has no phase table entry");
            d[x] = s.table[v];
          }
        } else if constexpr (std::is_same_v<T, SignPattern>) {
          for (std::uint64_t x = 0; x < size; ++x) d[x] = s.f.eval(x) ? -1.0 : 1.0;
        } else if constexpr (std::is_same_v<T, RootRotation>) {
          for (std::uint64_t x = 0; x < size; ++x)
            d[x] = unit(static_cast<double>(s.f.eval(x)) * std::ldexp(1.0, -s.m));
        } else if constexpr (std::is_same_v<T, RootOfUnity>) {
          for (std::uint64_t x = 0; x < size; ++x)
            d[x] = unit(static_cast<double>(s.f.eval(x)) / static_cast<double>(s.k));
        } else if constexpr (std::is_same_v<T, BitPhases>) {
          for (std::uint64_t x = 0; x < size; ++x) {
            double turns = 0.0;
            for (std::size_t j = 0; j < s.bits.size(); ++j)
              turns += static_cast<double>(s.bits[j].eval(x)) * std::ldexp(1.0, -static_cast<int>(j + 1));
            d[x] = unit(turns);
          }
        } else {
          throw ValidationError("the gamma-ancilla construction realizes no diagonal");
        }
      },
      spec);
  return d;
}

std::string method_name(const DiagonalSpec &spec) {
  static constexpr const char *kNames[] = {"naive", "distinct", "sign", "root2m", "kthroot", "gamma", "approx"};
  return kNames[spec.index()];
}

}  // namespace qtk
