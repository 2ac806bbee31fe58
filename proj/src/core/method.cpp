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

#include "core/method.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <type_traits>

#include "core/errors.hpp"

namespace qtk {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_width(const ClassicalOracle &f, int n, const std::string &what) {
  if (f.input_bits() != n)
    throw ValidationError(what + " takes " + std::to_string(f.input_bits()) + " input bits but the register has " +
                          std::to_string(n));
}

void require_values_below(const ClassicalOracle &f, std::uint64_t bound, const std::string &what) {
  const auto values = f.table();
  for (std::uint64_t x = 0; x < values.size(); ++x) {
    if (values[x] >= bound)
      throw ValidationError(what + " value " + std::to_string(values[x]) + " at x = " + std::to_string(x) +
                            " is not below " + std::to_string(bound));
  }
}

void validate_diagonal(const DiagonalSpec &spec, int n) {
  std::visit(Overloaded{
                 [](const ExplicitPhases &) {},
                 [&](const DistinctPhases &s) {
                   require_width(s.f, n, "phase-index oracle");
                   if (s.table.empty()) throw ValidationError("phase table is empty");
                   require_values_below(s.f, s.table.size(), "phase-index oracle");
                 },
                 [&](const SignPattern &s) {
                   require_width(s.f, n, "sign oracle");
                   require_values_below(s.f, 2, "sign oracle");
                 },
                 [&](const RootRotation &s) {
                   require_width(s.f, n, "rotation oracle");
                   require_values_below(s.f, 2, "rotation oracle");
                   if (s.m < 1) throw DomainError("m must be at least 1");
                 },
                 [&](const RootOfUnity &s) {
                   require_width(s.f, n, "root-of-unity oracle");
                   if (!std::has_single_bit(s.k) || s.k < 2 || s.k > (std::uint64_t{1} << 30))
                     throw DomainError("k must be a power of two in [2, 2^30]");
                   require_values_below(s.f, s.k, "root-of-unity oracle");
                 },
                 [&](const GammaAncilla &s) {
                   require_width(s.f, n, "gamma oracle");
                   require_values_below(s.f, 2, "gamma oracle");
                 },
                 [&](const BitPhases &s) {
                   if (s.bits.empty()) throw DomainError("approximation needs at least one bit of precision");
                   for (const auto &f : s.bits) {
                     require_width(f, n, "phase-bit oracle");
                     require_values_below(f, 2, "phase-bit oracle");
                   }
                 },
             },
             spec);
  if (!std::holds_alternative<GammaAncilla>(spec)) {
    for (const auto &d : dense_phases(spec, n)) {
      if (std::abs(std::abs(d) - 1.0) > kTolerance) throw ValidationError("phase entry is not unit modulus");
    }
  } else {
    const Complex gamma = std::get<GammaAncilla>(spec).gamma;
    if (std::abs(std::abs(gamma) - 1.0) > kTolerance) throw ValidationError("gamma is not unit modulus");
  }
}

// Applies the block-diagonal matrix with explicit loops over aligned blocks.
std::vector<Complex> dense_blocks(std::span<const Complex> in, const BlockDiagonalSpec &spec) {
  std::vector<Complex> out(in.size());
  const std::uint64_t k = spec.block_size;
  for (std::uint64_t base = 0; base < in.size(); base += k) {
    const Block &b = spec.blocks.at(spec.selector.eval(base));
    for (std::uint64_t i = 0; i < k; ++i) {
      Complex acc = 0.0;
      for (std::uint64_t j = 0; j < k; ++j)
        acc += b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * in[base + j];
      out[base + i] = acc;
    }
  }
  return out;
}

std::vector<Complex> dense_walsh(std::span<const Complex> in) {
  const double scale = 1.0 / std::sqrt(static_cast<double>(in.size()));
  std::vector<Complex> out(in.size());
  for (std::uint64_t y = 0; y < in.size(); ++y) {
    Complex acc = 0.0;
    for (std::uint64_t x = 0; x < in.size(); ++x) acc += (std::popcount(x & y) % 2 ? -1.0 : 1.0) * in[x];
    out[y] = acc * scale;
  }
  return out;
}

StateVector from_amplitudes(std::vector<Complex> amps) { return StateVector(std::move(amps)); }

}  // namespace

std::string method_name(const MethodSpec &spec) {
  return std::visit(Overloaded{
                        [](const DiagonalSpec &d) { return method_name(d); },
                        [](const FactorSet &) { return std::string("decomposed"); },
                        [](const PermutationSpec &) { return std::string("permutation"); },
                        [](const BlockDiagonalSpec &) { return std::string("block"); },
                        [](const GroupedMixSpec &) { return std::string("grouped"); },
                        [](const WdwSpec &w) { return "wdw:" + method_name(w.inner); },
                    },
                    spec.body);
}

void validate_method(const MethodSpec &spec) {
  const int n = spec.num_qubits;
  if (n < 1 || n > 24) throw DomainError("register width must be in [1, 24]");
  std::visit(Overloaded{
                 [&](const DiagonalSpec &d) { validate_diagonal(d, n); },
                 [&](const FactorSet &f) {
                   if (static_cast<int>(f.factors.size()) != n)
                     throw ValidationError("need one factor per qubit");
                   for (const auto &g : f.factors) {
                     if (std::abs(std::abs(g) - 1.0) > kTolerance)
                       throw ValidationError("factor is not unit modulus");
                   }
                 },
                 [&](const PermutationSpec &p) {
                   require_width(p.g, n, "g");
                   validate_permutation(p);
                 },
                 [&](const BlockDiagonalSpec &b) { validate_block_diagonal(b, n); },
                 [&](const GroupedMixSpec &g) { validate_grouped_mix(g, n); },
                 [&](const WdwSpec &w) {
                   if (std::holds_alternative<GammaAncilla>(w.inner))
                     throw ValidationError("the gamma-ancilla construction cannot be used inside W D W");
                   validate_diagonal(w.inner, n);
                 },
             },
             spec.body);
}

RunResult run_method(const MethodSpec &spec, const StateVector &state, Rng &rng) {
  if (state.num_qubits() != spec.num_qubits)
    throw DomainError("state has " + std::to_string(state.num_qubits()) + " qubits, spec expects " +
                      std::to_string(spec.num_qubits));
  auto from_outcome = [](Outcome o) {
    return RunResult{std::move(o.state), std::move(o.report), o.ancilla_fidelity, std::move(o.joint), o.layout};
  };
  return std::visit(
      Overloaded{
          [&](const DiagonalSpec &d) {
            if (const auto *g = std::get_if<GammaAncilla>(&d)) return from_outcome(apply_gamma_ancilla(state, g->f, g->gamma));
            if (const auto *b = std::get_if<BitPhases>(&d))
              return from_outcome(approx_diagonal(state, *b, spec.approx_strategy));
            return from_outcome(apply_diagonal(state, d, rng));
          },
          [&](const FactorSet &f) { return from_outcome(apply_decomposed(state, f)); },
          [&](const PermutationSpec &p) { return from_outcome(apply_permutation_inplace(state, p)); },
          [&](const BlockDiagonalSpec &b) { return from_outcome(apply_block_diagonal(state, b)); },
          [&](const GroupedMixSpec &g) { return from_outcome(apply_grouped_mixing(state, g)); },
          [&](const WdwSpec &w) {
            auto mixed = wdw_mixing(state, w.inner, rng);
            StateVector joint = mixed.state;
            return RunResult{std::move(mixed.state), std::move(mixed.report), mixed.ancilla_fidelity,
                             std::move(joint), RegisterLayout{spec.num_qubits, 0}};
          },
      },
      spec.body);
}

bool reference_is_joint(const MethodSpec &spec) {
  const auto *d = std::get_if<DiagonalSpec>(&spec.body);
  return d != nullptr && std::holds_alternative<GammaAncilla>(*d);
}

StateVector reference_apply(const MethodSpec &spec, const StateVector &state) {
  const int n = spec.num_qubits;
  if (state.num_qubits() != n) throw DomainError("state width does not match the spec");
  const auto in = state.amplitudes();
  return std::visit(
      Overloaded{
          [&](const DiagonalSpec &d) {
            if (const auto *g = std::get_if<GammaAncilla>(&d)) {
              const double s = 1.0 / std::sqrt(2.0);
              std::vector<Complex> joint(2 * in.size());
              for (std::uint64_t x = 0; x < in.size(); ++x) {
                const std::uint64_t fx = g->f.eval(x);
                joint[x + (fx << n)] += s * in[x];
                joint[x + ((1 - fx) << n)] += s * g->gamma * in[x];
              }
              return from_amplitudes(std::move(joint));
            }
            return apply_diagonal_dense(state, dense_phases(d, n));
          },
          [&](const FactorSet &f) { return apply_diagonal_dense(state, tensor_diagonal(f)); },
          [&](const PermutationSpec &p) { return apply_permutation_dense(state, p.g.table()); },
          [&](const BlockDiagonalSpec &b) { return from_amplitudes(dense_blocks(in, b)); },
          [&](const GroupedMixSpec &g) {
            // P_g^-1 M P_g, with P_g^-1 built by inverting g's table.
            const auto forward = grouping_oracle(g).table();
            std::vector<std::uint64_t> backward(forward.size());
            for (std::uint64_t x = 0; x < forward.size(); ++x) backward[forward[x]] = x;
            const auto permuted = apply_permutation_dense(state, forward);
            const auto mixed = from_amplitudes(dense_blocks(permuted.amplitudes(), g.blocks));
            return apply_permutation_dense(mixed, backward);
          },
          [&](const WdwSpec &w) {
            auto amps = dense_walsh(in);
            const auto d = dense_phases(w.inner, n);
            for (std::uint64_t x = 0; x < amps.size(); ++x) amps[x] *= d[x];
            return from_amplitudes(dense_walsh(amps));
          },
      },
      spec.body);
}

}  // namespace qtk
