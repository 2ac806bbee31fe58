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

#include "core/decompose.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "core/errors.hpp"

namespace qtk {
namespace {

int qubits_of(std::span<const Complex> phases) {
  if (phases.size() < 2 || !std::has_single_bit(phases.size()))
    throw ValidationError("diagonal length " + std::to_string(phases.size()) + " is not 2^n with n >= 1");
  return std::countr_zero(phases.size());
}

void require_unit_entries(std::span<const Complex> phases) {
  for (std::size_t j = 0; j < phases.size(); ++j) {
    const auto &d = phases[j];
    if (!std::isfinite(d.real()) || !std::isfinite(d.imag()) || std::abs(std::abs(d) - 1.0) > kTolerance)
      throw ValidationError("diagonal entry " + std::to_string(j) + " is not unit modulus");
  }
}

}  // namespace

FactorSet extract_candidate_factors(std::span<const Complex> phases) {
  const int n = qubits_of(phases);
  require_unit_entries(phases);
  if (std::abs(phases[0] - Complex{1.0, 0.0}) > kTolerance)
    throw ValidationError("d_0 must be 1; divide the diagonal by d_0 first");
  FactorSet out;
  for (int k = 0; k < n; ++k) out.factors.push_back(phases[std::size_t{1} << k]);
  return out;
}

DecompositionVerdict is_decomposable(std::span<const Complex> phases, int max_qubits) {
  const int n = qubits_of(phases);
  if (n > max_qubits)
    throw DomainError("exhaustive decomposability test is capped at " + std::to_string(max_qubits) +
                      " qubits; use pairwise_necessary_check");
  require_unit_entries(phases);

  DecompositionVerdict verdict;
  verdict.global_phase = phases[0];
  std::vector<Complex> normalized(phases.size());
  const Complex inverse = std::conj(phases[0]);
  for (std::size_t j = 0; j < phases.size(); ++j) normalized[j] = phases[j] * inverse;
  normalized[0] = 1.0;
  verdict.factors = extract_candidate_factors(normalized);

  for (std::uint64_t j = 0; j < normalized.size(); ++j) {
    Complex product = 1.0;
    for (int k = 0; k < n; ++k) {
      if ((j >> k) & 1) product *= verdict.factors.factors[k];
    }
    if (std::abs(product - normalized[j]) > kTolerance) {
      verdict.witness = j;
      return verdict;
    }
  }
  verdict.decomposable = true;
  return verdict;
}

bool pairwise_necessary_check(std::span<const Complex> phases, std::span<const BitPair> pairs) {
  const int n = qubits_of(phases);
  require_unit_entries(phases);
  for (const auto &p : pairs) {
    if (p.bit < 0 || p.bit >= n || p.x >= phases.size() || p.x_prime >= phases.size() ||
        (p.x ^ p.x_prime) != (std::uint64_t{1} << p.bit) || p.x <= p.x_prime)
      throw DomainError("pair (" + std::to_string(p.x) + ", " + std::to_string(p.x_prime) +
                        ") does not differ in exactly bit " + std::to_string(p.bit) + " with x > x'");
  }
  for (const auto &p : pairs) {
    // d_x / d_x' == d_{2^k} / d_0, cross-multiplied.
    const Complex lhs = phases[p.x] * phases[0];
    const Complex rhs = phases[p.x_prime] * phases[std::size_t{1} << p.bit];
    if (std::abs(lhs - rhs) > kTolerance) return false;
  }
  return true;
}

std::vector<BitPair> random_bit_pairs(int num_qubits, std::size_t count, Rng &rng) {
  if (num_qubits < 1 || num_qubits > 62) throw DomainError("qubit count out of range");
  std::vector<BitPair> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int bit = static_cast<int>(rng.below(static_cast<std::uint64_t>(num_qubits)));
    const std::uint64_t base = rng.below(std::uint64_t{1} << num_qubits) & ~(std::uint64_t{1} << bit);
    pairs.push_back({base | (std::uint64_t{1} << bit), base, bit});
  }
  return pairs;
}

Outcome apply_decomposed(const StateVector &state, const FactorSet &factors) {
  const int n = state.num_qubits();
  if (static_cast<int>(factors.factors.size()) != n)
    throw ValidationError("need one factor per qubit: got " + std::to_string(factors.factors.size()) + " for " +
                          std::to_string(n) + " qubits");
  StateVector out = state;
  for (int k = 0; k < n; ++k) out = apply_single_qubit(out, k, SingleQubitGate::phase(factors.factors[k]));
  ResourceReport report;
  report.method = "decomposed";
  report.params = {{"n", n}};
  report.elementary_ops = n;
  return Outcome{out, out, RegisterLayout{n, 0}, std::move(report), 1.0, {}};
}

std::vector<Complex> tensor_diagonal(const FactorSet &factors) {
  const std::size_t n = factors.factors.size();
  if (n < 1 || n > 30) throw DomainError("factor count must be in [1, 30]");
  std::vector<Complex> d{1.0};
  // Kronecker product, highest qubit first.
  for (std::size_t k = n; k-- > 0;) {
    std::vector<Complex> next;
    next.reserve(2 * d.size());
    for (const auto &entry : d) {
      next.push_back(entry);
      next.push_back(entry * factors.factors[k]);
    }
    d = std::move(next);
  }
  return d;
}

}  // namespace qtk
