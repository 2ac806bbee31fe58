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

#include "core/resources.hpp"

#include <algorithm>
#include <bit>

#include "core/errors.hpp"

namespace qtk {
namespace {

std::int64_t param(const std::map<std::string, std::int64_t> &params, const std::string &method,
                   const std::string &key) {
  auto it = params.find(key);
  if (it == params.end()) throw DomainError("claim for '" + method + "' needs parameter '" + key + "'");
  return it->second;
}

std::int64_t ceil_log2(std::int64_t value) {
  if (value <= 1) return 0;
  return std::bit_width(static_cast<std::uint64_t>(value - 1));
}

constexpr const char *kWdwPrefix = "wdw:";

}  // namespace

void ResourceLedger::open(std::int64_t ancillas) {
  held_.push_back(ancillas);
  live_ += ancillas;
  totals_.ancilla_qubits = std::max(totals_.ancilla_qubits, live_);
}

void ResourceLedger::close() {
  if (held_.empty()) throw InvariantError("ResourceLedger::close without open");
  live_ -= held_.back();
  held_.pop_back();
}

void ResourceLedger::add(const ResourceReport &report) {
  totals_.oracle_calls += report.oracle_calls;
  totals_.elementary_ops += report.elementary_ops;
  totals_.measurements += report.measurements;
  totals_.modeled_block_cost += report.modeled_block_cost;
  totals_.ancilla_qubits = std::max(totals_.ancilla_qubits, live_ + report.ancilla_qubits);
}

ResourceReport ResourceLedger::finish(std::string method, std::map<std::string, std::int64_t> params) const {
  if (!held_.empty()) throw InvariantError("ResourceLedger finished with ancillas still held");
  ResourceReport out = totals_;
  out.method = std::move(method);
  out.params = std::move(params);
  return out;
}

ResourceReport merge(std::span<const ResourceReport> reports) {
  ResourceLedger ledger;
  for (const auto &r : reports) ledger.add(r);
  return ledger.finish("merged");
}

std::vector<std::string> claimed_methods() {
  return {"naive",       "distinct",    "sign",  "gamma",   "root2m", "kthroot",
          "approx",      "decomposed",  "permutation", "block",   "grouped"};
}

Claim claim_for(const std::string &method, const std::map<std::string, std::int64_t> &params) {
  auto get = [&](const std::string &key) { return param(params, method, key); };
  Claim c;
  if (method.starts_with(kWdwPrefix)) {
    c = claim_for(method.substr(std::char_traits<char>::length(kWdwPrefix)), params);
    c.elementary_ops_budget += 2 * get("n");
    return c;
  }
  if (method == "naive") {
    const std::int64_t size = std::int64_t{1} << get("n");
    c.oracle_calls_min = c.oracle_calls_max = 2 * size;
    c.ancilla_qubits = 1;
    c.elementary_ops_budget = size;
  } else if (method == "distinct") {
    const std::int64_t r = get("r");
    const std::int64_t k = std::max<std::int64_t>(2, static_cast<std::int64_t>(std::bit_ceil(
                                                         static_cast<std::uint64_t>(std::max<std::int64_t>(r, 1)))));
    c.oracle_calls_min = c.oracle_calls_max = 2;
    c.ancilla_qubits = ceil_log2(k);
    c.elementary_ops_budget = 2 * k;
  } else if (method == "sign") {
    c.oracle_calls_min = c.oracle_calls_max = 1;
    c.ancilla_qubits = 1;
    c.elementary_ops_budget = 4;
  } else if (method == "gamma") {
    c.oracle_calls_min = c.oracle_calls_max = 1;
    c.ancilla_qubits = 1;
    c.elementary_ops_budget = 2;
  } else if (method == "root2m") {
    const std::int64_t m = get("m");
    c.oracle_calls_min = 1;
    c.oracle_calls_max = m;
    c.ancilla_qubits = 1;
    c.elementary_ops_budget = 4 * m;
    c.measurements_max = m - 1;
  } else if (method == "kthroot") {
    c.oracle_calls_min = c.oracle_calls_max = 1;
    c.ancilla_qubits = ceil_log2(get("k"));
    c.elementary_ops_budget = 2 * c.ancilla_qubits;
  } else if (method == "approx") {
    const std::int64_t k = get("precision");
    c.oracle_calls_min = c.oracle_calls_max = k;
    c.ancilla_qubits = 1;
    c.elementary_ops_budget = 4 * k;
  } else if (method == "decomposed") {
    c.elementary_ops_budget = get("n");
  } else if (method == "permutation") {
    c.oracle_calls_min = c.oracle_calls_max = 2;
    c.ancilla_qubits = get("n");
    c.elementary_ops_budget = get("n");
  } else if (method == "block" || method == "grouped") {
    const std::int64_t k = get("k");
    const std::int64_t alpha = get("alpha");
    const std::int64_t selector_bits = std::max<std::int64_t>(1, ceil_log2(alpha));
    c.oracle_calls_min = c.oracle_calls_max = 2;
    c.ancilla_qubits = selector_bits;
    c.elementary_ops_budget = alpha;
    c.modeled_block_cost = alpha * k * k * ceil_log2(k);
    if (method == "grouped") {
      // Two in-place permutations around the block step.
      c.oracle_calls_min = c.oracle_calls_max = 6;
      c.ancilla_qubits = std::max(selector_bits, get("n"));
      c.elementary_ops_budget += 2 * get("n");
    }
  } else {
    throw DomainError("no claim entry for method '" + method + "'");
  }
  return c;
}

ClaimCheck check_claims(const ResourceReport &report) {
  const Claim c = claim_for(report.method, report.params);
  ClaimCheck out;
  auto fail = [&](const std::string &field, std::int64_t got, const std::string &expected) {
    out.pass = false;
    out.diffs.push_back(field + ": got " + std::to_string(got) + ", expected " + expected);
  };
  if (report.oracle_calls < c.oracle_calls_min || report.oracle_calls > c.oracle_calls_max) {
    fail("oracle_calls", report.oracle_calls,
         c.oracle_calls_min == c.oracle_calls_max
             ? std::to_string(c.oracle_calls_min)
             : "[" + std::to_string(c.oracle_calls_min) + ", " + std::to_string(c.oracle_calls_max) + "]");
  }
  if (report.ancilla_qubits != c.ancilla_qubits)
    fail("ancilla_qubits", report.ancilla_qubits, std::to_string(c.ancilla_qubits));
  if (report.elementary_ops > c.elementary_ops_budget)
    fail("elementary_ops", report.elementary_ops, "<= " + std::to_string(c.elementary_ops_budget));
  if (report.measurements > c.measurements_max)
    fail("measurements", report.measurements, "<= " + std::to_string(c.measurements_max));
  if (report.modeled_block_cost != c.modeled_block_cost)
    fail("modeled_block_cost", report.modeled_block_cost, std::to_string(c.modeled_block_cost));
  return out;
}

}  // namespace qtk
