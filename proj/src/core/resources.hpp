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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace qtk {

/// Resources consumed by one synthesis run. Any phase gate counts as one
/// elementary op regardless of its angle.
struct ResourceReport {
  std::string method;
  /// Instance parameters (n, r, k, m, alpha, ...) used by check_claims.
  std::map<std::string, std::int64_t> params;

  std::int64_t oracle_calls = 0;
  /// Peak number of simultaneously live ancilla qubits.
  std::int64_t ancilla_qubits = 0;
  std::int64_t elementary_ops = 0;
  std::int64_t measurements = 0;
  /// Cost-model figure for dense blocks that the simulator multiplies directly.
  std::int64_t modeled_block_cost = 0;

  bool operator==(const ResourceReport &) const = default;
};

/// Tracks live ancillas across a sequence of operations. Each open() holds
/// ancillas until the matching close(); an added report holds its own
/// ancillas only while it runs.
class ResourceLedger {
 public:
  void open(std::int64_t ancillas);
  void close();
  void add(const ResourceReport &report);
  void add_ops(std::int64_t elementary_ops) { totals_.elementary_ops += elementary_ops; }

  ResourceReport finish(std::string method, std::map<std::string, std::int64_t> params = {}) const;

 private:
  ResourceReport totals_;
  std::int64_t live_ = 0;
  std::vector<std::int64_t> held_;
};

/// Sequential composition: counts add up, ancilla_qubits is the peak.
ResourceReport merge(std::span<const ResourceReport> reports);

struct ClaimCheck {
  bool pass = true;
  std::vector<std::string> diffs;
};

/// Expected cost of a method given its instance parameters. Exact fields
/// are compared with integer equality; budgets are upper bounds.
struct Claim {
  std::int64_t oracle_calls_min = 0;
  std::int64_t oracle_calls_max = 0;
  std::int64_t ancilla_qubits = 0;
  std::int64_t elementary_ops_budget = 0;
  std::int64_t measurements_max = 0;
  std::int64_t modeled_block_cost = 0;
};

/// Names of every method with a claim entry.
std::vector<std::string> claimed_methods();

/// Throws DomainError for an unknown method or missing parameter.
Claim claim_for(const std::string &method, const std::map<std::string, std::int64_t> &params);

ClaimCheck check_claims(const ResourceReport &report);

}  // namespace qtk
