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

#include <gtest/gtest.h>

#include "core/errors.hpp"

using namespace qtk;

namespace {

ResourceReport report(std::int64_t calls, std::int64_t ancillas, std::int64_t ops, std::int64_t measurements = 0) {
  ResourceReport r;
  r.oracle_calls = calls;
  r.ancilla_qubits = ancillas;
  r.elementary_ops = ops;
  r.measurements = measurements;
  return r;
}

}  // namespace

TEST(Merge, sums_counts_and_takes_peak_ancillas) {
  const std::vector<ResourceReport> parts{report(1, 3, 4, 1), report(2, 1, 5), report(0, 2, 1, 2)};
  const auto merged = merge(parts);
  EXPECT_EQ(merged.oracle_calls, 3);
  EXPECT_EQ(merged.ancilla_qubits, 3);
  EXPECT_EQ(merged.elementary_ops, 10);
  EXPECT_EQ(merged.measurements, 3);
  EXPECT_EQ(merge(std::vector<ResourceReport>{}), ResourceLedger().finish("merged"));
}

TEST(Ledger, held_ancillas_stack_under_nested_steps) {
  ResourceLedger ledger;
  ledger.open(2);
  ledger.add(report(1, 3, 0));
  ledger.close();
  ledger.add(report(1, 4, 0));
  const auto r = ledger.finish("nested", {{"n", 3}});
  EXPECT_EQ(r.ancilla_qubits, 5);
  EXPECT_EQ(r.oracle_calls, 2);
  EXPECT_EQ(r.params.at("n"), 3);
}

TEST(Ledger, unbalanced_use_is_an_invariant_violation) {
  ResourceLedger ledger;
  EXPECT_THROW(ledger.close(), InvariantError);
  ledger.open(1);
  EXPECT_THROW(ledger.finish("open"), InvariantError);
}

TEST(Claims, exact_counts_pass) {
  struct Case {
    std::string method;
    std::map<std::string, std::int64_t> params;
    ResourceReport r;
  };
  const std::vector<Case> cases{
      {"naive", {{"n", 4}}, report(32, 1, 16)},
      {"distinct", {{"r", 5}}, report(2, 3, 5)},
      {"distinct", {{"r", 1}}, report(2, 1, 1)},
      {"sign", {}, report(1, 1, 4)},
      {"gamma", {}, report(1, 1, 2)},
      {"root2m", {{"m", 3}}, report(3, 1, 12, 2)},
      {"kthroot", {{"k", 8}}, report(1, 3, 6)},
      {"approx", {{"precision", 6}}, report(6, 1, 24)},
      {"decomposed", {{"n", 5}}, report(0, 0, 5)},
      {"permutation", {{"n", 3}}, report(2, 3, 3)},
      {"wdw:sign", {{"n", 3}}, report(1, 1, 10)},
  };
  for (auto c : cases) {
    c.r.method = c.method;
    c.r.params = c.params;
    const auto check = check_claims(c.r);
    EXPECT_TRUE(check.pass) << c.method << ": " << (check.diffs.empty() ? "" : check.diffs.front());
  }
}

TEST(Claims, block_costs) {
  auto r = report(2, 2, 3);
  r.method = "block";
  r.params = {{"n", 4}, {"k", 4}, {"alpha", 3}};
  r.modeled_block_cost = 3 * 16 * 2;
  EXPECT_TRUE(check_claims(r).pass);
  r.modeled_block_cost = 3 * 16;
  EXPECT_FALSE(check_claims(r).pass);
}

TEST(Claims, mismatches_are_listed_per_field) {
  auto r = report(3, 2, 9, 1);
  r.method = "sign";
  const auto check = check_claims(r);
  EXPECT_FALSE(check.pass);
  ASSERT_EQ(check.diffs.size(), 4u);
  EXPECT_EQ(check.diffs[0], "oracle_calls: got 3, expected 1");
  EXPECT_EQ(check.diffs[1], "ancilla_qubits: got 2, expected 1");
  EXPECT_EQ(check.diffs[2], "elementary_ops: got 9, expected <= 4");
  EXPECT_EQ(check.diffs[3], "measurements: got 1, expected <= 0");
}

TEST(Claims, root2m_call_range) {
  auto r = report(4, 1, 4, 0);
  r.method = "root2m";
  r.params = {{"m", 3}};
  EXPECT_FALSE(check_claims(r).pass);
  r.oracle_calls = 0;
  EXPECT_FALSE(check_claims(r).pass);
}

TEST(Claims, unknown_method_or_missing_parameter) {
  auto r = report(1, 1, 1);
  r.method = "teleport";
  EXPECT_THROW(check_claims(r), DomainError);
  r.method = "kthroot";
  EXPECT_THROW(check_claims(r), DomainError);
  for (const auto &m : claimed_methods()) EXPECT_NO_THROW(claim_for(m, {{"n", 2}, {"r", 2}, {"m", 2}, {"k", 2}, {"alpha", 1}, {"precision", 1}}));
}
