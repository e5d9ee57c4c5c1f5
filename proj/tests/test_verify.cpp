// Copyright 2026 The rtof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rtof/verify.hpp"

#include <json.hpp>
#include <random>

#include "gtest/gtest.h"
#include "support.hpp"

using namespace rtof;

TEST(verify, genperm_of_a_phase_gate) {
  Circuit c(2);
  c.g(GateKind::CS, {0, 1}).g(GateKind::X, {1});
  const GenPerm g = extract_genperm(unitary_of(c), 2);
  EXPECT_EQ(g.perm.at(0b11), Index{0b10});
  EXPECT_EQ(g.phase.at(0b11), 2);
  EXPECT_EQ(g.phase.at(0b01), 0);
  EXPECT_EQ(phase_support(g), (std::vector<int>{0, 1}));
}

TEST(verify, genperm_rejects_superpositions) {
  Circuit c(1);
  c.g(GateKind::H, {0});
  EXPECT_THROW(extract_genperm(unitary_of(c), 1), VerifyError);
}

TEST(verify, phase_support_ignores_spectator_bits) {
  // phase i^{x0} on 3 qubits: only qubit 0 matters
  std::map<Index, int> ph;
  for (Index x = 0; x < 8; ++x) ph[x] = ((x >> 2) & 1) * 2;
  EXPECT_EQ(phase_support(ph, 3), (std::vector<int>{0}));
  std::map<Index, int> flat;
  for (Index x = 0; x < 8; ++x) flat[x] = 5;
  EXPECT_TRUE(phase_support(flat, 3).empty());
}

TEST(verify, wrong_target_is_reported) {
  ConstructionSpec s = cxstar(4);
  s.target.support = {0, 1};
  EXPECT_FALSE(check_construction(s).semantics_ok);
  ConstructionSpec t = ccix();
  t.formula_tcounts = {7};
  const auto r = check_construction(t);
  EXPECT_TRUE(r.semantics_ok);
  EXPECT_FALSE(r.tcount_ok);
}

TEST(verify, safety_rule_examples) {
  Circuit c(3);
  c.g(GateKind::Toffoli, {0, 1, 2}).g(GateKind::T, {2}).g(GateKind::CX, {0, 1});
  c.g(GateKind::Toffoli, {0, 1, 2});
  std::string why;
  // CX targets wire 1, which is in Q.
  EXPECT_FALSE(safe_to_substitute(c, {0, 1, 3, 4}, {0, 1, 2}, &why));
  EXPECT_FALSE(why.empty());

  Circuit d(4);
  d.g(GateKind::Toffoli, {0, 1, 2}).g(GateKind::T, {2}).g(GateKind::CX, {0, 3}).g(GateKind::CZ, {1, 2});
  d.g(GateKind::Toffoli, {0, 1, 2});
  EXPECT_TRUE(safe_to_substitute(d, {0, 1, 4, 5}, {0, 1, 2}));

  Circuit m(3, 1);
  m.g(GateKind::Toffoli, {0, 1, 2}).measz(0, 0).g(GateKind::Toffoli, {0, 1, 2});
  EXPECT_FALSE(safe_to_substitute(m, {0, 1, 2, 3}, {0, 1, 2}));
}

TEST(verify, random_safe_substitutions_preserve_the_unitary) {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 120; ++trial) {
    const auto sc = rtof_test::random_safe_case(rng);
    const Circuit out = substitute_pair(sc.circuit, sc.region, sc.repl, sc.mapping);
    ASSERT_EQ(unitary_of(out), unitary_of(sc.circuit)) << "trial " << trial << "\n"
                                                        << to_text(sc.circuit);
  }
}

TEST(verify, unsafe_substitution_is_refused_and_would_be_wrong) {
  const auto sc = rtof_test::unsafe_case();
  EXPECT_THROW(substitute_pair(sc.circuit, sc.region, sc.repl, sc.mapping), VerifyError);
  EXPECT_NE(unitary_of(rtof_test::force_substitute(sc)), unitary_of(sc.circuit));
}

TEST(verify, mismatched_pair_is_refused) {
  Circuit c(3);
  c.g(GateKind::Toffoli, {0, 1, 2}).g(GateKind::CCiX, {0, 1, 2});
  Circuit r(3);
  r.g(GateKind::CCiX, {0, 1, 2});
  EXPECT_THROW(substitute_pair(c, {0, 1, 1, 2}, r, {0, 1, 2}), VerifyError);
}

TEST(verify, appendix_identities_hold) {
  for (const auto& id : appendix_identities()) EXPECT_TRUE(id.holds) << id.name << " k=" << id.k << ": " << id.detail;
  EXPECT_TRUE(check_bullet_split(5).holds);
  // The two-control X-bullet is a plain CCiX, so the three-control form carries i^{x1x2}.
  EXPECT_FALSE(check_star_and_phase(3).holds);
}

TEST(verify, ledger_reference_rows_are_not_measured) {
  const auto rows = table_ledger(6);
  int refs = 0;
  for (const auto& r : rows) {
    if (r.reference_only) {
      ++refs;
      EXPECT_TRUE(r.construction.empty());
      EXPECT_TRUE(r.measured.empty());
    } else {
      EXPECT_FALSE(r.measured.empty()) << r.row;
    }
  }
  EXPECT_GE(refs, 2);
}

TEST(verify, json_outputs_carry_schema) {
  auto rep = nlohmann::json::parse(to_json(check_construction(cxstar(4))));
  EXPECT_EQ(rep["schema"], 1);
  EXPECT_EQ(rep["name"], "cxstar");
  EXPECT_EQ(rep["tcount"]["values"][0], 16);
  auto ids = nlohmann::json::parse(to_json(appendix_identities()));
  EXPECT_EQ(ids["schema"], 1);
  auto led = nlohmann::json::parse(to_json(table_ledger(5)));
  EXPECT_EQ(led["schema"], 1);
}
