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

#include "rtof/sim.hpp"

#include "rtof/constructions.hpp"

#include <random>

#include "gtest/gtest.h"
#include "support.hpp"

using namespace rtof;

namespace {

Circuit random_clifford_t(std::mt19937& rng, int n, int len) {
  Circuit c(n);
  const GateKind one[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T,
                          GateKind::Tdg, GateKind::X, GateKind::Z};
  for (int i = 0; i < len; ++i) {
    auto qs = rtof_test::pick(rng, [&] {
      std::vector<int> v(n);
      for (int j = 0; j < n; ++j) v[j] = j;
      return v;
    }(), 3);
    switch (rng() % 4) {
      case 0:
      case 1: c.g(one[rng() % 7], {qs[0]}); break;
      case 2: c.g(rng() % 2 ? GateKind::CX : GateKind::CZ, {qs[0], qs[1]}); break;
      default: c.g(rng() % 2 ? GateKind::Toffoli : GateKind::CCiX, qs); break;
    }
  }
  return c;
}

}  // namespace

TEST(sim, random_circuits_match_dense_reference) {
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + trial % 3;
    Circuit c = random_clifford_t(rng, n, 25);
    EXPECT_TRUE(rtof_test::close_to(unitary_of(c), rtof_test::dense_unitary(c))) << to_text(c);
  }
}

TEST(sim, hadamard_amplitudes_are_exact) {
  Circuit c(1);
  c.g(GateKind::H, {0});
  const auto u = unitary_of(c);
  EXPECT_EQ(u.at(1, 1), -RingScalar::inv_sqrt2_power(1));
  EXPECT_EQ(multiply(u, u), identity_matrix(2));
}

TEST(sim, measurement_branches_and_prunes) {
  Circuit c(1, 1);
  c.g(GateKind::H, {0}).measz(0, 0);
  auto branches = run(c, 0);
  ASSERT_EQ(branches.size(), 2u);
  EXPECT_EQ(branches[0].outcome, "0");
  EXPECT_EQ(branches[1].outcome, "1");
  EXPECT_EQ(branches[0].state.norm_squared(), RingScalar::inv_sqrt2_power(2));

  Circuit d(1, 1);
  d.measz(0, 0);
  EXPECT_EQ(run(d, 1).size(), 1u);
  EXPECT_EQ(run(d, 1)[0].outcome, "1");
}

TEST(sim, clean_allocation_is_asserted) {
  Circuit c(2);
  c.alloc(1, AncillaRole::Clean);
  EXPECT_NO_THROW(run(c, 0b10));
  EXPECT_THROW(run(c, 0b01), SimError);

  Circuit r(2);
  r.g(GateKind::X, {1}).release(1, ReleaseExpect::Zero);
  EXPECT_THROW(run(r, 0), SimError);
}

TEST(sim, kraus_drops_measured_ancilla) {
  // Gidney AND followed by its measurement-based uncompute.
  Circuit c(3, 1);
  append_gidney_init(c, 0, 1, 2);
  append_gidney_terminate(c, 0, 1, 2, 0);
  const auto inputs = inputs_where(3, [](Index x) { return (x & 1) == 0; });
  const BranchMap bm = kraus_of(c, inputs);
  EXPECT_EQ(bm.kept_qubits, (std::vector<int>{0, 1}));
  EXPECT_EQ(bm.kraus.size(), 2u);
  EXPECT_TRUE(trace_preserving(bm));
  SparseMatrix id(4, inputs.size());
  for (std::size_t j = 0; j < inputs.size(); ++j) id.set(project_index(inputs[j], 3, {0, 1}), j, 1);
  EXPECT_TRUE(channel_equals(bm, id, ChannelMode::Exact).equal);
}

TEST(sim, channel_check_rejects_wrong_target) {
  Circuit c(3, 1);
  append_gidney_init(c, 0, 1, 2);
  append_gidney_terminate(c, 0, 1, 2, 0);
  const auto inputs = inputs_where(3, [](Index x) { return (x & 1) == 0; });
  SparseMatrix wrong(4, inputs.size());
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    const Index p = project_index(inputs[j], 3, {0, 1});
    wrong.set(p, j, p == 3 ? RingScalar(-1) : RingScalar(1));
  }
  EXPECT_FALSE(channel_equals(c, inputs, wrong, ChannelMode::Exact).equal);
}

TEST(sim, missing_correction_breaks_trace_or_target) {
  // Without the CZ fix-up the two outcomes differ by a phase (-1)^{x1 x2}.
  Circuit c(3, 1);
  append_gidney_init(c, 0, 1, 2);
  c.g(GateKind::H, {2}).measz(2, 0).release(2, ReleaseExpect::Measured);
  const auto inputs = inputs_where(3, [](Index x) { return (x & 1) == 0; });
  SparseMatrix id(4, inputs.size());
  for (std::size_t j = 0; j < inputs.size(); ++j) id.set(project_index(inputs[j], 3, {0, 1}), j, 1);
  const auto bm = kraus_of(c, inputs);
  EXPECT_TRUE(trace_preserving(bm));
  EXPECT_FALSE(channel_equals(bm, id, ChannelMode::PerBranchGlobalPhase).equal);
}

TEST(sim, measured_wire_is_dropped_from_output) {
  Circuit m(2, 1);
  m.g(GateKind::H, {0}).g(GateKind::CX, {0, 1}).g(GateKind::H, {1});
  m.measz(1, 0).release(1, ReleaseExpect::Measured);
  const BranchMap bm = kraus_of(m, all_inputs(2));
  EXPECT_EQ(bm.kept_qubits, (std::vector<int>{0}));
  EXPECT_TRUE(trace_preserving(bm));
}

TEST(sim, project_index_orders_kept_bits) {
  // 4 qubits, index 0b1011 -> kept {0, 2, 3} -> 0b111
  EXPECT_EQ(project_index(0b1011, 4, {0, 2, 3}), Index{0b111});
  EXPECT_EQ(project_index(0b1011, 4, {1}), Index{0});
}
