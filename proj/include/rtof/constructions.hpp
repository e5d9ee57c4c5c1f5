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

#pragma once

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtof/boolfn.hpp"
#include "rtof/circuit.hpp"
#include "rtof/sim.hpp"

namespace rtof {

class RangeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class TargetKind {
  Exact,            // output = w^phase(x) |perm(x)>
  Relative,         // as Exact, residual phase confined to `support`
  Channel,          // every branch proportional to w^phase(x) |perm(x)> on kept qubits
  RelativeChannel,  // every branch proportional to one common generalized permutation
};

const char* target_kind_name(TargetKind k);

/**
 * Semantic contract of a generated circuit. Indices are full-register basis
 * indices (qubit 0 most significant); for channel kinds `perm` lands in the
 * register of surviving qubits.
 */
struct Target {
  TargetKind kind = TargetKind::Exact;
  std::function<Index(Index)> perm;
  std::function<int(Index)> phase;      // base phase as a w exponent; empty means 0
  std::vector<int> support;             // qubits the residual phase may depend on
  std::function<bool(Index)> domain;    // valid inputs; empty means all
  std::string description;
};

struct ConstructionSpec {
  std::string name;
  int k = 0;
  int m = 0;
  std::string variant;
  Circuit circuit;
  Target target;
  std::string formula;              // T-count formula text
  std::set<int> formula_tcounts;    // formula evaluated (one value per branch kind)
  std::string validity;
  std::vector<std::string> notes;
};

// Toy oracles on two inputs x1, x2 and a target (wires 0, 1, 2).
struct Oracle {
  std::string name;
  Circuit circuit;
  BooleanFn f;
  int tau = 0;
  bool exact = true;
};

Oracle toy_oracle(const std::string& name);  // x1 | x2 | toffoli | ccix
std::vector<std::string> toy_oracle_names();

// ---- low-level builders (append to an existing circuit) ----

// Z-bullet: (-1)^{c1..cm t} times a phase on the controls and `dirty`.
void append_zbullet(Circuit& c, const std::vector<int>& ctrls, int t, int dirty);
// X-bullet: H-conjugated Z-bullet; relative phase on the controls and `dirty`.
void append_xbullet(Circuit& c, const std::vector<int>& ctrls, int t, int dirty);
// X-star: all controls, relative phase on the controls and the target.
void append_xstar(Circuit& c, const std::vector<int>& ctrls, int t);
// Exact multi-controlled X using one dirty ancilla (any k >= 1).
void append_lambda_x_dirty(Circuit& c, const std::vector<int>& ctrls, int t, int dirty);
// Gidney temporary AND into a clean ancilla (allocates it).
void append_gidney_init(Circuit& c, int a, int b, int anc);
// X-basis measurement termination of anc = a*b (releases it).
void append_gidney_terminate(Circuit& c, int a, int b, int anc, int cbit);

// ---- constructions ----
ConstructionSpec ccix();
ConstructionSpec ccix_dg();
ConstructionSpec maslov_toffoli4();
ConstructionSpec giles_selinger_skeleton(int k, const Circuit& inner_a, const Circuit& inner_b);
ConstructionSpec giles_selinger_exact(int k);
ConstructionSpec jones_toffoli();
ConstructionSpec gidney_and_init();
ConstructionSpec gidney_and_terminate();
ConstructionSpec gidney_and_roundtrip();
ConstructionSpec bennett(const Oracle& f);
ConstructionSpec bennett_dirty(const Oracle& f);
ConstructionSpec phase_bennett(const Oracle& f);
ConstructionSpec relative_tof4_dirty(const std::string& variant = "relative");
ConstructionSpec oracle_mult_clean(const Oracle& f, const Oracle& g);
ConstructionSpec oracle_mult_matched(const Oracle& f, const Oracle& g);
ConstructionSpec oracle_mult_unmatched(const Oracle& f, const Oracle& g);
ConstructionSpec lambda_x_bullet_dirty(int k);
ConstructionSpec lambda_x_dirty(int k, const std::string& variant = "matched");
ConstructionSpec lambda_z_relative(int k);
ConstructionSpec cix(int k);
ConstructionSpec cxstar(int k);
ConstructionSpec cxstar_with_ancillas(int k, int m);
ConstructionSpec cxbullet(int k);
ConstructionSpec fk_circuit(int k, FkVariant variant);
ConstructionSpec fk_dirty(int k, FkVariant variant);
ConstructionSpec kand_init(int k, const std::string& variant);
ConstructionSpec kand_terminate(int k, const std::string& variant);
ConstructionSpec kand_roundtrip(int k, const std::string& variant);
ConstructionSpec and3_init();
ConstructionSpec and3_terminate();
ConstructionSpec and3_roundtrip();
ConstructionSpec jones_lambda_x(int k);

// ---- registry used by the CLI and the ledger ----
struct Params {
  int k = 0;
  int m = 0;
  std::string variant;
};

struct RegistryEntry {
  std::string name;
  std::string summary;
  int min_k = 0;     // 0 when k is ignored
  bool uses_m = false;
  std::string default_variant;
  std::vector<std::string> variants;
  std::function<ConstructionSpec(const Params&)> make;
  std::map<std::string, int> variant_min_k;  // overrides min_k for a variant

  int min_k_for(const std::string& variant) const {
    auto it = variant_min_k.find(variant);
    return it == variant_min_k.end() ? min_k : it->second;
  }
};

const std::vector<RegistryEntry>& registry();
const RegistryEntry& find_construction(const std::string& name);  // throws RangeError

// Shared target helpers.
Index lambda_x_perm(Index x, int n, const std::vector<int>& ctrls, int t);
int and_of(Index x, int n, const std::vector<int>& qs);

}  // namespace rtof
