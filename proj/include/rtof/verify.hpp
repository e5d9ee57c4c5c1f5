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

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtof/constructions.hpp"
#include "rtof/sim.hpp"

namespace rtof {

class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generalized permutation restricted to a set of inputs: x -> w^phase[x] |perm[x]>.
struct GenPerm {
  int n_qubits = 0;  // width of the input register
  std::map<Index, Index> perm;
  std::map<Index, int> phase;
};

// Columns must each hold exactly one entry of the form w^j.
GenPerm extract_genperm(const SparseMatrix& m, const std::vector<Index>& inputs, int n_qubits);
GenPerm extract_genperm(const SparseMatrix& unitary, int n_qubits);

// Qubits q for which some pair x, x^e_q (both in the domain) has different phase.
std::vector<int> phase_support(const std::map<Index, int>& phase, int n_qubits);
std::vector<int> phase_support(const GenPerm& g);

struct VerificationReport {
  std::string name;
  std::string variant;
  int k = 0;
  int m = 0;
  TargetKind kind = TargetKind::Exact;
  bool semantics_ok = false;
  std::string detail;
  std::vector<int> support_found;
  std::vector<int> support_declared;
  TCount tcount;
  std::set<int> expected_tcounts;
  bool tcount_ok = false;
  std::map<std::string, std::string> branch_scalars;
  std::vector<std::string> notes;

  bool ok() const { return semantics_ok && tcount_ok; }
};

VerificationReport check_construction(const ConstructionSpec& spec);

// ---- oracle pair substitution ----

// Event index ranges [begin, end) of an oracle U_f and its later inverse.
struct PairRegion {
  std::size_t first_begin = 0;
  std::size_t first_end = 0;
  std::size_t second_begin = 0;
  std::size_t second_end = 0;
};

// Wires of the pair (both regions plus any extra replacement wires).
std::set<int> pair_wires(const Circuit& c, const PairRegion& r);

// True when every event between the two regions keeps the basis value of
// each wire in `q`: diagonal gates anywhere, X-type gates only with q on
// controls, and no measurement or ancilla bookkeeping on q.
bool safe_to_substitute(const Circuit& c, const PairRegion& r, const std::set<int>& q,
                        std::string* why = nullptr);

// Replaces the pair with `repl` (mapped through `mapping`) and its inverse.
// Throws VerifyError when the middle is not safe.
Circuit substitute_pair(const Circuit& c, const PairRegion& r, const Circuit& repl,
                        const std::vector<int>& mapping);

// ---- appendix identities ----

struct IdentityResult {
  std::string name;
  int k = 0;
  bool holds = false;
  std::string detail;
};

IdentityResult check_bullet_split(int k);      // X-bullet = Lambda_k(X) . Z-bullet on the dirty wire
IdentityResult check_star_and_phase(int k);    // X-star AND = Lambda_k(X) . Z-bullet on the controls
IdentityResult check_relative_uncompute(int k);  // relative AND termination undoes that phase
std::vector<IdentityResult> appendix_identities();

// ---- T-count ledger ----

struct LedgerEntry {
  std::string row;
  std::string construction;  // empty for reference-only rows
  int k = 0;
  int m = 0;
  std::string variant;
  std::string formula;
  std::string validity;
  std::set<int> expected;
  std::set<int> measured;
  bool reference_only = false;
  bool match = false;
};

std::vector<LedgerEntry> table_ledger(int kmax);

std::string to_json(const VerificationReport& r);
std::string to_json(const std::vector<LedgerEntry>& rows);
std::string to_json(const std::vector<IdentityResult>& ids);
std::string render_table(const std::vector<LedgerEntry>& rows);
std::string set_str(const std::set<int>& s);

}  // namespace rtof
