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

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace rtof {

enum class GateKind {
  // primitives
  X, Z, H, S, Sdg, T, Tdg, CX, CZ,
  // macros with fixed expansions
  Toffoli, CCiX, CCiXdg, CS, CSdg, CCiZ, CCmiZ,
  RC3X, RC3Xdg,  // 3-control relative-phase X (8 T)
  // target-only macros, never expanded
  LambdaX, LambdaZ, LambdaiX,
};

const char* kind_name(GateKind k);
std::optional<GateKind> parse_kind(const std::string& s);
bool is_primitive(GateKind k);
bool is_target_only(GateKind k);
// Fixed arity, or -1 for the variadic Lambda kinds.
int arity(GateKind k);
bool is_t_gate(GateKind k);

struct Condition {
  int bit = 0;
  int value = 1;
  bool operator==(const Condition&) const = default;
};

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<int> qubits;  // controls first, target last
  std::optional<Condition> cond;
  bool operator==(const Gate&) const = default;
};

struct MeasureZ {
  int qubit = 0;
  int bit = 0;
  bool operator==(const MeasureZ&) const = default;
};

enum class AncillaRole { Clean, Dirty };
struct AllocAncilla {
  int qubit = 0;
  AncillaRole role = AncillaRole::Clean;
  bool operator==(const AllocAncilla&) const = default;
};

enum class ReleaseExpect { Zero, Unchanged, Measured };
struct Release {
  int qubit = 0;
  ReleaseExpect expect = ReleaseExpect::Zero;
  bool operator==(const Release&) const = default;
};

using Event = std::variant<Gate, MeasureZ, AllocAncilla, Release>;

enum class QubitRole { Input, Target, Clean, Dirty };

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Circuit {
  int n_qubits = 0;
  int n_cbits = 0;
  std::vector<Event> events;
  std::vector<QubitRole> roles;

  Circuit() = default;
  explicit Circuit(int n, int m = 0);

  Circuit& g(GateKind k, std::vector<int> qs);
  Circuit& cg(int bit, int value, GateKind k, std::vector<int> qs);
  Circuit& measz(int q, int bit);
  Circuit& alloc(int q, AncillaRole r);
  Circuit& release(int q, ReleaseExpect e);
  // Appends events of `o` (same register sizes or smaller).
  Circuit& append(const Circuit& o);
  // Appends `o` with every gate conditioned on (bit, value); `o` must be
  // gate-only and unconditioned.
  Circuit& append_conditioned(const Circuit& o, int bit, int value);

  void set_role(int q, QubitRole r);
  std::vector<int> qubits_with_role(QubitRole r) const;

  bool operator==(const Circuit& o) const {
    return n_qubits == o.n_qubits && n_cbits == o.n_cbits && events == o.events;
  }
};

Circuit expand_macros(const Circuit& c);
// Expansion of a single gate into primitives (condition carried through).
std::vector<Gate> expand_gate(const Gate& g);

struct TCount {
  int unconditional = 0;
  std::vector<int> outcome_bits;  // cbits that condition T-bearing gates
  // key: values of outcome_bits in order, as '0'/'1' string
  std::map<std::string, int> per_outcome;
  int min = 0;
  int max = 0;
  std::set<int> values() const;
};

TCount t_count(const Circuit& c);

Circuit inverse(const Circuit& c);
Circuit embed(const Circuit& c, const std::vector<int>& mapping, int total);
Circuit compose(const Circuit& a, const Circuit& b);

// Throws CircuitError on arity, range, lifetime or classical-bit violations.
void validate(const Circuit& c);

std::string to_text(const Circuit& c);
Circuit parse_text(const std::string& text);

}  // namespace rtof
