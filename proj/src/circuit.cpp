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

#include "rtof/circuit.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace rtof {

namespace {

struct KindInfo {
  GateKind kind;
  const char* name;
  int arity;
};

constexpr std::array<KindInfo, 21> kKinds{{
    {GateKind::X, "X", 1},
    {GateKind::Z, "Z", 1},
    {GateKind::H, "H", 1},
    {GateKind::S, "S", 1},
    {GateKind::Sdg, "Sdg", 1},
    {GateKind::T, "T", 1},
    {GateKind::Tdg, "Tdg", 1},
    {GateKind::CX, "CX", 2},
    {GateKind::CZ, "CZ", 2},
    {GateKind::Toffoli, "Toffoli", 3},
    {GateKind::CCiX, "CCiX", 3},
    {GateKind::CCiXdg, "CCiXdg", 3},
    {GateKind::CS, "CS", 2},
    {GateKind::CSdg, "CSdg", 2},
    {GateKind::CCiZ, "CCiZ", 3},
    {GateKind::CCmiZ, "CCmiZ", 3},
    {GateKind::RC3X, "RC3X", 4},
    {GateKind::RC3Xdg, "RC3Xdg", 4},
    {GateKind::LambdaX, "LambdaX", -1},
    {GateKind::LambdaZ, "LambdaZ", -1},
    {GateKind::LambdaiX, "LambdaiX", -1},
}};

const KindInfo& info(GateKind k) {
  return kKinds[static_cast<size_t>(k)];
}

GateKind dagger_kind(GateKind k) {
  switch (k) {
    case GateKind::S: return GateKind::Sdg;
    case GateKind::Sdg: return GateKind::S;
    case GateKind::T: return GateKind::Tdg;
    case GateKind::Tdg: return GateKind::T;
    case GateKind::CCiX: return GateKind::CCiXdg;
    case GateKind::CCiXdg: return GateKind::CCiX;
    case GateKind::CS: return GateKind::CSdg;
    case GateKind::CSdg: return GateKind::CS;
    case GateKind::CCiZ: return GateKind::CCmiZ;
    case GateKind::CCmiZ: return GateKind::CCiZ;
    case GateKind::RC3X: return GateKind::RC3Xdg;
    case GateKind::RC3Xdg: return GateKind::RC3X;
    case GateKind::LambdaiX: throw CircuitError("non-invertible: LambdaiX has no dagger kind");
    default: return k;
  }
}

// Primitive sequences, written against local wire names.
using Seq = std::vector<std::pair<GateKind, std::vector<int>>>;

Seq ccix_seq(int a, int b, int t) {
  using K = GateKind;
  return {{K::H, {t}},      {K::Tdg, {t}},    {K::CX, {b, t}}, {K::T, {t}},
          {K::CX, {a, t}},  {K::Tdg, {t}},    {K::CX, {b, t}}, {K::T, {t}},
          {K::CX, {a, t}},  {K::H, {t}}};
}

Seq toffoli_seq(int a, int b, int t) {
  using K = GateKind;
  return {{K::H, {t}},      {K::CX, {b, t}}, {K::Tdg, {t}},   {K::CX, {a, t}},
          {K::T, {t}},      {K::CX, {b, t}}, {K::Tdg, {t}},   {K::CX, {a, t}},
          {K::T, {b}},      {K::T, {t}},     {K::H, {t}},     {K::CX, {a, b}},
          {K::T, {a}},      {K::Tdg, {b}},   {K::CX, {a, b}}};
}

Seq cs_seq(int c, int t) {
  using K = GateKind;
  return {{K::T, {c}}, {K::T, {t}}, {K::CX, {c, t}}, {K::Tdg, {t}}, {K::CX, {c, t}}};
}

Seq rc3x_seq(int a, int b, int c, int t) {
  using K = GateKind;
  return {{K::H, {t}},     {K::T, {t}},     {K::CX, {c, t}}, {K::Tdg, {t}},
          {K::H, {t}},     {K::CX, {a, t}}, {K::T, {t}},     {K::CX, {b, t}},
          {K::Tdg, {t}},   {K::CX, {a, t}}, {K::T, {t}},     {K::CX, {b, t}},
          {K::Tdg, {t}},   {K::H, {t}},     {K::T, {t}},     {K::CX, {c, t}},
          {K::Tdg, {t}},   {K::H, {t}}};
}

Seq dagger_seq(Seq s) {
  std::reverse(s.begin(), s.end());
  for (auto& [k, qs] : s) k = dagger_kind(k);
  return s;
}

Seq strip_outer_h(Seq s) {
  s.erase(s.begin());
  s.pop_back();
  return s;
}

void check_lifetime_use(const std::vector<int>& live, int q, const char* what) {
  if (!live[q]) throw CircuitError(std::string(what) + " on released qubit " + std::to_string(q));
}

}  // namespace

const char* kind_name(GateKind k) { return info(k).name; }

std::optional<GateKind> parse_kind(const std::string& s) {
  for (const auto& ki : kKinds) {
    if (s == ki.name) return ki.kind;
  }
  return std::nullopt;
}

bool is_primitive(GateKind k) { return static_cast<int>(k) <= static_cast<int>(GateKind::CZ); }

bool is_target_only(GateKind k) {
  return k == GateKind::LambdaX || k == GateKind::LambdaZ || k == GateKind::LambdaiX;
}

int arity(GateKind k) { return info(k).arity; }

bool is_t_gate(GateKind k) { return k == GateKind::T || k == GateKind::Tdg; }

Circuit::Circuit(int n, int m) : n_qubits(n), n_cbits(m), roles(n, QubitRole::Input) {}

Circuit& Circuit::g(GateKind k, std::vector<int> qs) {
  events.emplace_back(Gate{k, std::move(qs), std::nullopt});
  return *this;
}

Circuit& Circuit::cg(int bit, int value, GateKind k, std::vector<int> qs) {
  events.emplace_back(Gate{k, std::move(qs), Condition{bit, value}});
  if (bit >= n_cbits) n_cbits = bit + 1;
  return *this;
}

Circuit& Circuit::measz(int q, int bit) {
  events.emplace_back(MeasureZ{q, bit});
  if (bit >= n_cbits) n_cbits = bit + 1;
  return *this;
}

Circuit& Circuit::alloc(int q, AncillaRole r) {
  events.emplace_back(AllocAncilla{q, r});
  if (q < static_cast<int>(roles.size()) && roles[q] == QubitRole::Input) {
    roles[q] = r == AncillaRole::Clean ? QubitRole::Clean : QubitRole::Dirty;
  }
  return *this;
}

Circuit& Circuit::release(int q, ReleaseExpect e) {
  events.emplace_back(Release{q, e});
  return *this;
}

Circuit& Circuit::append(const Circuit& o) {
  if (o.n_qubits > n_qubits) throw CircuitError("append: register size mismatch");
  n_cbits = std::max(n_cbits, o.n_cbits);
  events.insert(events.end(), o.events.begin(), o.events.end());
  for (int q = 0; q < o.n_qubits && q < static_cast<int>(o.roles.size()); ++q) {
    if (roles[q] == QubitRole::Input) roles[q] = o.roles[q];
  }
  return *this;
}

Circuit& Circuit::append_conditioned(const Circuit& o, int bit, int value) {
  if (o.n_qubits > n_qubits) throw CircuitError("append: register size mismatch");
  for (const auto& e : o.events) {
    const Gate* gp = std::get_if<Gate>(&e);
    if (!gp || gp->cond) throw CircuitError("append_conditioned: only unconditioned gates allowed");
    cg(bit, value, gp->kind, gp->qubits);
  }
  n_cbits = std::max(n_cbits, o.n_cbits);
  return *this;
}

void Circuit::set_role(int q, QubitRole r) {
  if (q < 0 || q >= n_qubits) throw CircuitError("set_role: qubit out of range");
  roles.resize(n_qubits, QubitRole::Input);
  roles[q] = r;
}

std::vector<int> Circuit::qubits_with_role(QubitRole r) const {
  std::vector<int> out;
  for (int q = 0; q < static_cast<int>(roles.size()); ++q) {
    if (roles[q] == r) out.push_back(q);
  }
  return out;
}

std::vector<Gate> expand_gate(const Gate& g) {
  if (is_primitive(g.kind)) return {g};
  if (is_target_only(g.kind)) {
    throw CircuitError(std::string("target-only macro: ") + kind_name(g.kind));
  }
  const auto& q = g.qubits;
  if (static_cast<int>(q.size()) != arity(g.kind)) {
    throw CircuitError(std::string("wrong arity for ") + kind_name(g.kind));
  }
  Seq s;
  switch (g.kind) {
    case GateKind::Toffoli: s = toffoli_seq(q[0], q[1], q[2]); break;
    case GateKind::CCiX: s = ccix_seq(q[0], q[1], q[2]); break;
    case GateKind::CCiXdg: s = dagger_seq(ccix_seq(q[0], q[1], q[2])); break;
    case GateKind::CS: s = cs_seq(q[0], q[1]); break;
    case GateKind::CSdg: s = dagger_seq(cs_seq(q[0], q[1])); break;
    case GateKind::CCiZ: s = strip_outer_h(ccix_seq(q[0], q[1], q[2])); break;
    case GateKind::CCmiZ: s = dagger_seq(strip_outer_h(ccix_seq(q[0], q[1], q[2]))); break;
    case GateKind::RC3X: s = rc3x_seq(q[0], q[1], q[2], q[3]); break;
    case GateKind::RC3Xdg: s = dagger_seq(rc3x_seq(q[0], q[1], q[2], q[3])); break;
    default: throw CircuitError("no expansion registered");
  }
  std::vector<Gate> out;
  out.reserve(s.size());
  for (auto& [k, qs] : s) out.push_back(Gate{k, std::move(qs), g.cond});
  return out;
}

Circuit expand_macros(const Circuit& c) {
  Circuit out(c.n_qubits, c.n_cbits);
  out.roles = c.roles;
  out.roles.resize(c.n_qubits, QubitRole::Input);
  out.events.reserve(c.events.size());
  for (const auto& e : c.events) {
    if (const Gate* g = std::get_if<Gate>(&e)) {
      for (auto& p : expand_gate(*g)) out.events.emplace_back(std::move(p));
    } else {
      out.events.push_back(e);
    }
  }
  return out;
}

std::set<int> TCount::values() const {
  std::set<int> v;
  for (const auto& [k, n] : per_outcome) v.insert(n);
  return v;
}

TCount t_count(const Circuit& c) {
  TCount r;
  std::vector<Condition> conds;
  for (const auto& e : c.events) {
    const Gate* g = std::get_if<Gate>(&e);
    if (!g) continue;
    for (const auto& p : expand_gate(*g)) {
      if (!is_t_gate(p.kind)) continue;
      if (p.cond) {
        conds.push_back(*p.cond);
      } else {
        ++r.unconditional;
      }
    }
  }
  std::set<int> bits;
  for (const auto& cd : conds) bits.insert(cd.bit);
  r.outcome_bits.assign(bits.begin(), bits.end());
  const size_t nb = r.outcome_bits.size();
  if (nb > 20) throw CircuitError("t_count: too many outcome bits");
  for (uint64_t a = 0; a < (uint64_t{1} << nb); ++a) {
    std::string key(nb, '0');
    std::map<int, int> val;
    for (size_t i = 0; i < nb; ++i) {
      int v = static_cast<int>((a >> (nb - 1 - i)) & 1);
      key[i] = static_cast<char>('0' + v);
      val[r.outcome_bits[i]] = v;
    }
    int n = r.unconditional;
    for (const auto& cd : conds) {
      if (val[cd.bit] == cd.value) ++n;
    }
    r.per_outcome[key] = n;
  }
  auto vs = r.values();
  r.min = *vs.begin();
  r.max = *vs.rbegin();
  return r;
}

Circuit inverse(const Circuit& c) {
  Circuit out(c.n_qubits, c.n_cbits);
  out.roles = c.roles;
  for (auto it = c.events.rbegin(); it != c.events.rend(); ++it) {
    std::visit(
        [&](const auto& e) {
          using E = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<E, Gate>) {
            if (e.cond) throw CircuitError("non-invertible: classically conditioned gate");
            out.events.emplace_back(Gate{dagger_kind(e.kind), e.qubits, std::nullopt});
          } else if constexpr (std::is_same_v<E, MeasureZ>) {
            throw CircuitError("non-invertible: measurement");
          } else if constexpr (std::is_same_v<E, AllocAncilla>) {
            out.events.emplace_back(Release{e.qubit, e.role == AncillaRole::Clean
                                                         ? ReleaseExpect::Zero
                                                         : ReleaseExpect::Unchanged});
          } else {
            if (e.expect == ReleaseExpect::Measured) {
              throw CircuitError("non-invertible: release after measurement");
            }
            out.events.emplace_back(AllocAncilla{
                e.qubit, e.expect == ReleaseExpect::Zero ? AncillaRole::Clean : AncillaRole::Dirty});
          }
        },
        *it);
  }
  return out;
}

Circuit embed(const Circuit& c, const std::vector<int>& mapping, int total) {
  if (static_cast<int>(mapping.size()) != c.n_qubits) {
    throw CircuitError("embed: mapping size mismatch");
  }
  std::set<int> seen;
  for (int m : mapping) {
    if (m < 0 || m >= total) throw CircuitError("embed: target index out of range");
    if (!seen.insert(m).second) throw CircuitError("embed: mapping collision");
  }
  Circuit out(total, c.n_cbits);
  for (int q = 0; q < c.n_qubits && q < static_cast<int>(c.roles.size()); ++q) {
    out.roles[mapping[q]] = c.roles[q];
  }
  for (const auto& e : c.events) {
    std::visit(
        [&](const auto& ev) {
          using E = std::decay_t<decltype(ev)>;
          E copy = ev;
          if constexpr (std::is_same_v<E, Gate>) {
            for (auto& q : copy.qubits) {
              if (q < 0 || q >= c.n_qubits) throw CircuitError("embed: qubit out of range");
              q = mapping[q];
            }
          } else {
            copy.qubit = mapping.at(copy.qubit);
          }
          out.events.emplace_back(copy);
        },
        e);
  }
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits) throw CircuitError("compose: register size mismatch");
  Circuit out = a;
  out.roles.resize(a.n_qubits, QubitRole::Input);
  out.append(b);
  return out;
}

void validate(const Circuit& c) {
  const int n = c.n_qubits;
  // Qubits whose first event is an allocation start out unallocated.
  std::vector<int> live(n, 1);
  std::vector<int> first_seen(n, 0);
  for (const auto& e : c.events) {
    if (const auto* a = std::get_if<AllocAncilla>(&e)) {
      if (a->qubit >= 0 && a->qubit < n && !first_seen[a->qubit]) live[a->qubit] = 0;
    }
    std::visit(
        [&](const auto& ev) {
          using E = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<E, Gate>) {
            for (int q : ev.qubits) {
              if (q >= 0 && q < n) first_seen[q] = 1;
            }
          } else {
            if (ev.qubit >= 0 && ev.qubit < n) first_seen[ev.qubit] = 1;
          }
        },
        e);
  }
  std::vector<int> measured(n, 0);
  std::vector<int> written(c.n_cbits, 0);
  auto check_q = [&](int q) {
    if (q < 0 || q >= n) throw CircuitError("qubit index out of range: " + std::to_string(q));
  };
  auto check_b = [&](int b) {
    if (b < 0 || b >= c.n_cbits) throw CircuitError("classical bit out of range: " + std::to_string(b));
  };
  for (const auto& e : c.events) {
    if (const auto* g = std::get_if<Gate>(&e)) {
      int ar = arity(g->kind);
      if (ar >= 0 && static_cast<int>(g->qubits.size()) != ar) {
        throw CircuitError(std::string("wrong arity for ") + kind_name(g->kind));
      }
      if (ar < 0 && g->qubits.empty()) throw CircuitError("empty multi-controlled gate");
      std::set<int> distinct(g->qubits.begin(), g->qubits.end());
      if (distinct.size() != g->qubits.size()) throw CircuitError("repeated qubit in gate");
      for (int q : g->qubits) {
        check_q(q);
        check_lifetime_use(live, q, "gate");
      }
      if (g->cond) {
        check_b(g->cond->bit);
        if (g->cond->value != 0 && g->cond->value != 1) throw CircuitError("condition value not a bit");
        if (!written[g->cond->bit]) {
          throw CircuitError("classical bit read before write: " + std::to_string(g->cond->bit));
        }
      }
    } else if (const auto* m = std::get_if<MeasureZ>(&e)) {
      check_q(m->qubit);
      check_b(m->bit);
      check_lifetime_use(live, m->qubit, "measurement");
      if (measured[m->qubit]) throw CircuitError("qubit measured twice: " + std::to_string(m->qubit));
      measured[m->qubit] = 1;
      written[m->bit] = 1;
    } else if (const auto* a = std::get_if<AllocAncilla>(&e)) {
      check_q(a->qubit);
      if (live[a->qubit]) throw CircuitError("alloc of live qubit " + std::to_string(a->qubit));
      live[a->qubit] = 1;
      measured[a->qubit] = 0;
    } else if (const auto* r = std::get_if<Release>(&e)) {
      check_q(r->qubit);
      check_lifetime_use(live, r->qubit, "release");
      if (r->expect == ReleaseExpect::Measured && !measured[r->qubit]) {
        throw CircuitError("release measured on unmeasured qubit " + std::to_string(r->qubit));
      }
      live[r->qubit] = 0;
    }
  }
}

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  os << "qubits " << c.n_qubits << " cbits " << c.n_cbits << "\n";
  for (const auto& e : c.events) {
    std::visit(
        [&](const auto& ev) {
          using E = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<E, Gate>) {
            if (ev.cond) {
              os << "cg " << ev.cond->bit << " " << ev.cond->value << " ";
            } else {
              os << "g ";
            }
            os << kind_name(ev.kind);
            for (int q : ev.qubits) os << " " << q;
          } else if constexpr (std::is_same_v<E, MeasureZ>) {
            os << "measz " << ev.qubit << " " << ev.bit;
          } else if constexpr (std::is_same_v<E, AllocAncilla>) {
            os << "alloc " << ev.qubit << (ev.role == AncillaRole::Clean ? " clean" : " dirty");
          } else {
            static const char* names[] = {"zero", "unchanged", "measured"};
            os << "release " << ev.qubit << " " << names[static_cast<int>(ev.expect)];
          }
        },
        e);
    os << "\n";
  }
  return os.str();
}

Circuit parse_text(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  std::optional<Circuit> c;
  auto fail = [&](const std::string& msg) -> CircuitError {
    return CircuitError("line " + std::to_string(lineno) + ": " + msg);
  };
  auto read_int = [&](std::istringstream& ls) {
    long long v;
    if (!(ls >> v)) throw fail("expected integer");
    return static_cast<int>(v);
  };
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string op;
    if (!(ls >> op)) continue;
    if (op == "qubits") {
      if (c) throw fail("duplicate header");
      int n = read_int(ls);
      std::string kw;
      if (!(ls >> kw) || kw != "cbits") throw fail("expected 'cbits'");
      int m = read_int(ls);
      if (n < 0 || m < 0) throw fail("negative register size");
      c.emplace(n, m);
      continue;
    }
    if (!c) throw fail("missing 'qubits N cbits M' header");
    if (op == "g" || op == "cg") {
      std::optional<Condition> cond;
      if (op == "cg") {
        int b = read_int(ls);
        int v = read_int(ls);
        cond = Condition{b, v};
      }
      std::string kname;
      if (!(ls >> kname)) throw fail("missing gate kind");
      auto k = parse_kind(kname);
      if (!k) throw fail("unknown gate kind '" + kname + "'");
      std::vector<int> qs;
      long long v;
      while (ls >> v) qs.push_back(static_cast<int>(v));
      if (!ls.eof()) throw fail("trailing garbage");
      c->events.emplace_back(Gate{*k, std::move(qs), cond});
    } else if (op == "measz") {
      int q = read_int(ls);
      int b = read_int(ls);
      c->events.emplace_back(MeasureZ{q, b});
    } else if (op == "alloc") {
      int q = read_int(ls);
      std::string r;
      ls >> r;
      if (r != "clean" && r != "dirty") throw fail("alloc role must be clean|dirty");
      c->alloc(q, r == "clean" ? AncillaRole::Clean : AncillaRole::Dirty);
    } else if (op == "release") {
      int q = read_int(ls);
      std::string r;
      ls >> r;
      ReleaseExpect e;
      if (r == "zero") {
        e = ReleaseExpect::Zero;
      } else if (r == "unchanged") {
        e = ReleaseExpect::Unchanged;
      } else if (r == "measured") {
        e = ReleaseExpect::Measured;
      } else {
        throw fail("release expectation must be zero|unchanged|measured");
      }
      c->events.emplace_back(Release{q, e});
    } else {
      throw fail("unknown directive '" + op + "'");
    }
    std::string extra;
    if (op != "g" && op != "cg" && (ls >> extra)) throw fail("trailing garbage");
  }
  if (!c) throw CircuitError("empty circuit text");
  try {
    validate(*c);
  } catch (const CircuitError& e) {
    throw CircuitError(std::string("invalid circuit: ") + e.what());
  }
  return *c;
}

}  // namespace rtof
