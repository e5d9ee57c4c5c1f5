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

#include <algorithm>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace rtof {

namespace {

int mod8(int v) { return ((v % 8) + 8) % 8; }

std::vector<int> range_of(int lo, int hi) {
  std::vector<int> v(std::max(0, hi - lo));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

std::string bits(Index x, int n) {
  std::string s;
  for (int q = 0; q < n; ++q) s += bit_of(x, n, q) ? '1' : '0';
  return s;
}

SparseMatrix perm_matrix(int n, const std::function<Index(Index)>& perm) {
  const Index dim = Index{1} << n;
  SparseMatrix m(dim, dim);
  for (Index x = 0; x < dim; ++x) m.set(perm(x), x, RingScalar(1));
  return m;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::all_of(a.begin(), a.end(),
                     [&](int q) { return std::find(b.begin(), b.end(), q) != b.end(); });
}

std::string list_str(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

void check_unitary_kind(const ConstructionSpec& spec, const std::vector<Index>& inputs,
                        VerificationReport& rep) {
  const int n = spec.circuit.n_qubits;
  const Target& tg = spec.target;
  GenPerm g;
  try {
    g = extract_genperm(columns_of(spec.circuit, inputs), inputs, n);
  } catch (const std::exception& e) {
    rep.detail = e.what();
    return;
  }
  std::map<Index, int> residual;
  for (Index x : inputs) {
    const Index want = tg.perm(x);
    if (g.perm[x] != want) {
      rep.detail = "input " + bits(x, n) + " maps to " + bits(g.perm[x], n) + ", expected " +
                   bits(want, n);
      return;
    }
    residual[x] = mod8(g.phase[x] - (tg.phase ? tg.phase(x) : 0));
  }
  rep.support_found = phase_support(residual, n);
  if (tg.kind == TargetKind::Exact) {
    for (const auto& [x, r] : residual) {
      if (r != 0) {
        rep.detail = "input " + bits(x, n) + " has residual phase w^" + std::to_string(r);
        return;
      }
    }
  } else if (!subset(rep.support_found, tg.support)) {
    rep.detail = "phase support " + list_str(rep.support_found) + " exceeds declared " +
                 list_str(tg.support);
    return;
  }
  rep.semantics_ok = true;
}

void check_channel_kind(const ConstructionSpec& spec, const std::vector<Index>& inputs,
                        VerificationReport& rep) {
  const int n = spec.circuit.n_qubits;
  const Target& tg = spec.target;
  BranchMap bm;
  try {
    bm = kraus_of(spec.circuit, inputs);
  } catch (const std::exception& e) {
    rep.detail = e.what();
    return;
  }
  if (!trace_preserving(bm)) {
    rep.detail = "branches are not trace preserving";
    return;
  }
  const Index rows = Index{1} << bm.kept_qubits.size();
  SparseMatrix target(rows, inputs.size());
  std::map<Index, int> residual;
  if (tg.kind == TargetKind::Channel) {
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      const Index x = inputs[j];
      const int ph = tg.phase ? tg.phase(x) : 0;
      target.set(project_index(tg.perm(x), n, bm.kept_qubits), j, RingScalar::omega_power(ph));
    }
  } else {
    if (bm.kraus.empty()) {
      rep.detail = "no branches";
      return;
    }
    const SparseMatrix& k0 = bm.kraus.begin()->second;
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      const Index x = inputs[j];
      const auto& col = k0.columns[j];
      if (col.size() != 1) {
        rep.detail = "branch " + bm.kraus.begin()->first + " column " + bits(x, n) +
                     " is not a single basis state";
        return;
      }
      const auto& [row, v] = *col.begin();
      const auto sw = v.as_scaled_omega_power();
      if (!sw) {
        rep.detail = "entry " + v.str() + " is not w^j/rt2^m";
        return;
      }
      const Index want = project_index(tg.perm(x), n, bm.kept_qubits);
      if (row != want) {
        rep.detail = "input " + bits(x, n) + " lands on the wrong basis state";
        return;
      }
      target.set(row, j, RingScalar::omega_power(sw->first));
      residual[x] = mod8(sw->first - (tg.phase ? tg.phase(x) : 0));
    }
    rep.support_found = phase_support(residual, n);
    if (!subset(rep.support_found, tg.support)) {
      rep.detail = "phase support " + list_str(rep.support_found) + " exceeds declared " +
                   list_str(tg.support);
      return;
    }
  }
  const ChannelReport cr = channel_equals(bm, target, ChannelMode::Exact);
  for (const auto& [o, s] : cr.scalars) rep.branch_scalars[o] = s.str();
  if (!cr.equal) {
    rep.detail = cr.diagnostic;
    return;
  }
  rep.semantics_ok = true;
}

}  // namespace

GenPerm extract_genperm(const SparseMatrix& m, const std::vector<Index>& inputs, int n_qubits) {
  if (m.cols != inputs.size()) throw VerifyError("extract_genperm: column count mismatch");
  GenPerm g;
  g.n_qubits = n_qubits;
  std::set<Index> images;
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    const auto& col = m.columns[j];
    if (col.size() != 1) {
      throw VerifyError("not a generalized permutation: column " + bits(inputs[j], n_qubits) +
                        " has " + std::to_string(col.size()) + " entries");
    }
    const auto& [row, v] = *col.begin();
    const auto j8 = v.as_omega_power();
    if (!j8) {
      throw VerifyError("not a generalized permutation: entry " + v.str() + " is not a power of w");
    }
    if (!images.insert(row).second) throw VerifyError("not a generalized permutation: collision");
    g.perm[inputs[j]] = row;
    g.phase[inputs[j]] = *j8;
  }
  return g;
}

GenPerm extract_genperm(const SparseMatrix& unitary, int n_qubits) {
  return extract_genperm(unitary, all_inputs(n_qubits), n_qubits);
}

std::vector<int> phase_support(const std::map<Index, int>& phase, int n_qubits) {
  std::vector<int> out;
  for (int q = 0; q < n_qubits; ++q) {
    const Index mq = qubit_mask(n_qubits, q);
    for (const auto& [x, p] : phase) {
      if (x & mq) continue;
      auto it = phase.find(x | mq);
      if (it != phase.end() && it->second != p) {
        out.push_back(q);
        break;
      }
    }
  }
  return out;
}

std::vector<int> phase_support(const GenPerm& g) { return phase_support(g.phase, g.n_qubits); }

VerificationReport check_construction(const ConstructionSpec& spec) {
  VerificationReport rep;
  rep.name = spec.name;
  rep.variant = spec.variant;
  rep.notes = spec.notes;
  rep.k = spec.k;
  rep.m = spec.m;
  rep.kind = spec.target.kind;
  rep.support_declared = spec.target.support;
  rep.expected_tcounts = spec.formula_tcounts;
  try {
    validate(spec.circuit);
    rep.tcount = t_count(spec.circuit);
  } catch (const std::exception& e) {
    rep.detail = e.what();
    return rep;
  }
  rep.tcount_ok = rep.tcount.values() == spec.formula_tcounts;
  const int n = spec.circuit.n_qubits;
  const auto inputs =
      spec.target.domain ? inputs_where(n, spec.target.domain) : all_inputs(n);
  switch (spec.target.kind) {
    case TargetKind::Exact:
    case TargetKind::Relative:
      check_unitary_kind(spec, inputs, rep);
      break;
    case TargetKind::Channel:
    case TargetKind::RelativeChannel:
      check_channel_kind(spec, inputs, rep);
      break;
  }
  return rep;
}

// ---------------------------------------------------------------- substitution

std::set<int> pair_wires(const Circuit& c, const PairRegion& r) {
  std::set<int> q;
  auto take = [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      std::visit(
          [&](const auto& ev) {
            using E = std::decay_t<decltype(ev)>;
            if constexpr (std::is_same_v<E, Gate>) {
              q.insert(ev.qubits.begin(), ev.qubits.end());
            } else {
              q.insert(ev.qubit);
            }
          },
          c.events[i]);
    }
  };
  take(r.first_begin, r.first_end);
  take(r.second_begin, r.second_end);
  return q;
}

namespace {

bool diagonal_kind(GateKind k) {
  switch (k) {
    case GateKind::Z: case GateKind::S: case GateKind::Sdg: case GateKind::T:
    case GateKind::Tdg: case GateKind::CZ: case GateKind::CS: case GateKind::CSdg:
    case GateKind::CCiZ: case GateKind::CCmiZ: case GateKind::LambdaZ:
      return true;
    default:
      return false;
  }
}

bool x_type_kind(GateKind k) {
  switch (k) {
    case GateKind::CX: case GateKind::Toffoli: case GateKind::CCiX: case GateKind::CCiXdg:
    case GateKind::RC3X: case GateKind::RC3Xdg: case GateKind::LambdaX: case GateKind::LambdaiX:
      return true;
    default:
      return false;
  }
}

void check_region(const Circuit& c, const PairRegion& r) {
  const std::size_t n = c.events.size();
  if (!(r.first_begin < r.first_end && r.first_end <= r.second_begin &&
        r.second_begin < r.second_end && r.second_end <= n)) {
    throw VerifyError("pair region out of order or out of range");
  }
}

}  // namespace

bool safe_to_substitute(const Circuit& c, const PairRegion& r, const std::set<int>& q,
                        std::string* why) {
  check_region(c, r);
  auto fail = [&](std::size_t i, const std::string& msg) {
    if (why) *why = "event " + std::to_string(i) + ": " + msg;
    return false;
  };
  for (std::size_t i = r.first_end; i < r.second_begin; ++i) {
    const Event& e = c.events[i];
    if (const Gate* g = std::get_if<Gate>(&e)) {
      if (diagonal_kind(g->kind)) continue;
      for (std::size_t p = 0; p < g->qubits.size(); ++p) {
        if (!q.count(g->qubits[p])) continue;
        const bool control = p + 1 < g->qubits.size();
        if (!(x_type_kind(g->kind) && control)) {
          return fail(i, std::string(kind_name(g->kind)) + " changes oracle wire " +
                             std::to_string(g->qubits[p]));
        }
      }
    } else if (const MeasureZ* m = std::get_if<MeasureZ>(&e)) {
      if (q.count(m->qubit)) return fail(i, "measurement on oracle wire");
    } else if (const AllocAncilla* a = std::get_if<AllocAncilla>(&e)) {
      if (q.count(a->qubit)) return fail(i, "allocation on oracle wire");
    } else if (const Release* rl = std::get_if<Release>(&e)) {
      if (q.count(rl->qubit)) return fail(i, "release of oracle wire");
    }
  }
  return true;
}

Circuit substitute_pair(const Circuit& c, const PairRegion& r, const Circuit& repl,
                        const std::vector<int>& mapping) {
  check_region(c, r);
  Circuit first(c.n_qubits), second(c.n_qubits);
  first.events.assign(c.events.begin() + r.first_begin, c.events.begin() + r.first_end);
  second.events.assign(c.events.begin() + r.second_begin, c.events.begin() + r.second_end);
  if (!(inverse(first).events == second.events)) {
    throw VerifyError("second region is not the inverse of the first");
  }
  const Circuit placed = embed(repl, mapping, c.n_qubits);
  std::set<int> q = pair_wires(c, r);
  q.insert(mapping.begin(), mapping.end());
  std::string why;
  if (!safe_to_substitute(c, r, q, &why)) throw VerifyError("unsafe substitution: " + why);
  Circuit out(c.n_qubits, c.n_cbits);
  out.roles = c.roles;
  auto copy = [&](std::size_t b, std::size_t e) {
    out.events.insert(out.events.end(), c.events.begin() + b, c.events.begin() + e);
  };
  copy(0, r.first_begin);
  out.events.insert(out.events.end(), placed.events.begin(), placed.events.end());
  copy(r.first_end, r.second_begin);
  const Circuit inv = inverse(placed);
  out.events.insert(out.events.end(), inv.events.begin(), inv.events.end());
  copy(r.second_end, c.events.size());
  out.n_cbits = std::max(out.n_cbits, placed.n_cbits);
  return out;
}

// ---------------------------------------------------------------- appendix identities

IdentityResult check_bullet_split(int k) {
  IdentityResult res{"bullet_split", k, false, ""};
  if (k < 3) {
    res.detail = "needs k >= 3";
    return res;
  }
  const int n = k + 2, t = k, a = k + 1;
  auto ctrls = range_of(0, k);
  Circuit lhs(n);
  append_xbullet(lhs, ctrls, t, a);
  Circuit zb(n);
  append_zbullet(zb, range_of(0, k - 1), a, k - 1);
  const SparseMatrix rhs =
      multiply(perm_matrix(n, [&](Index x) { return lambda_x_perm(x, n, ctrls, t); }),
               unitary_of(zb));
  res.holds = unitary_of(lhs) == rhs;
  res.detail = res.holds ? "unitaries equal" : "unitaries differ";
  return res;
}

namespace {

// Z-bullet on the first k-2 controls, target x_k, dirty x_{k-1}, over `n` wires.
Circuit control_phase(int k, int n) {
  Circuit d(n);
  append_zbullet(d, range_of(0, k - 2), k - 1, k - 2);
  return d;
}

}  // namespace

IdentityResult check_star_and_phase(int k) {
  IdentityResult res{"star_and_phase", k, false, ""};
  if (k < 3) {
    res.detail = "needs k >= 3";
    return res;
  }
  const int n = k + 1;
  auto ctrls = range_of(0, k);
  Circuit lhs(n);
  lhs.alloc(k, AncillaRole::Clean);
  append_xstar(lhs, ctrls, k);
  lhs.g(GateKind::Sdg, {k});
  const auto inputs = inputs_where(n, [&](Index x) { return bit_of(x, n, k) == 0; });
  const SparseMatrix got = columns_of(lhs, inputs);
  const SparseMatrix full =
      multiply(perm_matrix(n, [&](Index x) { return lambda_x_perm(x, n, ctrls, k); }),
               unitary_of(control_phase(k, n)));
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    if (got.columns[j] != full.columns[inputs[j]]) {
      res.detail = "column " + bits(inputs[j], n) + " differs";
      return res;
    }
  }
  res.holds = true;
  res.detail = "columns with a clean ancilla equal";
  return res;
}

IdentityResult check_relative_uncompute(int k) {
  IdentityResult res{"relative_uncompute", k, false, ""};
  if (k < 4) {
    res.detail = "needs k >= 4";
    return res;
  }
  const ConstructionSpec spec = kand_terminate(k, "relative");
  const int n = k + 1;
  const auto inputs = inputs_where(n, spec.target.domain);
  const BranchMap bm = kraus_of(spec.circuit, inputs);
  const SparseMatrix dinv = unitary_of(inverse(control_phase(k, k)));
  SparseMatrix target(Index{1} << bm.kept_qubits.size(), inputs.size());
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    const Index p = project_index(inputs[j], n, bm.kept_qubits);
    target.set(p, j, dinv.at(p, p));
  }
  const ChannelReport cr = channel_equals(bm, target, ChannelMode::Exact);
  res.holds = cr.equal && trace_preserving(bm);
  res.detail = cr.equal ? "channel equals the inverse control phase" : cr.diagnostic;
  return res;
}

std::vector<IdentityResult> appendix_identities() {
  return {check_bullet_split(3),       check_bullet_split(4),       check_star_and_phase(4),
          check_star_and_phase(5),     check_relative_uncompute(4), check_relative_uncompute(5)};
}

// ---------------------------------------------------------------- ledger

std::string set_str(const std::set<int>& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    out += (first ? "" : ", ") + std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::vector<LedgerEntry> table_ledger(int kmax) {
  std::vector<LedgerEntry> out;
  auto add = [&](const std::string& row, const ConstructionSpec& s) {
    LedgerEntry e;
    e.row = row;
    e.construction = s.name;
    e.k = s.k;
    e.m = s.m;
    e.variant = s.variant;
    e.formula = s.formula;
    e.validity = s.validity;
    e.expected = s.formula_tcounts;
    e.measured = t_count(s.circuit).values();
    e.match = e.expected == e.measured;
    out.push_back(std::move(e));
  };
  auto reference = [&](const std::string& row, const std::string& formula,
                       const std::string& validity) {
    LedgerEntry e;
    e.row = row;
    e.formula = formula;
    e.validity = validity;
    e.reference_only = true;
    out.push_back(std::move(e));
  };
  auto pairs = [&](const std::string& row, ConstructionSpec (*make)(const Oracle&, const Oracle&)) {
    for (const auto& f : toy_oracle_names()) {
      for (const auto& g : toy_oracle_names()) add(row, make(toy_oracle(f), toy_oracle(g)));
    }
  };
  pairs("oracle product, two clean ancillas", oracle_mult_clean);
  pairs("oracle product, matched, no ancilla", oracle_mult_matched);
  pairs("oracle product, unmatched, no ancilla", oracle_mult_unmatched);
  reference("k-control X, prior art", "16(k-1)", "k >= 6");
  for (int k = 2; k <= kmax; ++k) add("k-control X-bullet, one dirty ancilla", lambda_x_bullet_dirty(k));
  for (int k = 4; k <= kmax; ++k) {
    add("k-control X, one dirty ancilla", lambda_x_dirty(k, "matched"));
    add("k-control X, one dirty ancilla", lambda_x_dirty(k, "phase_cleanup"));
  }
  for (int k = 4; k <= kmax; ++k) add("k-control X, clean ancilla, measurement", jones_lambda_x(k));
  reference("k-control iX, prior art", "16(k-2)+4", "k >= 6");
  for (int k = 4; k <= kmax; ++k) add("k-control iX, no ancilla", cix(k));
  for (int k = 5; k <= kmax; ++k) add("k-control X-bullet, no ancilla", cxbullet(k));
  for (int k = 3; k <= kmax; ++k) add("k-control X-star, no ancilla", cxstar(k));
  for (int k = 4; k <= kmax; ++k) {
    for (int m = 1; m <= k - 3; ++m) add("k-control X-star, m clean ancillas", cxstar_with_ancillas(k, m));
  }
  for (int k = 2; k <= kmax; ++k) {
    add("f_k oracle, one dirty ancilla", fk_dirty(k, FkVariant::Plain));
    add("f_k oracle, one dirty ancilla", fk_dirty(k, FkVariant::Maslov));
  }
  for (int k = 2; k <= kmax; ++k) {
    add("f_k oracle, relative phase", fk_circuit(k, FkVariant::Plain));
    add("f_k oracle, relative phase", fk_circuit(k, FkVariant::Maslov));
  }
  add("3-AND, prior art", and3_init());
  add("3-AND uncompute", and3_terminate());
  for (int k = 4; k <= kmax; ++k) add("k-AND, exact", kand_init(k, "iX"));
  for (int k = 6; k <= kmax; ++k) add("k-AND uncompute, exact", kand_terminate(k, "exact"));
  for (int k = 3; k <= kmax; ++k) add("k-AND, relative phase", kand_init(k, "star"));
  for (int k = 4; k <= kmax; ++k) add("k-AND uncompute, relative phase", kand_terminate(k, "relative"));
  return out;
}

std::string render_table(const std::vector<LedgerEntry>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(42) << "row" << std::setw(24) << "construction" << std::setw(4)
     << "k" << std::setw(4) << "m" << std::setw(16) << "variant" << std::setw(22) << "formula"
     << std::setw(14) << "expected" << std::setw(14) << "measured" << "status\n";
  for (const auto& r : rows) {
    os << std::setw(42) << r.row << std::setw(24) << (r.reference_only ? "-" : r.construction)
       << std::setw(4) << (r.reference_only ? "-" : std::to_string(r.k)) << std::setw(4)
       << (r.reference_only ? "-" : std::to_string(r.m)) << std::setw(16)
       << (r.variant.empty() ? "-" : r.variant) << std::setw(22) << r.formula << std::setw(14)
       << (r.reference_only ? "-" : set_str(r.expected)) << std::setw(14)
       << (r.reference_only ? "-" : set_str(r.measured))
       << (r.reference_only ? "reference" : r.match ? "ok" : "MISMATCH") << "\n";
  }
  return os.str();
}

}  // namespace rtof
