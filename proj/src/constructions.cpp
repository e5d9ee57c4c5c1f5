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

#include "rtof/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace rtof {

namespace {

using G = GateKind;

std::vector<int> range_of(int lo, int hi) {
  std::vector<int> v(std::max(0, hi - lo));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

// Gates of `body` appended in reverse with daggers.
void append_inverse(Circuit& c, const Circuit& body) { c.append(inverse(body)); }

Circuit fragment(int n) { return Circuit(n); }

// Cost of the exact dirty-ancilla multi-controlled X helper.
int exact_mcx_tcount(int m) {
  if (m <= 1) return 0;
  if (m == 2) return 7;
  return 16 * (m - 2);
}

// Embeds a 3-wire toy oracle onto (x1, x2, target).
Circuit oracle_on(const Oracle& o, int x1, int x2, int t, int total) {
  return embed(o.circuit, {x1, x2, t}, total);
}

std::pair<std::string, std::string> split_pair(const std::string& v) {
  const auto comma = v.find(',');
  if (comma == std::string::npos) throw RangeError("oracle pair must look like 'f,g': " + v);
  return {v.substr(0, comma), v.substr(comma + 1)};
}

FkVariant parse_fk_variant(const std::string& v) {
  if (v == "plain") return FkVariant::Plain;
  if (v == "maslov") return FkVariant::Maslov;
  throw RangeError("unknown fk variant: " + v);
}

const char* fk_variant_name(FkVariant v) { return v == FkVariant::Plain ? "plain" : "maslov"; }

}  // namespace

const char* target_kind_name(TargetKind k) {
  switch (k) {
    case TargetKind::Exact: return "exact";
    case TargetKind::Relative: return "relative";
    case TargetKind::Channel: return "channel";
    case TargetKind::RelativeChannel: return "relative-channel";
  }
  return "?";
}

int and_of(Index x, int n, const std::vector<int>& qs) {
  for (int q : qs) {
    if (!bit_of(x, n, q)) return 0;
  }
  return 1;
}

Index lambda_x_perm(Index x, int n, const std::vector<int>& ctrls, int t) {
  return and_of(x, n, ctrls) ? x ^ qubit_mask(n, t) : x;
}

// ---------------------------------------------------------------- oracles

std::vector<std::string> toy_oracle_names() { return {"x1", "x2", "toffoli", "ccix"}; }

Oracle toy_oracle(const std::string& name) {
  Oracle o;
  o.name = name;
  o.circuit = Circuit(3);
  o.circuit.set_role(2, QubitRole::Target);
  if (name == "x1") {
    o.circuit.g(G::CX, {0, 2});
    o.f = BooleanFn::var(2, 0);
  } else if (name == "x2") {
    o.circuit.g(G::CX, {1, 2});
    o.f = BooleanFn::var(2, 1);
  } else if (name == "toffoli") {
    o.circuit.g(G::Toffoli, {0, 1, 2});
    o.f = BooleanFn::monomial(2, 0b11);
    o.tau = 7;
  } else if (name == "ccix") {
    o.circuit.g(G::CCiX, {0, 1, 2});
    o.f = BooleanFn::monomial(2, 0b11);
    o.tau = 4;
    o.exact = false;
  } else {
    throw RangeError("unknown toy oracle: " + name);
  }
  return o;
}

// ---------------------------------------------------------------- builders

void append_zbullet(Circuit& c, const std::vector<int>& ctrls, int t, int dirty) {
  const int m = static_cast<int>(ctrls.size());
  if (m < 1) throw RangeError("Z-bullet needs at least one control");
  if (m == 1) {
    c.g(G::CZ, {ctrls[0], t});
    return;
  }
  if (m == 2) {
    c.g(G::CCiZ, {ctrls[0], ctrls[1], t});
    return;
  }
  const int last = ctrls.back();
  std::vector<int> rest(ctrls.begin(), ctrls.end() - 1);
  c.g(G::CCiX, {last, t, dirty});
  append_zbullet(c, rest, dirty, last);
  c.g(G::CCiXdg, {last, t, dirty});
}

void append_xbullet(Circuit& c, const std::vector<int>& ctrls, int t, int dirty) {
  const int m = static_cast<int>(ctrls.size());
  if (m == 1) {
    c.g(G::CX, {ctrls[0], t});
    return;
  }
  if (m == 2) {
    c.g(G::CCiX, {ctrls[0], ctrls[1], t});
    return;
  }
  c.g(G::H, {t});
  append_zbullet(c, ctrls, t, dirty);
  c.g(G::H, {t});
}

void append_xstar(Circuit& c, const std::vector<int>& ctrls, int t) {
  const int m = static_cast<int>(ctrls.size());
  if (m < 3) throw RangeError("X-star body needs at least 3 controls");
  const int last = ctrls.back();
  std::vector<int> rest(ctrls.begin(), ctrls.end() - 1);
  c.g(G::H, {t}).g(G::T, {t}).g(G::CX, {last, t}).g(G::Tdg, {t});
  append_xbullet(c, rest, t, last);
  c.g(G::T, {t}).g(G::CX, {last, t}).g(G::Tdg, {t}).g(G::H, {t});
}

void append_lambda_x_dirty(Circuit& c, const std::vector<int>& ctrls, int t, int dirty) {
  const int m = static_cast<int>(ctrls.size());
  if (m < 1) throw RangeError("multi-controlled X needs a control");
  if (m == 1) {
    c.g(G::CX, {ctrls[0], t});
    return;
  }
  if (m == 2) {
    c.g(G::Toffoli, {ctrls[0], ctrls[1], t});
    return;
  }
  const int last = ctrls.back();
  std::vector<int> rest(ctrls.begin(), ctrls.end() - 1);
  Circuit zb = fragment(c.n_qubits);
  append_zbullet(zb, rest, dirty, last);
  c.g(G::H, {t}).g(G::CCiX, {last, t, dirty});
  c.append(zb);
  c.g(G::CCiXdg, {last, t, dirty});
  append_inverse(c, zb);
  c.g(G::H, {t});
}

void append_gidney_init(Circuit& c, int a, int b, int anc) {
  c.alloc(anc, AncillaRole::Clean);
  c.g(G::CCiX, {a, b, anc}).g(G::Sdg, {anc});
}

void append_gidney_terminate(Circuit& c, int a, int b, int anc, int cbit) {
  c.g(G::H, {anc}).measz(anc, cbit);
  c.cg(cbit, 1, G::CZ, {a, b});
  c.release(anc, ReleaseExpect::Measured);
}

namespace {

void append_skeleton(Circuit& c, int t, const Circuit& inner_a, const Circuit& inner_b) {
  c.g(G::H, {t}).g(G::Tdg, {t});
  c.append(inner_b);
  c.g(G::T, {t});
  c.append(inner_a);
  c.g(G::Tdg, {t});
  append_inverse(c, inner_b);
  c.g(G::T, {t});
  append_inverse(c, inner_a);
  c.g(G::H, {t});
}

std::pair<std::vector<int>, std::vector<int>> split_groups(int k) {
  return {range_of(0, k / 2), range_of(k / 2, k)};
}

Target exact_lambda_x(int n, std::vector<int> ctrls, int t) {
  Target tg;
  tg.kind = TargetKind::Exact;
  tg.perm = [=](Index x) { return lambda_x_perm(x, n, ctrls, t); };
  tg.description = "multi-controlled X";
  return tg;
}

Target relative_lambda_x(int n, std::vector<int> ctrls, int t, std::vector<int> support) {
  Target tg = exact_lambda_x(n, ctrls, t);
  tg.kind = TargetKind::Relative;
  tg.support = std::move(support);
  tg.description = "multi-controlled X up to a relative phase";
  return tg;
}

std::function<bool(Index)> zero_on(int n, std::vector<int> qs) {
  return [=](Index x) {
    for (int q : qs) {
      if (bit_of(x, n, q)) return false;
    }
    return true;
  };
}

std::function<bool(Index)> holds_and(int n, std::vector<int> ctrls, int anc) {
  return [=](Index x) { return bit_of(x, n, anc) == and_of(x, n, ctrls); };
}

// Measurement-based uncompute of anc = AND(ctrls); uses cbits c0, c0+1.
void append_kand_terminate(Circuit& c, const std::vector<int>& ctrls, int anc, int c0,
                           bool exact) {
  const int k = static_cast<int>(ctrls.size());
  const int c1 = c0 + 1;
  const int xa = ctrls[k - 2];
  const int xb = ctrls[k - 1];
  std::vector<int> head(ctrls.begin(), ctrls.end() - 2);
  c.g(G::H, {anc}).measz(anc, c0);
  c.cg(c0, 1, G::X, {anc});
  c.release(anc, ReleaseExpect::Zero).alloc(anc, AncillaRole::Clean);
  c.cg(c0, 1, G::CCiX, {xa, xb, anc});
  c.cg(c0, 1, G::Sdg, {anc});
  if (exact) {
    Circuit fix = fragment(c.n_qubits);
    fix.g(G::H, {anc});
    append_lambda_x_dirty(fix, head, anc, xa);
    fix.g(G::H, {anc});
    c.append_conditioned(fix, c0, 1);
  } else {
    Circuit zb = fragment(c.n_qubits);
    append_zbullet(zb, head, anc, xa);
    c.g(G::CX, {xb, anc});
    append_inverse(c, zb);
    c.g(G::CX, {xb, anc});
  }
  c.cg(c0, 1, G::H, {anc});
  c.measz(anc, c1);
  c.cg(c1, 1, G::CZ, {xa, xb});
  c.release(anc, ReleaseExpect::Measured);
}

void append_kand_init(Circuit& c, const std::vector<int>& ctrls, int anc, bool star) {
  c.alloc(anc, AncillaRole::Clean);
  if (star) {
    append_xstar(c, ctrls, anc);
  } else {
    const int k = static_cast<int>(ctrls.size());
    std::vector<int> a(ctrls.begin(), ctrls.begin() + k / 2);
    std::vector<int> b(ctrls.begin() + k / 2, ctrls.end());
    Circuit ia = fragment(c.n_qubits), ib = fragment(c.n_qubits);
    append_xbullet(ia, a, anc, b[0]);
    append_xbullet(ib, b, anc, a[0]);
    append_skeleton(c, anc, ia, ib);
  }
  c.g(G::Sdg, {anc});
}

ConstructionSpec base_spec(std::string name, int k, Circuit c) {
  ConstructionSpec s;
  s.name = std::move(name);
  s.k = k;
  s.circuit = std::move(c);
  return s;
}

}  // namespace

// ---------------------------------------------------------------- fixed gadgets

ConstructionSpec ccix() {
  Circuit c(3);
  c.set_role(2, QubitRole::Target);
  c.g(G::CCiX, {0, 1, 2});
  ConstructionSpec s = base_spec("ccix", 2, c);
  s.target = exact_lambda_x(3, {0, 1}, 2);
  s.target.phase = [](Index x) { return and_of(x, 3, {0, 1}) * 2; };
  s.target.support = {0, 1};
  s.target.description = "doubly-controlled iX";
  s.formula = "4";
  s.formula_tcounts = {4};
  s.validity = "fixed";
  return s;
}

ConstructionSpec ccix_dg() {
  Circuit c(3);
  c.set_role(2, QubitRole::Target);
  c.g(G::CCiXdg, {0, 1, 2});
  ConstructionSpec s = base_spec("ccix_dg", 2, c);
  s.target = exact_lambda_x(3, {0, 1}, 2);
  s.target.phase = [](Index x) { return and_of(x, 3, {0, 1}) * 6; };
  s.target.support = {0, 1};
  s.target.description = "inverse of doubly-controlled iX";
  s.formula = "4";
  s.formula_tcounts = {4};
  s.validity = "fixed";
  return s;
}

ConstructionSpec maslov_toffoli4() {
  Circuit c(4);
  c.set_role(3, QubitRole::Target);
  c.g(G::RC3X, {0, 1, 2, 3});
  ConstructionSpec s = base_spec("maslov_toffoli4", 3, c);
  s.target = exact_lambda_x(4, {0, 1, 2}, 3);
  s.target.phase = [](Index x) {
    const int a = and_of(x, 4, {0, 1});
    const int b = and_of(x, 4, {0, 1, 2});
    return 2 * (a + b) + 4 * (a & bit_of(x, 4, 3));
  };
  s.target.support = {0, 1, 2, 3};
  s.target.description = "3-control X with phase i^(x1x2 + x1x2x3) (-1)^(x1x2 y)";
  s.formula = "8";
  s.formula_tcounts = {8};
  s.validity = "fixed";
  return s;
}

ConstructionSpec giles_selinger_skeleton(int k, const Circuit& inner_a, const Circuit& inner_b) {
  require(k >= 2, "skeleton needs k >= 2");
  const int n = k + 1;
  require(inner_a.n_qubits == n && inner_b.n_qubits == n, "inner circuits must span k+1 qubits");
  Circuit c(n);
  c.set_role(k, QubitRole::Target);
  append_skeleton(c, k, inner_a, inner_b);
  ConstructionSpec s = base_spec("giles_selinger", k, c);
  auto ctrls = range_of(0, k);
  s.target = relative_lambda_x(n, ctrls, k, ctrls);
  s.target.phase = [=](Index x) { return 2 * and_of(x, n, ctrls); };
  s.target.description = "multi-controlled iX";
  s.formula = "4 + 2*T(inner_a) + 2*T(inner_b)";
  s.formula_tcounts = {4 + 2 * t_count(inner_a).max + 2 * t_count(inner_b).max};
  s.validity = "k >= 2";
  return s;
}

ConstructionSpec giles_selinger_exact(int k) {
  require(k >= 2, "giles_selinger: k >= 2");
  const int n = k + 1;
  auto [a, b] = split_groups(k);
  Circuit ia(n), ib(n);
  append_lambda_x_dirty(ia, a, k, b[0]);
  append_lambda_x_dirty(ib, b, k, a[0]);
  ConstructionSpec s = giles_selinger_skeleton(k, ia, ib);
  s.formula_tcounts = {4 + 2 * exact_mcx_tcount(static_cast<int>(a.size())) +
                       2 * exact_mcx_tcount(static_cast<int>(b.size()))};
  s.notes.push_back("inner gates are exact multi-controlled X on each control half");
  return s;
}

// ---------------------------------------------------------------- measurement gadgets

ConstructionSpec jones_toffoli() {
  Circuit c(4, 1);
  c.set_role(2, QubitRole::Target);
  append_gidney_init(c, 0, 1, 3);
  c.g(G::CX, {3, 2});
  append_gidney_terminate(c, 0, 1, 3, 0);
  ConstructionSpec s = base_spec("jones_toffoli", 2, c);
  s.target.kind = TargetKind::Channel;
  s.target.perm = [](Index x) { return lambda_x_perm(x, 4, {0, 1}, 2); };
  s.target.domain = zero_on(4, {3});
  s.target.description = "Toffoli as a channel, clean ancilla consumed";
  s.formula = "4";
  s.formula_tcounts = {4};
  s.validity = "fixed";
  return s;
}

ConstructionSpec gidney_and_init() {
  Circuit c(3);
  append_gidney_init(c, 0, 1, 2);
  ConstructionSpec s = base_spec("gidney_and_init", 2, c);
  s.target = exact_lambda_x(3, {0, 1}, 2);
  s.target.domain = zero_on(3, {2});
  s.target.description = "|x1 x2 0> -> |x1 x2 x1x2>";
  s.formula = "4";
  s.formula_tcounts = {4};
  s.validity = "fixed";
  return s;
}

ConstructionSpec gidney_and_terminate() {
  Circuit c(3, 1);
  c.set_role(2, QubitRole::Clean);
  append_gidney_terminate(c, 0, 1, 2, 0);
  ConstructionSpec s = base_spec("gidney_and_terminate", 2, c);
  s.target.kind = TargetKind::Channel;
  s.target.perm = [](Index x) { return x; };
  s.target.domain = holds_and(3, {0, 1}, 2);
  s.target.description = "|x1 x2 x1x2> -> |x1 x2>, ancilla measured";
  s.formula = "0";
  s.formula_tcounts = {0};
  s.validity = "fixed";
  return s;
}

ConstructionSpec gidney_and_roundtrip() {
  Circuit c(3, 1);
  append_gidney_init(c, 0, 1, 2);
  append_gidney_terminate(c, 0, 1, 2, 0);
  ConstructionSpec s = base_spec("gidney_and_roundtrip", 2, c);
  s.target.kind = TargetKind::Channel;
  s.target.perm = [](Index x) { return x; };
  s.target.domain = zero_on(3, {2});
  s.target.description = "identity channel on the controls";
  s.formula = "4";
  s.formula_tcounts = {4};
  s.validity = "fixed";
  return s;
}

// ---------------------------------------------------------------- Bennett family

namespace {

Target oracle_target(int n, const BooleanFn& f, int t) {
  Target tg;
  tg.kind = TargetKind::Exact;
  tg.perm = [=](Index x) {
    std::uint64_t packed = 0;
    for (int i = 0; i < f.n_vars; ++i) packed |= std::uint64_t(bit_of(x, n, i)) << i;
    return eval_mask(f, packed) ? x ^ qubit_mask(n, t) : x;
  };
  tg.description = "y ^= f(x)";
  return tg;
}

}  // namespace

ConstructionSpec bennett(const Oracle& f) {
  Circuit c(4);
  c.set_role(2, QubitRole::Target);
  c.alloc(3, AncillaRole::Clean);
  Circuit body = oracle_on(f, 0, 1, 3, 4);
  c.append(body);
  c.g(G::CX, {3, 2});
  append_inverse(c, body);
  c.release(3, ReleaseExpect::Zero);
  ConstructionSpec s = base_spec("bennett", 2, c);
  s.variant = f.name;
  s.target = oracle_target(4, f.f, 2);
  s.target.domain = zero_on(4, {3});
  s.formula = "2*tau_f";
  s.formula_tcounts = {2 * f.tau};
  s.validity = "any oracle";
  return s;
}

ConstructionSpec bennett_dirty(const Oracle& f) {
  Circuit c(4);
  c.set_role(2, QubitRole::Target);
  c.set_role(3, QubitRole::Dirty);
  Circuit body = oracle_on(f, 0, 1, 3, 4);
  c.g(G::CX, {3, 2});
  c.append(body);
  c.g(G::CX, {3, 2});
  append_inverse(c, body);
  ConstructionSpec s = base_spec("bennett_dirty", 2, c);
  s.variant = f.name;
  s.target = oracle_target(4, f.f, 2);
  s.formula = "2*tau_f";
  s.formula_tcounts = {2 * f.tau};
  s.validity = "any oracle";
  return s;
}

ConstructionSpec phase_bennett(const Oracle& f) {
  Circuit c(4);
  c.set_role(2, QubitRole::Target);
  c.alloc(3, AncillaRole::Clean);
  c.g(G::H, {3}).g(G::CX, {3, 2});
  c.append(oracle_on(f, 0, 1, 3, 4));
  c.g(G::CX, {3, 2}).g(G::H, {3});
  c.release(3, ReleaseExpect::Zero);
  ConstructionSpec s = base_spec("phase_bennett", 2, c);
  s.variant = f.name;
  s.target = oracle_target(4, f.f, 2);
  s.target.domain = zero_on(4, {3});
  if (!f.exact) {
    s.target.kind = TargetKind::Relative;
    s.target.support = {0, 1};
  }
  s.formula = "tau_f";
  s.formula_tcounts = {f.tau};
  s.validity = "exact oracle for an exact result";
  return s;
}

ConstructionSpec relative_tof4_dirty(const std::string& variant) {
  require(variant == "relative", "relative_tof4_dirty: unknown variant " + variant);
  // x1..x4 = 0..3, a = 4, b = 5, y = 6
  Circuit c(7);
  c.set_role(4, QubitRole::Dirty);
  c.set_role(5, QubitRole::Dirty);
  c.set_role(6, QubitRole::Target);
  c.g(G::H, {4}).g(G::H, {5});
  c.g(G::Toffoli, {3, 5, 6});
  c.g(G::Toffoli, {2, 4, 5});
  c.g(G::Toffoli, {0, 1, 4});
  c.g(G::Toffoli, {2, 4, 5});
  c.g(G::Toffoli, {3, 5, 6});
  c.g(G::H, {4}).g(G::H, {5});
  ConstructionSpec s = base_spec("relative_tof4_dirty", 4, c);
  s.variant = variant;
  s.target = exact_lambda_x(7, {0, 1, 2, 3}, 6);
  s.target.phase = [](Index x) {
    const int p = and_of(x, 7, {0, 1});
    const int q = and_of(x, 7, {0, 1, 2});
    return 4 * ((bit_of(x, 7, 4) & p) ^ (bit_of(x, 7, 5) & q));
  };
  s.target.support = {0, 1, 2, 4, 5};
  s.target.description = "4-control X with phase (-1)^(a x1x2 + b x1x2x3) on dirty a, b";
  s.formula = "5 Toffoli gates (recorded)";
  s.formula_tcounts = {35};
  s.validity = "fixed";
  return s;
}

// ---------------------------------------------------------------- oracle products

ConstructionSpec oracle_mult_clean(const Oracle& f, const Oracle& g) {
  // x1 = 0, x2 = 1, y = 2, a1 = 3, a2 = 4
  Circuit c(5);
  c.set_role(2, QubitRole::Target);
  Circuit fa = oracle_on(f, 0, 1, 3, 5);
  c.alloc(3, AncillaRole::Clean).alloc(4, AncillaRole::Clean);
  c.append(fa);
  c.g(G::H, {2}).g(G::CCiX, {3, 2, 4}).g(G::H, {4});
  c.append(oracle_on(g, 0, 1, 4, 5));
  c.g(G::H, {4}).g(G::CCiXdg, {3, 2, 4}).g(G::H, {2});
  append_inverse(c, fa);
  c.release(3, ReleaseExpect::Zero).release(4, ReleaseExpect::Zero);
  ConstructionSpec s = base_spec("oracle_mult_clean", 2, c);
  s.variant = f.name + "," + g.name;
  s.target = oracle_target(5, multiply(f.f, g.f), 2);
  s.target.domain = zero_on(5, {3, 4});
  if (!g.exact) {
    s.target.kind = TargetKind::Relative;
    s.target.support = {0, 1};
  }
  s.formula = "2*tau_f + tau_g + 8";
  s.formula_tcounts = {2 * f.tau + g.tau + 8};
  s.validity = "any oracles; exact when g is exact";
  return s;
}

ConstructionSpec oracle_mult_matched(const Oracle& f, const Oracle& g) {
  Circuit c(3);
  c.set_role(2, QubitRole::Target);
  c.g(G::H, {2}).g(G::T, {2});
  c.append(f.circuit);
  c.g(G::Tdg, {2});
  c.append(g.circuit);
  c.g(G::T, {2});
  c.append(f.circuit);
  c.g(G::Tdg, {2});
  c.append(g.circuit);
  c.g(G::H, {2});
  ConstructionSpec s = base_spec("oracle_mult_matched", 2, c);
  s.variant = f.name + "," + g.name;
  s.target = oracle_target(3, multiply(f.f, g.f), 2);
  s.target.kind = TargetKind::Relative;
  s.target.support = {0, 1};
  s.formula = "2*tau_f + 2*tau_g + 4";
  s.formula_tcounts = {2 * f.tau + 2 * g.tau + 4};
  s.validity = "any oracles with phase on the inputs only";
  return s;
}

ConstructionSpec oracle_mult_unmatched(const Oracle& f, const Oracle& g) {
  Circuit c(3);
  c.set_role(2, QubitRole::Target);
  c.g(G::H, {2}).g(G::T, {2});
  c.append(f.circuit);
  c.g(G::Tdg, {2});
  c.append(g.circuit);
  c.g(G::T, {2});
  c.append(f.circuit);
  c.g(G::Tdg, {2}).g(G::H, {2});
  ConstructionSpec s = base_spec("oracle_mult_unmatched", 2, c);
  s.variant = f.name + "," + g.name;
  s.target = oracle_target(3, multiply(f.f, g.f), 2);
  s.target.kind = TargetKind::Relative;
  s.target.support = {0, 1, 2};
  s.formula = "2*tau_f + tau_g + 4";
  s.formula_tcounts = {2 * f.tau + g.tau + 4};
  s.validity = "any oracles with phase on the inputs only";
  return s;
}

// ---------------------------------------------------------------- multi-controlled X

ConstructionSpec lambda_x_bullet_dirty(int k) {
  require(k >= 2, "lambda_x_bullet_dirty: k >= 2");
  const int n = k + 2;
  Circuit c(n);
  c.set_role(k, QubitRole::Target);
  c.set_role(k + 1, QubitRole::Dirty);
  auto ctrls = range_of(0, k);
  append_xbullet(c, ctrls, k, k + 1);
  ConstructionSpec s = base_spec("lambda_x_bullet_dirty", k, c);
  auto sup = ctrls;
  sup.push_back(k + 1);
  s.target = relative_lambda_x(n, ctrls, k, sup);
  s.formula = "8(k-2)+4";
  s.formula_tcounts = {8 * (k - 2) + 4};
  s.validity = "k >= 2";
  return s;
}

ConstructionSpec lambda_x_dirty(int k, const std::string& variant) {
  require(k >= 4, "lambda_x_dirty: k >= 4");
  const int n = k + 2;
  const int t = k, d = k + 1;
  Circuit c(n);
  c.set_role(t, QubitRole::Target);
  c.set_role(d, QubitRole::Dirty);
  auto ctrls = range_of(0, k);
  if (variant == "matched") {
    append_lambda_x_dirty(c, ctrls, t, d);
  } else if (variant == "phase_cleanup") {
    std::vector<int> rest(ctrls.begin(), ctrls.end() - 1);
    Circuit zb(n);
    append_zbullet(zb, rest, d, ctrls.back());
    append_xbullet(c, ctrls, t, d);
    append_inverse(c, zb);
  } else {
    throw RangeError("lambda_x_dirty: unknown variant " + variant);
  }
  ConstructionSpec s = base_spec("lambda_x_dirty", k, c);
  s.variant = variant;
  s.target = exact_lambda_x(n, ctrls, t);
  s.formula = "16(k-2)";
  s.formula_tcounts = {16 * (k - 2)};
  s.validity = "k >= 4";
  return s;
}

ConstructionSpec lambda_z_relative(int k) {
  require(k >= 2, "lambda_z_relative: k >= 2");
  const int n = k + 2;
  Circuit c(n);
  c.set_role(k, QubitRole::Target);
  c.set_role(k + 1, QubitRole::Dirty);
  auto ctrls = range_of(0, k);
  append_zbullet(c, ctrls, k, k + 1);
  ConstructionSpec s = base_spec("lambda_z_relative", k, c);
  s.target.kind = TargetKind::Relative;
  s.target.perm = [](Index x) { return x; };
  s.target.phase = [=](Index x) { return 4 * (and_of(x, n, ctrls) & bit_of(x, n, k)); };
  s.target.support = ctrls;
  s.target.support.push_back(k + 1);
  s.target.description = "multi-controlled Z up to a phase on the controls and the dirty wire";
  s.formula = "8(k-2)+4";
  s.formula_tcounts = {8 * (k - 2) + 4};
  s.validity = "k >= 2";
  return s;
}

ConstructionSpec cix(int k) {
  require(k >= 4, "cix: k >= 4");
  const int n = k + 1;
  auto [a, b] = split_groups(k);
  Circuit ia(n), ib(n);
  append_xbullet(ia, a, k, b[0]);
  append_xbullet(ib, b, k, a[0]);
  ConstructionSpec s = giles_selinger_skeleton(k, ia, ib);
  s.name = "cix";
  s.formula = "16(k-3)+4";
  s.formula_tcounts = {16 * (k - 3) + 4};
  s.validity = "k >= 4";
  return s;
}

ConstructionSpec cxstar(int k) {
  require(k >= 3, "cxstar: k >= 3");
  const int n = k + 1;
  Circuit c(n);
  c.set_role(k, QubitRole::Target);
  auto ctrls = range_of(0, k);
  append_xstar(c, ctrls, k);
  ConstructionSpec s = base_spec("cxstar", k, c);
  s.target = relative_lambda_x(n, ctrls, k, range_of(0, n));
  s.formula = "8(k-2)";
  s.formula_tcounts = {8 * (k - 2)};
  s.validity = "k >= 3";
  return s;
}

ConstructionSpec cxstar_with_ancillas(int k, int m) {
  require(k >= 3, "cxstar_with_ancillas: k >= 3");
  require(m >= 0 && m <= k - 3, "cxstar_with_ancillas: need 0 <= m <= k-3");
  const int n = k + 1 + m;
  Circuit c(n, m);
  c.set_role(k, QubitRole::Target);
  auto anc = [&](int i) { return k + i; };  // i = 1..m
  for (int i = 1; i <= m; ++i) {
    const int left = i == 1 ? 0 : anc(i - 1);
    append_gidney_init(c, left, i, anc(i));
  }
  std::vector<int> ctrls;
  if (m > 0) ctrls.push_back(anc(m));
  for (int q = m == 0 ? 0 : m + 1; q < k; ++q) ctrls.push_back(q);
  append_xstar(c, ctrls, k);
  for (int i = m; i >= 1; --i) {
    const int left = i == 1 ? 0 : anc(i - 1);
    append_gidney_terminate(c, left, i, anc(i), i - 1);
  }
  ConstructionSpec s = base_spec("cxstar_with_ancillas", k, c);
  s.m = m;
  auto all = range_of(0, k);
  s.target.kind = TargetKind::RelativeChannel;
  s.target.perm = [=](Index x) { return lambda_x_perm(x, n, all, k); };
  s.target.support = range_of(0, k + 1);
  s.target.domain = zero_on(n, range_of(k + 1, n));
  s.target.description = "multi-controlled X with relative phase, m temporary ANDs";
  s.formula = "4m + 8(k-m-2)";
  s.formula_tcounts = {4 * m + 8 * (k - m - 2)};
  s.validity = "k >= 3, 0 <= m <= k-3";
  return s;
}

ConstructionSpec cxbullet(int k) {
  require(k >= 5, "cxbullet: k >= 5");
  const int n = k + 1;
  auto [a, b] = split_groups(k);
  auto star = [&](const std::vector<int>& g) {
    Circuit c(n);
    if (g.size() == 2) {
      c.g(G::CCiX, {g[0], g[1], k});
    } else {
      append_xstar(c, g, k);
    }
    return c;
  };
  Circuit c(n);
  c.set_role(k, QubitRole::Target);
  append_skeleton(c, k, star(a), star(b));
  ConstructionSpec s = base_spec("cxbullet", k, c);
  auto ctrls = range_of(0, k);
  s.target = relative_lambda_x(n, ctrls, k, ctrls);
  s.formula = "16(k-4)+4";
  s.formula_tcounts = {16 * (k - 4) + 4};
  s.validity = "k >= 5";
  if (a.size() == 2) {
    s.notes.push_back("a 2-control half uses CCiX (4 T), so the total exceeds the formula");
  }
  return s;
}

// ---------------------------------------------------------------- f_k oracles

namespace {

void append_fk(Circuit& c, const std::vector<int>& cs, int t, FkVariant v) {
  if (cs.size() == 1) {
    c.g(G::CX, {cs[0], t});
    return;
  }
  if (v == FkVariant::Maslov && cs.size() == 2) {
    c.g(G::H, {t}).g(G::CX, {cs[0], t}).g(G::T, {t}).g(G::CX, {cs[1], t}).g(G::Tdg, {t});
    c.g(G::CX, {cs[0], t}).g(G::T, {t}).g(G::CX, {cs[1], t}).g(G::Tdg, {t}).g(G::H, {t});
    return;
  }
  std::vector<int> rest(cs.begin() + 1, cs.end());
  c.g(G::H, {t}).g(G::T, {t}).g(G::CX, {cs[0], t}).g(G::Tdg, {t});
  append_fk(c, rest, t, v);
  c.g(G::T, {t}).g(G::CX, {cs[0], t}).g(G::Tdg, {t}).g(G::H, {t});
}

}  // namespace

ConstructionSpec fk_circuit(int k, FkVariant variant) {
  require(k >= 2, "fk_circuit: k >= 2");
  const int n = k + 1;
  Circuit c(n);
  c.set_role(k, QubitRole::Target);
  append_fk(c, range_of(0, k), k, variant);
  ConstructionSpec s = base_spec("fk_circuit", k, c);
  s.variant = fk_variant_name(variant);
  s.target = oracle_target(n, fk(k, variant), k);
  s.target.kind = TargetKind::Relative;
  s.target.support = range_of(0, n);
  s.target.description = "y ^= f_k(x) up to a relative phase";
  s.formula = "4(k-1)";
  s.formula_tcounts = {4 * (k - 1)};
  s.validity = "k >= 2";
  return s;
}

ConstructionSpec fk_dirty(int k, FkVariant variant) {
  require(k >= 2, "fk_dirty: k >= 2");
  const int n = k + 2;
  const int y = k, a = k + 1;
  Circuit c(n);
  c.set_role(y, QubitRole::Target);
  c.set_role(a, QubitRole::Dirty);
  Circuit u(n);
  append_fk(u, range_of(0, k), a, variant);
  c.g(G::CX, {a, y});
  c.append(u);
  c.g(G::CX, {a, y});
  append_inverse(c, u);
  ConstructionSpec s = base_spec("fk_dirty", k, c);
  s.variant = fk_variant_name(variant);
  s.target = oracle_target(n, fk(k, variant), y);
  s.formula = "8(k-1)";
  s.formula_tcounts = {8 * (k - 1)};
  s.validity = "k >= 2";
  return s;
}

// ---------------------------------------------------------------- temporary ANDs

ConstructionSpec kand_init(int k, const std::string& variant) {
  const bool star = variant == "star";
  require(star || variant == "iX", "kand_init: variant must be iX or star");
  require(k >= (star ? 3 : 4), star ? "kand_init star: k >= 3" : "kand_init iX: k >= 4");
  const int n = k + 1;
  Circuit c(n);
  auto ctrls = range_of(0, k);
  append_kand_init(c, ctrls, k, star);
  ConstructionSpec s = base_spec("kand_init", k, c);
  s.variant = variant;
  s.target = exact_lambda_x(n, ctrls, k);
  s.target.domain = zero_on(n, {k});
  if (star) {
    s.target.kind = TargetKind::Relative;
    s.target.support = ctrls;
    s.formula = "8(k-2)";
    s.formula_tcounts = {8 * (k - 2)};
    s.validity = "k >= 3";
  } else {
    s.formula = "16(k-3)+4";
    s.formula_tcounts = {16 * (k - 3) + 4};
    s.validity = "k >= 4";
  }
  s.target.description = "|x, 0> -> |x, AND(x)>";
  return s;
}

ConstructionSpec kand_terminate(int k, const std::string& variant) {
  const bool exact = variant == "exact";
  require(exact || variant == "relative", "kand_terminate: variant must be exact or relative");
  require(k >= (exact ? 6 : 4),
          exact ? "kand_terminate exact: k >= 6" : "kand_terminate relative: k >= 4");
  const int n = k + 1;
  Circuit c(n, 2);
  c.set_role(k, QubitRole::Clean);
  auto ctrls = range_of(0, k);
  append_kand_terminate(c, ctrls, k, 0, exact);
  ConstructionSpec s = base_spec("kand_terminate", k, c);
  s.variant = variant;
  s.target.kind = exact ? TargetKind::Channel : TargetKind::RelativeChannel;
  s.target.perm = [](Index x) { return x; };
  s.target.domain = holds_and(n, ctrls, k);
  s.target.description = "|x, AND(x)> -> |x>, ancilla measured";
  if (exact) {
    s.formula = "{0, 16(k-4)+4}";
    s.formula_tcounts = {0, 16 * (k - 4) + 4};
    s.validity = "k >= 6";
  } else {
    s.target.support = ctrls;
    s.formula = "{8(k-4), 8(k-4)+4}";
    s.formula_tcounts = {8 * (k - 4), 8 * (k - 4) + 4};
    s.validity = "k >= 4";
    s.notes.push_back("the Z-bullet correction alone costs 8(k-4)+4 in both branches");
  }
  return s;
}

ConstructionSpec kand_roundtrip(int k, const std::string& variant) {
  const bool exact = variant == "exact";
  require(exact || variant == "relative", "kand_roundtrip: variant must be exact or relative");
  require(k >= (exact ? 6 : 4), exact ? "kand_roundtrip exact: k >= 6" : "kand_roundtrip: k >= 4");
  const int n = k + 1;
  Circuit c(n, 2);
  auto ctrls = range_of(0, k);
  append_kand_init(c, ctrls, k, !exact);
  append_kand_terminate(c, ctrls, k, 0, exact);
  ConstructionSpec s = base_spec("kand_roundtrip", k, c);
  s.variant = variant;
  s.target.kind = TargetKind::Channel;
  s.target.perm = [](Index x) { return x; };
  s.target.domain = zero_on(n, {k});
  s.target.description = "identity channel on the controls";
  const std::set<int> init = exact ? std::set<int>{16 * (k - 3) + 4} : std::set<int>{8 * (k - 2)};
  const std::set<int> term = kand_terminate(k, variant).formula_tcounts;
  for (int i : init) {
    for (int t : term) s.formula_tcounts.insert(i + t);
  }
  s.formula = exact ? "16(k-3)+4 + {0, 16(k-4)+4}" : "8(k-2) + {8(k-4), 8(k-4)+4}";
  s.validity = exact ? "k >= 6" : "k >= 4";
  return s;
}

ConstructionSpec and3_init() {
  Circuit c(4);
  c.alloc(3, AncillaRole::Clean);
  c.g(G::RC3X, {0, 1, 2, 3}).g(G::Sdg, {3});
  ConstructionSpec s = base_spec("and3_init", 3, c);
  s.target = relative_lambda_x(4, {0, 1, 2}, 3, {0, 1, 2});
  s.target.domain = zero_on(4, {3});
  s.target.description = "|x, 0> -> |x, x1x2x3> with phase on the controls";
  s.formula = "8";
  s.formula_tcounts = {8};
  s.validity = "fixed";
  return s;
}

ConstructionSpec and3_terminate() {
  Circuit c(4, 1);
  c.set_role(3, QubitRole::Clean);
  c.g(G::H, {3}).measz(3, 0);
  c.cg(0, 0, G::CSdg, {0, 1});
  c.cg(0, 1, G::CCmiZ, {0, 1, 2});
  c.release(3, ReleaseExpect::Measured);
  ConstructionSpec s = base_spec("and3_terminate", 3, c);
  s.target.kind = TargetKind::RelativeChannel;
  s.target.perm = [](Index x) { return x; };
  s.target.support = {0, 1, 2};
  s.target.domain = holds_and(4, {0, 1, 2}, 3);
  s.target.description = "|x, x1x2x3> -> |x> with phase on the controls";
  s.formula = "{3, 4}";
  s.formula_tcounts = {3, 4};
  s.validity = "fixed";
  return s;
}

ConstructionSpec and3_roundtrip() {
  Circuit c = and3_init().circuit;
  c.append(and3_terminate().circuit);
  ConstructionSpec s = base_spec("and3_roundtrip", 3, c);
  s.target.kind = TargetKind::Channel;
  s.target.perm = [](Index x) { return x; };
  s.target.domain = zero_on(4, {3});
  s.target.description = "identity channel on the controls";
  s.formula = "8 + {3, 4}";
  s.formula_tcounts = {11, 12};
  s.validity = "fixed";
  return s;
}

ConstructionSpec jones_lambda_x(int k) {
  require(k >= 4, "jones_lambda_x: k >= 4");
  const int n = k + 2;
  const int y = k, anc = k + 1;
  Circuit c(n, 2);
  c.set_role(y, QubitRole::Target);
  auto ctrls = range_of(0, k);
  append_kand_init(c, ctrls, anc, true);
  c.g(G::CX, {anc, y});
  append_kand_terminate(c, ctrls, anc, 0, false);
  ConstructionSpec s = base_spec("jones_lambda_x", k, c);
  s.target.kind = TargetKind::Channel;
  s.target.perm = [=](Index x) { return lambda_x_perm(x, n, ctrls, y); };
  s.target.domain = zero_on(n, {anc});
  s.target.description = "multi-controlled X as a channel with one clean ancilla";
  s.formula = "{16(k-3), 16(k-3)+4}";
  s.formula_tcounts = {16 * (k - 3), 16 * (k - 3) + 4};
  s.validity = "k >= 4";
  s.notes.push_back("ancilla is clean; the table row lists |0>, the closing proposition says dirty");
  s.notes.push_back("init 8(k-2) plus relative termination 8(k-4)+{4,8}");
  return s;
}

// ---------------------------------------------------------------- registry

namespace {

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> r;
  auto add = [&](std::string name, std::string summary, int min_k, bool uses_m,
                 std::string def, std::vector<std::string> variants,
                 std::function<ConstructionSpec(const Params&)> make) {
    r.push_back(RegistryEntry{std::move(name), std::move(summary), min_k, uses_m, std::move(def),
                              std::move(variants), std::move(make), {}});
  };
  auto oracle_pairs = [] {
    std::vector<std::string> v;
    for (const auto& f : toy_oracle_names()) {
      for (const auto& g : toy_oracle_names()) v.push_back(f + "," + g);
    }
    return v;
  };
  auto pair_of = [](const Params& p) {
    auto [f, g] = split_pair(p.variant);
    return std::make_pair(toy_oracle(f), toy_oracle(g));
  };

  add("ccix", "doubly-controlled iX (4 T)", 0, false, "", {}, [](const Params&) { return ccix(); });
  add("ccix_dg", "inverse doubly-controlled iX", 0, false, "", {},
      [](const Params&) { return ccix_dg(); });
  add("maslov_toffoli4", "3-control relative-phase X (8 T)", 0, false, "", {},
      [](const Params&) { return maslov_toffoli4(); });
  add("giles_selinger", "multi-controlled iX skeleton with exact inner gates", 2, false, "", {},
      [](const Params& p) { return giles_selinger_exact(p.k); });
  add("jones_toffoli", "measurement-assisted Toffoli (4 T)", 0, false, "", {},
      [](const Params&) { return jones_toffoli(); });
  add("gidney_and_init", "temporary AND computation", 0, false, "", {},
      [](const Params&) { return gidney_and_init(); });
  add("gidney_and_terminate", "temporary AND measurement uncompute", 0, false, "", {},
      [](const Params&) { return gidney_and_terminate(); });
  add("gidney_and_roundtrip", "temporary AND compute then uncompute", 0, false, "", {},
      [](const Params&) { return gidney_and_roundtrip(); });
  add("bennett", "clean-ancilla compute-copy-uncompute", 0, false, "toffoli", toy_oracle_names(),
      [](const Params& p) { return bennett(toy_oracle(p.variant)); });
  add("bennett_dirty", "dirty-ancilla compute-copy-uncompute", 0, false, "toffoli",
      toy_oracle_names(), [](const Params& p) { return bennett_dirty(toy_oracle(p.variant)); });
  add("phase_bennett", "phase-kickback oracle copy", 0, false, "toffoli", toy_oracle_names(),
      [](const Params& p) { return phase_bennett(toy_oracle(p.variant)); });
  add("relative_tof4_dirty", "4-control X with two dirty ancillas", 0, false, "relative",
      {"relative"}, [](const Params& p) { return relative_tof4_dirty(p.variant); });
  add("oracle_mult_clean", "oracle product with two clean ancillas", 0, false, "toffoli,x2",
      oracle_pairs(), [=](const Params& p) {
        auto [f, g] = pair_of(p);
        return oracle_mult_clean(f, g);
      });
  add("oracle_mult_matched", "ancilla-free oracle product, matched", 0, false, "toffoli,x2",
      oracle_pairs(), [=](const Params& p) {
        auto [f, g] = pair_of(p);
        return oracle_mult_matched(f, g);
      });
  add("oracle_mult_unmatched", "ancilla-free oracle product, unmatched", 0, false, "toffoli,x2",
      oracle_pairs(), [=](const Params& p) {
        auto [f, g] = pair_of(p);
        return oracle_mult_unmatched(f, g);
      });
  add("lambda_x_bullet_dirty", "relative-phase multi-controlled X with one dirty ancilla", 2,
      false, "", {}, [](const Params& p) { return lambda_x_bullet_dirty(p.k); });
  add("lambda_x_dirty", "exact multi-controlled X with one dirty ancilla", 4, false, "matched",
      {"matched", "phase_cleanup"},
      [](const Params& p) { return lambda_x_dirty(p.k, p.variant); });
  add("lambda_z_relative", "relative-phase multi-controlled Z", 2, false, "", {},
      [](const Params& p) { return lambda_z_relative(p.k); });
  add("cix", "multi-controlled iX without ancillas", 4, false, "", {},
      [](const Params& p) { return cix(p.k); });
  add("cxstar", "multi-controlled X, phase on controls and target", 3, false, "", {},
      [](const Params& p) { return cxstar(p.k); });
  add("cxstar_with_ancillas", "multi-controlled X with m temporary ANDs", 3, true, "", {},
      [](const Params& p) { return cxstar_with_ancillas(p.k, p.m); });
  add("cxbullet", "multi-controlled X, phase on controls only", 5, false, "", {},
      [](const Params& p) { return cxbullet(p.k); });
  add("fk_circuit", "f_k oracle up to relative phase", 2, false, "plain", {"plain", "maslov"},
      [](const Params& p) { return fk_circuit(p.k, parse_fk_variant(p.variant)); });
  add("fk_dirty", "exact f_k oracle with one dirty ancilla", 2, false, "plain",
      {"plain", "maslov"},
      [](const Params& p) { return fk_dirty(p.k, parse_fk_variant(p.variant)); });
  add("kand_init", "k-AND into a clean ancilla", 3, false, "iX", {"iX", "star"},
      [](const Params& p) { return kand_init(p.k, p.variant); });
  r.back().variant_min_k["iX"] = 4;
  add("kand_terminate", "k-AND measurement uncompute", 4, false, "exact", {"exact", "relative"},
      [](const Params& p) { return kand_terminate(p.k, p.variant); });
  r.back().variant_min_k["exact"] = 6;
  add("kand_roundtrip", "k-AND compute then uncompute", 4, false, "relative",
      {"exact", "relative"}, [](const Params& p) { return kand_roundtrip(p.k, p.variant); });
  r.back().variant_min_k["exact"] = 6;
  add("and3_init", "3-AND with relative phase (8 T)", 0, false, "", {},
      [](const Params&) { return and3_init(); });
  add("and3_terminate", "3-AND measurement uncompute", 0, false, "", {},
      [](const Params&) { return and3_terminate(); });
  add("and3_roundtrip", "3-AND compute then uncompute", 0, false, "", {},
      [](const Params&) { return and3_roundtrip(); });
  add("jones_lambda_x", "measurement-assisted multi-controlled X", 4, false, "", {},
      [](const Params& p) { return jones_lambda_x(p.k); });
  return r;
}

}  // namespace

const std::vector<RegistryEntry>& registry() {
  static const std::vector<RegistryEntry> r = build_registry();
  return r;
}

const RegistryEntry& find_construction(const std::string& name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e;
  }
  throw RangeError("unknown construction: " + name);
}

}  // namespace rtof
