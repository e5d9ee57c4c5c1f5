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

#include <algorithm>
#include <set>

namespace rtof {

namespace {

using Amps = std::map<Index, RingScalar>;

void phase_where(Amps& a, Index mask, int omega_exp) {
  for (auto& [idx, v] : a) {
    if ((idx & mask) == mask) v = v.times_omega(omega_exp);
  }
}

void flip_where(Amps& a, Index ctrl_mask, Index target_mask) {
  Amps out;
  for (auto& [idx, v] : a) {
    Index j = (idx & ctrl_mask) == ctrl_mask ? idx ^ target_mask : idx;
    out.emplace(j, std::move(v));
  }
  a.swap(out);
}

void hadamard(Amps& a, Index m) {
  Amps out;
  for (const auto& [idx, v] : a) {
    RingScalar h = v.times_inv_sqrt2();
    Index lo = idx & ~m;
    Index hi = idx | m;
    out[lo] += h;
    if (idx & m) {
      out[hi] += -h;
    } else {
      out[hi] += h;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.is_zero()) {
      it = out.erase(it);
    } else {
      ++it;
    }
  }
  a.swap(out);
}

void apply_primitive(Amps& a, int n, const Gate& g) {
  auto m = [&](int i) { return qubit_mask(n, g.qubits[i]); };
  switch (g.kind) {
    case GateKind::X: flip_where(a, 0, m(0)); break;
    case GateKind::Z: phase_where(a, m(0), 4); break;
    case GateKind::H: hadamard(a, m(0)); break;
    case GateKind::S: phase_where(a, m(0), 2); break;
    case GateKind::Sdg: phase_where(a, m(0), 6); break;
    case GateKind::T: phase_where(a, m(0), 1); break;
    case GateKind::Tdg: phase_where(a, m(0), 7); break;
    case GateKind::CX: flip_where(a, m(0), m(1)); break;
    case GateKind::CZ: phase_where(a, m(0) | m(1), 4); break;
    default: throw SimError("simulator received a non-primitive gate");
  }
}

struct Live {
  std::vector<signed char> cbits;  // -1 unwritten
  Amps amps;
};

std::string outcome_string(const std::vector<signed char>& cb) {
  std::string s(cb.size(), '-');
  for (size_t i = 0; i < cb.size(); ++i) {
    if (cb[i] >= 0) s[i] = static_cast<char>('0' + cb[i]);
  }
  return s;
}

std::vector<Branch> run_expanded(const Circuit& c, Index input) {
  const int n = c.n_qubits;
  if (n > 62) throw SimError("register too large");
  if (input >> n) throw SimError("input index out of range");
  std::vector<Live> branches(1);
  branches[0].cbits.assign(c.n_cbits, -1);
  branches[0].amps.emplace(input, RingScalar(1));
  for (const auto& e : c.events) {
    if (const auto* g = std::get_if<Gate>(&e)) {
      for (auto& b : branches) {
        if (g->cond) {
          signed char v = b.cbits.at(g->cond->bit);
          if (v < 0) {
            throw SimError("condition on unwritten classical bit " + std::to_string(g->cond->bit));
          }
          if (v != g->cond->value) continue;
        }
        apply_primitive(b.amps, n, *g);
      }
    } else if (const auto* mz = std::get_if<MeasureZ>(&e)) {
      const Index mask = qubit_mask(n, mz->qubit);
      std::vector<Live> next;
      for (auto& b : branches) {
        Live zero{b.cbits, {}}, one{b.cbits, {}};
        for (auto& [idx, v] : b.amps) {
          ((idx & mask) ? one : zero).amps.emplace(idx, std::move(v));
        }
        zero.cbits.at(mz->bit) = 0;
        one.cbits.at(mz->bit) = 1;
        if (!zero.amps.empty()) next.push_back(std::move(zero));
        if (!one.amps.empty()) next.push_back(std::move(one));
      }
      branches.swap(next);
    } else if (const auto* al = std::get_if<AllocAncilla>(&e)) {
      if (al->role == AncillaRole::Clean) {
        const Index mask = qubit_mask(n, al->qubit);
        for (const auto& b : branches) {
          for (const auto& [idx, v] : b.amps) {
            if (idx & mask) {
              throw SimError("clean ancilla " + std::to_string(al->qubit) + " not in |0>");
            }
          }
        }
      }
    } else if (const auto* rl = std::get_if<Release>(&e)) {
      if (rl->expect == ReleaseExpect::Zero) {
        const Index mask = qubit_mask(n, rl->qubit);
        for (const auto& b : branches) {
          for (const auto& [idx, v] : b.amps) {
            if (idx & mask) {
              throw SimError("release zero violated on qubit " + std::to_string(rl->qubit));
            }
          }
        }
      }
    }
  }
  std::vector<Branch> out;
  out.reserve(branches.size());
  for (auto& b : branches) {
    out.push_back(Branch{outcome_string(b.cbits), State{n, std::move(b.amps)}});
  }
  std::sort(out.begin(), out.end(),
            [](const Branch& x, const Branch& y) { return x.outcome < y.outcome; });
  return out;
}

bool has_measurement(const Circuit& c) {
  return std::any_of(c.events.begin(), c.events.end(),
                     [](const Event& e) { return std::holds_alternative<MeasureZ>(e); });
}

bool needs_expansion(const Circuit& c) {
  for (const auto& e : c.events) {
    if (const auto* g = std::get_if<Gate>(&e)) {
      if (!is_primitive(g->kind)) return true;
    }
  }
  return false;
}

const Circuit& expanded(const Circuit& c, Circuit& storage) {
  if (!needs_expansion(c)) return c;
  storage = expand_macros(c);
  return storage;
}

}  // namespace

RingScalar State::norm_squared() const {
  RingScalar s;
  for (const auto& [idx, v] : amps) s += v.norm_squared();
  return s;
}

std::vector<Branch> run(const Circuit& c, Index input) {
  Circuit tmp;
  return run_expanded(expanded(c, tmp), input);
}

RingScalar SparseMatrix::at(Index r, Index c) const {
  const auto& col = columns.at(c);
  auto it = col.find(r);
  return it == col.end() ? RingScalar() : it->second;
}

void SparseMatrix::set(Index r, Index c, const RingScalar& v) {
  auto& col = columns.at(c);
  if (v.is_zero()) {
    col.erase(r);
  } else {
    col[r] = v;
  }
}

bool SparseMatrix::operator==(const SparseMatrix& o) const {
  return rows == o.rows && cols == o.cols && columns == o.columns;
}

SparseMatrix SparseMatrix::dagger() const {
  SparseMatrix out(cols, rows);
  for (Index c = 0; c < cols; ++c) {
    for (const auto& [r, v] : columns[c]) out.columns.at(r).emplace(c, v.conj());
  }
  return out;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw SimError("matrix dimension mismatch");
  SparseMatrix out(a.rows, b.cols);
  for (Index j = 0; j < b.cols; ++j) {
    auto& col = out.columns[j];
    for (const auto& [k, bv] : b.columns[j]) {
      for (const auto& [i, av] : a.columns[k]) col[i] += av * bv;
    }
    for (auto it = col.begin(); it != col.end();) {
      if (it->second.is_zero()) {
        it = col.erase(it);
      } else {
        ++it;
      }
    }
  }
  return out;
}

SparseMatrix identity_matrix(Index dim) {
  SparseMatrix m(dim, dim);
  for (Index i = 0; i < dim; ++i) m.columns[i].emplace(i, RingScalar(1));
  return m;
}

std::vector<Index> all_inputs(int n_qubits) {
  std::vector<Index> v(Index{1} << n_qubits);
  for (Index i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

std::vector<Index> inputs_where(int n_qubits, const std::function<bool(Index)>& keep) {
  std::vector<Index> v;
  for (Index i = 0; i < (Index{1} << n_qubits); ++i) {
    if (keep(i)) v.push_back(i);
  }
  return v;
}

Index project_index(Index full, int n_qubits, const std::vector<int>& kept) {
  Index r = 0;
  for (int q : kept) r = (r << 1) | static_cast<Index>(bit_of(full, n_qubits, q));
  return r;
}

SparseMatrix columns_of(const Circuit& c, const std::vector<Index>& inputs) {
  if (has_measurement(c)) throw SimError("unitary_of: circuit contains measurement");
  Circuit tmp;
  const Circuit& ex = expanded(c, tmp);
  SparseMatrix m(Index{1} << c.n_qubits, inputs.size());
  for (size_t j = 0; j < inputs.size(); ++j) {
    auto br = run_expanded(ex, inputs[j]);
    m.columns[j] = std::move(br.at(0).state.amps);
  }
  return m;
}

SparseMatrix unitary_of(const Circuit& c) { return columns_of(c, all_inputs(c.n_qubits)); }

BranchMap kraus_of(const Circuit& c, const std::vector<Index>& inputs) {
  Circuit tmp;
  const Circuit& ex = expanded(c, tmp);
  const int n = c.n_qubits;
  // A qubit is dropped if its final lifetime ends in Release(zero|measured).
  std::vector<int> dropped(n, 0);
  for (const auto& e : ex.events) {
    if (const auto* r = std::get_if<Release>(&e)) {
      dropped[r->qubit] = r->expect != ReleaseExpect::Unchanged;
    } else if (const auto* a = std::get_if<AllocAncilla>(&e)) {
      dropped[a->qubit] = 0;
    }
  }
  BranchMap bm;
  bm.inputs = inputs;
  for (int q = 0; q < n; ++q) {
    if (!dropped[q]) bm.kept_qubits.push_back(q);
  }
  std::vector<int> gone;
  for (int q = 0; q < n; ++q) {
    if (dropped[q]) gone.push_back(q);
  }
  const Index rows = Index{1} << bm.kept_qubits.size();
  for (size_t j = 0; j < inputs.size(); ++j) {
    for (auto& br : run_expanded(ex, inputs[j])) {
      auto [it, fresh] = bm.kraus.try_emplace(br.outcome, rows, inputs.size());
      auto& col = it->second.columns[j];
      bool first = true;
      Index gone_val = 0;
      for (auto& [idx, v] : br.state.amps) {
        Index gv = project_index(idx, n, gone);
        if (first) {
          gone_val = gv;
          first = false;
        } else if (gv != gone_val) {
          throw SimError("entangled release in branch " + br.outcome);
        }
        col.emplace(project_index(idx, n, bm.kept_qubits), std::move(v));
      }
    }
  }
  return bm;
}

bool trace_preserving(const BranchMap& bm) {
  const size_t ncol = bm.inputs.size();
  std::map<std::pair<Index, Index>, RingScalar> gram;
  for (const auto& [o, k] : bm.kraus) {
    std::map<Index, std::vector<std::pair<Index, const RingScalar*>>> by_row;
    for (Index c = 0; c < k.cols; ++c) {
      for (const auto& [r, v] : k.columns[c]) by_row[r].emplace_back(c, &v);
    }
    for (const auto& [r, entries] : by_row) {
      for (const auto& [a, va] : entries) {
        RingScalar ca = va->conj();
        for (const auto& [b, vb] : entries) gram[{a, b}] += ca * *vb;
      }
    }
  }
  for (size_t a = 0; a < ncol; ++a) {
    auto it = gram.find({a, a});
    if (it == gram.end() || it->second != RingScalar(1)) return false;
  }
  for (const auto& [ab, v] : gram) {
    if (ab.first != ab.second && !v.is_zero()) return false;
  }
  return true;
}

ChannelReport channel_equals(const BranchMap& bm, const SparseMatrix& target, ChannelMode mode) {
  ChannelReport rep;
  const Index rows = Index{1} << bm.kept_qubits.size();
  if (target.rows != rows || target.cols != bm.inputs.size()) {
    rep.diagnostic = "dimension mismatch: target " + std::to_string(target.rows) + "x" +
                     std::to_string(target.cols) + ", channel " + std::to_string(rows) + "x" +
                     std::to_string(bm.inputs.size());
    return rep;
  }
  // Reference entry: first nonzero of the target.
  Index ri = 0, rj = 0;
  bool found = false;
  for (Index j = 0; j < target.cols && !found; ++j) {
    if (!target.columns[j].empty()) {
      ri = target.columns[j].begin()->first;
      rj = j;
      found = true;
    }
  }
  if (!found) {
    rep.equal = bm.kraus.empty();
    if (!rep.equal) rep.diagnostic = "target is zero but channel is not";
    return rep;
  }
  const RingScalar tref = target.at(ri, rj);
  const RingScalar tn = tref.norm_squared();
  const bool unit_ref = tn == RingScalar(1);
  if (mode == ChannelMode::Exact && !unit_ref) {
    rep.diagnostic = "exact mode requires a unit-modulus reference entry";
    return rep;
  }
  RingScalar weight;
  for (const auto& [o, k] : bm.kraus) {
    RingScalar w = k.at(ri, rj) * tref.conj();
    rep.scalars[o] = w;  // equals c_o when the reference entry has unit modulus
    for (Index j = 0; j < target.cols; ++j) {
      std::set<Index> support;
      for (const auto& [r, v] : k.columns[j]) support.insert(r);
      for (const auto& [r, v] : target.columns[j]) support.insert(r);
      for (Index r : support) {
        if (k.at(r, j) * tn != w * target.at(r, j)) {
          rep.diagnostic = "branch " + o + " not proportional to target at row " +
                           std::to_string(r) + ", column " + std::to_string(j) + ": got " +
                           k.at(r, j).str() + ", target " + target.at(r, j).str();
          return rep;
        }
      }
    }
    if (mode == ChannelMode::Exact && !w.as_scaled_omega_power()) {
      rep.diagnostic = "branch " + o + " scalar " + w.str() + " is not w^j/rt2^m";
      return rep;
    }
    weight += w.norm_squared();
  }
  if (weight != tn * tn) {
    rep.diagnostic = "branch weights sum to " + weight.str() + ", not 1";
    return rep;
  }
  rep.equal = true;
  return rep;
}

ChannelReport channel_equals(const Circuit& c, const std::vector<Index>& inputs,
                             const SparseMatrix& target, ChannelMode mode) {
  return channel_equals(kraus_of(c, inputs), target, mode);
}

}  // namespace rtof
