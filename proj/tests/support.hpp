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

// Shared test helpers: a floating-point reference simulator with its own gate
// definitions, and random substitution cases.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <vector>

#include "rtof/circuit.hpp"
#include "rtof/constructions.hpp"
#include "rtof/sim.hpp"
#include "rtof/verify.hpp"

namespace rtof_test {

using rtof::Circuit;
using rtof::GateKind;
using rtof::Index;
using cplx = std::complex<double>;
using Dense = std::vector<std::vector<cplx>>;  // column-major

inline cplx w8(int j) {
  const double a = M_PI / 4 * ((j % 8 + 8) % 8);
  return {std::cos(a), std::sin(a)};
}

// Basis-state action x -> phase * |image>; H handled separately.
inline void apply_dense(std::vector<cplx>& s, int n, const rtof::Gate& g) {
  auto bit = [&](Index x, int q) { return static_cast<int>((x >> (n - 1 - q)) & 1); };
  auto mask = [&](int q) { return Index{1} << (n - 1 - q); };
  const auto& q = g.qubits;
  std::vector<cplx> out(s.size());
  if (g.kind == GateKind::H) {
    const double r = 1 / std::sqrt(2.0);
    for (Index x = 0; x < s.size(); ++x) {
      const Index m = mask(q[0]);
      const int b = bit(x, q[0]);
      out[x & ~m] += r * s[x];
      out[x | m] += (b ? -r : r) * s[x];
    }
    s.swap(out);
    return;
  }
  for (Index x = 0; x < s.size(); ++x) {
    Index y = x;
    int ph = 0;
    auto b = [&](int i) { return bit(x, q[i]); };
    switch (g.kind) {
      case GateKind::X: y ^= mask(q[0]); break;
      case GateKind::Z: ph = 4 * b(0); break;
      case GateKind::S: ph = 2 * b(0); break;
      case GateKind::Sdg: ph = 6 * b(0); break;
      case GateKind::T: ph = b(0); break;
      case GateKind::Tdg: ph = 7 * b(0); break;
      case GateKind::CX: if (b(0)) y ^= mask(q[1]); break;
      case GateKind::CZ: ph = 4 * (b(0) & b(1)); break;
      case GateKind::CS: ph = 2 * (b(0) & b(1)); break;
      case GateKind::CSdg: ph = 6 * (b(0) & b(1)); break;
      case GateKind::Toffoli: if (b(0) & b(1)) y ^= mask(q[2]); break;
      case GateKind::CCiX:
        if (b(0) & b(1)) { y ^= mask(q[2]); ph = 2; }
        break;
      case GateKind::CCiXdg:
        if (b(0) & b(1)) { y ^= mask(q[2]); ph = 6; }
        break;
      case GateKind::CCiZ: if (b(0) & b(1)) ph = 2 + 4 * b(2); break;
      case GateKind::CCmiZ: if (b(0) & b(1)) ph = 6 + 4 * b(2); break;
      case GateKind::RC3X: {
        const int a = b(0) & b(1), c = a & b(2);
        ph = 2 * (a + c) + 4 * (a & b(3));
        if (c) y ^= mask(q[3]);
        break;
      }
      case GateKind::RC3Xdg: {
        const int a = b(0) & b(1), c = a & b(2);
        const int y0 = b(3) ^ c;  // preimage target value
        ph = -(2 * (a + c) + 4 * (a & y0));
        if (c) y ^= mask(q[3]);
        break;
      }
      default: throw std::runtime_error("dense: unsupported gate");
    }
    out[y] += w8(ph) * s[x];
  }
  s.swap(out);
}

inline Dense dense_unitary(const Circuit& c) {
  const Index dim = Index{1} << c.n_qubits;
  Dense u(dim);
  for (Index x = 0; x < dim; ++x) {
    std::vector<cplx> s(dim);
    s[x] = 1;
    for (const auto& e : c.events) {
      const auto* g = std::get_if<rtof::Gate>(&e);
      if (!g) throw std::runtime_error("dense: gates only");
      apply_dense(s, c.n_qubits, *g);
    }
    u[x] = s;
  }
  return u;
}

inline bool close_to(const rtof::SparseMatrix& m, const Dense& d, double tol = 1e-9) {
  for (Index j = 0; j < d.size(); ++j) {
    for (Index i = 0; i < d[j].size(); ++i) {
      if (std::abs(m.at(i, j).to_complex() - d[j][i]) > tol) return false;
    }
  }
  return true;
}

inline std::vector<int> pick(std::mt19937& rng, const std::vector<int>& from, int count) {
  std::vector<int> v = from;
  std::shuffle(v.begin(), v.end(), rng);
  v.resize(count);
  return v;
}

struct SubstitutionCase {
  Circuit circuit;
  rtof::PairRegion region;
  Circuit repl;
  std::vector<int> mapping;
};

// Oracle pair U_f ... U_f^dagger around a random middle that only touches the
// oracle wires diagonally or as controls.
inline SubstitutionCase random_safe_case(std::mt19937& rng) {
  const int n = std::uniform_int_distribution<int>(4, 6)(rng);
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  int kind = std::uniform_int_distribution<int>(0, 2)(rng);
  if (kind == 2 && n < 6) kind = n == 5 ? 1 : 0;
  if (kind == 1 && n < 5) kind = 0;
  const int width = kind == 0 ? 3 : kind == 1 ? 5 : 6;
  const auto wires = pick(rng, all, width);

  Circuit oracle(n), repl;
  std::vector<int> mapping;
  if (kind == 0) {
    oracle.g(GateKind::Toffoli, wires);
    repl = Circuit(3);
    repl.g(GateKind::CCiX, {0, 1, 2});
    mapping = wires;
  } else {
    const int k = width - 2;
    std::vector<int> ctrls(wires.begin(), wires.begin() + k);
    const int t = wires[k], d = wires[k + 1];
    rtof::append_lambda_x_dirty(oracle, ctrls, t, d);
    if (k == 3) {
      repl = Circuit(4);
      repl.g(GateKind::RC3X, {0, 1, 2, 3});
    } else {
      repl = rtof::cxstar(k).circuit;
    }
    mapping = ctrls;
    mapping.push_back(t);
  }
  const std::set<int> q(wires.begin(), wires.end());
  std::vector<int> off_q;
  for (int i = 0; i < n; ++i) {
    if (!q.count(i)) off_q.push_back(i);
  }

  Circuit middle(n);
  const int len = std::uniform_int_distribution<int>(3, 12)(rng);
  const GateKind diag1[] = {GateKind::Z, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg};
  const GateKind diag2[] = {GateKind::CZ, GateKind::CS, GateKind::CSdg};
  for (int i = 0; i < len; ++i) {
    const int choice = std::uniform_int_distribution<int>(0, 5)(rng);
    if (choice == 0) {
      middle.g(diag1[rng() % 5], pick(rng, all, 1));
    } else if (choice == 1) {
      middle.g(diag2[rng() % 3], pick(rng, all, 2));
    } else if (choice == 2 && n >= 3) {
      middle.g(GateKind::CCiZ, pick(rng, all, 3));
    } else if (choice == 3 && !off_q.empty()) {
      const int t = off_q[rng() % off_q.size()];
      std::vector<int> others;
      for (int a : all) {
        if (a != t) others.push_back(a);
      }
      auto cs = pick(rng, others, 1 + static_cast<int>(rng() % 2));
      cs.push_back(t);
      middle.g(cs.size() == 2 ? GateKind::CX : GateKind::Toffoli, cs);
    } else if (choice == 4 && !off_q.empty()) {
      const int t = off_q[rng() % off_q.size()];
      middle.g(rng() % 2 ? GateKind::H : GateKind::X, {t});
    } else {
      middle.g(GateKind::T, pick(rng, all, 1));
    }
  }

  SubstitutionCase sc;
  sc.circuit = Circuit(n);
  sc.circuit.append(oracle);
  sc.region.first_begin = 0;
  sc.region.first_end = sc.circuit.events.size();
  sc.circuit.append(middle);
  sc.region.second_begin = sc.circuit.events.size();
  sc.circuit.append(rtof::inverse(oracle));
  sc.region.second_end = sc.circuit.events.size();
  sc.repl = repl;
  sc.mapping = mapping;
  return sc;
}

// Toffoli pair around an X on a control wire; CCiX replacement breaks it.
inline SubstitutionCase unsafe_case() {
  SubstitutionCase sc;
  sc.circuit = Circuit(3);
  sc.circuit.g(GateKind::Toffoli, {0, 1, 2}).g(GateKind::X, {0}).g(GateKind::Toffoli, {0, 1, 2});
  sc.region = {0, 1, 2, 3};
  sc.repl = Circuit(3);
  sc.repl.g(GateKind::CCiX, {0, 1, 2});
  sc.mapping = {0, 1, 2};
  return sc;
}

// Substitution without the safety check, for negative controls.
inline Circuit force_substitute(const SubstitutionCase& sc) {
  const Circuit placed = rtof::embed(sc.repl, sc.mapping, sc.circuit.n_qubits);
  Circuit out(sc.circuit.n_qubits);
  out.append(placed);
  for (std::size_t i = sc.region.first_end; i < sc.region.second_begin; ++i) {
    out.events.push_back(sc.circuit.events[i]);
  }
  out.append(rtof::inverse(placed));
  return out;
}

}  // namespace rtof_test
