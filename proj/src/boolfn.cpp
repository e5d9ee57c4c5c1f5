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

#include "rtof/boolfn.hpp"

#include <bit>
#include <sstream>

namespace rtof {

namespace {

int mod8(long long v) { return static_cast<int>(((v % 8) + 8) % 8); }

std::uint64_t pack(const std::vector<int>& x, int n) {
  if (static_cast<int>(x.size()) != n) throw BoolFnError("input length mismatch");
  std::uint64_t m = 0;
  for (int i = 0; i < n; ++i) {
    if (x[i]) m |= std::uint64_t{1} << i;
  }
  return m;
}

void check_width(int n) {
  if (n < 0 || n > 32) throw BoolFnError("variable count out of range");
}

std::string set_str(VarSet s, const char* sep) {
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if (s >> i & 1) {
      if (!out.empty()) out += sep;
      out += "x" + std::to_string(i + 1);
    }
  }
  return out;
}

// Shift every variable index of f up by `by`, widening to n.
BooleanFn shifted(const BooleanFn& f, int by, int n) {
  BooleanFn r(n);
  for (VarSet m : f.monomials) r.monomials.insert(m << by);
  return r;
}

}  // namespace

BooleanFn BooleanFn::one(int n) {
  check_width(n);
  BooleanFn f(n);
  f.monomials.insert(0);
  return f;
}

BooleanFn BooleanFn::var(int n, int i) {
  check_width(n);
  if (i < 0 || i >= n) throw BoolFnError("variable index out of range");
  return monomial(n, VarSet{1} << i);
}

BooleanFn BooleanFn::monomial(int n, VarSet s) {
  check_width(n);
  if (n < 32 && (s >> n)) throw BoolFnError("monomial uses out-of-range variable");
  BooleanFn f(n);
  f.monomials.insert(s);
  return f;
}

BooleanFn BooleanFn::operator^(const BooleanFn& o) const {
  BooleanFn r(std::max(n_vars, o.n_vars));
  r.monomials = monomials;
  for (VarSet m : o.monomials) {
    auto [it, fresh] = r.monomials.insert(m);
    if (!fresh) r.monomials.erase(it);
  }
  return r;
}

int BooleanFn::degree() const {
  int d = -1;
  for (VarSet m : monomials) d = std::max(d, std::popcount(m));
  return d;
}

std::string BooleanFn::str() const {
  if (monomials.empty()) return "0";
  std::string out;
  for (VarSet m : monomials) {
    if (!out.empty()) out += " + ";
    out += m == 0 ? "1" : set_str(m, "*");
  }
  return out;
}

BooleanFn BooleanFn::parse(const std::string& text, int n_vars) {
  check_width(n_vars);
  BooleanFn f(n_vars);
  std::string t;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') t += ch;
  }
  if (t.empty()) throw BoolFnError("empty ANF text");
  std::stringstream terms(t);
  std::string term;
  while (std::getline(terms, term, '+')) {
    if (term.empty()) throw BoolFnError("empty ANF term");
    if (term == "0") continue;
    VarSet m = 0;
    if (term != "1") {
      std::stringstream factors(term);
      std::string fac;
      while (std::getline(factors, fac, '*')) {
        if (fac.size() < 2 || fac[0] != 'x') throw BoolFnError("bad ANF factor '" + fac + "'");
        int idx;
        try {
          size_t used = 0;
          idx = std::stoi(fac.substr(1), &used);
          if (used != fac.size() - 1) throw BoolFnError("bad ANF factor '" + fac + "'");
        } catch (const std::logic_error&) {
          throw BoolFnError("bad ANF factor '" + fac + "'");
        }
        if (idx < 1 || idx > n_vars) throw BoolFnError("ANF variable out of range: " + fac);
        m |= VarSet{1} << (idx - 1);
      }
    }
    f = f ^ monomial(n_vars, m);
  }
  return f;
}

int eval_mask(const BooleanFn& f, std::uint64_t x) {
  int v = 0;
  for (VarSet m : f.monomials) {
    if ((x & m) == m) v ^= 1;
  }
  return v;
}

int eval(const BooleanFn& f, const std::vector<int>& x) { return eval_mask(f, pack(x, f.n_vars)); }

BooleanFn multiply(const BooleanFn& f, const BooleanFn& g) {
  if (f.n_vars != g.n_vars) throw BoolFnError("multiply: variable count mismatch");
  BooleanFn r(f.n_vars);
  for (VarSet a : f.monomials) {
    for (VarSet b : g.monomials) r = r ^ BooleanFn::monomial(f.n_vars, a | b);
  }
  return r;
}

std::vector<int> truth_table(const BooleanFn& f) {
  if (f.n_vars > 24) throw BoolFnError("truth table too large");
  std::vector<int> tt(std::size_t{1} << f.n_vars);
  for (std::uint64_t x = 0; x < tt.size(); ++x) tt[x] = eval_mask(f, x);
  return tt;
}

BooleanFn from_truth_table(int n_vars, const std::vector<int>& tt) {
  check_width(n_vars);
  if (tt.size() != (std::size_t{1} << n_vars)) throw BoolFnError("truth table size mismatch");
  std::vector<int> a(tt);
  for (auto& v : a) v &= 1;
  for (int i = 0; i < n_vars; ++i) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x >> i & 1) a[x] ^= a[x ^ (std::size_t{1} << i)];
    }
  }
  BooleanFn f(n_vars);
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a[x]) f.monomials.insert(static_cast<VarSet>(x));
  }
  return f;
}

void PhasePoly::add(VarSet s, int c) {
  if (s == 0) {
    constant = mod8(constant + c);
    return;
  }
  int v = mod8(coeffs[s] + c);
  if (v == 0) {
    coeffs.erase(s);
  } else {
    coeffs[s] = v;
  }
}

std::string PhasePoly::str() const {
  std::string out;
  if (constant) out = std::to_string(constant);
  for (const auto& [s, c] : coeffs) {
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*(" + set_str(s, "^") + ")";
  }
  return out.empty() ? "0" : out;
}

int eval_phase_mask(const PhasePoly& p, std::uint64_t x) {
  long long v = p.constant;
  for (const auto& [s, c] : p.coeffs) v += c * (std::popcount(x & s) & 1);
  return mod8(v);
}

int eval_phase(const PhasePoly& p, const std::vector<int>& x) {
  return eval_phase_mask(p, pack(x, p.n_vars));
}

PhasePoly fourier(const BooleanFn& f, int w) {
  if (f.n_vars > 24) throw BoolFnError("fourier: too many variables");
  // Integer (pseudo-Boolean) coefficients of f via signed Moebius inversion.
  std::vector<long long> a(std::size_t{1} << f.n_vars);
  for (std::uint64_t x = 0; x < a.size(); ++x) a[x] = eval_mask(f, x);
  for (int i = 0; i < f.n_vars; ++i) {
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (x >> i & 1) a[x] -= a[x ^ (std::size_t{1} << i)];
    }
  }
  PhasePoly p;
  p.n_vars = f.n_vars;
  for (std::size_t m = 0; m < a.size(); ++m) {
    int c = mod8(a[m] * w);
    if (c == 0) continue;
    const VarSet s = static_cast<VarSet>(m);
    const int d = std::popcount(s);
    if (d == 0) {
      p.add(0, c);
      continue;
    }
    // 2^(d-1) * prod = sum over nonempty T of (-1)^(|T|+1) parity_T
    if (d > 3 || c % (1 << (d - 1)) != 0) {
      throw BoolFnError("inexpressible at this weight: monomial " + set_str(s, "*") +
                        " needs a coefficient divisible by 2^" + std::to_string(d - 1));
    }
    const int e = c >> (d - 1);
    for (VarSet t = s; t; t = (t - 1) & s) {
      p.add(t, (std::popcount(t) % 2 == 1) ? e : -e);
    }
  }
  return p;
}

std::pair<PhasePoly, PhasePoly> truncate_to_target(const PhasePoly& p, int target) {
  PhasePoly kept, dropped;
  kept.n_vars = dropped.n_vars = p.n_vars;
  dropped.constant = p.constant;
  const VarSet bit = VarSet{1} << target;
  for (const auto& [s, c] : p.coeffs) {
    (s & bit ? kept : dropped).coeffs.emplace(s, c);
  }
  return {kept, dropped};
}

BooleanFn fk(int k, FkVariant variant) {
  if (k < 0) throw BoolFnError("fk: k must be non-negative");
  check_width(k);
  // base[j] is f_j over its own j variables x1..xj.
  std::vector<BooleanFn> f;
  f.push_back(BooleanFn(0));
  if (k == 0) return f[0];
  f.push_back(BooleanFn::var(1, 0));
  int first_rec = 2;
  if (variant == FkVariant::Maslov) {
    f.push_back(BooleanFn::monomial(2, 0b11));
    f.push_back(BooleanFn::monomial(3, 0b111));
    first_rec = 4;
  }
  for (int j = first_rec; j <= k; ++j) {
    BooleanFn head = BooleanFn::var(j, 0);
    BooleanFn r = multiply(head, shifted(f[j - 1], 1, j)) ^ shifted(f[j - 2], 2, j);
    r.n_vars = j;
    f.push_back(r);
  }
  BooleanFn out = f[k];
  out.n_vars = k;
  return out;
}

}  // namespace rtof
