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

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rtof {

// Variable subsets are bitmasks: bit i <-> variable x_{i+1}.
using VarSet = std::uint32_t;

class BoolFnError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// XOR of AND-monomials over F2. The empty monomial is the constant 1.
struct BooleanFn {
  int n_vars = 0;
  std::set<VarSet> monomials;

  BooleanFn() = default;
  explicit BooleanFn(int n) : n_vars(n) {}

  static BooleanFn zero(int n) { return BooleanFn(n); }
  static BooleanFn one(int n);
  static BooleanFn var(int n, int i);  // 0-based index
  static BooleanFn monomial(int n, VarSet s);

  BooleanFn operator^(const BooleanFn& o) const;
  int degree() const;
  bool operator==(const BooleanFn& o) const = default;

  // ANF text: "x1*x2 + x3", "1", "0".
  std::string str() const;
  static BooleanFn parse(const std::string& text, int n_vars);
};

int eval(const BooleanFn& f, const std::vector<int>& x);
// x packed as bitmask, bit i <-> x_{i+1}.
int eval_mask(const BooleanFn& f, std::uint64_t x);
BooleanFn multiply(const BooleanFn& f, const BooleanFn& g);
// Truth table indexed by the packed mask.
std::vector<int> truth_table(const BooleanFn& f);
BooleanFn from_truth_table(int n_vars, const std::vector<int>& tt);

/// Phase w^(constant + sum_S c_S * parity_S(x)) with c_S in Z8.
struct PhasePoly {
  int n_vars = 0;
  int constant = 0;
  std::map<VarSet, int> coeffs;

  void add(VarSet s, int c);
  bool operator==(const PhasePoly& o) const = default;
  std::string str() const;
};

int eval_phase(const PhasePoly& p, const std::vector<int>& x);
int eval_phase_mask(const PhasePoly& p, std::uint64_t x);

PhasePoly fourier(const BooleanFn& f, int w);
std::pair<PhasePoly, PhasePoly> truncate_to_target(const PhasePoly& p, int target);

enum class FkVariant { Plain, Maslov };

// f_k over x1..xk. The recurrence peels x1 first:
// f_k(x1..xk) = x1 * f_{k-1}(x2..xk) + f_{k-2}(x3..xk).
BooleanFn fk(int k, FkVariant variant);

}  // namespace rtof
