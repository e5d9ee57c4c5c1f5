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
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "rtof/circuit.hpp"
#include "rtof/ring.hpp"

namespace rtof {

using Index = std::uint64_t;

// Qubit 0 is the most significant bit of a basis index.
inline Index qubit_mask(int n_qubits, int q) { return Index{1} << (n_qubits - 1 - q); }
inline int bit_of(Index idx, int n_qubits, int q) {
  return static_cast<int>((idx >> (n_qubits - 1 - q)) & 1);
}

class SimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct State {
  int n_qubits = 0;
  std::map<Index, RingScalar> amps;

  RingScalar norm_squared() const;
};

struct Branch {
  // One char per classical bit: '0', '1', or '-' if never written.
  std::string outcome;
  State state;
};

std::vector<Branch> run(const Circuit& c, Index input);

/**
 * Sparse column-major matrix over the ring. Column j is the image of the
 * j-th declared input; rows are basis indices of the output register.
 */
struct SparseMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<std::map<Index, RingScalar>> columns;

  SparseMatrix() = default;
  SparseMatrix(Index r, Index c) : rows(r), cols(c), columns(c) {}

  RingScalar at(Index r, Index c) const;
  void set(Index r, Index c, const RingScalar& v);
  bool operator==(const SparseMatrix& o) const;
  bool operator!=(const SparseMatrix& o) const { return !(*this == o); }
  SparseMatrix dagger() const;  // square only
};

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix identity_matrix(Index dim);

// Full unitary over all 2^n inputs. Errors if the circuit measures.
SparseMatrix unitary_of(const Circuit& c);
// Measurement-free circuit applied to the given basis inputs (columns).
SparseMatrix columns_of(const Circuit& c, const std::vector<Index>& inputs);

struct BranchMap {
  std::vector<Index> inputs;
  // Qubits that survive as outputs, in register order; Kraus rows index them.
  std::vector<int> kept_qubits;
  std::map<std::string, SparseMatrix> kraus;
};

BranchMap kraus_of(const Circuit& c, const std::vector<Index>& inputs);

// Sum over outcomes of K^dagger K equals the identity on the inputs, exactly.
bool trace_preserving(const BranchMap& bm);

enum class ChannelMode { Exact, PerBranchGlobalPhase };

struct ChannelReport {
  bool equal = false;
  // Per-branch proportionality constant c_o with K_o = c_o * target.
  std::map<std::string, RingScalar> scalars;
  std::string diagnostic;
};

ChannelReport channel_equals(const BranchMap& bm, const SparseMatrix& target, ChannelMode mode);
ChannelReport channel_equals(const Circuit& c, const std::vector<Index>& inputs,
                             const SparseMatrix& target, ChannelMode mode);

std::vector<Index> all_inputs(int n_qubits);
std::vector<Index> inputs_where(int n_qubits, const std::function<bool(Index)>& keep);
// Compresses a full index to the bits of `kept` (in order).
Index project_index(Index full, int n_qubits, const std::vector<int>& kept);

}  // namespace rtof
