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

#include <array>
#include <complex>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rtof {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact element of Z[w, 1/sqrt2] with w = exp(i pi/4), stored as
 * (a + b w + c w^2 + d w^3) / sqrt2^k and kept canonical: k == 0 or the
 * numerator is not divisible by sqrt2.
 */
class RingScalar {
 public:
  RingScalar() = default;
  RingScalar(long long a);  // NOLINT(google-explicit-constructor)
  RingScalar(BigInt a, BigInt b, BigInt c, BigInt d, unsigned k = 0);

  static RingScalar omega_power(int j);
  static RingScalar inv_sqrt2_power(unsigned m);

  const BigInt& a() const { return coef_[0]; }
  const BigInt& b() const { return coef_[1]; }
  const BigInt& c() const { return coef_[2]; }
  const BigInt& d() const { return coef_[3]; }
  const std::array<BigInt, 4>& coefficients() const { return coef_; }
  unsigned k() const { return k_; }

  bool is_zero() const;

  RingScalar operator+(const RingScalar& o) const;
  RingScalar operator-(const RingScalar& o) const;
  RingScalar operator-() const;
  RingScalar operator*(const RingScalar& o) const;
  RingScalar& operator+=(const RingScalar& o);
  RingScalar& operator*=(const RingScalar& o);
  bool operator==(const RingScalar& o) const;
  bool operator!=(const RingScalar& o) const { return !(*this == o); }

  // Multiplication by w^j; exact and cheap (coefficient rotation).
  RingScalar times_omega(int j) const;
  // Multiplication by 1/sqrt2.
  RingScalar times_inv_sqrt2() const;

  RingScalar conj() const;
  // conj(x) * x, a real element.
  RingScalar norm_squared() const;

  // j in 0..7 with x == w^j, if any.
  std::optional<int> as_omega_power() const;
  // j with x == w^j / sqrt2^m for some m, if x has that shape.
  std::optional<std::pair<int, unsigned>> as_scaled_omega_power() const;

  std::complex<double> to_complex() const;
  std::string str() const;
  static RingScalar parse(const std::string& text);

 private:
  void canonicalize();

  std::array<BigInt, 4> coef_{};
  unsigned k_ = 0;
};

RingScalar add(const RingScalar& x, const RingScalar& y);
RingScalar mul(const RingScalar& x, const RingScalar& y);

}  // namespace rtof
