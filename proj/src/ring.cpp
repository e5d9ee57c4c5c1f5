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

#include "rtof/ring.hpp"

#include <cmath>
#include <regex>
#include <stdexcept>

namespace rtof {

namespace {

// sqrt2 = w - w^3, so sqrt2 * (a,b,c,d) = (b-d, a+c, b+d, c-a).
std::array<BigInt, 4> times_sqrt2(const std::array<BigInt, 4>& x) {
  return {x[1] - x[3], x[0] + x[2], x[1] + x[3], x[2] - x[0]};
}

bool is_even(const BigInt& v) { return !boost::multiprecision::bit_test(v, 0); }

}  // namespace

RingScalar::RingScalar(long long a) : coef_{BigInt(a), 0, 0, 0}, k_(0) {}

RingScalar::RingScalar(BigInt a, BigInt b, BigInt c, BigInt d, unsigned k)
    : coef_{std::move(a), std::move(b), std::move(c), std::move(d)}, k_(k) {
  canonicalize();
}

RingScalar RingScalar::omega_power(int j) {
  return RingScalar(1).times_omega(j);
}

RingScalar RingScalar::inv_sqrt2_power(unsigned m) {
  RingScalar r(1);
  r.k_ = m;
  r.canonicalize();
  return r;
}

void RingScalar::canonicalize() {
  if (coef_[0] == 0 && coef_[1] == 0 && coef_[2] == 0 && coef_[3] == 0) {
    k_ = 0;
    return;
  }
  while (k_ > 0 && is_even(coef_[0] + coef_[2]) && is_even(coef_[1] + coef_[3])) {
    auto s = times_sqrt2(coef_);
    for (int i = 0; i < 4; ++i) coef_[i] = s[i] / 2;
    --k_;
  }
}

bool RingScalar::is_zero() const {
  return coef_[0] == 0 && coef_[1] == 0 && coef_[2] == 0 && coef_[3] == 0;
}

RingScalar RingScalar::operator+(const RingScalar& o) const {
  std::array<BigInt, 4> x = coef_;
  std::array<BigInt, 4> y = o.coef_;
  unsigned k = k_;
  // Bring both operands to the larger denominator.
  for (unsigned i = k_; i < o.k_; ++i) x = times_sqrt2(x);
  for (unsigned i = o.k_; i < k_; ++i) y = times_sqrt2(y);
  if (o.k_ > k) k = o.k_;
  return RingScalar(x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3], k);
}

RingScalar RingScalar::operator-() const {
  RingScalar r = *this;
  for (auto& v : r.coef_) v = -v;
  return r;
}

RingScalar RingScalar::operator-(const RingScalar& o) const { return *this + (-o); }

RingScalar RingScalar::operator*(const RingScalar& o) const {
  std::array<BigInt, 4> r{};
  for (int i = 0; i < 4; ++i) {
    if (coef_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.coef_[j] == 0) continue;
      BigInt p = coef_[i] * o.coef_[j];
      int e = i + j;
      if (e >= 4) {
        r[e - 4] -= p;
      } else {
        r[e] += p;
      }
    }
  }
  return RingScalar(r[0], r[1], r[2], r[3], k_ + o.k_);
}

RingScalar& RingScalar::operator+=(const RingScalar& o) { return *this = *this + o; }
RingScalar& RingScalar::operator*=(const RingScalar& o) { return *this = *this * o; }

bool RingScalar::operator==(const RingScalar& o) const {
  return k_ == o.k_ && coef_ == o.coef_;
}

RingScalar RingScalar::times_omega(int j) const {
  j = ((j % 8) + 8) % 8;
  RingScalar r = *this;
  for (int s = 0; s < j; ++s) {
    // w * (a,b,c,d) = (-d, a, b, c)
    BigInt d = -r.coef_[3];
    r.coef_[3] = std::move(r.coef_[2]);
    r.coef_[2] = std::move(r.coef_[1]);
    r.coef_[1] = std::move(r.coef_[0]);
    r.coef_[0] = std::move(d);
  }
  return r;
}

RingScalar RingScalar::times_inv_sqrt2() const {
  RingScalar r = *this;
  if (r.is_zero()) return r;
  ++r.k_;
  r.canonicalize();
  return r;
}

RingScalar RingScalar::conj() const {
  RingScalar r = *this;
  r.coef_[1] = -coef_[3];
  r.coef_[2] = -coef_[2];
  r.coef_[3] = -coef_[1];
  return r;
}

RingScalar RingScalar::norm_squared() const { return conj() * *this; }

std::optional<int> RingScalar::as_omega_power() const {
  if (k_ != 0) return std::nullopt;
  int nonzero = -1;
  for (int i = 0; i < 4; ++i) {
    if (coef_[i] != 0) {
      if (nonzero >= 0) return std::nullopt;
      nonzero = i;
    }
  }
  if (nonzero < 0) return std::nullopt;
  if (coef_[nonzero] == 1) return nonzero;
  if (coef_[nonzero] == -1) return nonzero + 4;
  return std::nullopt;
}

std::optional<std::pair<int, unsigned>> RingScalar::as_scaled_omega_power() const {
  if (is_zero()) return std::nullopt;
  for (int j = 0; j < 8; ++j) {
    if (*this == RingScalar::inv_sqrt2_power(k_).times_omega(j)) {
      return std::make_pair(j, k_);
    }
  }
  return std::nullopt;
}

std::complex<double> RingScalar::to_complex() const {
  const double r2 = std::sqrt(2.0);
  double a = coef_[0].convert_to<double>();
  double b = coef_[1].convert_to<double>();
  double c = coef_[2].convert_to<double>();
  double d = coef_[3].convert_to<double>();
  double re = a + (b - d) / r2;
  double im = c + (b + d) / r2;
  double scale = std::pow(r2, -static_cast<double>(k_));
  return {re * scale, im * scale};
}

std::string RingScalar::str() const {
  return "(" + coef_[0].str() + "," + coef_[1].str() + "," + coef_[2].str() + "," +
         coef_[3].str() + ")/rt2^" + std::to_string(k_);
}

RingScalar RingScalar::parse(const std::string& text) {
  static const std::regex re(
      R"(\s*\(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\)\s*/\s*rt2\^(\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw std::invalid_argument("malformed ring scalar: " + text);
  }
  return RingScalar(BigInt(m[1].str()), BigInt(m[2].str()), BigInt(m[3].str()),
                    BigInt(m[4].str()), static_cast<unsigned>(std::stoul(m[5].str())));
}

RingScalar add(const RingScalar& x, const RingScalar& y) { return x + y; }
RingScalar mul(const RingScalar& x, const RingScalar& y) { return x * y; }

}  // namespace rtof
