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

#include <random>

#include "gtest/gtest.h"

using namespace rtof;

namespace {

BooleanFn random_anf(std::mt19937& rng, int n, int max_terms, int max_deg) {
  BooleanFn f(n);
  const int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    VarSet m = 0;
    const int d = static_cast<int>(rng() % (max_deg + 1));
    for (int i = 0; i < d; ++i) m |= VarSet{1} << (rng() % n);
    f = f ^ BooleanFn::monomial(n, m);
  }
  return f;
}

}  // namespace

TEST(boolfn, parse_and_print) {
  BooleanFn f = BooleanFn::parse("x1*x2 + x3", 3);
  EXPECT_EQ(f.str(), "x1*x2 + x3");
  EXPECT_EQ(eval(f, {1, 1, 0}), 1);
  EXPECT_EQ(eval(f, {1, 1, 1}), 0);
  EXPECT_EQ(BooleanFn::parse("x1 + x1", 2).str(), "0");
  EXPECT_EQ(BooleanFn::parse("1", 2).str(), "1");
  EXPECT_THROW(BooleanFn::parse("x4", 3), BoolFnError);
  EXPECT_THROW(BooleanFn::parse("y1", 3), BoolFnError);
}

TEST(boolfn, truth_table_round_trip) {
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 8;
    BooleanFn f = random_anf(rng, n, 6, n);
    EXPECT_EQ(from_truth_table(n, truth_table(f)), f);
  }
}

TEST(boolfn, multiply_is_pointwise_and) {
  std::mt19937 rng(6);
  for (int i = 0; i < 50; ++i) {
    BooleanFn f = random_anf(rng, 5, 4, 3), g = random_anf(rng, 5, 4, 3);
    BooleanFn h = multiply(f, g);
    for (std::uint64_t x = 0; x < 32; ++x) EXPECT_EQ(eval_mask(h, x), eval_mask(f, x) & eval_mask(g, x));
  }
}

TEST(boolfn, fk_quoted_values) {
  EXPECT_EQ(fk(4, FkVariant::Plain), BooleanFn::parse("x1*x2*x3*x4 + x1*x4 + x3*x4", 4));
  EXPECT_EQ(fk(2, FkVariant::Plain), BooleanFn::parse("x1*x2", 2));
  EXPECT_EQ(fk(3, FkVariant::Plain), BooleanFn::parse("x1*x2*x3 + x3", 3));
  EXPECT_EQ(fk(3, FkVariant::Maslov), BooleanFn::parse("x1*x2*x3", 3));
}

TEST(boolfn, fk_satisfies_recurrence) {
  for (auto v : {FkVariant::Plain, FkVariant::Maslov}) {
    for (int k = 4; k <= 9; ++k) {
      const BooleanFn a = fk(k, v), b = fk(k - 1, v), c = fk(k - 2, v);
      for (std::uint64_t x = 0; x < (1u << k); ++x) {
        const int expect = ((x & 1) & eval_mask(b, x >> 1)) ^ eval_mask(c, x >> 2);
        ASSERT_EQ(eval_mask(a, x), expect) << "k=" << k << " x=" << x;
      }
    }
  }
}

TEST(boolfn, fourier_weight_four_of_and3) {
  // w^{4 x1x2x3}: parity expansion with coefficients +-1.
  PhasePoly p = fourier(BooleanFn::monomial(3, 0b111), 4);
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(eval_phase_mask(p, x), x == 7 ? 4 : 0);
  EXPECT_EQ(p.coeffs.size(), 7u);
}

TEST(boolfn, fourier_random_expressible) {
  std::mt19937 rng(99);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const int w = 1 + static_cast<int>(rng() % 7);
    BooleanFn f = random_anf(rng, n, 5, 3);
    PhasePoly p;
    try {
      p = fourier(f, w);
    } catch (const BoolFnError&) {
      continue;
    }
    ++checked;
    for (std::uint64_t x = 0; x < (1u << n); ++x) {
      ASSERT_EQ(eval_phase_mask(p, x), (w * eval_mask(f, x)) % 8);
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(boolfn, fourier_rejects_inexpressible) {
  EXPECT_THROW(fourier(BooleanFn::monomial(2, 0b11), 1), BoolFnError);
  EXPECT_THROW(fourier(BooleanFn::monomial(3, 0b111), 2), BoolFnError);
  EXPECT_NO_THROW(fourier(BooleanFn::monomial(2, 0b11), 2));
}

TEST(boolfn, truncate_splits_by_target) {
  PhasePoly p = fourier(BooleanFn::monomial(3, 0b111), 4);
  auto [kept, dropped] = truncate_to_target(p, 2);
  for (const auto& [s, c] : kept.coeffs) EXPECT_TRUE(s & 0b100);
  for (const auto& [s, c] : dropped.coeffs) EXPECT_FALSE(s & 0b100);
  EXPECT_EQ(kept.coeffs.size() + dropped.coeffs.size(), p.coeffs.size());
}
