// Copyright 2026 The tilecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "tilecode/quadratic.hpp"

namespace tilecode {
namespace {

TEST(Quadratic, GoldenIdentities) {
  QuadraticValue tau = golden_tau(), phi = golden_phi();
  EXPECT_EQ(tau * phi, QuadraticValue(1));
  EXPECT_EQ(tau * tau + tau, QuadraticValue(1));
  EXPECT_EQ(phi - tau, QuadraticValue(1));
  EXPECT_EQ(pow(tau, 2), QuadraticValue(mpq_class(3, 2), mpq_class(-1, 2), 5));
  EXPECT_EQ(pow(tau, 3), QuadraticValue(-2) + QuadraticValue::sqrt_of(5));
}

TEST(Quadratic, SilverRatio) {
  QuadraticValue s = silver_ratio();
  EXPECT_EQ(s * s, QuadraticValue(3) + QuadraticValue(0, 2, 2));
  EXPECT_EQ(s * s.conjugate(), QuadraticValue(-1));
  EXPECT_EQ(s.norm(), -1);
}

TEST(Quadratic, SignFloorCeilExact) {
  QuadraticValue tau = golden_tau();
  EXPECT_EQ(tau.sign(), 1);
  EXPECT_EQ((tau - QuadraticValue::rational(618034, 1000000)).sign(), -1);
  EXPECT_EQ((tau - QuadraticValue::rational(618033, 1000000)).sign(), 1);
  EXPECT_EQ(tau.floor(), 0);
  EXPECT_EQ(tau.ceil(), 1);
  EXPECT_EQ((-tau).floor(), -1);
  EXPECT_EQ(QuadraticValue(7).floor(), 7);
  EXPECT_EQ(QuadraticValue(7).ceil(), 7);
  EXPECT_EQ(QuadraticValue::sqrt_of(5).floor(), 2);
  // sqrt(1000001) sits just above 1000
  EXPECT_EQ(QuadraticValue(0, 1, 1000001).floor(), 1000);
  EXPECT_EQ((QuadraticValue(-1000) + QuadraticValue(0, 1, 1000001)).sign(), 1);
}

TEST(Quadratic, NormalizesPerfectSquares) {
  QuadraticValue v = QuadraticValue::sqrt_of(4);
  EXPECT_TRUE(v.is_rational());
  EXPECT_EQ(v, QuadraticValue(2));
  EXPECT_EQ(QuadraticValue(0, 2, 8), QuadraticValue(0, 4, 2));
}

TEST(Quadratic, DivisionAndOrdering) {
  QuadraticValue x(1, 1, 5);
  EXPECT_EQ(x / x, QuadraticValue(1));
  EXPECT_EQ(QuadraticValue(1) / golden_phi(), golden_tau());
  EXPECT_LT(golden_tau(), QuadraticValue::rational(5, 8));
  EXPECT_GT(golden_tau(), QuadraticValue::rational(3, 5));
  EXPECT_THROW(x / QuadraticValue(0), std::domain_error);
}

TEST(Quadratic, MixedRadicandsRefused) {
  EXPECT_THROW(QuadraticValue::sqrt_of(5) + QuadraticValue::sqrt_of(2), std::invalid_argument);
}

TEST(Quadratic, DoubleAndText) {
  EXPECT_NEAR(golden_tau().to_double(), (std::sqrt(5.0) - 1) / 2, 1e-15);
  EXPECT_EQ(golden_tau().str(), "-1/2 + 1/2*sqrt(5)");
  QuadraticHash h;
  EXPECT_EQ(h(golden_tau()), h(QuadraticValue(1) / golden_phi()));
}

}  // namespace
}  // namespace tilecode
