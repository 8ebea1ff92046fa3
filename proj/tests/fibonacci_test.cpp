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
#include <map>

#include "tilecode/fibonacci.hpp"
#include "tilecode/substitution.hpp"

namespace tilecode {
namespace {

QuadraticValue tau() { return golden_tau(); }

TEST(Fibonacci, Numbers) {
  EXPECT_EQ(fib(0), 1u);
  EXPECT_EQ(fib(1), 1u);
  EXPECT_EQ(fib(2), 2u);
  EXPECT_EQ(fib(10), 89u);
  for (unsigned k = 2; k < 60; ++k) EXPECT_EQ(fib(k), fib(k - 1) + fib(k - 2));
}

TEST(Fibonacci, InflationLengths) {
  EXPECT_EQ(inflate_bits("10", 3), "10110101");
  for (unsigned n = 0; n < 15; ++n) EXPECT_EQ(inflate_bits("1", n).size(), fib(n + 1));
}

TEST(Fibonacci, CutAndProjectHalf) {
  EXPECT_EQ(cut_and_project(QuadraticValue::rational(1, 2), 0, 5), "101011");
}

TEST(Fibonacci, SingularGamma) {
  EXPECT_TRUE(is_singular(QuadraticValue(0)));
  EXPECT_TRUE(is_singular(tau() * QuadraticValue(3)));
  EXPECT_FALSE(is_singular(QuadraticValue::rational(1, 2)));
  EXPECT_THROW(cut_and_project(QuadraticValue(0), 0, 5), std::domain_error);
  Bits left = cut_and_project(QuadraticValue(0), -20, 20, SingularConvention::LeftClosed);
  Bits right = cut_and_project(QuadraticValue(0), -20, 20, SingularConvention::RightClosed);
  EXPECT_NE(left, right);
  EXPECT_TRUE(is_legal(left));
  EXPECT_TRUE(is_legal(right));
}

TEST(Fibonacci, CutAndProjectLegal) {
  for (long num = 1; num < 40; ++num) {
    QuadraticValue g = QuadraticValue::rational(num, 41) + QuadraticValue(0, mpq_class(num % 5, 7), 5);
    if (is_singular(g)) continue;
    Bits b = cut_and_project(g, -300, 300);
    EXPECT_EQ(b.find("00"), Bits::npos);
    EXPECT_EQ(b.find("111"), Bits::npos);
    EXPECT_TRUE(is_legal(b.substr(0, 60)));
  }
  EXPECT_THROW(cut_and_project(QuadraticValue::rational(1, 2), 5, 4), std::invalid_argument);
}

TEST(Fibonacci, IsLegal) {
  EXPECT_FALSE(is_legal("00"));
  EXPECT_FALSE(is_legal("111"));
  EXPECT_TRUE(is_legal("10110"));
  EXPECT_TRUE(is_legal(""));
  EXPECT_TRUE(is_legal(inflate_bits("1", 12).substr(17, 100)));
}

TEST(Fibonacci, Complexity) {
  EXPECT_EQ(complexity(1), 2u);
  EXPECT_EQ(complexity(2), 3u);
  EXPECT_EQ(complexity(100), 101u);
}

TEST(Fibonacci, SpectrumSmall) {
  FrequencySpectrum s1 = spectrum(1);
  std::map<Bits, QuadraticValue> m1;
  for (const auto &e : s1.entries) m1[e.word] = e.frequency;
  EXPECT_EQ(m1["1"], tau());
  EXPECT_EQ(m1["0"], tau() * tau());

  std::map<Bits, QuadraticValue> m2;
  for (const auto &e : spectrum(2).entries) m2[e.word] = e.frequency;
  EXPECT_EQ(m2["11"], QuadraticValue(-2) + QuadraticValue::sqrt_of(5));
  EXPECT_EQ(m2["10"], tau() * tau());
  EXPECT_EQ(m2["01"], tau() * tau());

  std::map<unsigned, int> tiers;
  QuadraticValue total;
  for (const auto &e : spectrum(3).entries) {
    ++tiers[e.exponent];
    total += e.frequency;
  }
  EXPECT_EQ(tiers, (std::map<unsigned, int>{{2, 1}, {3, 2}, {4, 1}}));
  EXPECT_EQ(total, QuadraticValue(1));
}

TEST(Fibonacci, SpectrumMatchesInducedPerron) {
  for (std::size_t n = 1; n <= 8; ++n) {
    InducedSystem sys = induced_substitution(fibonacci_rule(), n);
    PerronData pd = perron_frequencies(sys.matrix, 5);
    std::map<Bits, QuadraticValue> expect;
    for (size_t i = 0; i < sys.words.size(); ++i) expect[from_word(sys.words[i])] = pd.frequencies[i];
    FrequencySpectrum s = spectrum(n);
    ASSERT_EQ(s.entries.size(), n + 1);
    for (const auto &e : s.entries) {
      EXPECT_EQ(e.frequency, expect.at(e.word)) << "n = " << n << " word " << e.word;
      EXPECT_EQ(e.frequency, pow(tau(), e.exponent));
    }
  }
}

TEST(Fibonacci, SpectrumMatchesDeepCounts) {
  Bits big = inflate_bits("10", 25);
  for (std::size_t n : {5u, 13u, 20u}) {
    Bits ring = big + big.substr(0, n - 1);
    std::map<Bits, double> count;
    for (size_t i = 0; i < big.size(); ++i) count[ring.substr(i, n)] += 1;
    FrequencySpectrum s = spectrum(n);
    EXPECT_EQ(count.size(), n + 1);
    for (const auto &e : s.entries) {
      EXPECT_NEAR(count[e.word] / big.size(), e.frequency.to_double(), 1e-9) << e.word;
    }
  }
}

TEST(Fibonacci, TierSizesAndSum) {
  for (std::size_t n = 1; n <= 200; ++n) {
    FrequencySpectrum s = spectrum(n);
    ASSERT_GE(s.k, 2u);
    EXPECT_GE(n, fib(s.k - 1));
    EXPECT_LE(n, fib(s.k) - 1);
    TierSizes want = expected_tier_sizes(n);
    TierSizes got;
    QuadraticValue total;
    for (const auto &e : s.entries) {
      total += e.frequency;
      if (e.exponent == s.k) ++got.at_k;
      else if (e.exponent == s.k - 1) ++got.at_k1;
      else if (e.exponent == s.k - 2) ++got.at_k2;
      else ADD_FAILURE() << "exponent " << e.exponent << " at n = " << n;
    }
    EXPECT_EQ(got.at_k, want.at_k);
    EXPECT_EQ(got.at_k1, want.at_k1);
    EXPECT_EQ(got.at_k2, want.at_k2);
    EXPECT_EQ(total, QuadraticValue(1)) << n;
  }
  // boundary n = f_k - 1: the third tier is empty
  EXPECT_EQ(expected_tier_sizes(fib(7) - 1).at_k2, 0u);
}

TEST(Fibonacci, Entropy) {
  const double t = tau().to_double();
  EntropyValue e1 = entanglement_entropy(1);
  EXPECT_NEAR(e1.direct, (2 * t * t + t) * std::log(1 / t), 1e-12);
  EXPECT_NEAR(e1.direct, 0.6650, 5e-5);
  for (std::size_t n = 1; n <= 500; ++n) {
    EntropyValue e = entanglement_entropy(n);
    EXPECT_NEAR(e.direct, e.closed_form, 1e-12);
    EXPECT_GE(e.direct - std::log(double(n)), -1.0);
    EXPECT_LE(e.direct - std::log(double(n)), 1.0);
  }
}

TEST(Fibonacci, DistinctOffsetsGiveDistinctWords) {
  std::vector<QuadraticValue> gammas = {
      QuadraticValue::rational(1, 2), QuadraticValue::rational(1, 3), QuadraticValue::rational(1, 2) + QuadraticValue::rational(1, 10000),
      QuadraticValue::rational(2, 7), QuadraticValue(0, mpq_class(1, 10), 5)};
  for (size_t i = 0; i < gammas.size(); ++i) {
    for (size_t j = i + 1; j < gammas.size(); ++j) {
      EXPECT_NE(cut_and_project(gammas[i], -10000, 10000), cut_and_project(gammas[j], -10000, 10000));
    }
  }
}

}  // namespace
}  // namespace tilecode
