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

#include <map>
#include <set>

#include "tilecode/fibonacci.hpp"
#include "tilecode/substitution.hpp"
#include "tilecode/tiling.hpp"

namespace tilecode {
namespace {

Word w(const SubstitutionRule &r, const std::string &text) { return r.alphabet().parse(text); }

TEST(Substitution, FibonacciApply) {
  SubstitutionRule f = fibonacci_rule();
  EXPECT_EQ(f.alphabet().format(f.apply(w(f, "1"))), "10");
  EXPECT_EQ(f.apply(w(f, "10"), 0), w(f, "10"));
  CyclicWord c = f.apply(CyclicWord(w(f, "10")), 3);
  EXPECT_EQ(c, CyclicWord(w(f, "10110101")));
  EXPECT_EQ(c.size(), 8u);
}

TEST(Substitution, ParseRoundTrip) {
  SubstitutionRule r = SubstitutionRule::parse("# comment\nL -> L S\nS -> L\n");
  EXPECT_EQ(r.alphabet().size(), 2u);
  EXPECT_EQ(SubstitutionRule::parse(r.to_text()).images(), r.images());
  EXPECT_THROW(SubstitutionRule::parse("L L S\n"), std::invalid_argument);
  EXPECT_THROW(SubstitutionRule::parse("L -> X\n"), std::invalid_argument);
}

TEST(Substitution, Matrices) {
  EXPECT_EQ(substitution_matrix(fibonacci_rule()), SubstitutionMatrix({{1, 1}, {1, 0}}));
  auto ab = inflation_matrix(Flavor::AmmannBeenker);
  EXPECT_EQ(SubstitutionMatrix({{ab[0][0], ab[0][1]}, {ab[1][0], ab[1][1]}}), SubstitutionMatrix({{3, 2}, {4, 3}}));
  auto pen = inflation_matrix(Flavor::Penrose);
  PerronData pd = perron_frequencies(SubstitutionMatrix({{pen[0][0], pen[0][1]}, {pen[1][0], pen[1][1]}}), 5);
  EXPECT_EQ(pd.eigenvalue, golden_phi() * golden_phi());
  // doubled Penrose counts follow the same frequencies as the merged tiles
  EXPECT_EQ(pd.frequencies[0], golden_tau());
}

TEST(Substitution, PerronFibonacci) {
  PerronData pd = perron_frequencies(SubstitutionMatrix({{1, 1}, {1, 0}}), 5);
  EXPECT_EQ(pd.eigenvalue, golden_phi());
  EXPECT_EQ(pd.frequencies[0], QuadraticValue(mpq_class(-1, 2), mpq_class(1, 2), 5));
  EXPECT_EQ(pd.frequencies[1], QuadraticValue(mpq_class(3, 2), mpq_class(-1, 2), 5));
}

TEST(Substitution, PerronAmmannBeenker) {
  SubstitutionMatrix m({{3, 2}, {4, 3}});
  PerronData pd = perron_frequencies(m, 2);
  EXPECT_EQ(pd.eigenvalue, QuadraticValue(3) + QuadraticValue(0, 2, 2));
  EXPECT_EQ(pd.frequencies[0], QuadraticValue(-1) + QuadraticValue::sqrt_of(2));
  EXPECT_EQ(pd.frequencies[1], QuadraticValue(2) - QuadraticValue::sqrt_of(2));
  // M v = lambda v on the unnormalized direction
  QuadraticValue s = pd.frequencies[0], r = pd.frequencies[1];
  EXPECT_EQ(QuadraticValue(3) * s + QuadraticValue(2) * r, pd.eigenvalue * s);
  EXPECT_EQ(QuadraticValue(4) * s + QuadraticValue(3) * r, pd.eigenvalue * r);
}

TEST(Substitution, CharacteristicPolynomial) {
  auto p = characteristic_polynomial(SubstitutionMatrix({{1, 1}, {1, 0}}));
  EXPECT_EQ(p, (std::vector<mpz_class>{-1, -1, 1}));
  EXPECT_EQ(characteristic_polynomial(SubstitutionMatrix({{3, 2}, {4, 3}})), (std::vector<mpz_class>{1, -6, 1}));
}

TEST(Substitution, Primitivity) {
  EXPECT_TRUE(SubstitutionMatrix({{1, 1}, {1, 0}}).is_primitive());
  EXPECT_FALSE(SubstitutionMatrix({{1, 0}, {0, 1}}).is_primitive());
  EXPECT_FALSE(SubstitutionMatrix({{1, 1}, {0, 1}}).is_primitive());
}

std::set<Bits> legal_bits(size_t k) {
  std::set<Bits> out;
  for (const auto &x : legal_words(fibonacci_rule(), k)) out.insert(from_word(x));
  return out;
}

TEST(Substitution, LegalWords) {
  EXPECT_EQ(legal_bits(2), (std::set<Bits>{"11", "10", "01"}));
  EXPECT_EQ(legal_bits(3), (std::set<Bits>{"010", "110", "011", "101"}));
  EXPECT_EQ(legal_bits(6).size(), 7u);
}

TEST(Substitution, LegalWordsAgreeWithIsLegal) {
  for (size_t k = 1; k <= 12; ++k) {
    std::set<Bits> expect = legal_bits(k);
    std::set<Bits> got;
    for (std::uint32_t m = 0; m < (1u << k); ++m) {
      Bits b;
      for (size_t i = 0; i < k; ++i) b += (m >> i & 1) ? '1' : '0';
      if (is_legal(b)) got.insert(b);
    }
    EXPECT_EQ(got, expect) << "k = " << k;
    EXPECT_EQ(expect.size(), k + 1);
  }
}

TEST(Substitution, InducedK2) {
  InducedSystem s = induced_substitution(fibonacci_rule(), 2);
  // order 11, 10, 01 (L before S)
  std::vector<Bits> names;
  for (const auto &x : s.words) names.push_back(from_word(x));
  ASSERT_EQ(names, (std::vector<Bits>{"11", "10", "01"}));
  EXPECT_EQ(s.matrix, SubstitutionMatrix({{0, 0, 1}, {1, 1, 0}, {1, 1, 0}}));
}

TEST(Substitution, InducedK1IsOriginal) {
  InducedSystem s = induced_substitution(fibonacci_rule(), 1);
  EXPECT_EQ(s.matrix, SubstitutionMatrix({{1, 1}, {1, 0}}));
}

TEST(Substitution, InducedK3MatchesCounts) {
  InducedSystem s = induced_substitution(fibonacci_rule(), 3);
  ASSERT_EQ(s.words.size(), 4u);
  PerronData pd = perron_frequencies(s.matrix, 5);
  QuadraticValue total;
  for (const auto &f : pd.frequencies) total += f;
  EXPECT_EQ(total, QuadraticValue(1));
  // cyclic counts, so there is no boundary term
  Bits big = inflate_bits("10", 25);
  std::map<Bits, double> count;
  Bits ring = big + big.substr(0, 2);
  for (size_t i = 0; i < big.size(); ++i) count[ring.substr(i, 3)] += 1;
  const double n = static_cast<double>(big.size());
  for (size_t i = 0; i < s.words.size(); ++i) {
    EXPECT_NEAR(count[from_word(s.words[i])] / n, pd.frequencies[i].to_double(), 1e-9);
  }
}

}  // namespace
}  // namespace tilecode
