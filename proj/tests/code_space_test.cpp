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

#include "tilecode/code_space.hpp"
#include "tilecode/fibonacci.hpp"

namespace tilecode {
namespace {

void expect_same(const QECCReport &a, const QECCReport &b) {
  EXPECT_EQ(a.pass(), b.pass());
  EXPECT_EQ(a.cross_terms_vanish, b.cross_terms_vanish);
  EXPECT_EQ(a.same_word_blocks_agree, b.same_word_blocks_agree);
  EXPECT_EQ(a.densities_equal, b.densities_equal);
  EXPECT_EQ(a.cross_witness.has_value(), b.cross_witness.has_value());
}

TEST(CodeSpace, SingleSeedFamily) {
  CodeFamily f = build_family({"10"}, 3);
  ASSERT_EQ(f.codewords.size(), 1u);
  EXPECT_EQ(CyclicWord(to_word(f.codewords[0])), CyclicWord(to_word("10110101")));
  EXPECT_EQ(f.length(), 8u);
}

TEST(CodeSpace, FamilyRules) {
  try {
    build_family({"1100", "1010"}, 2);
    FAIL() << "expected rejection";
  } catch (const std::invalid_argument &e) {
    EXPECT_NE(std::string(e.what()).find("adjacent swap"), std::string::npos);
  }
  EXPECT_THROW(build_family({"10", "100"}, 1), std::invalid_argument);
  EXPECT_THROW(build_family({"1010"}, 1), std::invalid_argument);
  EXPECT_THROW(build_family({}, 1), std::invalid_argument);
  EXPECT_THROW(build_family({"12"}, 1), std::invalid_argument);
  EXPECT_NO_THROW(build_family({"1100", "1010"}, 2, false));
}

TEST(CodeSpace, SwapRelation) {
  EXPECT_TRUE(swap_related("1100", "1010"));
  EXPECT_TRUE(swap_related("0011", "0101"));
  EXPECT_TRUE(swap_related("01", "10"));
  EXPECT_FALSE(swap_related("00111", "00111"));
  EXPECT_FALSE(swap_related("000111", "010101"));
}

TEST(CodeSpace, GreedyFamilyIsMaximal) {
  auto all = primitive_seeds(2, 3);
  auto kept = greedy_seed_set(2, 3);
  ASSERT_FALSE(kept.empty());
  for (size_t i = 0; i < kept.size(); ++i) {
    for (size_t j = i + 1; j < kept.size(); ++j) EXPECT_FALSE(swap_related(kept[i], kept[j]));
  }
  for (const auto &s : all) {
    if (std::find(kept.begin(), kept.end(), s) != kept.end()) continue;
    bool blocked = false;
    for (const auto &k : kept) blocked |= swap_related(s, k);
    EXPECT_TRUE(blocked) << s;
  }
  EXPECT_NO_THROW(build_family(kept, 2));
}

TEST(CodeSpace, WindowDensity) {
  const Bits f = "10110101";
  EXPECT_EQ(window_density(f, 1), (WindowDensity{{"1", 5}, {"0", 3}}));
  WindowDensity d2;
  for (size_t i = 0; i < f.size(); ++i) d2[(f + f).substr(i, 2)]++;
  EXPECT_EQ(window_density(f, 2), d2);
  WindowDensity full = window_density(f, f.size());
  EXPECT_EQ(full.size(), f.size());
  for (const auto &[w, c] : full) EXPECT_EQ(c, 1u);
}

TEST(CodeSpace, SingleSeedPasses) {
  for (const Bits seed : {"1", "10", "100", "110", "1000", "1100", "11100"}) {
    for (unsigned n = 1; n <= 8; ++n) {
      CodeFamily f = build_family({seed}, n);
      for (std::size_t w = 1; w <= std::min<std::size_t>(fib(n) + 1, f.length()); ++w) {
        QECCReport r = verify_qecc(f, w);
        EXPECT_TRUE(r.pass()) << seed << " n=" << n << " w=" << w;
        EXPECT_FALSE(r.cross_witness);
      }
    }
  }
}

TEST(CodeSpace, MultiSeedFamilyPasses) {
  for (const auto &seeds : valid_seed_sets(2, 3)) {
    for (unsigned n = 2; n <= 6; ++n) {
      CodeFamily f = build_family(seeds, n);
      QECCReport r = verify_qecc(f, fib(n) + 1);
      EXPECT_TRUE(r.pass()) << seeds.size() << " seeds, n=" << n;
    }
  }
}

TEST(CodeSpace, SwapPairFailsCrossTerms) {
  CodeFamily f = build_family({"1100", "1010"}, 2, false);
  QECCReport r = verify_qecc(f, fib(2) + 1);
  EXPECT_FALSE(r.cross_terms_vanish);
  ASSERT_TRUE(r.cross_witness);
  const auto &w = *r.cross_witness;
  EXPECT_NE(w.seed_i, w.seed_j);
  // the witness translates agree off the window; translate x puts
  // codeword digit q at position q + x
  auto shifted = [&](std::size_t s, std::size_t x) {
    const Bits &c = f.codewords[s];
    Bits out(c.size(), '?');
    for (std::size_t q = 0; q < c.size(); ++q) out[(q + x) % c.size()] = c[q];
    return out;
  };
  Bits a = shifted(w.seed_i, w.shift_x), b = shifted(w.seed_j, w.shift_y);
  for (std::size_t p = 0; p < a.size(); ++p) {
    std::size_t rel = (p + a.size() - w.window_start) % a.size();
    if (rel >= r.window) EXPECT_EQ(a[p], b[p]) << p;
  }
}

TEST(CodeSpace, SevenLetterFamilyFailsSameWordBlocks) {
  CodeFamily f = build_family({"0011111", "0110111"}, 2);
  QECCReport r = verify_qecc(f, fib(2) + 1);
  EXPECT_TRUE(r.cross_terms_vanish);
  EXPECT_FALSE(r.same_word_blocks_agree);
  EXPECT_FALSE(r.pass());
  CodeFamily small = build_family({"0011111", "0110111"}, 1);
  OracleReport o = statevector_oracle(small, fib(1) + 1);
  EXPECT_EQ(o.verdict.pass(), verify_qecc(small, fib(1) + 1).pass());
  EXPECT_FALSE(o.verdict.same_word_blocks_agree);
}

TEST(CodeSpace, SerialAndParallelAgree) {
  for (const auto &seeds : valid_seed_sets(2, 3)) {
    for (unsigned n = 1; n <= 7; ++n) {
      CodeFamily f = build_family(seeds, n);
      for (std::size_t w = 1; w <= fib(n) + 2; ++w) expect_same(verify_qecc(f, w), verify_qecc_serial(f, w));
    }
  }
  CodeFamily bad = build_family({"1100", "1010"}, 3, false);
  expect_same(verify_qecc(bad, fib(3) + 1), verify_qecc_serial(bad, fib(3) + 1));
}

TEST(CodeSpace, OracleMatchesCombinatorial) {
  CodeFamily f = build_family({"10"}, 2);
  ASSERT_EQ(f.length(), 5u);
  for (std::size_t w = 1; w <= 5; ++w) {
    OracleReport o = statevector_oracle(f, w, 2026, 100);
    QECCReport c = verify_qecc(f, w);
    EXPECT_EQ(o.verdict.pass(), c.pass()) << w;
    EXPECT_LT(o.max_count_mismatch, kOracleTolerance);
    if (c.pass()) EXPECT_LT(o.max_superposition_dev, kOracleTolerance);
  }
  CodeFamily big = build_family({"10"}, 6);
  EXPECT_THROW(statevector_oracle(big, 3), std::invalid_argument);
}

TEST(CodeSpace, OracleOnMultiSeedFamily) {
  for (const auto &seeds : valid_seed_sets(2, 3)) {
    if (seeds.size() < 2) continue;
    CodeFamily f = build_family(seeds, 1);
    if (f.length() > kOracleMaxLength) continue;
    OracleReport o = statevector_oracle(f, fib(1) + 1, 11, 20);
    EXPECT_TRUE(o.verdict.pass());
    EXPECT_LT(o.max_cross, kOracleTolerance);
  }
}

TEST(CodeSpace, Phases) {
  CodeFamily f = build_family({"10"}, 2);
  PhaseReport unit = phase_robustness(f, 3, unit_phases(f));
  EXPECT_TRUE(unit.decorated_match);
  EXPECT_FALSE(unit.mixture_breaks);
  // a one-letter window never sees a cross term
  PhaseReport one = phase_robustness(f, 1, random_phases(f, 7));
  EXPECT_TRUE(one.decorated_match);
  EXPECT_TRUE(one.mixture_breaks);
  // 10101 and 10110 agree off a two-letter window, so their relative
  // phase reaches rho_K
  PhaseReport three = phase_robustness(f, 3, random_phases(f, 7));
  EXPECT_FALSE(three.decorated_match);
  EXPECT_TRUE(three.mixture_breaks);
  // phases constant on a whole codeword are invisible
  PhaseTable global = unit_phases(f);
  for (auto &c : global[0]) c = std::polar(1.0, 0.7);
  EXPECT_TRUE(phase_robustness(f, 3, global).decorated_match);
  PhaseTable wrong = unit_phases(f);
  wrong[0][0] = 2.0;
  EXPECT_THROW(phase_robustness(f, 3, wrong), std::invalid_argument);
}

TEST(CodeSpace, ProductTable) {
  EXPECT_EQ(product2d("10", "101"), (Table{{3, 2, 3}, {1, 0, 1}}));
}

TEST(CodeSpace, SquareRepair) {
  const Bits a = inflate_bits("10", 3);
  Table t = product2d(a, a);
  SquareRepair none = repair_square(erase_square(t, 0, 0, 0), {1, 1, 3}, {1, 1, 3});
  EXPECT_EQ(none.rows.kind, RecoveryKind::Unique);
  EXPECT_TRUE(none.rows.contains(a));
  for (std::size_t r0 = 0; r0 < 8; ++r0) {
    for (std::size_t c0 = 0; c0 < 8; ++c0) {
      SquareRepair rep = repair_square(erase_square(t, r0, c0, 4), {1, 1, 3}, {1, 1, 3});
      EXPECT_TRUE(rep.rows.contains(a));
      EXPECT_TRUE(rep.columns.contains(a));
    }
  }
  Table bad = t;
  bad[0][0] = (bad[0][0] + 1) % 4;
  EXPECT_THROW(repair_square(bad, {1, 1, 3}, {1, 1, 3}), std::invalid_argument);
}

}  // namespace
}  // namespace tilecode
