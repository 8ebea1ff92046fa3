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

#include <random>

#include "tilecode/code_space.hpp"
#include "tilecode/fibonacci.hpp"
#include "tilecode/recovery.hpp"

namespace tilecode {
namespace {

Bits erase(Bits w, std::size_t start, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) w[(start + i) % w.size()] = '?';
  return w;
}

TEST(Recovery, ParentStrings) {
  EXPECT_EQ(parent_string("010"), "11");
  EXPECT_EQ(parent_string("110"), "01");
  EXPECT_EQ(parent_string("011"), "10");
  EXPECT_EQ(parent_string("101"), "1");
  EXPECT_EQ(parent_string(""), "");
  EXPECT_THROW(parent_string("00"), InapplicableError);
  EXPECT_FALSE(try_parent_string("1001").has_value());
}

TEST(Recovery, ParentLengthContract) {
  Bits big = inflate_bits("1", 20);
  for (unsigned n = 1; n <= 8; ++n) {
    const std::size_t len = fib(n + 1);
    for (std::size_t i = 0; i + len <= 3000; i += 7) {
      EXPECT_LE(parent_string(big.substr(i, len)).size(), fib(n));
    }
  }
}

TEST(Recovery, CyclicDeflation) {
  EXPECT_EQ(CyclicWord(to_word(deflate_cyclic("10110101"))), CyclicWord(to_word(inflate_bits("10", 2))));
  EXPECT_THROW(deflate_cyclic("1001"), InapplicableError);
  EXPECT_EQ(cyclic_count("10110101", ""), 8u);
  EXPECT_EQ(cyclic_count("10110101", "11"), 2u);
  EXPECT_EQ(cyclic_count("101", "11"), 1u);
}

TEST(Recovery, ParentOfLL) {
  for (const Bits seed : {"10", "1", "100", "11010", "0011"}) {
    for (unsigned n = 1; n <= 8; ++n) {
      EXPECT_EQ(cyclic_count(inflate_bits(seed, n), "11"), cyclic_count(inflate_bits(seed, n - 1), "0"));
    }
  }
}

TEST(Recovery, AncestorDigit) {
  EXPECT_EQ(recover_ancestor_digit("10", 1), '1');
  EXPECT_EQ(recover_ancestor_digit("11", 1), '0');
  EXPECT_EQ(recover_ancestor_digit("0", 0), '0');
  EXPECT_EQ(recover_ancestor_digit("1", 0), '1');
  EXPECT_THROW(recover_ancestor_digit("1", 1), std::invalid_argument);
}

TEST(Recovery, AncestorDigitSweep) {
  for (std::size_t len = 1; len <= 4; ++len) {
    for (std::size_t k1 = 0; k1 <= len; ++k1) {
      for (const Bits &seed : primitive_seeds(len - k1, k1)) {
        for (unsigned n = 0; n <= 8; ++n) {
          const Bits f = inflate_bits(seed, n);
          const std::size_t need = fib(n + 2) - 1;
          Bits ring;
          while (ring.size() < f.size() + need) ring += f;
          std::size_t pos = 0;
          for (std::size_t j = 0; j < seed.size(); ++j) {
            EXPECT_EQ(recover_ancestor_digit(ring.substr(pos, need), n), seed[j]);
            pos += inflate_bits(seed.substr(j, 1), n).size();
          }
        }
      }
    }
  }
}

TEST(Recovery, EmptyHole) {
  RecoveryResult r = repair_hole("10110101", 1, 1, 3);
  EXPECT_EQ(r.kind, RecoveryKind::Unique);
  EXPECT_TRUE(r.contains("10110101"));
}

TEST(Recovery, SeedTenLevelThree) {
  const Bits f = inflate_bits("10", 3);
  for (std::size_t s = 0; s < f.size(); ++s) {
    RecoveryResult r = repair_hole(erase(f, s, fib(3) + 1), 1, 1, 3);
    EXPECT_TRUE(r.kind == RecoveryKind::Unique || r.kind == RecoveryKind::SwapPair) << s;
    EXPECT_TRUE(r.contains(f)) << s;
  }
}

TEST(Recovery, SwapPairShape) {
  // two seeds one swap apart give a genuine pair
  const Bits f = inflate_bits("00111", 2);
  bool seen = false;
  for (std::size_t s = 0; s < f.size() && !seen; ++s) {
    RecoveryResult r = repair_hole(erase(f, s, fib(2) + 1), 2, 3, 2);
    ASSERT_TRUE(r.contains(f));
    if (r.kind != RecoveryKind::SwapPair) continue;
    seen = true;
    ASSERT_EQ(r.candidates.size(), 2u);
    EXPECT_LT(CyclicWord(to_word(r.candidates[0])).canonical(), CyclicWord(to_word(r.candidates[1])).canonical());
    std::size_t diff = 0;
    for (std::size_t i = 0; i < f.size(); ++i) diff += r.candidates[0][i] != r.candidates[1][i];
    EXPECT_EQ(diff, 2u);
    const std::size_t p = r.swap_position;
    EXPECT_NE(r.candidates[0][p], r.candidates[0][(p + 1) % f.size()]);
    EXPECT_EQ(r.candidates[0][p], r.candidates[1][(p + 1) % f.size()]);
    EXPECT_TRUE(swap_related(r.seeds[0], r.seeds[1]));
  }
  EXPECT_TRUE(seen);
}

TEST(Recovery, AgreesWithBruteForce) {
  for (const Bits seed : {"10", "100", "1100", "01011", "11010"}) {
    std::size_t k1 = std::count(seed.begin(), seed.end(), '1');
    for (unsigned n = 1; n <= 4; ++n) {
      const Bits f = inflate_bits(seed, n);
      const std::size_t len = std::min<std::size_t>(fib(n) + 1, f.size());
      for (std::size_t s = 0; s < f.size(); ++s) {
        Hole h{s, len};
        RecoveryResult a = repair_hole(f, h, seed.size() - k1, k1, n);
        RecoveryResult b = brute_force_repair(f, h, seed.size() - k1, k1, n);
        EXPECT_EQ(a.alignments, b.alignments) << seed << " n=" << n << " s=" << s;
        for (const auto &c : a.candidates) {
          EXPECT_EQ(std::count(c.begin(), c.end(), '1'), std::count(f.begin(), f.end(), '1'));
        }
      }
    }
  }
}

TEST(Recovery, CorruptedInputIsInfeasible) {
  // 00 can never appear in an inflation with n >= 1
  RecoveryResult r = repair_hole("1001??01", 1, 1, 3);
  EXPECT_EQ(r.kind, RecoveryKind::Infeasible);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Recovery, HoleRules) {
  EXPECT_THROW(find_hole("1?0?1"), std::invalid_argument);
  Hole h = find_hole("??1011??");
  EXPECT_EQ(h.start, 6u);
  EXPECT_EQ(h.length, 4u);
  EXPECT_THROW(repair_hole("1?????01", 1, 1, 3), std::invalid_argument);
}

TEST(Recovery, LinearWindow) {
  const Bits big = inflate_bits("1", 16);
  const unsigned n = 3;
  const std::size_t side = fib(n + 2) - 1;
  for (std::size_t at = 100; at < 160; ++at) {
    Bits window = big.substr(at - side, 2 * side + fib(n) + 1);
    Bits orig = window;
    for (std::size_t i = side; i < side + fib(n) + 1; ++i) window[i] = '?';
    auto fills = repair_window(window, n);
    EXPECT_NE(std::find(fills.begin(), fills.end(), orig), fills.end());
    EXPECT_LE(fills.size(), 2u);
  }
  EXPECT_THROW(repair_window("1?1", 3), std::invalid_argument);
}

}  // namespace
}  // namespace tilecode
