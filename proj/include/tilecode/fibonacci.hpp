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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tilecode/quadratic.hpp"
#include "tilecode/word.hpp"

namespace tilecode {

// Fibonacci words are handled as strings of '1' and '0' characters. Use
// to_word/from_word to move between these and symbol-index Words of
// fibonacci_rule().
using Bits = std::string;

Word to_word(const Bits &bits);
Bits from_word(const Word &w);

// f_0 = f_1 = 1, f_k = f_{k-1} + f_{k-2}. Valid for k <= 90.
std::uint64_t fib(unsigned k);

// Smallest k with n <= f_k - 1; then n lies in [f_{k-1}, f_k - 1].
unsigned fib_tier(std::uint64_t n);

// Applies (1,0) -> (10,1) the given number of times.
Bits inflate_bits(const Bits &bits, unsigned steps = 1);

enum class SingularConvention { Refuse, LeftClosed, RightClosed };

// gamma == tau*m (mod 1) for some integer m.
bool is_singular(const QuadraticValue &gamma);

// a_n for n in [lo, hi]: 1 iff frac(tau*n + gamma) lies in [1 - tau, 1)
// (LeftClosed) or (1 - tau, 1] (RightClosed). Both agree unless gamma is
// singular, in which case Refuse throws std::domain_error.
Bits cut_and_project(const QuadraticValue &gamma, long lo, long hi,
                     SingularConvention convention = SingularConvention::Refuse);

bool is_legal(const Bits &w);

std::size_t complexity(std::size_t n);

struct SpectrumEntry {
  Bits word;
  unsigned exponent = 0;  // frequency is tau^exponent
  QuadraticValue frequency;
};

struct FrequencySpectrum {
  std::size_t n = 0;
  unsigned k = 0;  // tier index, n in [f_{k-1}, f_k - 1]
  std::vector<SpectrumEntry> entries;
};

FrequencySpectrum spectrum(std::size_t n);

struct TierSizes {
  std::size_t at_k = 0, at_k1 = 0, at_k2 = 0;
};
TierSizes expected_tier_sizes(std::size_t n);

struct EntropyValue {
  double direct = 0;       // -sum nu ln nu over the exact spectrum
  double closed_form = 0;  // tier-size formula
};

EntropyValue entanglement_entropy(std::size_t n);

}  // namespace tilecode
