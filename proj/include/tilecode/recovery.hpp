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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilecode/fibonacci.hpp"

namespace tilecode {

// Thrown when the deflation procedure cannot be applied.
class InapplicableError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// One deflation step on a linear factor: cut left of each 1, interior
// 10 -> 1 and 1 -> 0, a leading 0 is promoted to 1, a trailing lone 1 is
// dropped.
Bits parent_string(const Bits &k);

// Non-throwing variant.
std::optional<Bits> try_parent_string(const Bits &k);

// One deflation step on a cyclic word. Throws InapplicableError.
Bits deflate_cyclic(const Bits &w);
std::optional<Bits> try_deflate_cyclic(const Bits &w);

// Number of positions i in [0, |w|) at which k reads cyclically from w.
// The empty word occurs |w| times.
std::size_t cyclic_count(const Bits &w, const Bits &k);

// Level-0 digit whose n-fold inflation starts at context[0].
// Requires |context| >= f_{n+2} - 1.
char recover_ancestor_digit(const Bits &context, unsigned n);

struct Hole {
  std::size_t start = 0;
  std::size_t length = 0;
};

enum class RecoveryKind { Unique, SwapPair, Ambiguous, Infeasible };

const char *to_string(RecoveryKind k);

// Results are classified by cyclic word (translates are the same code
// word). Every aligned filling is kept in `alignments`.
struct RecoveryResult {
  RecoveryKind kind = RecoveryKind::Infeasible;
  // One aligned representative per cyclic class, ordered by canonical form.
  // For SwapPair the two representatives differ by one adjacent transposition
  // inside the hole.
  std::vector<Bits> candidates;
  std::vector<Bits> seeds;       // canonical level-0 seed of each candidate
  std::vector<Bits> alignments;  // every consistent filling, sorted
  std::size_t swap_position = 0;  // SwapPair: first index of the swapped pair
  std::string reason;             // Infeasible
  // True iff w is a rotation of one of the candidates.
  bool contains(const Bits &w) const;
  bool contains_aligned(const Bits &w) const;
};

// `word` has '?' on a contiguous cyclic run; everything else is 0/1.
// Requires hole length <= f_n + 1 unless `allow_long_hole` is set.
RecoveryResult repair_hole(const std::string &word, std::size_t k0, std::size_t k1, unsigned n,
                           bool allow_long_hole = false);
RecoveryResult repair_hole(const Bits &word, Hole hole, std::size_t k0, std::size_t k1, unsigned n,
                           bool allow_long_hole = false);

// Test oracle: tries every filling of the hole and keeps those that deflate n
// times (cyclically) to a seed with k0 zeros and k1 ones.
RecoveryResult brute_force_repair(const Bits &word, Hole hole, std::size_t k0, std::size_t k1,
                                  unsigned n);

// Repair of an erased run inside a long linear window of an infinite word.
// Needs at least f_{n+2} - 1 visible digits on each side of the hole; throws
// std::invalid_argument otherwise. Returns every consistent filling.
std::vector<Bits> repair_window(const std::string &window, unsigned n);

// Locates the hole in a word with '?' markers. Throws if the '?' run is not
// contiguous.
Hole find_hole(const std::string &word);

}  // namespace tilecode
