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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilecode/fibonacci.hpp"
#include "tilecode/recovery.hpp"

namespace tilecode {

struct CodeFamily {
  std::size_t k0 = 0, k1 = 0;
  unsigned n = 0;
  std::vector<Bits> seeds;      // canonical rotations, sorted
  std::vector<Bits> codewords;  // n-fold inflation of each seed
  std::size_t length() const { return codewords.empty() ? 0 : codewords[0].size(); }
};

// True iff one adjacent 01 <-> 10 transposition (cyclic adjacency included)
// turns a into a rotation of b.
bool swap_related(const Bits &a, const Bits &b);

// Throws std::invalid_argument on mixed (k0,k1), a swap-related pair of
// distinct seeds, or a periodic seed. With validate = false only the count
// check runs.
CodeFamily build_family(const std::vector<Bits> &seeds, unsigned n, bool validate = true);

// Canonical primitive cyclic words with k0 zeros and k1 ones, sorted.
std::vector<Bits> primitive_seeds(std::size_t k0, std::size_t k1);

// Every nonempty subset of primitive_seeds(k0,k1) satisfying the swap rule.
std::vector<std::vector<Bits>> valid_seed_sets(std::size_t k0, std::size_t k1);

// Greedy pass over primitive_seeds(k0,k1) keeping seeds not swap-related to
// any already kept.
std::vector<Bits> greedy_seed_set(std::size_t k0, std::size_t k1);

// Window content -> number of cyclic positions showing it.
using WindowDensity = std::map<Bits, std::size_t>;
WindowDensity window_density(const Bits &codeword, std::size_t w);

// A pair of translates (seed i shifted by x, seed j shifted by y) that agree
// on the complement of the window starting at `window_start`.
struct CollisionWitness {
  std::size_t seed_i = 0, shift_x = 0, seed_j = 0, shift_y = 0, window_start = 0;
};

struct QECCReport {
  std::size_t window = 0;
  std::size_t length = 0;
  // (a) translates of different seeds never agree on the window complement.
  bool cross_terms_vanish = true;
  std::optional<CollisionWitness> cross_witness;
  // (b) within each seed, translates that agree on the complement produce
  // off-diagonal window terms; these must be the same for every seed.
  bool same_word_blocks_agree = true;
  std::optional<std::pair<std::size_t, std::size_t>> same_word_witness;
  // First same-seed complement collision, if any. Informational: such
  // collisions are allowed as long as (b) holds.
  std::optional<CollisionWitness> same_word_collision;
  // (c) window densities are identical across seeds.
  bool densities_equal = true;
  std::optional<std::pair<std::size_t, std::size_t>> density_witness;
  // Per-position results agreed across all window positions (checked when
  // the codeword length is at most 64, otherwise only position 0 is used).
  bool covariance_checked = false;
  bool covariant = true;
  bool pass() const { return cross_terms_vanish && same_word_blocks_agree && densities_equal; }
};

QECCReport verify_qecc(const CodeFamily &family, std::size_t w);
// Serial reference with plain pairwise comparison.
QECCReport verify_qecc_serial(const CodeFamily &family, std::size_t w);

// Dense state-vector cross-check, codeword length at most 16.
struct OracleReport {
  QECCReport verdict;
  double max_cross = 0;            // largest |entry| of Tr_{K^c} |Psi_i><Psi_j|, i != j
  double max_offdiagonal = 0;      // largest off-diagonal |entry| of rho_ii
  double max_offdiagonal_gap = 0;  // largest off-diagonal |rho_ii - rho_jj|
  double max_density_gap = 0;      // largest diagonal |rho_ii - rho_jj|
  double max_count_mismatch = 0;   // largest |diag rho_ii - density / N|
  double max_superposition_dev = 0;
  std::size_t superpositions = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kOracleTolerance = 1e-12;
inline constexpr std::size_t kOracleMaxLength = 16;

OracleReport statevector_oracle(const CodeFamily &family, std::size_t w, std::uint64_t seed = 2026,
                                std::size_t samples = 100);

using PhaseTable = std::vector<std::vector<std::complex<double>>>;  // [seed][shift]

PhaseTable unit_phases(const CodeFamily &family);
PhaseTable random_phases(const CodeFamily &family, std::uint64_t seed);

struct PhaseReport {
  bool decorated_match = false;
  double max_deviation = 0;
  double mixture_deviation = 0;
  bool mixture_breaks = false;
};

PhaseReport phase_robustness(const CodeFamily &family, std::size_t w, const PhaseTable &phases);

// Quaternary table T_ij = 2 a_i + b_j. Erased entries are -1.
using Table = std::vector<std::vector<int>>;

Table product2d(const Bits &a, const Bits &b);
// Erases the s-by-s square with top-left corner (r0, c0), wrapping around.
Table erase_square(const Table &t, std::size_t r0, std::size_t c0, std::size_t s);

struct FactorSpec {
  std::size_t k0 = 0, k1 = 0;
  unsigned n = 0;
};

struct SquareRepair {
  RecoveryResult rows;     // factor a
  RecoveryResult columns;  // factor b
};

// Reads each factor from the unerased entries and repairs the rows or
// columns that are erased entirely. Throws std::invalid_argument when the
// visible entries are not of the form 2 a_i + b_j.
SquareRepair repair_square(const Table &t, const FactorSpec &a, const FactorSpec &b);

}  // namespace tilecode
