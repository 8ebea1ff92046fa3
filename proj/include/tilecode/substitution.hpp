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
#include <string_view>
#include <vector>

#include "tilecode/quadratic.hpp"
#include "tilecode/word.hpp"

namespace tilecode {

class SubstitutionMatrix {
 public:
  SubstitutionMatrix() = default;
  explicit SubstitutionMatrix(std::vector<std::vector<std::int64_t>> entries);

  size_t dim() const { return m_.size(); }
  std::int64_t operator()(size_t r, size_t c) const { return m_[r][c]; }
  const std::vector<std::vector<std::int64_t>> &entries() const { return m_; }

  std::vector<std::int64_t> apply(const std::vector<std::int64_t> &v) const;
  SubstitutionMatrix operator*(const SubstitutionMatrix &o) const;
  bool operator==(const SubstitutionMatrix &o) const = default;

  // Some power strictly positive, tested on the boolean pattern of M^(dim^2).
  bool is_primitive() const;

 private:
  std::vector<std::vector<std::int64_t>> m_;
};

class SubstitutionRule {
 public:
  SubstitutionRule() = default;
  SubstitutionRule(Alphabet alphabet, std::vector<Word> images);

  // One line per symbol: "SYMBOL -> IMAGE" with whitespace-separated symbols.
  // Blank lines and lines starting with '#' are ignored.
  static SubstitutionRule parse(std::string_view text);

  const Alphabet &alphabet() const { return alphabet_; }
  const Word &image(Symbol s) const { return images_.at(s); }
  const std::vector<Word> &images() const { return images_; }

  Word apply(const Word &w, unsigned steps = 1) const;
  CyclicWord apply(const CyclicWord &w, unsigned steps = 1) const;

  std::string to_text() const;

 private:
  Alphabet alphabet_;
  std::vector<Word> images_;
};

// The shipped rules.
// Fibonacci (1,0) -> (10,1) with symbol 0 = "1" (long tile L), 1 = "0" (short tile S).
SubstitutionRule fibonacci_rule();

SubstitutionMatrix substitution_matrix(const SubstitutionRule &rule);

std::vector<std::int64_t> symbol_counts(const Word &w, size_t alphabet_size);

struct PerronData {
  QuadraticValue eigenvalue;
  std::vector<QuadraticValue> frequencies;  // normalized to sum 1
};

// Exact Perron-Frobenius data in Q(sqrt(d)). Throws std::domain_error when the
// matrix is not primitive or the Perron eigenvalue lies outside the field.
PerronData perron_frequencies(const SubstitutionMatrix &m, int d);

// Integer coefficients of det(xI - M), lowest degree first.
std::vector<mpz_class> characteristic_polynomial(const SubstitutionMatrix &m);

struct LegalWordOptions {
  unsigned max_depth = 64;
  size_t max_length = 4096;
};

// Length-k factors of the substitution language, sorted by symbol index.
std::vector<Word> legal_words(const SubstitutionRule &rule, size_t k,
                              const LegalWordOptions &opts = {});

struct InducedSystem {
  size_t k = 0;
  std::vector<Word> words;  // the induced alphabet, sorted
  SubstitutionRule rule;    // over indices into `words`
  SubstitutionMatrix matrix;
};

InducedSystem induced_substitution(const SubstitutionRule &rule, size_t k,
                                   const LegalWordOptions &opts = {});

}  // namespace tilecode
