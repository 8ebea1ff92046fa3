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

namespace tilecode {

using Symbol = std::uint8_t;

// A word stores one symbol index per byte. Printing goes through an Alphabet.
using Word = std::string;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::string &name(Symbol s) const;
  // Throws std::invalid_argument for unknown names.
  Symbol index(std::string_view name) const;
  bool contains(std::string_view name) const;
  const std::vector<std::string> &names() const { return names_; }

  // Parses either whitespace-separated names or, when every name is a single
  // character, a compact string such as "10110".
  Word parse(std::string_view text) const;
  // Compact form when all names are single characters, else space separated.
  std::string format(const Word &w) const;

  bool operator==(const Alphabet &o) const = default;

 private:
  std::vector<std::string> names_;
};

// Index of the lexicographically least rotation (Booth's algorithm).
size_t least_rotation(std::string_view s);

std::string rotate_left(std::string_view s, size_t k);

// True iff s is not a proper power of a shorter word.
bool is_primitive_cyclic(std::string_view s);

class CyclicWord {
 public:
  CyclicWord() = default;
  explicit CyclicWord(Word symbols);

  const Word &symbols() const { return symbols_; }
  size_t size() const { return symbols_.size(); }
  Word canonical() const;
  bool is_primitive() const { return is_primitive_cyclic(symbols_); }

  friend bool operator==(const CyclicWord &a, const CyclicWord &b) {
    return a.size() == b.size() && a.canonical() == b.canonical();
  }

 private:
  Word symbols_;
};

}  // namespace tilecode
