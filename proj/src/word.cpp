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

#include "tilecode/word.hpp"

#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace tilecode {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("empty alphabet");
  if (names_.size() > 255) throw std::invalid_argument("alphabet too large");
  std::unordered_set<std::string> seen;
  for (const auto &n : names_) {
    if (n.empty()) throw std::invalid_argument("empty symbol name");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate symbol name: " + n);
  }
}

const std::string &Alphabet::name(Symbol s) const {
  if (s >= names_.size()) throw std::out_of_range("symbol index out of range");
  return names_[s];
}

Symbol Alphabet::index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Symbol>(i);
  }
  throw std::invalid_argument("symbol not in alphabet: " + std::string(name));
}

bool Alphabet::contains(std::string_view name) const {
  for (const auto &n : names_) {
    if (n == name) return true;
  }
  return false;
}

Word Alphabet::parse(std::string_view text) const {
  Word out;
  bool has_space = text.find_first_of(" \t") != std::string_view::npos;
  bool single_chars = true;
  for (const auto &n : names_) single_chars = single_chars && n.size() == 1;
  if (single_chars && !has_space) {
    for (char c : text) out.push_back(static_cast<char>(index(std::string_view(&c, 1))));
    return out;
  }
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(static_cast<char>(index(tok)));
  return out;
}

std::string Alphabet::format(const Word &w) const {
  bool single_chars = true;
  for (const auto &n : names_) single_chars = single_chars && n.size() == 1;
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (!single_chars && i) out.push_back(' ');
    out += name(static_cast<Symbol>(w[i]));
  }
  return out;
}

size_t least_rotation(std::string_view s) {
  size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long> f(2 * n, -1);
  size_t k = 0;
  for (size_t j = 1; j < 2 * n; ++j) {
    unsigned char sj = s[j % n];
    long i = f[j - k - 1];
    while (i != -1 && sj != static_cast<unsigned char>(s[(k + i + 1) % n])) {
      if (sj < static_cast<unsigned char>(s[(k + i + 1) % n])) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != static_cast<unsigned char>(s[(k + i + 1) % n])) {
      if (sj < static_cast<unsigned char>(s[(k + i + 1) % n])) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

std::string rotate_left(std::string_view s, size_t k) {
  if (s.empty()) return std::string();
  k %= s.size();
  std::string out(s.substr(k));
  out.append(s.substr(0, k));
  return out;
}

bool is_primitive_cyclic(std::string_view s) {
  size_t n = s.size();
  if (n == 0) return false;
  // Smallest period via the prefix function.
  std::vector<size_t> pi(n, 0);
  for (size_t i = 1; i < n; ++i) {
    size_t k = pi[i - 1];
    while (k && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  size_t p = n - pi[n - 1];
  return p == n || n % p != 0;
}

CyclicWord::CyclicWord(Word symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("cyclic word must be nonempty");
}

Word CyclicWord::canonical() const { return rotate_left(symbols_, least_rotation(symbols_)); }

}  // namespace tilecode
