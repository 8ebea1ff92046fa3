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

#include "tilecode/recovery.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tilecode {

std::optional<Bits> try_parent_string(const Bits &k) {
  Bits out;
  size_t i = 0;
  size_t n = k.size();
  if (n == 0) return out;
  for (char c : k) {
    if (c != '0' && c != '1') return std::nullopt;
  }
  if (k[0] == '0') {
    if (n > 1 && k[1] == '0') return std::nullopt;
    out.push_back('1');
    i = 1;
  }
  while (i < n) {
    if (i + 1 < n && k[i + 1] == '0') {
      if (i + 2 < n && k[i + 2] == '0') return std::nullopt;
      out.push_back('1');
      i += 2;
    } else if (i + 1 == n) {
      ++i;  // trailing lone 1
    } else {
      out.push_back('0');
      ++i;
    }
  }
  return out;
}

Bits parent_string(const Bits &k) {
  auto p = try_parent_string(k);
  if (!p) throw InapplicableError("parent string undefined for " + k);
  return *p;
}

std::optional<Bits> try_deflate_cyclic(const Bits &w) {
  size_t first = w.find('1');
  if (first == Bits::npos) return std::nullopt;
  size_t n = w.size();
  Bits out;
  for (size_t j = 0; j < n;) {
    char c = w[(first + j) % n];
    if (c != '1') return std::nullopt;
    if (j + 1 < n && w[(first + j + 1) % n] == '0') {
      if (j + 2 < n && w[(first + j + 2) % n] == '0') return std::nullopt;
      out.push_back('1');
      j += 2;
    } else {
      out.push_back('0');
      ++j;
    }
  }
  return out;
}

Bits deflate_cyclic(const Bits &w) {
  auto d = try_deflate_cyclic(w);
  if (!d) throw InapplicableError("cyclic word does not deflate: " + w);
  return *d;
}

std::size_t cyclic_count(const Bits &w, const Bits &k) {
  size_t n = w.size();
  if (k.empty()) return n;
  size_t count = 0;
  for (size_t i = 0; i < n; ++i) {
    size_t t = 0;
    while (t < k.size() && w[(i + t) % n] == k[t]) ++t;
    if (t == k.size()) ++count;
  }
  return count;
}

char recover_ancestor_digit(const Bits &context, unsigned n) {
  if (context.size() + 1 < fib(n + 2)) throw std::invalid_argument("insufficient context length");
  if (n == 0) return context[0];
  if (context[0] != '1') throw std::invalid_argument("context must start at a block boundary");
  Bits cur = context;
  for (unsigned j = 0; j < n; ++j) cur = parent_string(cur);
  if (cur.empty()) throw std::invalid_argument("insufficient context length");
  return cur[0];
}

const char *to_string(RecoveryKind k) {
  switch (k) {
    case RecoveryKind::Unique: return "unique";
    case RecoveryKind::SwapPair: return "swap-pair";
    case RecoveryKind::Ambiguous: return "ambiguous";
    case RecoveryKind::Infeasible: return "infeasible";
  }
  return "?";
}

bool RecoveryResult::contains(const Bits &w) const {
  Bits cw = rotate_left(w, least_rotation(w));
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const Bits &c) { return c.size() == w.size() && rotate_left(c, least_rotation(c)) == cw; });
}

bool RecoveryResult::contains_aligned(const Bits &w) const {
  return std::binary_search(alignments.begin(), alignments.end(), w);
}

Hole find_hole(const std::string &word) {
  size_t n = word.size();
  size_t count = std::count(word.begin(), word.end(), '?');
  if (count == 0) return Hole{0, 0};
  if (count == n) return Hole{0, n};
  // The run starts at a '?' preceded by a visible digit.
  size_t start = 0;
  while (!(word[start] == '?' && word[(start + n - 1) % n] != '?')) ++start;
  for (size_t i = 0; i < count; ++i) {
    if (word[(start + i) % n] != '?') throw std::invalid_argument("erased positions are not contiguous");
  }
  return Hole{start, count};
}

namespace {

Bits canonical(const Bits &w) { return rotate_left(w, least_rotation(w)); }

std::optional<Bits> seed_of(const Bits &w, unsigned n) {
  Bits cur = w;
  for (unsigned j = 0; j < n; ++j) {
    auto d = try_deflate_cyclic(cur);
    if (!d) return std::nullopt;
    cur = std::move(*d);
  }
  return canonical(cur);
}

// Index i such that a and b differ exactly at i and i+1 (cyclically) by a
// transposition of distinct digits.
std::optional<size_t> adjacent_swap_index(const Bits &a, const Bits &b) {
  size_t n = a.size();
  std::vector<size_t> diff;
  for (size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) diff.push_back(i);
  }
  if (diff.size() != 2) return std::nullopt;
  size_t i = diff[0], j = diff[1];
  size_t first;
  if (j == i + 1) {
    first = i;
  } else if (i == 0 && j == n - 1) {
    first = j;
  } else {
    return std::nullopt;
  }
  size_t second = (first + 1) % n;
  if (a[first] == a[second]) return std::nullopt;
  if (a[first] != b[second] || a[second] != b[first]) return std::nullopt;
  return first;
}

RecoveryResult classify(const std::set<Bits> &fills, Hole hole, unsigned n) {
  RecoveryResult r;
  r.alignments.assign(fills.begin(), fills.end());
  if (fills.empty()) {
    r.kind = RecoveryKind::Infeasible;
    r.reason = "no completion matches the visible digits";
    return r;
  }
  std::map<Bits, std::vector<Bits>> classes;
  for (const auto &w : fills) classes[canonical(w)].push_back(w);
  auto in_hole = [&](size_t q) {
    size_t len = fills.begin()->size();
    return (q + len - hole.start) % len < hole.length;
  };
  if (classes.size() == 1) {
    r.kind = RecoveryKind::Unique;
    r.candidates.push_back(classes.begin()->second.front());
  } else if (classes.size() == 2) {
    const auto &a = classes.begin()->second;
    const auto &b = std::next(classes.begin())->second;
    for (const auto &x : a) {
      for (const auto &y : b) {
        auto i = adjacent_swap_index(x, y);
        if (i && in_hole(*i) && in_hole((*i + 1) % x.size()) && r.candidates.empty()) {
          r.candidates = {x, y};
          r.swap_position = *i;
        }
      }
    }
    if (r.candidates.empty()) {
      r.kind = RecoveryKind::Ambiguous;
      r.candidates = {a.front(), b.front()};
    } else {
      r.kind = RecoveryKind::SwapPair;
    }
  } else {
    r.kind = RecoveryKind::Ambiguous;
    for (const auto &[k, v] : classes) r.candidates.push_back(v.front());
  }
  for (const auto &w : r.candidates) r.seeds.push_back(seed_of(w, n).value_or(""));
  return r;
}

RecoveryResult infeasible(std::string reason) {
  RecoveryResult r;
  r.kind = RecoveryKind::Infeasible;
  r.reason = std::move(reason);
  return r;
}

void check_inputs(const Bits &word, Hole hole, std::size_t k0, std::size_t k1, unsigned n) {
  size_t len = word.size();
  if (len == 0) throw std::invalid_argument("empty word");
  if (hole.length > len) throw std::invalid_argument("hole longer than the word");
  if (hole.start >= len && hole.length) throw std::invalid_argument("hole start out of range");
  for (size_t i = 0; i < len; ++i) {
    bool erased = (i + len - hole.start) % len < hole.length;
    char c = word[i];
    if (!erased && c != '0' && c != '1') throw std::invalid_argument("visible digits must be 0 or 1");
  }
  if (k0 + k1 == 0) throw std::invalid_argument("seed must be nonempty");
  (void)n;
}

}  // namespace

RecoveryResult repair_hole(const std::string &word, std::size_t k0, std::size_t k1, unsigned n,
                           bool allow_long_hole) {
  return repair_hole(word, find_hole(word), k0, k1, n, allow_long_hole);
}

RecoveryResult repair_hole(const Bits &word, Hole hole, std::size_t k0, std::size_t k1, unsigned n,
                           bool allow_long_hole) {
  check_inputs(word, hole, k0, k1, n);
  if (!allow_long_hole && hole.length > fib(n) + 1) {
    throw std::invalid_argument("hole longer than f_n + 1");
  }
  const size_t len = word.size();
  if (len != k0 * fib(n) + k1 * fib(n + 1)) return infeasible("word length does not match (k0, k1, n)");
  const size_t vis_start = (hole.start + hole.length) % len;
  Bits visible;
  for (size_t i = 0; i < len - hole.length; ++i) visible.push_back(word[(vis_start + i) % len]);

  // Deflate the visible run n times. p tracks where it starts inside the
  // n-fold inflation of the deflated run.
  Bits u = visible;
  size_t p = 0;
  for (unsigned j = 1; j <= n; ++j) {
    if (!u.empty() && u[0] == '0') p += fib(j);
    auto d = try_parent_string(u);
    if (!d) return infeasible("visible digits are not a legal factor");
    u = std::move(*d);
  }

  std::set<Bits> fills;
  auto record = [&](const Bits &inflated, size_t offset) {
    for (size_t i = 0; i < visible.size(); ++i) {
      if (inflated[(offset + i) % len] != visible[i]) return;
    }
    Bits full(len, '?');
    for (size_t i = 0; i < len; ++i) full[(vis_start + i) % len] = inflated[(offset + i) % len];
    fills.insert(std::move(full));
  };

  size_t z = std::count(u.begin(), u.end(), '0');
  size_t o = u.size() - z;
  if (!u.empty()) {
    if (z > k0 || o > k1) return infeasible("visible part needs more digits than (k0, k1) allows");
    Bits rest = Bits(k0 - z, '0') + Bits(k1 - o, '1');
    do {
      Bits g = u + rest;
      record(inflate_bits(g, n), p % len);
    } while (std::next_permutation(rest.begin(), rest.end()));
  } else {
    // Nothing survives deflation: try every seed arrangement at every offset.
    Bits g = Bits(k0, '0') + Bits(k1, '1');
    do {
      Bits inflated = inflate_bits(g, n);
      for (size_t r = 0; r < len; ++r) record(inflated, r);
    } while (std::next_permutation(g.begin(), g.end()));
  }
  return classify(fills, hole, n);
}

RecoveryResult brute_force_repair(const Bits &word, Hole hole, std::size_t k0, std::size_t k1,
                                  unsigned n) {
  check_inputs(word, hole, k0, k1, n);
  const size_t len = word.size();
  if (len != k0 * fib(n) + k1 * fib(n + 1)) return infeasible("word length does not match (k0, k1, n)");
  Bits cur = word;
  std::set<Bits> fills;
  const bool prune = len >= 3;

  auto bad_at = [&](size_t q) {
    // Windows ending at q whose digits are all known.
    size_t q1 = (q + len - 1) % len, q2 = (q + len - 2) % len;
    if (n >= 1 && cur[q] == '0' && cur[q1] == '0') return true;
    if (n >= 2 && cur[q] == '1' && cur[q1] == '1' && cur[q2] == '1') return true;
    return false;
  };

  auto dfs = [&](auto &&self, size_t i) -> void {
    if (i == hole.length) {
      auto s = seed_of(cur, n);
      if (!s) return;
      size_t zeros = std::count(s->begin(), s->end(), '0');
      if (zeros == k0 && s->size() - zeros == k1) fills.insert(cur);
      return;
    }
    size_t q = (hole.start + i) % len;
    for (char c : {'0', '1'}) {
      cur[q] = c;
      if (prune && bad_at(q)) continue;
      self(self, i + 1);
    }
    cur[q] = '?';
  };
  for (size_t i = 0; i < hole.length; ++i) cur[(hole.start + i) % len] = '?';
  dfs(dfs, 0);
  return classify(fills, hole, n);
}

std::vector<Bits> repair_window(const std::string &window, unsigned n) {
  size_t len = window.size();
  size_t first = window.find('?');
  if (first == std::string::npos) return {window};
  size_t last = window.rfind('?');
  for (size_t i = first; i <= last; ++i) {
    if (window[i] != '?') throw std::invalid_argument("erased positions are not contiguous");
  }
  size_t hole = last - first + 1;
  if (hole > fib(n) + 1) throw std::invalid_argument("hole longer than f_n + 1");
  size_t need = fib(n + 2) - 1;
  if (first < need || len - 1 - last < need) {
    throw std::invalid_argument("need at least " + std::to_string(need) + " visible digits on each side");
  }
  std::vector<Bits> out;
  Bits cur = window;
  auto dfs = [&](auto &&self, size_t q) -> void {
    if (q > last) {
      if (is_legal(cur)) out.push_back(cur);
      return;
    }
    for (char c : {'0', '1'}) {
      cur[q] = c;
      if (c == '0' && cur[q - 1] == '0') continue;
      if (c == '1' && q >= 2 && cur[q - 1] == '1' && cur[q - 2] == '1') continue;
      self(self, q + 1);
    }
    cur[q] = '?';
  };
  dfs(dfs, first);
  return out;
}

}  // namespace tilecode
