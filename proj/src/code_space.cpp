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

#include "tilecode/code_space.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tilecode {

namespace {

Bits canonical(const Bits &w) { return rotate_left(w, least_rotation(w)); }

std::pair<std::size_t, std::size_t> counts(const Bits &w) {
  std::size_t z = std::count(w.begin(), w.end(), '0');
  return {z, w.size() - z};
}

}  // namespace

bool swap_related(const Bits &a, const Bits &b) {
  if (a.size() != b.size() || a.size() < 2) return false;
  Bits cb = canonical(b);
  size_t n = a.size();
  for (size_t i = 0; i < n; ++i) {
    size_t j = (i + 1) % n;
    if (a[i] == a[j]) continue;
    Bits s = a;
    std::swap(s[i], s[j]);
    if (canonical(s) == cb) return true;
  }
  return false;
}

CodeFamily build_family(const std::vector<Bits> &seeds, unsigned n, bool validate) {
  if (seeds.empty()) throw std::invalid_argument("seed set is empty");
  CodeFamily f;
  f.n = n;
  std::set<Bits> uniq;
  for (const auto &s : seeds) {
    if (s.empty()) throw std::invalid_argument("empty seed");
    for (char c : s) {
      if (c != '0' && c != '1') throw std::invalid_argument("seed must be binary: " + s);
    }
    uniq.insert(canonical(s));
  }
  f.seeds.assign(uniq.begin(), uniq.end());
  std::tie(f.k0, f.k1) = counts(f.seeds[0]);
  for (const auto &s : f.seeds) {
    if (counts(s) != std::make_pair(f.k0, f.k1)) throw std::invalid_argument("seeds have mixed (k0, k1)");
  }
  if (validate) {
    for (size_t i = 0; i < f.seeds.size(); ++i) {
      for (size_t j = i + 1; j < f.seeds.size(); ++j) {
        if (swap_related(f.seeds[i], f.seeds[j])) {
          throw std::invalid_argument("seeds " + f.seeds[i] + " and " + f.seeds[j] +
                                      " differ by one adjacent swap");
        }
      }
    }
    for (const auto &s : f.seeds) {
      if (!is_primitive_cyclic(s)) throw std::invalid_argument("seed is periodic: " + s);
    }
  }
  for (const auto &s : f.seeds) f.codewords.push_back(inflate_bits(s, n));
  return f;
}

std::vector<Bits> primitive_seeds(std::size_t k0, std::size_t k1) {
  if (k0 + k1 == 0) return {};
  std::set<Bits> out;
  Bits g = Bits(k0, '0') + Bits(k1, '1');
  do {
    if (is_primitive_cyclic(g)) out.insert(canonical(g));
  } while (std::next_permutation(g.begin(), g.end()));
  return {out.begin(), out.end()};
}

std::vector<std::vector<Bits>> valid_seed_sets(std::size_t k0, std::size_t k1) {
  auto all = primitive_seeds(k0, k1);
  if (all.size() > 20) throw std::invalid_argument("too many seeds to enumerate subsets");
  std::vector<std::vector<Bits>> out;
  for (std::uint32_t mask = 1; mask < (1u << all.size()); ++mask) {
    std::vector<Bits> pick;
    for (size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1) pick.push_back(all[i]);
    }
    bool ok = true;
    for (size_t i = 0; ok && i < pick.size(); ++i) {
      for (size_t j = i + 1; ok && j < pick.size(); ++j) ok = !swap_related(pick[i], pick[j]);
    }
    if (ok) out.push_back(std::move(pick));
  }
  return out;
}

std::vector<Bits> greedy_seed_set(std::size_t k0, std::size_t k1) {
  std::vector<Bits> kept;
  for (const auto &s : primitive_seeds(k0, k1)) {
    bool ok = std::none_of(kept.begin(), kept.end(), [&](const Bits &t) { return swap_related(s, t); });
    if (ok) kept.push_back(s);
  }
  return kept;
}

WindowDensity window_density(const Bits &codeword, std::size_t w) {
  size_t n = codeword.size();
  if (w > n) throw std::invalid_argument("window longer than codeword");
  WindowDensity d;
  for (size_t i = 0; i < n; ++i) {
    Bits s;
    for (size_t t = 0; t < w; ++t) s.push_back(codeword[(i + t) % n]);
    ++d[s];
  }
  return d;
}

namespace {

struct PositionResult {
  std::optional<CollisionWitness> cross, same;
  // Per seed: sorted (row content, column content) pairs of the off-diagonal
  // window terms, both orders included.
  std::vector<std::vector<std::pair<Bits, Bits>>> offdiagonal;
};

// Digit r of the complement of window [t, t+w) for translate (i, x).
inline char complement_digit(const CodeFamily &f, size_t i, size_t x, size_t t, size_t w, size_t r) {
  size_t n = f.length();
  return f.codewords[i][(t + w + r + n - x) % n];
}

Bits window_content(const CodeFamily &f, size_t i, size_t x, size_t t, size_t w) {
  size_t n = f.length();
  Bits s(w, '?');
  for (size_t r = 0; r < w; ++r) s[r] = f.codewords[i][(t + r + n - x) % n];
  return s;
}

bool better(const CollisionWitness &a, const std::optional<CollisionWitness> &b) {
  if (!b) return true;
  return std::tie(a.seed_i, a.shift_x, a.seed_j, a.shift_y) <
         std::tie(b->seed_i, b->shift_x, b->seed_j, b->shift_y);
}

void add_same_word_pair(PositionResult &res, const CodeFamily &f, size_t i, size_t x, size_t y, size_t t,
                        size_t w) {
  Bits a = window_content(f, i, x, t, w), b = window_content(f, i, y, t, w);
  res.offdiagonal[i].emplace_back(a, b);
  res.offdiagonal[i].emplace_back(b, a);
}

void finish(PositionResult &res) {
  for (auto &v : res.offdiagonal) std::sort(v.begin(), v.end());
}

PositionResult position_serial(const CodeFamily &f, size_t w, size_t t) {
  size_t n = f.length();
  PositionResult res;
  res.offdiagonal.resize(f.codewords.size());
  size_t total = f.codewords.size() * n;
  for (size_t a = 0; a < total; ++a) {
    for (size_t b = a + 1; b < total; ++b) {
      size_t i = a / n, x = a % n, j = b / n, y = b % n;
      size_t r = 0;
      while (r + w < n && complement_digit(f, i, x, t, w, r) == complement_digit(f, j, y, t, w, r)) ++r;
      if (r + w < n) continue;
      CollisionWitness c{i, x, j, y, t};
      if (i != j) {
        if (!res.cross) res.cross = c;
      } else {
        if (!res.same) res.same = c;
        add_same_word_pair(res, f, i, x, y, t, w);
      }
    }
  }
  finish(res);
  return res;
}

PositionResult position_parallel(const CodeFamily &f, size_t w, size_t t) {
  size_t n = f.length();
  long total = static_cast<long>(f.codewords.size() * n);
  std::vector<std::string> keys(total);
#pragma omp parallel for schedule(static)
  for (long a = 0; a < total; ++a) {
    size_t i = a / n, x = a % n;
    std::string &k = keys[a];
    k.resize(n - w);
    for (size_t r = 0; r + w < n; ++r) k[r] = complement_digit(f, i, x, t, w, r);
  }
  std::vector<size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t p, size_t q) {
    return keys[p] != keys[q] ? keys[p] < keys[q] : p < q;
  });
  PositionResult res;
  res.offdiagonal.resize(f.codewords.size());
  for (size_t g = 0; g < order.size();) {
    size_t e = g + 1;
    while (e < order.size() && keys[order[e]] == keys[order[g]]) ++e;
    for (size_t p = g; p < e; ++p) {
      for (size_t q = p + 1; q < e; ++q) {
        size_t a = order[p], b = order[q];
        CollisionWitness c{a / n, a % n, b / n, b % n, t};
        if (c.seed_i != c.seed_j) {
          if (better(c, res.cross)) res.cross = c;
        } else {
          if (better(c, res.same)) res.same = c;
          add_same_word_pair(res, f, c.seed_i, c.shift_x, c.shift_y, t, w);
        }
      }
    }
    g = e;
  }
  finish(res);
  return res;
}

struct PositionFlags {
  bool cross, blocks_agree;
  std::optional<std::pair<size_t, size_t>> witness;
  bool operator==(const PositionFlags &o) const { return cross == o.cross && blocks_agree == o.blocks_agree; }
};

PositionFlags flags_of(const PositionResult &r) {
  PositionFlags fl{!r.cross, true, std::nullopt};
  for (size_t j = 1; j < r.offdiagonal.size(); ++j) {
    if (r.offdiagonal[j] != r.offdiagonal[0]) {
      fl.blocks_agree = false;
      fl.witness = std::make_pair(size_t{0}, j);
      break;
    }
  }
  return fl;
}

template <typename Kernel>
QECCReport verify_with(const CodeFamily &f, size_t w, Kernel kernel) {
  size_t n = f.length();
  if (n == 0) throw std::invalid_argument("empty family");
  if (w > n) throw std::invalid_argument("window longer than codeword");
  QECCReport rep;
  rep.window = w;
  rep.length = n;
  PositionResult first = kernel(f, w, 0);
  PositionFlags fl = flags_of(first);
  rep.cross_witness = first.cross;
  rep.cross_terms_vanish = fl.cross;
  rep.same_word_collision = first.same;
  rep.same_word_blocks_agree = fl.blocks_agree;
  rep.same_word_witness = fl.witness;
  if (n <= 64) {
    rep.covariance_checked = true;
    for (size_t t = 1; t < n && rep.covariant; ++t) {
      if (!(flags_of(kernel(f, w, t)) == fl)) rep.covariant = false;
    }
  }
  WindowDensity d0 = window_density(f.codewords[0], w);
  for (size_t j = 1; j < f.codewords.size(); ++j) {
    if (window_density(f.codewords[j], w) != d0) {
      rep.densities_equal = false;
      rep.density_witness = std::make_pair(size_t{0}, j);
      break;
    }
  }
  return rep;
}

}  // namespace

QECCReport verify_qecc(const CodeFamily &family, std::size_t w) {
  return verify_with(family, w, position_parallel);
}

QECCReport verify_qecc_serial(const CodeFamily &family, std::size_t w) {
  return verify_with(family, w, position_serial);
}

Table product2d(const Bits &a, const Bits &b) {
  Table t(a.size(), std::vector<int>(b.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) {
      if ((a[i] != '0' && a[i] != '1') || (b[j] != '0' && b[j] != '1')) {
        throw std::invalid_argument("factors must be binary");
      }
      t[i][j] = 2 * (a[i] - '0') + (b[j] - '0');
    }
  }
  return t;
}

Table erase_square(const Table &t, std::size_t r0, std::size_t c0, std::size_t s) {
  Table out = t;
  size_t rows = t.size(), cols = rows ? t[0].size() : 0;
  if (s > rows || s > cols) throw std::invalid_argument("square larger than the table");
  for (size_t i = 0; i < s; ++i) {
    for (size_t j = 0; j < s; ++j) out[(r0 + i) % rows][(c0 + j) % cols] = -1;
  }
  return out;
}

SquareRepair repair_square(const Table &t, const FactorSpec &a, const FactorSpec &b) {
  size_t rows = t.size();
  if (rows == 0 || t[0].empty()) throw std::invalid_argument("empty table");
  size_t cols = t[0].size();
  std::string aw(rows, '?'), bw(cols, '?');
  for (size_t i = 0; i < rows; ++i) {
    if (t[i].size() != cols) throw std::invalid_argument("ragged table");
    for (size_t j = 0; j < cols; ++j) {
      int v = t[i][j];
      if (v == -1) continue;
      if (v < 0 || v > 3) throw std::invalid_argument("table entries must lie in 0..3");
      char ai = static_cast<char>('0' + v / 2), bj = static_cast<char>('0' + v % 2);
      if (aw[i] == '?') aw[i] = ai;
      if (bw[j] == '?') bw[j] = bj;
      if (aw[i] != ai || bw[j] != bj) throw std::invalid_argument("inconsistent table: not a product");
    }
  }
  SquareRepair r;
  r.rows = repair_hole(aw, a.k0, a.k1, a.n);
  r.columns = repair_hole(bw, b.k0, b.k1, b.n);
  return r;
}

}  // namespace tilecode
