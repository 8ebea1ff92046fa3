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

#include "tilecode/substitution.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tilecode {

SubstitutionMatrix::SubstitutionMatrix(std::vector<std::vector<std::int64_t>> entries)
    : m_(std::move(entries)) {
  for (const auto &row : m_) {
    if (row.size() != m_.size()) throw std::invalid_argument("substitution matrix must be square");
  }
}

std::vector<std::int64_t> SubstitutionMatrix::apply(const std::vector<std::int64_t> &v) const {
  if (v.size() != dim()) throw std::invalid_argument("dimension mismatch");
  std::vector<std::int64_t> out(dim(), 0);
  for (size_t r = 0; r < dim(); ++r) {
    for (size_t c = 0; c < dim(); ++c) out[r] += m_[r][c] * v[c];
  }
  return out;
}

SubstitutionMatrix SubstitutionMatrix::operator*(const SubstitutionMatrix &o) const {
  size_t n = dim();
  std::vector<std::vector<std::int64_t>> p(n, std::vector<std::int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      if (!m_[i][k]) continue;
      for (size_t j = 0; j < n; ++j) p[i][j] += m_[i][k] * o.m_[k][j];
    }
  }
  return SubstitutionMatrix(std::move(p));
}

bool SubstitutionMatrix::is_primitive() const {
  size_t n = dim();
  if (n == 0) return false;
  using Pattern = std::vector<std::vector<char>>;
  Pattern base(n, std::vector<char>(n, 0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      if (m_[i][j] < 0) return false;
      base[i][j] = m_[i][j] > 0;
    }
  }
  auto mul = [n](const Pattern &a, const Pattern &b) {
    Pattern p(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < n; ++k) {
        if (!a[i][k]) continue;
        for (size_t j = 0; j < n; ++j) p[i][j] |= b[k][j];
      }
    }
    return p;
  };
  // Boolean power M^(n^2) by repeated squaring.
  size_t e = n * n;
  Pattern result;
  Pattern sq = base;
  bool have = false;
  while (e) {
    if (e & 1) {
      result = have ? mul(result, sq) : sq;
      have = true;
    }
    e >>= 1;
    if (e) sq = mul(sq, sq);
  }
  for (const auto &row : result) {
    for (char x : row) {
      if (!x) return false;
    }
  }
  return true;
}

SubstitutionRule::SubstitutionRule(Alphabet alphabet, std::vector<Word> images)
    : alphabet_(std::move(alphabet)), images_(std::move(images)) {
  if (images_.size() != alphabet_.size()) throw std::invalid_argument("one image per symbol required");
  for (const auto &img : images_) {
    if (img.empty()) throw std::invalid_argument("substitution images must be nonempty");
    for (char c : img) {
      if (static_cast<Symbol>(c) >= alphabet_.size()) throw std::invalid_argument("image symbol outside alphabet");
    }
  }
}

SubstitutionRule SubstitutionRule::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> rhs;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'SYMBOL -> IMAGE'");
    }
    std::istringstream lhs(line.substr(0, arrow));
    std::string sym, extra;
    if (!(lhs >> sym) || (lhs >> extra)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": left side must be one symbol");
    }
    std::istringstream r(line.substr(arrow + 2));
    std::vector<std::string> toks;
    std::string tok;
    while (r >> tok) toks.push_back(tok);
    if (toks.empty()) throw std::invalid_argument("line " + std::to_string(lineno) + ": empty image");
    names.push_back(sym);
    rhs.push_back(std::move(toks));
  }
  Alphabet alphabet(names);
  std::vector<Word> images;
  for (const auto &toks : rhs) {
    Word w;
    for (const auto &t : toks) w.push_back(static_cast<char>(alphabet.index(t)));
    images.push_back(std::move(w));
  }
  return SubstitutionRule(std::move(alphabet), std::move(images));
}

Word SubstitutionRule::apply(const Word &w, unsigned steps) const {
  Word cur = w;
  for (char c : cur) {
    if (static_cast<Symbol>(c) >= images_.size()) throw std::invalid_argument("symbol not in rule alphabet");
  }
  for (unsigned s = 0; s < steps; ++s) {
    Word next;
    size_t len = 0;
    for (char c : cur) len += images_[static_cast<Symbol>(c)].size();
    next.reserve(len);
    for (char c : cur) next += images_[static_cast<Symbol>(c)];
    cur = std::move(next);
  }
  return cur;
}

CyclicWord SubstitutionRule::apply(const CyclicWord &w, unsigned steps) const {
  return CyclicWord(apply(w.symbols(), steps));
}

std::string SubstitutionRule::to_text() const {
  std::string out;
  for (size_t s = 0; s < images_.size(); ++s) {
    out += alphabet_.name(static_cast<Symbol>(s)) + " ->";
    for (char c : images_[s]) out += " " + alphabet_.name(static_cast<Symbol>(c));
    out += "\n";
  }
  return out;
}

SubstitutionRule fibonacci_rule() {
  Alphabet a({"1", "0"});
  return SubstitutionRule(a, {Word{0, 1}, Word{0}});
}

SubstitutionMatrix substitution_matrix(const SubstitutionRule &rule) {
  size_t n = rule.alphabet().size();
  std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
  for (size_t c = 0; c < n; ++c) {
    for (char s : rule.image(static_cast<Symbol>(c))) m[static_cast<Symbol>(s)][c] += 1;
  }
  return SubstitutionMatrix(std::move(m));
}

std::vector<std::int64_t> symbol_counts(const Word &w, size_t alphabet_size) {
  std::vector<std::int64_t> v(alphabet_size, 0);
  for (char c : w) {
    if (static_cast<Symbol>(c) >= alphabet_size) throw std::invalid_argument("symbol outside alphabet");
    v[static_cast<Symbol>(c)] += 1;
  }
  return v;
}

std::vector<mpz_class> characteristic_polynomial(const SubstitutionMatrix &m) {
  // Faddeev-LeVerrier over the rationals.
  size_t n = m.dim();
  using Mat = std::vector<std::vector<mpq_class>>;
  Mat a(n, std::vector<mpq_class>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = mpq_class(m(i, j));
  }
  std::vector<mpq_class> c(n + 1);
  c[n] = 1;
  Mat mk(n, std::vector<mpq_class>(n, 0));
  for (size_t k = 1; k <= n; ++k) {
    Mat next(n, std::vector<mpq_class>(n, 0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        mpq_class s = 0;
        for (size_t l = 0; l < n; ++l) s += a[i][l] * mk[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    mk = std::move(next);
    mpq_class tr = 0;
    for (size_t i = 0; i < n; ++i) {
      for (size_t l = 0; l < n; ++l) tr += a[i][l] * mk[l][i];
    }
    c[n - k] = -tr / static_cast<long>(k);
  }
  std::vector<mpz_class> out;
  for (const auto &q : c) {
    if (q.get_den() != 1) throw std::logic_error("non-integral characteristic polynomial");
    out.push_back(q.get_num());
  }
  return out;
}

namespace {

mpz_class eval_poly(const std::vector<mpz_class> &p, const mpz_class &x) {
  mpz_class r = 0;
  for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
  return r;
}

// True iff the monic quadratic x^2 - t x + c divides p exactly.
bool divides_quadratic(std::vector<mpz_class> p, const mpz_class &t, const mpz_class &c) {
  if (p.size() < 3) return false;
  for (size_t deg = p.size() - 1; deg >= 2; --deg) {
    mpz_class lead = p[deg];
    p[deg] = 0;
    p[deg - 1] += lead * t;
    p[deg - 2] -= lead * c;
  }
  return p[0] == 0 && p[1] == 0;
}

double spectral_radius(const SubstitutionMatrix &m) {
  size_t n = m.dim();
  std::vector<double> v(n, 1.0);
  double lambda = 0;
  for (int it = 0; it < 5000; ++it) {
    std::vector<double> w(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) w[i] += static_cast<double>(m(i, j)) * v[j];
    }
    double s = 0;
    for (double x : w) s += x;
    double prev = lambda;
    double sv = 0;
    for (double x : v) sv += x;
    lambda = s / sv;
    for (auto &x : w) x /= s;
    v = std::move(w);
    if (it > 50 && std::abs(lambda - prev) < 1e-14 * lambda) break;
  }
  return lambda;
}

}  // namespace

PerronData perron_frequencies(const SubstitutionMatrix &m, int d) {
  if (!m.is_primitive()) throw std::domain_error("substitution matrix is not primitive");
  size_t n = m.dim();
  auto poly = characteristic_polynomial(m);
  double approx = spectral_radius(m);

  QuadraticValue lambda;
  bool found = false;
  mpz_class r = static_cast<long>(std::llround(approx));
  if (std::abs(approx - r.get_d()) < 1e-6 && eval_poly(poly, r) == 0) {
    lambda = QuadraticValue(mpq_class(r));
    found = true;
  }
  for (long t = 0; !found && t <= static_cast<long>(std::ceil(2 * approx)) + 1; ++t) {
    double cd = approx * (static_cast<double>(t) - approx);
    mpz_class c = static_cast<long>(std::llround(cd));
    mpz_class disc = mpz_class(t) * t - 4 * c;
    if (disc <= 0 || disc % d != 0) continue;
    mpz_class q = disc / d;
    mpz_class s = sqrt(q);
    if (s * s != q) continue;
    double cand = (static_cast<double>(t) + s.get_d() * std::sqrt(static_cast<double>(d))) / 2;
    if (std::abs(cand - approx) > 1e-6 * std::max(1.0, approx)) continue;
    if (!divides_quadratic(poly, mpz_class(t), c)) continue;
    lambda = QuadraticValue(mpq_class(t, 2), mpq_class(s, 2), d);
    found = true;
  }
  if (!found) {
    throw std::domain_error("Perron eigenvalue is not in Q(sqrt(" + std::to_string(d) + "))");
  }

  // Null space of M - lambda I by exact elimination.
  std::vector<std::vector<QuadraticValue>> a(n, std::vector<QuadraticValue>(n));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = QuadraticValue(m(i, j)) - (i == j ? lambda : QuadraticValue(0));
  }
  std::vector<long> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < n && row < n; ++col) {
    size_t p = row;
    while (p < n && a[p][col].sign() == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    QuadraticValue inv = QuadraticValue(1) / a[row][col];
    for (size_t j = col; j < n; ++j) a[row][j] *= inv;
    for (size_t i = 0; i < n; ++i) {
      if (i == row || a[i][col].sign() == 0) continue;
      QuadraticValue f = a[i][col];
      for (size_t j = col; j < n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(static_cast<long>(col));
    ++row;
  }
  if (row != n - 1) throw std::domain_error("Perron eigenspace is not one-dimensional");
  std::vector<bool> is_pivot(n, false);
  for (long c : pivot_col) is_pivot[c] = true;
  size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<QuadraticValue> v(n, QuadraticValue(0));
  v[free_col] = 1;
  for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free_col];
  QuadraticValue sum(0);
  for (const auto &x : v) sum += x;
  for (auto &x : v) x /= sum;
  for (const auto &x : v) {
    if (x.sign() <= 0) throw std::logic_error("Perron vector has a nonpositive entry");
  }
  for (size_t i = 0; i < n; ++i) {
    QuadraticValue s(0);
    for (size_t j = 0; j < n; ++j) s += QuadraticValue(m(i, j)) * v[j];
    if (!(s == lambda * v[i])) throw std::logic_error("Perron vector check failed");
  }
  return PerronData{lambda, std::move(v)};
}

std::vector<Word> legal_words(const SubstitutionRule &rule, size_t k, const LegalWordOptions &opts) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > opts.max_length) throw std::invalid_argument("k exceeds configured maximum");
  if (!substitution_matrix(rule).is_primitive()) throw std::domain_error("rule is not primitive");
  size_t n = rule.alphabet().size();
  std::deque<Word> storage;
  std::unordered_set<std::string_view> factors;
  std::vector<Word> cur(n);
  for (size_t a = 0; a < n; ++a) cur[a] = Word(1, static_cast<char>(a));
  int quiet = 0;
  for (unsigned depth = 0; depth <= opts.max_depth; ++depth) {
    size_t before = factors.size();
    bool long_enough = true;
    for (size_t a = 0; a < n; ++a) {
      if (cur[a].size() < k) {
        long_enough = false;
        continue;
      }
      storage.push_back(cur[a]);
      std::string_view s = storage.back();
      for (size_t i = 0; i + k <= s.size(); ++i) factors.insert(s.substr(i, k));
    }
    if (long_enough) {
      quiet = factors.size() == before && before > 0 ? quiet + 1 : 0;
      if (quiet >= 2) {
        std::vector<Word> out(factors.begin(), factors.end());
        std::sort(out.begin(), out.end(), [](const Word &x, const Word &y) {
          return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                              [](char p, char q) { return static_cast<Symbol>(p) < static_cast<Symbol>(q); });
        });
        return out;
      }
    }
    for (size_t a = 0; a < n; ++a) cur[a] = rule.apply(cur[a]);
  }
  throw std::runtime_error("factor set did not stabilize within the depth bound");
}

InducedSystem induced_substitution(const SubstitutionRule &rule, size_t k, const LegalWordOptions &opts) {
  InducedSystem sys;
  sys.k = k;
  sys.words = legal_words(rule, k, opts);
  if (sys.words.empty()) throw std::domain_error("induced alphabet is empty");
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < sys.words.size(); ++i) index[sys.words[i]] = i;
  std::vector<std::string> names;
  for (const auto &w : sys.words) names.push_back(rule.alphabet().format(w));
  std::vector<Word> images;
  for (const auto &w : sys.words) {
    Word big = rule.apply(w);
    size_t m = rule.image(static_cast<Symbol>(w[0])).size();
    Word img;
    for (size_t i = 0; i < m; ++i) {
      auto it = index.find(big.substr(i, k));
      if (it == index.end()) throw std::logic_error("induced image contains an illegal factor");
      img.push_back(static_cast<char>(it->second));
    }
    images.push_back(std::move(img));
  }
  sys.rule = SubstitutionRule(Alphabet(names), std::move(images));
  sys.matrix = substitution_matrix(sys.rule);
  return sys;
}

}  // namespace tilecode
