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

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <unordered_map>

#include "tilecode/code_space.hpp"

namespace tilecode {

namespace {

using cplx = std::complex<double>;
using Dense = std::vector<cplx>;
using Sparse = std::vector<std::pair<std::uint32_t, cplx>>;
// Sparse reduced matrix on the window, keyed by (row, column) window content.
using Reduced = std::map<std::pair<std::uint32_t, std::uint32_t>, cplx>;

// Bit q of the basis index is the digit at position q.
std::uint32_t basis_index(const Bits &w, size_t shift) {
  size_t n = w.size();
  std::uint32_t idx = 0;
  for (size_t q = 0; q < n; ++q) {
    if (w[(q + n - shift) % n] == '1') idx |= 1u << q;
  }
  return idx;
}

Dense code_state(const Bits &codeword, const std::vector<cplx> &phases) {
  size_t n = codeword.size();
  Dense v(size_t{1} << n, cplx(0));
  for (size_t x = 0; x < n; ++x) v[basis_index(codeword, x)] += phases[x];
  double norm = 0;
  for (const auto &c : v) norm += std::norm(c);
  norm = std::sqrt(norm);
  for (auto &c : v) c /= norm;
  return v;
}

std::uint32_t window_mask(size_t n, size_t t, size_t w) {
  std::uint32_t m = 0;
  for (size_t r = 0; r < w; ++r) m |= 1u << ((t + r) % n);
  return m;
}

Sparse nonzeros(const Dense &v) {
  Sparse s;
  for (std::uint32_t i = 0; i < v.size(); ++i) {
    if (v[i] != cplx(0)) s.emplace_back(i, v[i]);
  }
  return s;
}

// Tr_{K^c} |a><b|.
Reduced partial_trace(const Sparse &a, const Sparse &b, std::uint32_t mask) {
  std::unordered_map<std::uint32_t, std::vector<std::pair<std::uint32_t, cplx>>> by_rest;
  for (const auto &[i, amp] : b) by_rest[i & ~mask].emplace_back(i & mask, amp);
  Reduced r;
  for (const auto &[i, amp] : a) {
    auto it = by_rest.find(i & ~mask);
    if (it == by_rest.end()) continue;
    for (const auto &[col, bamp] : it->second) r[{i & mask, col}] += amp * std::conj(bamp);
  }
  return r;
}

double max_abs(const Reduced &r, bool offdiagonal_only = false) {
  double m = 0;
  for (const auto &[k, v] : r) {
    if (offdiagonal_only && k.first == k.second) continue;
    m = std::max(m, std::abs(v));
  }
  return m;
}

double max_diff(const Reduced &a, const Reduced &b) {
  double m = 0;
  for (const auto &[k, v] : a) {
    auto it = b.find(k);
    m = std::max(m, std::abs(v - (it == b.end() ? cplx(0) : it->second)));
  }
  for (const auto &[k, v] : b) {
    if (!a.count(k)) m = std::max(m, std::abs(v));
  }
  return m;
}

std::pair<Reduced, Reduced> split_diagonal(const Reduced &r) {
  std::pair<Reduced, Reduced> out;
  for (const auto &[k, v] : r) (k.first == k.second ? out.first : out.second)[k] = v;
  return out;
}

void check_size(const CodeFamily &f, size_t w) {
  if (f.length() == 0) throw std::invalid_argument("empty family");
  if (f.length() > kOracleMaxLength) throw std::invalid_argument("codeword too long for the dense oracle");
  if (w > f.length()) throw std::invalid_argument("window longer than codeword");
}

std::uint32_t content_index(const Bits &s, size_t n, size_t t) {
  std::uint32_t idx = 0;
  for (size_t r = 0; r < s.size(); ++r) {
    if (s[r] == '1') idx |= 1u << ((t + r) % n);
  }
  return idx;
}

}  // namespace

PhaseTable unit_phases(const CodeFamily &family) {
  return PhaseTable(family.codewords.size(), std::vector<cplx>(family.length(), cplx(1)));
}

PhaseTable random_phases(const CodeFamily &family, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  PhaseTable p = unit_phases(family);
  for (auto &row : p) {
    for (auto &c : row) c = std::polar(1.0, angle(rng));
  }
  return p;
}

OracleReport statevector_oracle(const CodeFamily &family, std::size_t w, std::uint64_t seed,
                                std::size_t samples) {
  check_size(family, w);
  const size_t n = family.length();
  const size_t m = family.codewords.size();
  OracleReport rep;
  rep.seed = seed;
  rep.superpositions = samples;
  rep.verdict.window = w;
  rep.verdict.length = n;
  PhaseTable ones = unit_phases(family);
  std::vector<Dense> dense;
  std::vector<Sparse> states;
  for (size_t i = 0; i < m; ++i) {
    dense.push_back(code_state(family.codewords[i], ones[i]));
    states.push_back(nonzeros(dense.back()));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Sparse> superpositions;
  for (size_t s = 0; s < samples; ++s) {
    std::vector<cplx> c(m);
    double norm = 0;
    for (auto &x : c) {
      x = cplx(gauss(rng), gauss(rng));
      norm += std::norm(x);
    }
    Dense xi(dense[0].size(), cplx(0));
    for (size_t i = 0; i < m; ++i) {
      cplx ci = c[i] / std::sqrt(norm);
      for (const auto &[k, amp] : states[i]) xi[k] += ci * amp;
    }
    superpositions.push_back(nonzeros(xi));
  }

  for (size_t t = 0; t < n; ++t) {
    std::uint32_t mask = window_mask(n, t, w);
    std::vector<Reduced> diag(m);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        Reduced r = partial_trace(states[i], states[j], mask);
        if (i == j) {
          diag[i] = std::move(r);
        } else {
          rep.max_cross = std::max(rep.max_cross, max_abs(r));
        }
      }
      rep.max_offdiagonal = std::max(rep.max_offdiagonal, max_abs(diag[i], true));
      Reduced expected;
      for (const auto &[content, count] : window_density(family.codewords[i], w)) {
        std::uint32_t k = content_index(content, n, t);
        expected[{k, k}] = static_cast<double>(count) / static_cast<double>(n);
      }
      rep.max_count_mismatch = std::max(rep.max_count_mismatch, max_diff(split_diagonal(diag[i]).first, expected));
    }
    for (size_t i = 1; i < m; ++i) {
      auto [on, off] = split_diagonal(diag[0]);
      auto [on_i, off_i] = split_diagonal(diag[i]);
      rep.max_density_gap = std::max(rep.max_density_gap, max_diff(on, on_i));
      rep.max_offdiagonal_gap = std::max(rep.max_offdiagonal_gap, max_diff(off, off_i));
    }

    for (const auto &xi : superpositions) {
      Reduced r = partial_trace(xi, xi, mask);
      rep.max_superposition_dev = std::max(rep.max_superposition_dev, max_diff(r, diag[0]));
    }
  }
  rep.verdict.cross_terms_vanish = rep.max_cross < kOracleTolerance;
  rep.verdict.same_word_blocks_agree = rep.max_offdiagonal_gap < kOracleTolerance;
  rep.verdict.densities_equal = rep.max_density_gap < kOracleTolerance;
  return rep;
}

PhaseReport phase_robustness(const CodeFamily &family, std::size_t w, const PhaseTable &phases) {
  check_size(family, w);
  const size_t n = family.length();
  const size_t m = family.codewords.size();
  if (phases.size() != m) throw std::invalid_argument("one phase row per seed required");
  for (const auto &row : phases) {
    if (row.size() != n) throw std::invalid_argument("one phase per translate required");
    for (const auto &c : row) {
      if (std::abs(std::abs(c) - 1) > 1e-12) throw std::invalid_argument("phases must have unit modulus");
    }
  }
  PhaseTable ones = unit_phases(family);
  std::vector<Sparse> plain, decorated;
  Dense plain0 = code_state(family.codewords[0], ones[0]);
  Dense decorated0 = code_state(family.codewords[0], phases[0]);
  for (size_t i = 0; i < m; ++i) {
    plain.push_back(nonzeros(code_state(family.codewords[i], ones[i])));
    decorated.push_back(nonzeros(code_state(family.codewords[i], phases[i])));
  }
  PhaseReport rep;
  for (size_t t = 0; t < n; ++t) {
    std::uint32_t mask = window_mask(n, t, w);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < m; ++j) {
        Reduced a = partial_trace(plain[i], plain[j], mask);
        Reduced b = partial_trace(decorated[i], decorated[j], mask);
        rep.max_deviation = std::max(rep.max_deviation, max_diff(a, b));
      }
    }
    // (|Psi> + |Psi~>) / norm for the first seed.
    Dense mix(plain0.size());
    double norm = 0;
    for (size_t k = 0; k < mix.size(); ++k) {
      mix[k] = plain0[k] + decorated0[k];
      norm += std::norm(mix[k]);
    }
    if (norm > 0) {
      for (auto &c : mix) c /= std::sqrt(norm);
      Sparse sm = nonzeros(mix);
      Reduced r = partial_trace(sm, sm, mask);
      rep.mixture_deviation =
          std::max(rep.mixture_deviation, max_diff(r, partial_trace(plain[0], plain[0], mask)));
    }
  }
  rep.decorated_match = rep.max_deviation < kOracleTolerance;
  rep.mixture_breaks = rep.mixture_deviation > 1e-6;
  return rep;
}

}  // namespace tilecode
