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

#include "acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "tilecode/ab_torus.hpp"
#include "tilecode/ammann.hpp"
#include "tilecode/census.hpp"
#include "tilecode/code_space.hpp"
#include "tilecode/fibonacci.hpp"
#include "tilecode/recovery.hpp"
#include "tilecode/substitution.hpp"
#include "tilecode/tiling.hpp"

namespace tilecode::acceptance {

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string &what) {
    if (!ok && pass) detail << "FAILED: " << what << "; ";
    pass = pass && ok;
  }
};

QuadraticValue sqrt5() { return QuadraticValue::sqrt_of(5); }

// (k0, k1) with 1 <= k0 + k1 <= 5.
std::vector<std::pair<std::size_t, std::size_t>> small_counts() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t total = 1; total <= 5; ++total) {
    for (std::size_t k0 = 0; k0 <= total; ++k0) out.push_back({k0, total - k0});
  }
  return out;
}

Bits with_hole(Bits w, std::size_t start, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) w[(start + i) % w.size()] = '?';
  return w;
}

void frequencies(Outcome &o) {
  const SubstitutionRule rule = fibonacci_rule();
  PerronData p1 = perron_frequencies(substitution_matrix(rule), 5);
  std::vector<QuadraticValue> nu1{(sqrt5() - 1) / 2, (QuadraticValue(3) - sqrt5()) / 2};
  o.require(p1.frequencies == nu1, "nu_1");
  InducedSystem two = induced_substitution(rule, 2);
  PerronData p2 = perron_frequencies(two.matrix, 5);
  std::vector<QuadraticValue> nu2{sqrt5() - 2, (QuadraticValue(3) - sqrt5()) / 2, (QuadraticValue(3) - sqrt5()) / 2};
  o.require(p2.frequencies == nu2, "nu_2");
  o.detail << "nu_1 = (" << p1.frequencies[0].str() << ", " << p1.frequencies[1].str() << "); nu_2 over (";
  for (std::size_t i = 0; i < two.words.size(); ++i) o.detail << (i ? " " : "") << rule.alphabet().format(two.words[i]);
  o.detail << ") = (";
  for (std::size_t i = 0; i < p2.frequencies.size(); ++i) o.detail << (i ? ", " : "") << p2.frequencies[i].str();
  o.detail << ")";
}

void complexity_check(Outcome &o) {
  std::size_t bad = 0;
  for (std::size_t n = 1; n <= 500; ++n) bad += complexity(n) != n + 1;
  o.require(bad == 0, "p(n) != n+1");
  o.detail << "p(n) = n+1 for n = 1..500, mismatches " << bad;
}

void spectrum_entropy(Outcome &o) {
  std::size_t tier_bad = 0;
  for (std::size_t n = 1; n <= 200; ++n) {
    FrequencySpectrum s = spectrum(n);
    TierSizes want = expected_tier_sizes(n);
    TierSizes got;
    for (const auto &e : s.entries) {
      if (e.exponent == s.k) ++got.at_k;
      if (e.exponent + 1 == s.k) ++got.at_k1;
      if (e.exponent + 2 == s.k) ++got.at_k2;
    }
    bool ok = got.at_k == want.at_k && got.at_k1 == want.at_k1 && got.at_k2 == want.at_k2 &&
              s.entries.size() == n + 1;
    tier_bad += !ok;
  }
  o.require(tier_bad == 0, "tier sizes");
  double max_gap = 0, lo = 1e9, hi = -1e9;
  for (std::size_t n = 1; n <= 500; ++n) {
    EntropyValue e = entanglement_entropy(n);
    max_gap = std::max(max_gap, std::abs(e.direct - e.closed_form));
    double d = e.direct - std::log(static_cast<double>(n));
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  o.require(max_gap <= 1e-12, "closed form vs direct entropy");
  o.require(lo >= -1 && hi <= 1, "S(n) - ln n outside [-1, 1]");
  o.detail << "tier mismatches (n<=200) " << tier_bad << "; max |S_closed - S_direct| = " << std::scientific
           << std::setprecision(2) << max_gap << std::defaultfloat << std::setprecision(6)
           << "; S(n) - ln n in [" << lo << ", " << hi << "] for n = 1..500";
}

void recovery_sweep(Outcome &o) {
  std::size_t total = 0, bad = 0, unique = 0, swaps = 0, aligned_unique = 0, brute = 0, brute_bad = 0;
  for (auto [k0, k1] : small_counts()) {
    for (const auto &seed : primitive_seeds(k0, k1)) {
      for (unsigned n = 0; n <= 10; ++n) {
        const Bits f = inflate_bits(seed, n);
        const std::size_t h = fib(n) + 1;
        if (h > f.size()) continue;
        for (std::size_t s = 0; s < f.size(); ++s) {
          const Bits w = with_hole(f, s, h);
          RecoveryResult r = repair_hole(w, Hole{s, h}, k0, k1, n);
          ++total;
          bool ok = (r.kind == RecoveryKind::Unique || r.kind == RecoveryKind::SwapPair) && r.contains(f);
          bad += !ok;
          unique += r.kind == RecoveryKind::Unique;
          swaps += r.kind == RecoveryKind::SwapPair;
          aligned_unique += r.alignments.size() == 1;
          if (n <= 6) {
            RecoveryResult b = brute_force_repair(w, Hole{s, h}, k0, k1, n);
            ++brute;
            brute_bad += b.kind != r.kind || b.alignments != r.alignments;
          }
        }
      }
    }
  }
  o.require(bad == 0, "repair missed ground truth");
  o.require(brute_bad == 0, "brute force disagrees");
  o.detail << total << " holes: " << unique << " unique, " << swaps << " swap pairs, " << bad
           << " failures; aligned-unique " << aligned_unique << "; brute force agrees on " << brute - brute_bad << "/"
           << brute;
}

void multiplicity(Outcome &o) {
  const SubstitutionRule rule = fibonacci_rule();
  const std::size_t max_len = fib(9);
  std::vector<std::vector<Bits>> legal(max_len + 1);
  for (std::size_t l = 1; l <= max_len; ++l) {
    for (const auto &w : legal_words(rule, l)) legal[l].push_back(from_word(w));
  }
  std::size_t total = 0, bad = 0;
  for (auto [k0, k1] : small_counts()) {
    for (const auto &seed : primitive_seeds(k0, k1)) {
      for (unsigned n = 1; n <= 8; ++n) {
        const Bits f = inflate_bits(seed, n), parent = inflate_bits(seed, n - 1);
        for (std::size_t l = 1; l <= fib(n + 1); ++l) {
          for (const auto &k : legal[l]) {
            ++total;
            bad += cyclic_count(f, k) != cyclic_count(parent, parent_string(k));
          }
        }
      }
    }
  }
  o.require(bad == 0, "multiplicity mismatch");
  o.detail << total << " (seed, n, K) triples, mismatches " << bad;
}

void qecc(Outcome &o) {
  std::size_t families = 0, checked = 0, failed = 0, skipped = 0, oracle_runs = 0, oracle_bad = 0;
  double worst = 0;
  for (auto [k0, k1] : small_counts()) {
    for (const auto &seeds : valid_seed_sets(k0, k1)) {
      ++families;
      for (unsigned n = 0; n <= 8; ++n) {
        CodeFamily fam = build_family(seeds, n);
        const std::size_t w = fib(n) + 1;
        if (w > fam.length()) {
          ++skipped;
          continue;
        }
        QECCReport r = verify_qecc(fam, w);
        ++checked;
        failed += !r.pass();
        if (fam.length() <= kOracleMaxLength) {
          OracleReport orc = statevector_oracle(fam, w);
          ++oracle_runs;
          double gap = std::max({orc.max_cross, orc.max_offdiagonal_gap, orc.max_density_gap, orc.max_count_mismatch,
                                 orc.max_superposition_dev});
          worst = std::max(worst, gap);
          oracle_bad += orc.verdict.pass() != r.pass() || gap >= kOracleTolerance;
        }
      }
    }
  }
  o.require(failed == 0, "valid family failed");
  o.require(oracle_bad == 0, "oracle disagreement");
  // Swap-related pair built without validation.
  CodeFamily bad = build_family({"1100", "1010"}, 2, false);
  QECCReport br = verify_qecc(bad, fib(2) + 1);
  o.require(!br.pass() && !br.cross_terms_vanish && br.cross_witness.has_value(), "swap-violating family");
  OracleReport bo = statevector_oracle(bad, fib(2) + 1);
  o.require(bo.verdict.pass() == br.pass(), "oracle on swap-violating family");
  o.detail << families << " valid families, " << checked << " (family, n) checks at w = f_n+1, " << failed
           << " failures, " << skipped << " skipped (w > length); oracle " << oracle_runs
           << " runs, worst discrepancy " << std::scientific << std::setprecision(2) << worst << std::defaultfloat;
  if (br.cross_witness) {
    const auto &wt = *br.cross_witness;
    o.detail << "; {1100,1010} n=2 fails (a): seed " << wt.seed_i << " shift " << wt.shift_x << " vs seed "
             << wt.seed_j << " shift " << wt.shift_y << " at window " << wt.window_start;
  }
}

void phases(Outcome &o) {
  double worst = 0;
  std::size_t mixtures = 0, runs = 0;
  const std::uint64_t base_seed = 7;
  std::vector<std::size_t> largest;
  for (unsigned n : {2u, 3u}) {
    CodeFamily fam = build_family({"10"}, n);
    const std::size_t w = fib(n) + 1;
    for (std::uint64_t s = 0; s < 100; ++s) {
      PhaseReport r = phase_robustness(fam, w, random_phases(fam, base_seed + s));
      ++runs;
      worst = std::max(worst, r.max_deviation);
      mixtures += r.mixture_breaks;
    }
    // largest window at which the same tables leave rho_K alone
    std::size_t ok_w = 0;
    for (std::size_t v = 1; v <= fam.length(); ++v) {
      bool all = true;
      for (std::uint64_t s = 0; s < 100 && all; ++s) all = phase_robustness(fam, v, random_phases(fam, base_seed + s)).decorated_match;
      if (!all) break;
      ok_w = v;
    }
    largest.push_back(ok_w);
  }
  o.require(worst < 1e-12, "decorated states differ");
  o.require(mixtures == runs, "mixture not detected");
  o.detail << runs << " random phase tables (seeds " << base_seed << ".." << base_seed + 99
           << ", seed 10 at n = 2, 3, w = f_n+1): max rho_K deviation " << std::scientific << std::setprecision(2)
           << worst << std::defaultfloat << "; mixture breaks rho_K in " << mixtures << "/" << runs
           << "; rho_K unchanged only up to w = " << largest[0] << ", " << largest[1]
           << " (translates differing by one adjacent swap agree off the window)";
}

void product(Outcome &o) {
  Table t = product2d("10", "101");
  o.require(t == Table{{3, 2, 3}, {1, 0, 1}}, "example table");
  const Bits a = inflate_bits("10", 3);
  Table big = product2d(a, a);
  std::size_t ok = 0;
  for (std::size_t r0 = 0; r0 < 8; ++r0) {
    for (std::size_t c0 = 0; c0 < 8; ++c0) {
      SquareRepair rep = repair_square(erase_square(big, r0, c0, 4), {1, 1, 3}, {1, 1, 3});
      auto good = [&](const RecoveryResult &r) {
        return (r.kind == RecoveryKind::Unique || r.kind == RecoveryKind::SwapPair) && r.contains(a);
      };
      ok += good(rep.rows) && good(rep.columns);
    }
  }
  o.require(ok == 64, "square repair");
  o.detail << "(10) x (101) = [[3,2,3],[1,0,1]]; 4x4 erasures of the 8x8 table repaired at " << ok << "/64 positions";
}

void round_trips(Outcome &o) {
  std::size_t deflations = 0, reconstructions = 0;
  auto check_patch = [&](const std::string &name, const Tiling &seed) {
    Tiling prev = seed;
    for (unsigned n = 0; n <= 4; ++n) {
      Tiling t = n ? inflate(prev) : seed;
      if (n) {
        o.require(deflate(t) == prev, name + " deflate at level " + std::to_string(n));
        ++deflations;
      }
      if (!t.tiles.empty()) {
        o.require(reconstruct(ammann_lines(t)).tiles == t.tiles, name + " reconstruct at level " + std::to_string(n));
        ++reconstructions;
      }
      prev = t;
    }
  };
  check_patch("penrose wheel", penrose_wheel());
  check_patch("thick", single_tile(TileKind::Thick, 1));
  check_patch("thin", single_tile(TileKind::Thin, 4));
  check_patch("square", single_tile(TileKind::Square, 3));
  check_patch("rhombus", single_tile(TileKind::Rhombus, 2));
  std::size_t torus = 0;
  for (int i = 1; i <= 4; ++i) {
    Tiling prev;
    for (unsigned n = 0; n <= 4; ++n) {
      Tiling t = n ? inflate(prev) : build_ab_torus(i);
      if (n) o.require(deflate(t) == prev, "A_" + std::to_string(i) + " deflate at " + std::to_string(n));
      o.require(reconstruct(ammann_lines(t)) == t, "A_" + std::to_string(i) + " reconstruct at " + std::to_string(n));
      ++torus;
      prev = t;
    }
  }
  o.detail << deflations << " patch deflations, " << reconstructions << " patch reconstructions (whole tiles), "
           << torus << " torus levels A_i^(0..4) with exact deflate and reconstruct";
}

void censuses(Outcome &o) {
  std::size_t table_ok = 0;
  for (int i = 1; i <= 4; ++i) table_ok += validate_ab_torus(i).ok();
  o.require(table_ok == 4, "A_i^(0) table or torus constraints");
  Atlas ab = vertex_atlas(Flavor::AmmannBeenker, VertexDetail::Shape);
  Atlas ab_dec = vertex_atlas(Flavor::AmmannBeenker, VertexDetail::Decorated);
  VertexCensus first, first_dec;
  bool same = true, in_atlas = true;
  for (int i = 1; i <= 4; ++i) {
    Tiling t = torus_level(i, 2);
    VertexCensus c = vertex_census(t, VertexDetail::Shape), d = vertex_census(t, VertexDetail::Decorated);
    if (i == 1) {
      first = c;
      first_dec = d;
    }
    same = same && c == first && d == first_dec;
    for (const auto &[k, n] : c) in_atlas = in_atlas && ab.classes.count(k);
    for (const auto &[k, n] : d) in_atlas = in_atlas && ab_dec.classes.count(k);
  }
  o.require(same, "A_i^(2) censuses differ");
  o.require(in_atlas, "A_i^(2) configuration outside atlas");
  Atlas pen = vertex_atlas(Flavor::Penrose, VertexDetail::Shape);
  Atlas pen_dec = vertex_atlas(Flavor::Penrose, VertexDetail::Decorated);
  o.require(pen.classes.size() == 7, "Penrose atlas size");
  o.detail << "edge tables match " << table_ok << "/4; A_i^(2) vertex censuses identical (" << first.size()
           << " shape classes, " << first_dec.size() << " decorated) and inside the AB atlas; Penrose atlas "
           << pen.classes.size() << " classes (" << pen_dec.classes.size() << " with arrow roles)";
}

void spacing(Outcome &o) {
  LineSet lines = ammann_lines(inflate(penrose_wheel(), 6));
  std::vector<SpacingReport> reps = spacing_law(lines);
  o.require(reps.size() == 5, "five directions");
  std::size_t legal = 0, gaps = 0;
  for (const auto &r : reps) {
    legal += r.two_lengths && r.golden_ratio && r.legal;
    gaps += r.word.size();
  }
  o.require(legal == reps.size(), "spacing words");
  o.require(lines.unbroken(), "lines broken");
  o.detail << legal << "/" << reps.size() << " directions give legal Fibonacci words (L/S = golden ratio), " << gaps
           << " spacings in total";
}

struct Criterion {
  int id;
  const char *name;
  double budget;
  std::function<void(Outcome &)> fn;
};

const std::vector<Criterion> &criteria() {
  static const std::vector<Criterion> all = {
      {1, "frequencies-exact", 1, frequencies},
      {2, "complexity", 30, complexity_check},
      {3, "spectrum-entropy", 120, spectrum_entropy},
      {4, "recovery-exhaustive", 600, recovery_sweep},
      {5, "multiplicity-identity", 300, multiplicity},
      {6, "qecc-verification", 900, qecc},
      {7, "phase-robustness", 120, phases},
      {8, "product-code-2d", 60, product},
      {9, "geometry-round-trips", 300, round_trips},
      {10, "torus-censuses", 300, censuses},
      {11, "ammann-spacing-law", 60, spacing},
  };
  return all;
}

}  // namespace

int criterion_count() { return static_cast<int>(criteria().size()); }

std::string format(const Result &r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << std::left << std::setw(22) << r.name
      << std::right << "  " << std::fixed << std::setprecision(2) << r.seconds << "s (limit " << std::setprecision(0)
      << r.budget << "s)  " << r.detail;
  return out.str();
}

std::vector<Result> run(const std::vector<int> &only, std::ostream *progress) {
  std::vector<Result> out;
  for (const auto &s : criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.id) == only.end()) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      s.fn(o);
    } catch (const std::exception &e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    Result r;
    r.id = s.id;
    r.name = s.name;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.budget = s.budget;
    r.pass = o.pass && r.seconds < s.budget;
    r.detail = o.detail.str();
    if (o.pass && !r.pass) r.detail += "; over the time limit";
    if (progress) *progress << format(r) << std::endl;
    out.push_back(r);
  }
  return out;
}

}  // namespace tilecode::acceptance
