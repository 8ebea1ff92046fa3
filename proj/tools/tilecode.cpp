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

// tilecode command line front end.
//
// Exit codes: 0 pass, 1 check failed, 2 usage or precondition error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance.hpp"
#include "tilecode/ab_torus.hpp"
#include "tilecode/ammann.hpp"
#include "tilecode/census.hpp"
#include "tilecode/code_space.hpp"
#include "tilecode/fibonacci.hpp"
#include "tilecode/parallel.hpp"
#include "tilecode/recovery.hpp"
#include "tilecode/substitution.hpp"
#include "tilecode/tiling.hpp"
#include "tilecode/tiling_io.hpp"

using namespace tilecode;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

// "p/q", "p/q*sqrt5", "a + b*sqrt5" with rational a, b.
QuadraticValue parse_gamma(const std::string &text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  static const std::regex form(R"(^([+-]?\d+(?:/\d+)?)?(?:([+-]?)(\d+(?:/\d+)?)?\*?sqrt5)?$)");
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, form)) throw std::invalid_argument("cannot parse gamma: " + text);
  mpq_class a(0), b(0);
  if (m[1].matched) a = mpq_class(m[1].str());
  if (s.find("sqrt5") != std::string::npos) {
    b = m[3].matched ? mpq_class(m[3].str()) : mpq_class(1);
    if (m[2].str() == "-") b = -b;
  }
  a.canonicalize();
  b.canonicalize();
  return QuadraticValue(a, b, 5);
}

SingularConvention parse_convention(const std::string &s) {
  if (s == "refuse") return SingularConvention::Refuse;
  if (s == "left") return SingularConvention::LeftClosed;
  if (s == "right") return SingularConvention::RightClosed;
  throw std::invalid_argument("convention must be refuse, left or right");
}

std::vector<Bits> split_list(const std::string &csv) {
  std::vector<Bits> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_report(std::ostream &out, const QECCReport &r) {
  auto witness = [&](const std::optional<CollisionWitness> &w) {
    if (!w) return std::string("-");
    std::ostringstream s;
    s << "seed" << w->seed_i << "+" << w->shift_x << " ~ seed" << w->seed_j << "+" << w->shift_y << " @" << w->window_start;
    return s.str();
  };
  out << "window\t" << r.window << "\n"
      << "length\t" << r.length << "\n"
      << "cross_terms_vanish\t" << r.cross_terms_vanish << "\t" << witness(r.cross_witness) << "\n"
      << "same_word_blocks_agree\t" << r.same_word_blocks_agree;
  if (r.same_word_witness) out << "\tseeds " << r.same_word_witness->first << "," << r.same_word_witness->second;
  out << "\n"
      << "same_word_collision\t" << witness(r.same_word_collision) << "\n"
      << "densities_equal\t" << r.densities_equal;
  if (r.density_witness) out << "\tseeds " << r.density_witness->first << "," << r.density_witness->second;
  out << "\n"
      << "covariance_checked\t" << r.covariance_checked << "\tcovariant\t" << r.covariant << "\n"
      << "verdict\t" << (r.pass() ? "pass" : "fail") << "\n";
}

Tiling make_tiling(const std::string &seed, int index, unsigned level) {
  Tiling base;
  if (seed == "wheel") {
    base = penrose_wheel();
  } else if (seed == "torus") {
    base = build_ab_torus(index);
  } else if (seed == "periodic-thick" || seed == "periodic-thin" || seed == "periodic-square" ||
             seed == "periodic-rhombus") {
    base = periodic_rhombus_torus(parse_tile_kind(seed.substr(9)));
  } else {
    base = single_tile(parse_tile_kind(seed), seed == "square" ? 1 : 0);
  }
  return inflate(base, level);
}

void print_census(const VertexCensus &c) {
  std::size_t total = 0;
  for (const auto &[k, n] : c) {
    std::cout << n << "\t" << k << "\n";
    total += n;
  }
  std::cout << "total\t" << total << "\tclasses\t" << c.size() << "\n";
}

VertexDetail parse_detail(const std::string &s) {
  if (s == "shape") return VertexDetail::Shape;
  if (s == "decorated") return VertexDetail::Decorated;
  throw std::invalid_argument("detail must be shape or decorated");
}

}  // namespace

int main(int argc, char **argv) {
  configure_threads();
  CLI::App app{"tilecode: aperiodic tilings and the codes built from them"};
  app.require_subcommand(1);

  // fib
  auto *fib_cmd = app.add_subcommand("fib", "Fibonacci words, spectra and entropy");
  fib_cmd->require_subcommand(1);
  auto *gen = fib_cmd->add_subcommand("generate", "cut-and-project bits a_n, or the n-fold inflation of a seed");
  std::string gamma, convention = "refuse", gen_seed;
  long lo = 0, hi = 20;
  unsigned gen_level = 0;
  gen->add_option("--gamma", gamma, "offset, e.g. 1/2 or 1/3+1/5*sqrt5");
  gen->add_option("--lo", lo, "first index")->capture_default_str();
  gen->add_option("--hi", hi, "last index")->capture_default_str();
  gen->add_option("--convention", convention, "singular gamma: refuse|left|right")->capture_default_str();
  gen->add_option("--seed", gen_seed, "inflate this 0/1 seed instead");
  gen->add_option("--level", gen_level, "inflation steps for --seed")->capture_default_str();

  auto *spec_cmd = fib_cmd->add_subcommand("spectrum", "exact frequencies of the length-n factors");
  std::size_t spec_n = 2;
  spec_cmd->add_option("--n", spec_n, "factor length")->required()->check(CLI::PositiveNumber);

  auto *ent_cmd = fib_cmd->add_subcommand("entropy", "entanglement entropy S(n)");
  std::size_t ent_lo = 1, ent_hi = 0;
  bool bits = false;
  ent_cmd->add_option("--n", ent_lo, "window length (or first of a range)")->required()->check(CLI::PositiveNumber);
  ent_cmd->add_option("--to", ent_hi, "last window length of a range");
  ent_cmd->add_flag("--bits", bits, "report in bits instead of nats");

  // recover
  auto *rec = app.add_subcommand("recover", "repair a contiguous erased run of a codeword");
  std::string word;
  std::size_t rk0 = 0, rk1 = 0;
  unsigned rlevel = 0;
  bool allow_long = false;
  rec->add_option("--word", word, "codeword with '?' on the erased run")->required();
  rec->add_option("--k0", rk0, "zeros in the seed")->required();
  rec->add_option("--k1", rk1, "ones in the seed")->required();
  rec->add_option("--level", rlevel, "inflation level n")->required();
  rec->add_flag("--allow-long-hole", allow_long, "accept holes longer than f_n + 1");

  // code
  auto *code = app.add_subcommand("code", "finite code families");
  code->require_subcommand(1);
  auto *ver = code->add_subcommand("verify", "check the error-correction condition on a window");
  std::size_t ck0 = 0, ck1 = 0, window = 0;
  unsigned clevel = 0;
  bool oracle = false, no_validate = false;
  std::string seeds_csv, summary_path;
  std::uint64_t oracle_seed = 2026;
  ver->add_option("--k0", ck0, "zeros per seed")->required();
  ver->add_option("--k1", ck1, "ones per seed")->required();
  ver->add_option("--level", clevel, "inflation level n")->required();
  ver->add_option("--window", window, "window length (default f_n + 1)");
  ver->add_option("--seeds", seeds_csv, "comma-separated seeds (default: greedy valid family)");
  ver->add_flag("--oracle", oracle, "also run the dense state-vector check (length <= 16)");
  ver->add_option("--oracle-seed", oracle_seed, "RNG seed for random superpositions")->capture_default_str();
  ver->add_flag("--no-validate", no_validate, "build the family without the seed checks");
  ver->add_option("--summary", summary_path, "write key=value summary to this file");

  // tile
  auto *tile = app.add_subcommand("tile", "build, inflate, deflate and check tilings");
  std::string tseed = "wheel", tin, tout;
  int tindex = 1;
  unsigned tlevel = 0, tdeflate = 0;
  bool tlines = false;
  tile->add_option("--seed", tseed, "wheel|thick|thin|square|rhombus|torus|periodic-<kind>")->capture_default_str();
  tile->add_option("--index", tindex, "A_i torus index for --seed torus")->check(CLI::Range(1, 4));
  tile->add_option("--level", tlevel, "inflation steps")->capture_default_str();
  tile->add_option("--input", tin, "read a tiling instead of building one");
  tile->add_option("--deflate", tdeflate, "deflation steps applied after building/reading");
  tile->add_flag("--lines", tlines, "list the Ammann lines");
  tile->add_option("--out", tout, "write the tiling document here");

  // census
  auto *cen = app.add_subcommand("census", "vertex and edge censuses");
  std::string cin, catlas, cdetail = "shape";
  int ctorus = 0;
  unsigned clev = 0;
  bool ctable = false, cr2 = false;
  double cradius = 0, cstep = 0.05;
  cen->add_option("--input", cin, "vertex census of a tiling document");
  cen->add_option("--torus", ctorus, "vertex census of A_i^(level)")->check(CLI::Range(1, 4));
  cen->add_option("--level", clev, "torus level")->capture_default_str();
  cen->add_option("--atlas", catlas, "legal vertex atlas: penrose|ab");
  cen->add_option("--detail", cdetail, "shape|decorated")->capture_default_str();
  cen->add_flag("--table", ctable, "edge-class table of A_1..4^(0)");
  cen->add_option("--disk", cradius, "disk probe radius on A_i^(level), i = 1..4");
  cen->add_flag("--r2", cr2, "estimate r_2 on A_1^(2)");
  cen->add_option("--step", cstep, "sampling step for --r2")->capture_default_str();

  // render
  auto *ren = app.add_subcommand("render", "SVG rendering");
  std::string rin, rout, layers = "tiles,arrows,ammann";
  ren->add_option("--input", rin, "tiling document")->required();
  ren->add_option("--layers", layers, "comma list of tiles,arrows,ammann")->capture_default_str();
  ren->add_option("--out", rout, "SVG output path")->required();

  // verify-all
  auto *all = app.add_subcommand("verify-all", "run every acceptance criterion");
  std::vector<int> only;
  all->add_option("--only", only, "criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  try {
    std::cout << std::setprecision(12);
    if (fib_cmd->parsed()) {
      if (gen->parsed()) {
        if (!gen_seed.empty()) {
          std::cout << inflate_bits(gen_seed, gen_level) << "\n";
          return kPass;
        }
        if (gamma.empty()) throw std::invalid_argument("--gamma or --seed is required");
        if (lo > hi) throw std::invalid_argument("--lo must not exceed --hi");
        QuadraticValue g = parse_gamma(gamma);
        std::cout << "gamma\t" << g.str() << "\t" << g.decimal(12) << "\n";
        std::cout << cut_and_project(g, lo, hi, parse_convention(convention)) << "\n";
        return kPass;
      }
      if (spec_cmd->parsed()) {
        FrequencySpectrum s = spectrum(spec_n);
        std::cout << "# n=" << s.n << " tier k=" << s.k << "\n# word\texponent\texact\tdecimal\n";
        for (const auto &e : s.entries) {
          std::cout << e.word << "\t" << e.exponent << "\t" << e.frequency.str() << "\t" << e.frequency.decimal(12) << "\n";
        }
        return kPass;
      }
      if (ent_cmd->parsed()) {
        const std::size_t last = ent_hi ? ent_hi : ent_lo;
        if (last < ent_lo) throw std::invalid_argument("--to must not be below --n");
        const double unit = bits ? std::log(2.0) : 1.0;
        std::cout << "# n\tS_direct\tS_closed\tS-log(n)\t(" << (bits ? "bits" : "nats") << ")\n";
        for (std::size_t n = ent_lo; n <= last; ++n) {
          EntropyValue e = entanglement_entropy(n);
          std::cout << n << "\t" << std::fixed << std::setprecision(12) << e.direct / unit << "\t"
                    << e.closed_form / unit << "\t" << (e.direct - std::log(static_cast<double>(n))) / unit << "\n"
                    << std::defaultfloat;
        }
        return kPass;
      }
    }
    if (rec->parsed()) {
      RecoveryResult r = repair_hole(word, rk0, rk1, rlevel, allow_long);
      std::cerr << "kind\t" << to_string(r.kind) << "\n";
      if (r.kind == RecoveryKind::Infeasible) std::cerr << "reason\t" << r.reason << "\n";
      if (r.kind == RecoveryKind::SwapPair) std::cerr << "swap_position\t" << r.swap_position << "\n";
      for (const auto &c : r.candidates) std::cout << c << "\n";
      return (r.kind == RecoveryKind::Unique || r.kind == RecoveryKind::SwapPair) ? kPass : kFail;
    }
    if (ver->parsed()) {
      std::vector<Bits> seeds = seeds_csv.empty() ? greedy_seed_set(ck0, ck1) : split_list(seeds_csv);
      if (seeds.empty()) throw std::invalid_argument("no primitive seeds with these counts");
      CodeFamily fam = build_family(seeds, clevel, !no_validate);
      if (fam.k0 != ck0 || fam.k1 != ck1) throw std::invalid_argument("seeds do not match --k0/--k1");
      const std::size_t w = window ? window : fib(clevel) + 1;
      if (w > fam.length()) throw std::invalid_argument("window longer than the codeword");
      std::cout << "seeds\t";
      for (std::size_t i = 0; i < fam.seeds.size(); ++i) std::cout << (i ? "," : "") << fam.seeds[i];
      std::cout << "\nlevel\t" << clevel << "\n";
      QECCReport r = verify_qecc(fam, w);
      print_report(std::cout, r);
      bool pass = r.pass();
      std::optional<OracleReport> orc;
      if (oracle) {
        orc = statevector_oracle(fam, w, oracle_seed);
        std::cout << std::scientific << std::setprecision(3) << "oracle_seed\t" << orc->seed << "\n"
                  << "oracle_verdict\t" << (orc->verdict.pass() ? "pass" : "fail") << "\n"
                  << "oracle_max_cross\t" << orc->max_cross << "\n"
                  << "oracle_max_offdiagonal_gap\t" << orc->max_offdiagonal_gap << "\n"
                  << "oracle_max_density_gap\t" << orc->max_density_gap << "\n"
                  << "oracle_max_superposition_dev\t" << orc->max_superposition_dev << "\n"
                  << std::defaultfloat;
        pass = pass && orc->verdict.pass() == r.pass();
      }
      if (!summary_path.empty()) {
        std::ofstream out(summary_path);
        out << "k0=" << fam.k0 << "\nk1=" << fam.k1 << "\nlevel=" << clevel << "\nwindow=" << w
            << "\nlength=" << fam.length() << "\nseeds=" << fam.seeds.size() << "\ncross_terms_vanish="
            << r.cross_terms_vanish << "\nsame_word_blocks_agree=" << r.same_word_blocks_agree
            << "\ndensities_equal=" << r.densities_equal << "\nverdict=" << (r.pass() ? "pass" : "fail") << "\n";
        if (orc) out << "oracle_verdict=" << (orc->verdict.pass() ? "pass" : "fail") << "\noracle_seed=" << orc->seed << "\n";
      }
      return pass ? kPass : kFail;
    }
    if (tile->parsed()) {
      Tiling t = tin.empty() ? make_tiling(tseed, tindex, tlevel) : inflate(load_tiling(tin), tlevel);
      for (unsigned i = 0; i < tdeflate; ++i) t = deflate(t);
      auto dc = doubled_counts(t);
      MatchingReport m = check_matching(t);
      LineSet lines = ammann_lines(t);
      std::cout << "flavor\t" << to_string(t.flavor) << "\n"
                << "torus\t" << t.is_torus() << "\n"
                << "tiles\t" << t.tiles.size() << "\n"
                << "halves\t" << t.halves.size() << "\n"
                << "half_counts\t" << dc[0] << "\t" << dc[1] << "\n"
                << "edges\t" << m.arrows.edges << "\tshared\t" << m.arrows.shared << "\tmismatched\t"
                << m.arrows.mismatched << "\n"
                << "ammann_lines\t" << lines.lines.size() << "\tdirections\t" << lines.direction_classes()
                << "\tgaps\t" << m.gaps << "\tunclosed\t" << m.unclosed << "\n"
                << "matching\t" << (m.ok() ? "ok" : "violated") << "\n";
      if (tlines) {
        for (const auto &l : lines.lines) {
          std::cout << "line\t" << l.direction << "\t" << l.offset.value().str() << "\t" << l.begin.value().str()
                    << "\t" << l.end.value().str() << "\n";
        }
      }
      if (!tout.empty()) save_tiling(t, tout);
      return m.ok() ? kPass : kFail;
    }
    if (cen->parsed()) {
      const VertexDetail detail = parse_detail(cdetail);
      bool ok = true;
      if (!catlas.empty()) {
        Atlas a = vertex_atlas(parse_flavor(catlas), detail);
        std::cout << "# atlas " << to_string(a.flavor) << ", stable after depth " << a.depth << "\n";
        for (const auto &c : a.classes) std::cout << c << "\n";
        std::cout << "classes\t" << a.classes.size() << "\n";
      }
      if (ctable) {
        const auto &cols = edge_class_columns();
        for (int i = 1; i <= 4; ++i) {
          AbTorusReport r = validate_ab_torus(i);
          std::cout << "A_" << i << "^(0)";
          for (int c = 0; c < 8; ++c) std::cout << "\t" << r.census.counts[c][0] << "/" << r.census.counts[c][1];
          std::cout << "\tarrows=" << r.arrows_ok << " lines=" << r.lines_unbroken << " freq=" << r.equal_frequencies
                    << " table=" << r.table_match << "\n";
          ok = ok && r.ok();
        }
        std::cout << "# columns:";
        for (const auto &col : cols) {
          std::cout << " {";
          for (int m = 0; m < 2; ++m) std::cout << (m ? " " : "") << col[m].direction << col[m].left << col[m].right;
          std::cout << "}";
        }
        std::cout << "  (direction, left, right)\n";
      }
      if (ctorus) {
        Tiling t = torus_level(ctorus, clev);
        print_census(vertex_census(t, detail));
      }
      if (!cin.empty()) print_census(vertex_census(load_tiling(cin), detail));
      if (cradius > 0) {
        DiskProbeReport r = disk_probe(clev, cradius);
        std::cout << "disk_level\t" << r.level << "\tradius\t" << r.radius << "\tdisks\t" << r.disks[0] << "\tpatterns\t"
                  << r.classes << "\tindependent\t" << r.independent << "\n";
        ok = ok && r.independent;
      }
      if (cr2) {
        R2Estimate e = estimate_r2(cstep);
        std::cout << "r2\t" << e.r2 << "\tstep\t" << e.step << "\tsamples\t" << e.samples << "\n";
      }
      return ok ? kPass : kFail;
    }
    if (ren->parsed()) {
      Tiling t = load_tiling(rin);
      std::ofstream out(rout);
      if (!out) throw std::runtime_error("cannot write " + rout);
      out << render_svg(t, parse_layers(layers));
      return kPass;
    }
    if (all->parsed()) {
      auto results = acceptance::run(only, &std::cout);
      std::size_t passed = 0;
      for (const auto &r : results) passed += r.pass;
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return passed == results.size() ? kPass : kFail;
    }
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
