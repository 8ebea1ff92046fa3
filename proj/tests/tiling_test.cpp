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

#include <gtest/gtest.h>

#include <cmath>

#include "tilecode/ab_torus.hpp"
#include "tilecode/ammann.hpp"
#include "tilecode/census.hpp"
#include "tilecode/tiling.hpp"
#include "tilecode/tiling_io.hpp"

namespace tilecode {
namespace {

// Same polygon with the diagonal arrow reversed.
Tile reversed(Flavor f, const Tile &t) {
  return Tile{t.kind, (t.orientation + turn(f) / 2) % turn(f), vertices(f, t)[2]};
}

TEST(Cyclotomic, RingBasics) {
  for (Flavor f : {Flavor::Penrose, Flavor::AmmannBeenker}) {
    Point one = unit(f, 0);
    EXPECT_EQ(rotate(f, one, turn(f)), one);
    EXPECT_EQ(rotate(f, one, turn(f) / 2), -one);
    EXPECT_EQ(mul(f, inflation_factor(f), inflation_inverse(f)), one);
    for (int j = 0; j < turn(f); ++j) EXPECT_EQ(unit_index(f, unit(f, j)), j);
  }
  auto xy = to_xy(Flavor::Penrose, unit(Flavor::Penrose, 1));
  EXPECT_NEAR(xy[0], std::cos(M_PI / 5), 1e-12);
  EXPECT_NEAR(xy[1], std::sin(M_PI / 5), 1e-12);
}

TEST(Cyclotomic, LatticeReduce) {
  Lattice lat(Flavor::AmmannBeenker, unit(Flavor::AmmannBeenker, 0).scaled(4), unit(Flavor::AmmannBeenker, 2).scaled(4));
  Point p = unit(Flavor::AmmannBeenker, 1);
  EXPECT_EQ(lat.reduce(p + lat.p1().scaled(3) - lat.p2()), lat.reduce(p));
  EXPECT_EQ(lat.cell(lat.p1().scaled(2) + p), (std::array<std::int64_t, 2>{2, 0}));
}

TEST(Cyclotomic, FloorQuadratic) {
  EXPECT_EQ(floor_quadratic(0, 1, 5, 1), 2);
  EXPECT_EQ(floor_quadratic(0, -1, 5, 1), -3);
  EXPECT_EQ(floor_quadratic(-1, 1, 5, 2), 0);
  EXPECT_EQ(floor_quadratic(3, 2, 2, 16), 0);
}

TEST(Tiling, InflateZeroIsIdentity) {
  Tiling t = single_tile(TileKind::Square, 1);
  EXPECT_EQ(inflate(t, 0), t);
}

TEST(Tiling, SingleTileOffspring) {
  auto m = inflation_matrix(Flavor::AmmannBeenker);
  EXPECT_EQ(m, (std::array<std::array<std::int64_t, 2>, 2>{{{3, 2}, {4, 3}}}));
  EXPECT_EQ(doubled_counts(inflate(single_tile(TileKind::Square))), (std::array<std::int64_t, 2>{6, 8}));
  EXPECT_EQ(doubled_counts(inflate(single_tile(TileKind::Rhombus))), (std::array<std::int64_t, 2>{4, 6}));
  Tiling sq = inflate(single_tile(TileKind::Square));
  EXPECT_EQ(sq.halves.size(), 4u);  // boundary squares stay split
}

TEST(Tiling, CountsFollowMatrix) {
  for (Flavor f : {Flavor::Penrose, Flavor::AmmannBeenker}) {
    auto m = inflation_matrix(f);
    Tiling t = f == Flavor::Penrose ? penrose_wheel() : single_tile(TileKind::Rhombus);
    for (int n = 0; n < 5; ++n) {
      auto c = doubled_counts(t);
      Tiling next = inflate(t);
      auto d = doubled_counts(next);
      EXPECT_EQ(d[0], m[0][0] * c[0] + m[0][1] * c[1]);
      EXPECT_EQ(d[1], m[1][0] * c[0] + m[1][1] * c[1]);
      t = next;
    }
  }
  Tiling a = build_ab_torus(1);
  auto c0 = doubled_counts(a);
  auto m = inflation_matrix(Flavor::AmmannBeenker);
  auto c2 = doubled_counts(inflate(a, 2));
  std::array<std::int64_t, 2> c1{m[0][0] * c0[0] + m[0][1] * c0[1], m[1][0] * c0[0] + m[1][1] * c0[1]};
  EXPECT_EQ(c2[0], m[0][0] * c1[0] + m[0][1] * c1[1]);
  EXPECT_EQ(c2[1], m[1][0] * c1[0] + m[1][1] * c1[1]);
}

TEST(Tiling, DeflateRoundTrips) {
  for (const Tiling &seed : {penrose_wheel(), single_tile(TileKind::Thick, 3), single_tile(TileKind::Thin, 7),
                             single_tile(TileKind::Square, 5), single_tile(TileKind::Rhombus, 1)}) {
    Tiling t = seed;
    for (int n = 1; n <= 4; ++n) {
      Tiling next = inflate(t);
      EXPECT_EQ(deflate(next), t) << n;
      t = next;
    }
  }
  EXPECT_EQ(deflate(deflate(torus_level(1, 2))), build_ab_torus(1));
}

TEST(Tiling, PeriodicTilingsRefused) {
  EXPECT_THROW(deflate(periodic_rhombus_torus(TileKind::Thick)), IllegalTilingError);
  EXPECT_THROW(deflate(periodic_rhombus_torus(TileKind::Thin)), IllegalTilingError);
  EXPECT_FALSE(check_matching(periodic_rhombus_torus(TileKind::Thick)).ok());
}

TEST(Tiling, MergeErrors) {
  Tile t = single_tile(TileKind::Thick).tiles[0];
  auto h = split(t);
  EXPECT_THROW(merge(Flavor::Penrose, {h[0], h[0]}, {}, std::nullopt), MergeError);
  Tiling ok = merge(Flavor::Penrose, {h[0], h[1]}, {}, std::nullopt);
  EXPECT_EQ(ok.tiles.size(), 1u);
  EXPECT_TRUE(ok.halves.empty());
}

TEST(Tiling, CanonicalRhombus) {
  Flavor f = Flavor::AmmannBeenker;
  Tile r = single_tile(TileKind::Rhombus, 1).tiles[0];
  auto v = vertices(f, r);
  // the same rhombus seen from its other acute corner
  Tile other = rhombus_from(f, v[2], v[0] - v[1]);
  EXPECT_EQ(canonical(f, other), canonical(f, r));
}

TEST(Ammann, UnbrokenOnInflatedPatches) {
  for (const Tiling &seed : {penrose_wheel(), single_tile(TileKind::Square, 1), single_tile(TileKind::Rhombus)}) {
    Tiling t = inflate(seed, 3);
    MatchingReport m = check_matching(t);
    EXPECT_TRUE(m.ok());
    LineSet ls = ammann_lines(t);
    EXPECT_TRUE(ls.unbroken());
    EXPECT_EQ(ls.direction_classes(), line_directions(t.flavor).size());
  }
  EXPECT_EQ(line_directions(Flavor::Penrose).size(), 5u);
  EXPECT_EQ(line_directions(Flavor::AmmannBeenker).size(), 4u);
}

TEST(Ammann, UnbrokenOnTori) {
  for (int i = 1; i <= 4; ++i) {
    Tiling t = build_ab_torus(i);
    LineSet ls = ammann_lines(t);
    EXPECT_TRUE(ls.unbroken()) << i;
    for (const auto &l : ls.lines) EXPECT_TRUE(l.closed);
    EXPECT_TRUE(check_matching(torus_level(i, 1)).ok());
  }
}

TEST(Ammann, MismatchedTilesDetected) {
  for (Flavor f : {Flavor::Penrose, Flavor::AmmannBeenker}) {
    Tiling t = f == Flavor::Penrose ? inflate(penrose_wheel(), 2) : inflate(single_tile(TileKind::Rhombus), 2);
    ASSERT_TRUE(check_matching(t).ok());
    // flip an interior split tile
    std::size_t best = 0, best_shared = 0;
    for (std::size_t k = 0; k < t.tiles.size(); ++k) {
      if (!is_split(t.tiles[k].kind)) continue;
      Tiling probe = t;
      probe.tiles[k] = reversed(f, t.tiles[k]);
      probe.canonicalize();
      std::size_t shared = check_arrows(probe).mismatched;
      if (shared > best_shared) best = k, best_shared = shared;
    }
    Tiling bad = t;
    bad.tiles[best] = reversed(f, t.tiles[best]);
    bad.canonicalize();
    MatchingReport m = check_matching(bad);
    EXPECT_FALSE(m.ok());
    EXPECT_GT(m.arrows.mismatched, 0u);
  }
}

TEST(Ammann, ReconstructPatches) {
  Tiling wheel = inflate(penrose_wheel(), 3);
  EXPECT_EQ(reconstruct(ammann_lines(wheel)).tiles, wheel.tiles);
  Tiling thick = inflate(single_tile(TileKind::Thick), 3);
  EXPECT_EQ(reconstruct(ammann_lines(thick)).tiles, thick.tiles);
  Tiling ab = inflate(single_tile(TileKind::Square, 2), 3);
  EXPECT_EQ(reconstruct(ammann_lines(ab)).tiles, ab.tiles);
}

TEST(Ammann, ReconstructTori) {
  for (int i = 1; i <= 4; ++i) {
    for (unsigned n : {0u, 2u}) {
      Tiling t = torus_level(i, n);
      EXPECT_EQ(reconstruct(ammann_lines(t)), t) << i << " " << n;
    }
  }
  Tiling t3 = torus_level(2, 3);
  EXPECT_EQ(reconstruct(ammann_lines(t3)), t3);
}

TEST(Ammann, ReconstructRejectsBadInput) {
  EXPECT_THROW(reconstruct(LineSet{}), std::invalid_argument);
  LineSet ls = ammann_lines(build_ab_torus(1));
  ls.lines.pop_back();
  EXPECT_THROW(reconstruct(ls), std::invalid_argument);
}

TEST(Ammann, LinePeriods) {
  Tiling t = build_ab_torus(1);
  for (int k : line_directions(Flavor::AmmannBeenker)) {
    LinePeriod p = line_period(*t.periods, k);
    EXPECT_TRUE(p.closes) << k;
    EXPECT_GT(p.offset_period.sign(), 0);
    EXPECT_GT(p.along_period.sign(), 0);
  }
  EXPECT_EQ(floor_ratio(Fx{16, 0, 0}, Fx{5, 0, 0}), 3);
  EXPECT_EQ(floor_ratio(Fx{-16, 0, 0}, Fx{5, 0, 0}), -4);
  EXPECT_EQ(floor_ratio(Fx{0, 16, 5}, Fx{16, 0, 5}), 2);
}

TEST(Ammann, SpacingLaw) {
  std::vector<SpacingReport> reps = spacing_law(ammann_lines(inflate(penrose_wheel(), 5)));
  ASSERT_EQ(reps.size(), 5u);
  for (const auto &r : reps) {
    EXPECT_TRUE(r.two_lengths);
    EXPECT_TRUE(r.golden_ratio);
    EXPECT_TRUE(r.legal) << r.word;
    EXPECT_GT(r.word.size(), 5u);
  }
}

TEST(AbTorus, Layouts) {
  for (int i = 1; i <= 4; ++i) {
    AbTorusReport r = validate_ab_torus(i);
    EXPECT_TRUE(r.ok()) << i;
    EXPECT_EQ(r.tiles, 16u);
    EXPECT_EQ(r.orientation_counts, (std::array<int, 4>{4, 4, 4, 4}));
  }
  EXPECT_THROW(build_ab_torus(5), std::out_of_range);
}

TEST(AbTorus, EdgeClassTable) {
  auto row = [](int i) {
    EdgeClassCensus c = edge_class_census(build_ab_torus(i));
    std::array<int, 8> out{};
    for (int col = 0; col < 8; ++col) {
      EXPECT_EQ(c.counts[col][0], c.counts[col][1]);
      out[col] = c.counts[col][0];
    }
    return out;
  };
  EXPECT_EQ(row(1), (std::array<int, 8>{2, 2, 2, 2, 2, 2, 2, 2}));
  EXPECT_EQ(row(2), (std::array<int, 8>{0, 4, 0, 4, 0, 4, 0, 4}));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(row(i), edge_class_table()[i - 1]);
  EXPECT_TRUE(same_edge_class(EdgeClass{2, 1, 1}, EdgeClass{6, 1, 1}));
}

TEST(Census, Atlases) {
  Atlas pen = vertex_atlas(Flavor::Penrose);
  EXPECT_EQ(pen.classes.size(), 7u);
  EXPECT_EQ(vertex_atlas(Flavor::Penrose, VertexDetail::Decorated).classes.size(), 8u);
  Atlas ab = vertex_atlas(Flavor::AmmannBeenker);
  EXPECT_EQ(ab.classes.size(), 6u);
  VertexCensus wheel = vertex_census(inflate(penrose_wheel(), 4));
  for (const auto &[k, n] : wheel) EXPECT_TRUE(pen.classes.count(k)) << k;
}

TEST(Census, TorusCensusesAgree) {
  VertexCensus first = vertex_census(torus_level(1, 2));
  for (int i = 2; i <= 4; ++i) EXPECT_EQ(vertex_census(torus_level(i, 2)), first);
  std::size_t total = 0;
  for (const auto &[k, n] : first) total += n;
  EXPECT_EQ(total, 656u);
}

TEST(Census, SupervertexTypes) {
  EXPECT_EQ(supervertex_type(Point{}, 0), 3);
  // superedges already agree at level 1
  VertexCensus e1 = vertex_census_of_type(torus_level(1, 1), 1, 2);
  for (int i = 2; i <= 4; ++i) EXPECT_EQ(vertex_census_of_type(torus_level(i, 1), 1, 2), e1);
  EXPECT_FALSE(e1.empty());
}

TEST(Census, DiskProbe) {
  DiskProbeReport r = disk_probe(2, 0.5);
  EXPECT_TRUE(r.independent);
  EXPECT_EQ(r.disks[0], r.disks[3]);
  EXPECT_THROW(disk_probe(2, 100.0), std::domain_error);
  EXPECT_THROW(disk_probe(2, -1.0), std::domain_error);
}

TEST(TilingIo, JsonRoundTrip) {
  for (const Tiling &t : {inflate(penrose_wheel(), 2), torus_level(3, 1), inflate(single_tile(TileKind::Square), 1)}) {
    EXPECT_EQ(tiling_from_json(to_json(t)), t);
  }
  EXPECT_THROW(tiling_from_json("{}"), std::invalid_argument);
  EXPECT_THROW(tiling_from_json("not json"), std::invalid_argument);
}

TEST(TilingIo, Svg) {
  std::string svg = render_svg(inflate(penrose_wheel(), 1), parse_layers("tiles,ammann"));
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.find("<svg") != std::string::npos, true);
  EXPECT_NE(svg.find("id=\"tiles\""), std::string::npos);
  EXPECT_NE(svg.find("id=\"ammann\""), std::string::npos);
  EXPECT_EQ(svg.find("id=\"arrows\""), std::string::npos);
  EXPECT_THROW(parse_layers("tiles,colour"), std::invalid_argument);
}

}  // namespace
}  // namespace tilecode
