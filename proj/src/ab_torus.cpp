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

#include "tilecode/ab_torus.hpp"

#include <map>
#include <stdexcept>
#include <vector>

#include "tilecode/ammann.hpp"
#include "tilecode/tiling_internal.hpp"

namespace tilecode {

namespace {

Point grid_point(std::int64_t x, std::int64_t y) { return Point{{x, 0, y, 0}}; }

}  // namespace

AbTorusLayout ab_torus_layout(int i) {
  switch (i) {
    case 1: return {"RRLL", "UUDD"};
    case 2: return {"RLRL", "UDUD"};
    case 3: return {"RRLL", "UDUD"};
    case 4: return {"RLRL", "UUDD"};
    default: throw std::out_of_range("A_i torus index must be 1..4");
  }
}

Tiling build_ab_torus(int i) {
  const AbTorusLayout layout = ab_torus_layout(i);
  Tiling t;
  t.flavor = Flavor::AmmannBeenker;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      bool right = layout.columns[col] == 'R', up = layout.rows[row] == 'U';
      int d;
      Point b;
      if (right && up) {
        d = 1;
        b = grid_point(col, row);
      } else if (!right && up) {
        d = 3;
        b = grid_point(col + 1, row);
      } else if (!right) {
        d = 5;
        b = grid_point(col + 1, row + 1);
      } else {
        d = 7;
        b = grid_point(col, row + 1);
      }
      t.tiles.push_back(Tile{TileKind::Square, d, b});
    }
  }
  t.periods = Lattice(t.flavor, grid_point(4, 0), grid_point(0, 4));
  t.canonicalize();
  return t;
}

Tiling torus_level(int i, unsigned n) { return inflate(build_ab_torus(i), n); }

bool same_edge_class(const EdgeClass &a, const EdgeClass &b) {
  return a == b || (a.direction == (b.direction + 4) % 8 && a.left == b.right && a.right == b.left);
}

const std::array<std::array<EdgeClass, 2>, 8> &edge_class_columns() {
  static const std::array<std::array<EdgeClass, 2>, 8> cols = {{
      {{{2, 1, 1}, {2, 3, 3}}},
      {{{2, 1, 3}, {2, 3, 1}}},
      {{{6, 7, 7}, {6, 5, 5}}},
      {{{6, 7, 5}, {6, 5, 7}}},
      {{{0, 1, 1}, {0, 7, 7}}},
      {{{0, 1, 7}, {0, 7, 1}}},
      {{{4, 3, 3}, {4, 5, 5}}},
      {{{4, 3, 5}, {4, 5, 3}}},
  }};
  return cols;
}

const std::array<std::array<int, 8>, 4> &edge_class_table() {
  static const std::array<std::array<int, 8>, 4> rows = {{
      {2, 2, 2, 2, 2, 2, 2, 2},
      {0, 4, 0, 4, 0, 4, 0, 4},
      {2, 2, 2, 2, 0, 4, 0, 4},
      {0, 4, 0, 4, 2, 2, 2, 2},
  }};
  return rows;
}

EdgeClassCensus edge_class_census(const Tiling &t) {
  const Flavor f = t.flavor;
  // Each tile sees its own edges counterclockwise, so it is on their left.
  std::map<std::pair<Point, Point>, std::vector<std::pair<int, const Tile *>>> sides;
  for (const auto &tile : t.tiles) {
    auto v = vertices(f, tile);
    for (int k = 0; k < 4; ++k) {
      const Point &p = v[k], &q = v[(k + 1) % 4];
      sides[detail::edge_key(t.periods, p, q)].push_back({unit_index(f, q - p), &tile});
    }
  }
  EdgeClassCensus c;
  const auto &cols = edge_class_columns();
  for (const auto &[key, s] : sides) {
    if (s.size() != 2) continue;
    if (s[0].second->kind != TileKind::Square || s[1].second->kind != TileKind::Square) {
      ++c.other_edges;
      continue;
    }
    ++c.square_edges;
    EdgeClass e{s[0].first, s[0].second->orientation, s[1].second->orientation};
    for (std::size_t col = 0; col < cols.size(); ++col) {
      for (int m = 0; m < 2; ++m) {
        if (same_edge_class(e, cols[col][m])) ++c.counts[col][m];
      }
    }
  }
  return c;
}

AbTorusReport validate_ab_torus(int i) {
  const Tiling t = build_ab_torus(i);
  AbTorusReport r;
  r.index = i;
  r.tiles = t.tiles.size();
  for (const auto &tile : t.tiles) {
    if (tile.kind == TileKind::Square && tile.orientation % 2 == 1) ++r.orientation_counts[tile.orientation / 2];
  }
  r.equal_frequencies = r.orientation_counts == std::array<int, 4>{4, 4, 4, 4};
  ArrowReport arrows = check_arrows(t);
  r.arrows_ok = arrows.ok() && arrows.shared == arrows.edges;
  r.edges = arrows.edges;
  LineSet lines = ammann_lines(t);
  r.lines_unbroken = lines.unbroken();
  r.census = edge_class_census(t);
  r.table_match = r.census.square_edges == 32;
  const auto &row = edge_class_table()[i - 1];
  for (int col = 0; col < 8; ++col) {
    for (int m = 0; m < 2; ++m) r.table_match = r.table_match && r.census.counts[col][m] == row[col];
  }
  return r;
}

}  // namespace tilecode
