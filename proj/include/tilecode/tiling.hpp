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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tilecode/cyclotomic.hpp"

namespace tilecode {

enum class TileKind { Thick, Thin, Square, Rhombus };

const char *to_string(TileKind k);
TileKind parse_tile_kind(const std::string &s);
Flavor flavor_of(TileKind k);
// Index into count vectors: thick/square = 0, thin/rhombus = 1.
int kind_index(TileKind k);
// Thick, thin and square carry an arrow along a diagonal and are stored as
// two mirror halves during inflation; the AB rhombus is never split.
bool is_split(TileKind k);

// Split kinds: B is the tail of the diagonal arrow, C = B + zeta^(m-k) +
// zeta^(m+k) its head, A_s = B + zeta^(m + s*k) with k = 1 (thick, square) or
// 2 (thin). AB rhombus: acute corner at the anchor O, edges zeta^m and
// zeta^(m+1); m is kept in 0..3.
struct Tile {
  TileKind kind = TileKind::Thick;
  int orientation = 0;
  Point anchor;
  friend bool operator==(const Tile &, const Tile &) = default;
  friend auto operator<=>(const Tile &, const Tile &) = default;
};

// Triangle (A_s, B, C) of a split tile.
struct HalfTile {
  TileKind kind = TileKind::Thick;
  int orientation = 0;
  int side = 1;  // +1 or -1
  Point anchor;
  friend bool operator==(const HalfTile &, const HalfTile &) = default;
  friend auto operator<=>(const HalfTile &, const HalfTile &) = default;
};

class MergeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IllegalTilingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tiling {
  Flavor flavor = Flavor::Penrose;
  std::vector<Tile> tiles;
  // Halves whose mate is missing (only at the boundary of a finite patch).
  std::vector<HalfTile> halves;
  std::optional<Lattice> periods;
  // Sorts, reduces anchors modulo the periods and canonicalizes rhombi.
  void canonicalize();
  bool is_torus() const { return periods.has_value(); }
  friend bool operator==(const Tiling &a, const Tiling &b);
};

int diagonal_step(TileKind k);
// Vertices in counterclockwise order: B, A-, C, A+ (split kinds) or
// O, O+e1, O+e1+e2, O+e2 (rhombus).
std::array<Point, 4> vertices(Flavor f, const Tile &t);
// A, B, C.
std::array<Point, 3> vertices(Flavor f, const HalfTile &h);
std::array<HalfTile, 2> split(const Tile &t);
HalfTile half_from_triangle(Flavor f, TileKind kind, const Point &a, const Point &b, const Point &c);
// Rhombus with acute corner o and edges e1, e1*zeta (both units).
Tile rhombus_from(Flavor f, const Point &o, const Point &e1);
Tile canonical(Flavor f, const Tile &t);

// Merges mate halves into tiles. Throws MergeError on duplicated halves or
// on two non-mate halves sharing a diagonal.
Tiling merge(Flavor f, std::vector<HalfTile> halves, std::vector<Tile> whole,
             std::optional<Lattice> periods);

// Subdivides every tile (rescaled so edges stay unit length) and merges
// halves across parent edges. steps = 0 is the identity.
Tiling inflate(const Tiling &t, unsigned steps = 1);
// Unique parent grouping. Throws IllegalTilingError when no grouping covers
// every tile exactly once.
Tiling deflate(const Tiling &t);

// Tile counts in half-tile units: 2 * whole tiles + loose halves, indexed by
// kind_index. These transform by the substitution matrix under inflation.
std::array<std::int64_t, 2> doubled_counts(const Tiling &t);
// Substitution matrix, column j = offspring of kind j (in the same units).
std::array<std::array<std::int64_t, 2>, 2> inflation_matrix(Flavor f);

Tiling single_tile(TileKind kind, int orientation = 0, const Point &anchor = {});
// Ten thin halves around the origin (a legal decagonal patch).
Tiling penrose_wheel();
// Torus tiled by translates of one rhombus; violates the matching rules.
Tiling periodic_rhombus_torus(TileKind kind);

// Arrow matching across shared edges.
struct ArrowReport {
  std::size_t edges = 0;
  std::size_t shared = 0;
  std::size_t mismatched = 0;
  std::size_t overfull = 0;  // edges claimed by more than two tiles
  bool ok() const { return mismatched == 0 && overfull == 0; }
};
ArrowReport check_arrows(const Tiling &t);

}  // namespace tilecode
