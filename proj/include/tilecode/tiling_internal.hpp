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

// Shared helpers for the tiling sources; not part of the public API.

#include <optional>
#include <utility>
#include <vector>

#include "tilecode/tiling.hpp"

namespace tilecode::detail {

// A half tile (split kinds) or a whole AB rhombus (side 0).
struct Unit {
  TileKind kind = TileKind::Thick;
  int orientation = 0;
  int side = 0;
  Point anchor;
  friend bool operator==(const Unit &, const Unit &) = default;
  friend auto operator<=>(const Unit &, const Unit &) = default;
};

struct UnitHash {
  std::size_t operator()(const Unit &u) const;
};

// Undirected edge key, stable under period translations.
std::pair<Point, Point> edge_key(const std::optional<Lattice> &lat, const Point &p, const Point &q);
Unit canonical_unit(Flavor f, const std::optional<Lattice> &lat, Unit u);
std::vector<Unit> units_of(const Tiling &t);
void inflate_unit(Flavor f, const Unit &u, std::vector<Unit> &out);

struct EdgeLabel {
  Point tail, head;
  int type;
};
std::vector<EdgeLabel> edge_labels(Flavor f, const Tile &t);
std::vector<EdgeLabel> edge_labels(Flavor f, const HalfTile &h);

}  // namespace tilecode::detail
