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
#include <map>
#include <set>
#include <string>

#include "tilecode/tiling.hpp"

namespace tilecode {

// A vertex configuration is written as the counterclockwise cycle of tile
// corners around the centre, rotated to the lexicographically least starting
// corner. Only rotations are identified.
//   Shape:     kind:angle, angle in zeta steps (thick:2, thin:4, ...).
//   Decorated: kind:role, roles B, A-, C, A+ for split kinds and
//              acute/obtuse for the AB rhombus. Tells the Penrose sun from
//              the star, which Shape does not.
enum class VertexDetail { Shape, Decorated };
using VertexCensus = std::map<std::string, std::size_t>;

// Complete vertices only (corners of whole tiles filling the full turn).
VertexCensus vertex_census(const Tiling &t, VertexDetail detail = VertexDetail::Shape);

struct Atlas {
  Flavor flavor = Flavor::Penrose;
  VertexDetail detail = VertexDetail::Shape;
  std::set<std::string> classes;
  unsigned depth = 0;  // inflation depth at which the set stopped growing
};
// Vertex classes seen in inflations of every single tile, stopping once two
// consecutive depths add nothing.
Atlas vertex_atlas(Flavor f, VertexDetail detail = VertexDetail::Shape, unsigned max_depth = 8);

// Position of an A_i^(level) vertex relative to the supersquares of A_i^(0):
// 1 inside a supersquare, 2 inside a superedge, 3 at a supercorner.
int supervertex_type(const Point &v, unsigned level);
VertexCensus vertex_census_of_type(const Tiling &t, unsigned level, int type,
                                   VertexDetail detail = VertexDetail::Shape);

struct DiskProbeReport {
  unsigned level = 0;
  double radius = 0;
  std::array<std::size_t, 4> disks{};  // vertex-centred disks per i
  std::size_t classes = 0;             // distinct patterns over all i
  bool independent = false;            // every pattern count agrees across i
};
// Tiles meeting the open disk of radius r around each vertex of A_i^(n),
// canonicalized under the 8 rotations. Throws std::domain_error when the
// disk would wrap around the torus.
DiskProbeReport disk_probe(unsigned n, double radius);

struct R2Estimate {
  double r2 = 0;
  double step = 0;
  std::size_t samples = 0;
};
// Largest r such that every sampled disk of radius r in A_1^(2) lies inside
// the star of one vertex (tiles touching it). Grid sampling with the given
// step, so the value is an upper estimate.
R2Estimate estimate_r2(double step = 0.05);

}  // namespace tilecode
