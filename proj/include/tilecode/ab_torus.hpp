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
#include <string>

#include "tilecode/tiling.hpp"

namespace tilecode {

// Column orientations (R/L, left to right) and row orientations (U/D, bottom
// to top) of the 4x4 square grid. The square in column j, row i points its
// diagonal arrow along zeta^d with R+U -> 1, L+U -> 3, L+D -> 5, R+D -> 7.
struct AbTorusLayout {
  std::string columns, rows;
};
AbTorusLayout ab_torus_layout(int i);  // i in 1..4

// A_i^(0): 16 unit squares on the torus with periods 4 and 4*zeta^2.
Tiling build_ab_torus(int i);
// A_i^(n) = A_i^(0) inflated n times.
Tiling torus_level(int i, unsigned n);

// Edge between two squares, seen along `direction` (zeta index) with square
// orientations `left` and `right`. The same edge read backwards is
// (direction + 4, right, left).
struct EdgeClass {
  int direction = 0, left = 0, right = 0;
  friend bool operator==(const EdgeClass &, const EdgeClass &) = default;
};
bool same_edge_class(const EdgeClass &a, const EdgeClass &b);

// The 16 classes grouped in the 8 table columns, two per column.
const std::array<std::array<EdgeClass, 2>, 8> &edge_class_columns();
// Expected count of each class in a column, rows i = 1..4.
const std::array<std::array<int, 8>, 4> &edge_class_table();

struct EdgeClassCensus {
  std::array<std::array<int, 2>, 8> counts{};
  std::size_t square_edges = 0;  // edges between two squares
  std::size_t other_edges = 0;   // edges touching a rhombus
};
EdgeClassCensus edge_class_census(const Tiling &t);

struct AbTorusReport {
  int index = 0;
  std::size_t tiles = 0, edges = 0;
  std::array<int, 4> orientation_counts{};  // orientations 1, 3, 5, 7
  bool arrows_ok = false;
  bool lines_unbroken = false;
  bool equal_frequencies = false;
  bool table_match = false;
  EdgeClassCensus census;
  bool ok() const { return arrows_ok && lines_unbroken && equal_frequencies && table_match && edges == 32; }
};
AbTorusReport validate_ab_torus(int i);

}  // namespace tilecode
