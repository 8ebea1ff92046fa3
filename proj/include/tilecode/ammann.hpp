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

#include <cstddef>
#include <optional>
#include <vector>

#include "tilecode/cyclotomic.hpp"
#include "tilecode/fibonacci.hpp"
#include "tilecode/tiling.hpp"

namespace tilecode {

// Straight line {p : Im(e^{-i k alpha} p) = offset}, alpha = pi/10 (Penrose,
// k odd) or pi/4 (AB), with k in [0, half_turn_units). begin/end are along-line
// coordinates of the covered stretch; closed lines on a torus span [0, period).
struct AmmannLine {
  int direction = 0;
  Fx offset;
  Fx begin, end;
  bool closed = false;
  friend bool operator==(const AmmannLine &, const AmmannLine &) = default;
};

// One bar: the part of an Ammann line inside a single tile.
struct Bar {
  int direction = 0;
  Fx offset;
  Fx begin, end;
};

std::vector<Bar> bars(Flavor f, const Tile &t);
// The pieces of the whole tile's bars inside one half.
std::vector<Bar> bars(Flavor f, const HalfTile &h);
// Line directions that occur for a flavor (5 Penrose classes, 4 AB classes).
std::vector<int> line_directions(Flavor f);

struct LineSet {
  Flavor flavor = Flavor::Penrose;
  std::optional<Lattice> periods;
  std::vector<AmmannLine> lines;  // sorted by direction, offset, begin
  // Patch: holes between consecutive bars on one line. Torus: uncovered
  // stretches of a closed line.
  std::size_t gaps = 0;
  // Torus directions whose lines never close (incommensurate periods).
  std::size_t unclosed = 0;
  bool unbroken() const { return gaps == 0 && unclosed == 0; }
  std::size_t direction_classes() const;
};

// Bars of every tile and loose half, merged along each line.
LineSet ammann_lines(const Tiling &t);

struct MatchingReport {
  ArrowReport arrows;
  std::size_t gaps = 0;
  std::size_t unclosed = 0;
  bool ok() const { return arrows.ok() && gaps == 0 && unclosed == 0; }
};
MatchingReport check_matching(const Tiling &t);

// Rebuilds the whole tiles from their Ammann lines: candidate tiles are
// solved exactly from pairs of lines and kept when the lines crossing them
// are exactly their own bars. Throws std::invalid_argument on an empty or
// inconsistent line set.
Tiling reconstruct(const LineSet &lines);

struct SpacingReport {
  int direction = 0;
  std::size_t lines = 0;
  Fx long_gap, short_gap;
  bool two_lengths = false;
  bool golden_ratio = false;  // long = golden ratio * short, exactly
  Bits word;                  // long -> 1, short -> 0
  bool legal = false;
};
std::vector<SpacingReport> spacing_law(const LineSet &lines);

// Offset and along-line period of the closed lines in direction k on a torus.
struct LinePeriod {
  bool closes = false;
  Fx offset_period;
  Fx along_period;
  Point offset_step;  // lattice vector moving the offset by offset_period
};
LinePeriod line_period(const Lattice &lat, int k);

// floor(x / y) for y != 0.
std::int64_t floor_ratio(const Fx &x, const Fx &y);

}  // namespace tilecode
