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

#include <set>
#include <string>

#include "tilecode/tiling.hpp"

namespace tilecode {

// JSON document:
//   {"format": "tilecode-tiling", "flavor": "penrose", "scale": 1,
//    "periods": null | [[c0,c1,c2,c3], [c0,c1,c2,c3]],
//    "tiles": [{"kind": "thick", "orientation": 3, "anchor": [c0,c1,c2,c3]}],
//    "halves": [{"kind": ..., "orientation": ..., "side": 1, "anchor": ...}]}
// Coordinates are integer vectors over 1, zeta, zeta^2, zeta^3; edges have
// unit length, so scale is always 1.
std::string to_json(const Tiling &t);
// Throws std::invalid_argument on malformed input.
Tiling tiling_from_json(const std::string &text);

void save_tiling(const Tiling &t, const std::string &path);
// Also throws std::invalid_argument when the file cannot be read.
Tiling load_tiling(const std::string &path);

enum class Layer { Tiles, Arrows, Ammann };
std::set<Layer> parse_layers(const std::string &csv);  // "tiles,arrows,ammann"
std::string render_svg(const Tiling &t, const std::set<Layer> &layers);

}  // namespace tilecode
