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

#include "tilecode/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tilecode/ab_torus.hpp"
#include "tilecode/tiling_internal.hpp"

namespace tilecode {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

const char *role(TileKind k, int corner) {
  if (k == TileKind::Rhombus) return corner % 2 == 0 ? "acute" : "obtuse";
  static const char *names[] = {"B", "A-", "C", "A+"};
  return names[corner];
}

struct Corner {
  int start = 0, span = 0;
  TileKind kind;
  int index;  // vertex number in counterclockwise order
};

std::string least_rotation(const std::vector<std::string> &cycle) {
  std::string best;
  for (std::size_t s = 0; s < cycle.size(); ++s) {
    std::string cur;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) cur += ',';
      cur += cycle[(s + i) % cycle.size()];
    }
    if (s == 0 || cur < best) best = cur;
  }
  return best;
}

std::map<Point, std::vector<Corner>> corners_by_vertex(const Tiling &t) {
  const Flavor f = t.flavor;
  const int full = turn(f);
  std::map<Point, std::vector<Corner>> out;
  for (const auto &tile : t.tiles) {
    auto v = vertices(f, tile);
    for (int k = 0; k < 4; ++k) {
      int a = unit_index(f, v[(k + 1) % 4] - v[k]);
      int b = unit_index(f, v[(k + 3) % 4] - v[k]);
      Point key = t.periods ? t.periods->reduce(v[k]) : v[k];
      out[key].push_back(Corner{a, mod(b - a, full), tile.kind, k});
    }
  }
  return out;
}

std::optional<std::string> classify(Flavor f, std::vector<Corner> cs, VertexDetail detail) {
  int total = 0;
  for (const auto &c : cs) total += c.span;
  if (total != turn(f)) return std::nullopt;
  std::sort(cs.begin(), cs.end(), [](const Corner &x, const Corner &y) { return x.start < y.start; });
  std::vector<std::string> cycle;
  for (const auto &c : cs) {
    std::string token = std::string(to_string(c.kind)) + ":";
    token += detail == VertexDetail::Shape ? std::to_string(c.span) : role(c.kind, c.index);
    cycle.push_back(token);
  }
  return least_rotation(cycle);
}

}  // namespace

VertexCensus vertex_census(const Tiling &t, VertexDetail detail) {
  VertexCensus out;
  for (const auto &[v, cs] : corners_by_vertex(t)) {
    if (auto c = classify(t.flavor, cs, detail)) ++out[*c];
  }
  return out;
}

Atlas vertex_atlas(Flavor f, VertexDetail detail, unsigned max_depth) {
  std::vector<Tiling> seeds;
  if (f == Flavor::Penrose) {
    seeds = {single_tile(TileKind::Thick), single_tile(TileKind::Thin)};
  } else {
    seeds = {single_tile(TileKind::Square, 1), single_tile(TileKind::Rhombus)};
  }
  Atlas atlas;
  atlas.flavor = f;
  atlas.detail = detail;
  unsigned quiet = 0;
  for (unsigned depth = 1; depth <= max_depth && quiet < 2; ++depth) {
    std::size_t before = atlas.classes.size();
    for (auto &s : seeds) {
      s = inflate(s);
      for (const auto &[c, n] : vertex_census(s, detail)) atlas.classes.insert(c);
    }
    atlas.depth = depth;
    quiet = atlas.classes.size() == before ? quiet + 1 : 0;
  }
  return atlas;
}

int supervertex_type(const Point &v, unsigned level) {
  const Flavor f = Flavor::AmmannBeenker;
  Point w = v;
  for (unsigned i = 0; i < level; ++i) w = mul(f, inflation_inverse(f), w);
  // x = c0 + (c1 - c3)/sqrt2, y = c2 + (c1 + c3)/sqrt2; grid lines are x or y
  // integer.
  bool on_vertical = w.c[1] == w.c[3];
  bool on_horizontal = w.c[1] == -w.c[3];
  return 1 + static_cast<int>(on_vertical) + static_cast<int>(on_horizontal);
}

VertexCensus vertex_census_of_type(const Tiling &t, unsigned level, int type, VertexDetail detail) {
  VertexCensus out;
  for (const auto &[v, cs] : corners_by_vertex(t)) {
    if (supervertex_type(v, level) != type) continue;
    if (auto c = classify(t.flavor, cs, detail)) ++out[*c];
  }
  return out;
}

namespace {

using XY = std::array<double, 2>;

double seg_dist(const XY &p, const XY &a, const XY &b) {
  double dx = b[0] - a[0], dy = b[1] - a[1];
  double t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / (dx * dx + dy * dy);
  t = std::clamp(t, 0.0, 1.0);
  double ex = a[0] + t * dx - p[0], ey = a[1] + t * dy - p[1];
  return std::sqrt(ex * ex + ey * ey);
}

bool inside(const XY &p, const std::array<XY, 4> &poly) {
  for (int i = 0; i < 4; ++i) {
    const XY &a = poly[i], &b = poly[(i + 1) % 4];
    if ((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < 0) return false;
  }
  return true;
}

double poly_dist(const XY &p, const std::array<XY, 4> &poly) {
  if (inside(p, poly)) return 0;
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) d = std::min(d, seg_dist(p, poly[i], poly[(i + 1) % 4]));
  return d;
}

// Tiles of a torus with their nine nearest copies, bucketed by anchor.
struct TorusGrid {
  Flavor f;
  const Tiling *t;
  double cell;
  std::vector<Point> shifts;
  std::map<std::pair<long, long>, std::vector<std::pair<std::size_t, std::size_t>>> buckets;

  TorusGrid(const Tiling &tiling, double cell_size) : f(tiling.flavor), t(&tiling), cell(cell_size) {
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) shifts.push_back(tiling.periods->p1().scaled(a) + tiling.periods->p2().scaled(b));
    }
    for (std::size_t i = 0; i < tiling.tiles.size(); ++i) {
      for (std::size_t s = 0; s < shifts.size(); ++s) buckets[key(to_xy(f, tiling.tiles[i].anchor + shifts[s]))].push_back({i, s});
    }
  }
  std::pair<long, long> key(const XY &p) const {
    return {static_cast<long>(std::floor(p[0] / cell)), static_cast<long>(std::floor(p[1] / cell))};
  }
  // Calls fn(tile translated into place) for every copy whose anchor is within
  // reach of p.
  template <class Fn>
  void near(const XY &p, double reach, Fn fn) const {
    auto [cx, cy] = key(p);
    long span = static_cast<long>(std::ceil(reach / cell));
    for (long dx = -span; dx <= span; ++dx) {
      for (long dy = -span; dy <= span; ++dy) {
        auto it = buckets.find({cx + dx, cy + dy});
        if (it == buckets.end()) continue;
        for (const auto &[i, s] : it->second) {
          Tile tile = t->tiles[i];
          tile.anchor += shifts[s];
          fn(tile);
        }
      }
    }
  }
};

double shortest_period(const Lattice &lat) {
  auto len = [&](const Point &p) {
    auto xy = to_xy(lat.flavor(), p);
    return std::hypot(xy[0], xy[1]);
  };
  return std::min(len(lat.p1()), len(lat.p2()));
}

std::array<XY, 4> xy_poly(Flavor f, const Tile &t) {
  auto v = vertices(f, t);
  std::array<XY, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = to_xy(f, v[i]);
  return out;
}

}  // namespace

DiskProbeReport disk_probe(unsigned n, double radius) {
  if (radius <= 0) throw std::domain_error("disk radius must be positive");
  const Flavor f = Flavor::AmmannBeenker;
  DiskProbeReport r;
  r.level = n;
  r.radius = radius;
  std::array<std::map<std::vector<Tile>, std::size_t>, 4> counts;
  for (int i = 1; i <= 4; ++i) {
    Tiling t = torus_level(i, n);
    if (2 * radius >= shortest_period(*t.periods)) throw std::domain_error("disk wraps around the torus");
    TorusGrid grid(t, 4.0);
    for (const auto &[v, cs] : corners_by_vertex(t)) {
      XY c = to_xy(f, v);
      std::vector<Tile> patch;
      grid.near(c, radius + 4.0, [&](const Tile &tile) {
        if (poly_dist(c, xy_poly(f, tile)) < radius) patch.push_back(tile);
      });
      std::vector<Tile> best;
      for (int j = 0; j < turn(f); ++j) {
        std::vector<Tile> cur;
        for (const auto &tile : patch) {
          cur.push_back(canonical(f, Tile{tile.kind, tile.orientation + j, rotate(f, tile.anchor - v, j)}));
        }
        std::sort(cur.begin(), cur.end());
        if (j == 0 || cur < best) best = std::move(cur);
      }
      ++counts[i - 1][best];
      ++r.disks[i - 1];
    }
  }
  std::set<std::vector<Tile>> all;
  for (const auto &c : counts) {
    for (const auto &[k, m] : c) all.insert(k);
  }
  r.classes = all.size();
  r.independent = counts[0] == counts[1] && counts[0] == counts[2] && counts[0] == counts[3];
  return r;
}

R2Estimate estimate_r2(double step) {
  const Flavor f = Flavor::AmmannBeenker;
  Tiling t = torus_level(1, 2);
  TorusGrid grid(t, 4.0);
  auto corners = corners_by_vertex(t);
  // Boundary of each vertex star: edges used by exactly one of its tiles.
  struct Star {
    XY centre;
    std::vector<std::array<XY, 4>> tiles;
    std::vector<std::pair<XY, XY>> boundary;
  };
  std::vector<Star> stars;
  std::map<std::pair<long, long>, std::vector<std::size_t>> star_buckets;
  for (const auto &[v, cs] : corners) {
    XY c = to_xy(f, v);
    Star s{c, {}, {}};
    std::map<std::pair<Point, Point>, int> uses;
    std::vector<std::array<Point, 4>> polys;
    grid.near(c, 4.0, [&](const Tile &tile) {
      auto pv = vertices(f, tile);
      if (std::find(pv.begin(), pv.end(), v) == pv.end()) return;
      polys.push_back(pv);
      s.tiles.push_back(xy_poly(f, tile));
      for (int k = 0; k < 4; ++k) ++uses[detail::edge_key(std::nullopt, pv[k], pv[(k + 1) % 4])];
    });
    for (const auto &pv : polys) {
      for (int k = 0; k < 4; ++k) {
        if (uses[detail::edge_key(std::nullopt, pv[k], pv[(k + 1) % 4])] == 1) {
          s.boundary.push_back({to_xy(f, pv[k]), to_xy(f, pv[(k + 1) % 4])});
        }
      }
    }
    star_buckets[{static_cast<long>(std::floor(c[0] / 4.0)), static_cast<long>(std::floor(c[1] / 4.0))}].push_back(
        stars.size());
    stars.push_back(std::move(s));
  }
  // Vertices were reduced into the fundamental cell; sample that cell and
  // look up stars with all nine torus shifts.
  std::vector<XY> shift_xy;
  for (const auto &p : grid.shifts) shift_xy.push_back(to_xy(f, p));
  XY e1 = to_xy(f, t.periods->p1()), e2 = to_xy(f, t.periods->p2());
  R2Estimate est;
  est.step = step;
  est.r2 = std::numeric_limits<double>::infinity();
  const long steps = static_cast<long>(std::ceil(1.0 / step * std::hypot(e1[0], e1[1])));
  for (long a = 0; a < steps; ++a) {
    for (long b = 0; b < steps; ++b) {
      double u = static_cast<double>(a) / steps, w = static_cast<double>(b) / steps;
      XY p{u * e1[0] + w * e2[0], u * e1[1] + w * e2[1]};
      double best = 0;
      for (const auto &sh : shift_xy) {
        XY q{p[0] - sh[0], p[1] - sh[1]};
        long cx = static_cast<long>(std::floor(q[0] / 4.0)), cy = static_cast<long>(std::floor(q[1] / 4.0));
        for (long dx = -1; dx <= 1; ++dx) {
          for (long dy = -1; dy <= 1; ++dy) {
            auto it = star_buckets.find({cx + dx, cy + dy});
            if (it == star_buckets.end()) continue;
            for (std::size_t si : it->second) {
              const Star &s = stars[si];
              bool in = false;
              for (const auto &poly : s.tiles) in = in || inside(q, poly);
              if (!in) continue;
              double d = std::numeric_limits<double>::infinity();
              for (const auto &[x, y] : s.boundary) d = std::min(d, seg_dist(q, x, y));
              best = std::max(best, d);
            }
          }
        }
      }
      est.r2 = std::min(est.r2, best);
      ++est.samples;
    }
  }
  return est;
}

}  // namespace tilecode
