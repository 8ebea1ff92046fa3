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

#include "tilecode/ammann.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "tilecode/tiling_internal.hpp"

namespace tilecode {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

struct LocalLine {
  int k;
  Fx omega;
  Fx t0, t1;
};

// Penrose offsets are (x + y*sqrt5)/8 in the frame B = 0, C - B along +x.
struct PenroseOffset {
  int k, x, y;
};
constexpr PenroseOffset kThickOffsets[] = {{1, -1, 1}, {3, 1, -1}, {5, -1, -3}, {7, 1, -1}, {9, -1, 1}};
constexpr PenroseOffset kThinOffsets[] = {{1, -9, 1}, {3, -1, 1}, {5, 1, -1}, {7, -1, 1}, {9, -9, 1}};

Fx half_of(const Fx &x) {
  if (x.a % 2 != 0 || x.b % 2 != 0) throw std::logic_error("Ammann template offset not representable");
  return Fx{x.a / 2, x.b / 2, x.d};
}

// Along-line interval of the line (k, omega) inside the local tile polygon.
std::optional<std::pair<Fx, Fx>> clip(Flavor f, const std::vector<Point> &poly, int k, const Fx &omega) {
  std::vector<QuadraticValue> hits;
  QuadraticValue w = omega.value();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point &p = poly[i], &q = poly[(i + 1) % n];
    QuadraticValue op = offset_along_normal(f, k, p).value() - w;
    QuadraticValue oq = offset_along_normal(f, k, q).value() - w;
    QuadraticValue ap = along(f, k, p).value(), aq = along(f, k, q).value();
    if (op.sign() == 0) hits.push_back(ap);
    if (op.sign() * oq.sign() < 0) hits.push_back(ap + (aq - ap) * op / (op - oq));
  }
  if (hits.size() < 2) return std::nullopt;
  auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
  if (*lo == *hi) return std::nullopt;
  int d = radicand(f);
  return std::make_pair(Fx::from(*lo, d), Fx::from(*hi, d));
}

// side 0: the whole tile; +-1: that half, keeping the pieces of the whole
// tile's lines that cross it.
std::vector<LocalLine> build_local(TileKind kind, int side) {
  const Flavor f = flavor_of(kind);
  const int d = radicand(f);
  std::vector<Point> poly;
  if (side == 0) {
    auto v = vertices(f, Tile{kind, 0, Point{}});
    poly.assign(v.begin(), v.end());
  } else {
    auto v = vertices(f, HalfTile{kind, 0, side, Point{}});
    poly.assign(v.begin(), v.end());
  }
  std::vector<std::pair<int, Fx>> raw;
  if (kind == TileKind::Thick || kind == TileKind::Thin) {
    for (const auto &o : (kind == TileKind::Thick ? kThickOffsets : kThinOffsets)) {
      raw.push_back({o.k, Fx{2 * o.x, 2 * o.y, d}});
    }
  } else if (kind == TileKind::Rhombus) {
    // Through the centre, perpendicular to each edge direction.
    Point twice_centre = unit(f, 0) + unit(f, 1);
    for (int k : {2, 3}) raw.push_back({k, half_of(offset_along_normal(f, k, twice_centre))});
  } else {
    // Through B + (silver/2) zeta^d, parallel to the edges.
    Point twice_x = inflation_factor(f);
    for (int k : {1, -1}) raw.push_back({k, half_of(offset_along_normal(f, k, twice_x))});
  }
  std::vector<LocalLine> out;
  for (const auto &[k, omega] : raw) {
    auto iv = clip(f, poly, k, omega);
    if (!iv) {
      if (side == 0) throw std::logic_error("Ammann template line misses its tile");
      continue;
    }
    out.push_back(LocalLine{k, omega, iv->first, iv->second});
  }
  return out;
}

const std::vector<LocalLine> &local_lines(TileKind kind, int side = 0) {
  static const auto table = [] {
    std::array<std::array<std::vector<LocalLine>, 3>, 4> t;
    for (TileKind k : {TileKind::Thick, TileKind::Thin, TileKind::Square, TileKind::Rhombus}) {
      for (int s : {-1, 0, 1}) {
        if (s == 0 || is_split(k)) t[static_cast<int>(k)][s + 1] = build_local(k, s);
      }
    }
    return t;
  }();
  return table[static_cast<int>(kind)][side + 1];
}

// Global bar of a local line for a tile with orientation m, anchor B.
Bar place(Flavor f, const LocalLine &l, int m, const Point &anchor) {
  const int h = half_turn_units(f);
  int kraw = l.k + zeta_step(f) * m;
  Fx o = offset_along_normal(f, kraw, anchor) + l.omega;
  Fx a = along(f, kraw, anchor);
  Bar b{mod(kraw, 2 * h), o, a + l.t0, a + l.t1};
  if (b.direction >= h) {
    b.direction -= h;
    b.offset = -o;
    b.begin = -(a + l.t1);
    b.end = -(a + l.t0);
  }
  return b;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t &x, std::int64_t &y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1, y1;
  std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

using Interval = std::pair<Fx, Fx>;

// Number of disjoint covering gaps of [0, period) by the given pieces.
std::size_t coverage_gaps(std::vector<Interval> pieces, const Fx &period) {
  std::sort(pieces.begin(), pieces.end());
  std::size_t gaps = 0;
  Fx reach{0, 0, period.d};
  for (const auto &[b, e] : pieces) {
    if (b > reach) ++gaps;
    if (e > reach) reach = e;
  }
  if (reach < period) ++gaps;
  return gaps;
}

}  // namespace

std::int64_t floor_ratio(const Fx &x, const Fx &y) {
  int d = x.d != 0 ? x.d : (y.d != 0 ? y.d : 2);
  __int128 u = static_cast<__int128>(x.a) * y.a - static_cast<__int128>(d) * x.b * y.b;
  __int128 v = static_cast<__int128>(x.b) * y.a - static_cast<__int128>(x.a) * y.b;
  __int128 den = static_cast<__int128>(y.a) * y.a - static_cast<__int128>(d) * y.b * y.b;
  if (den == 0) throw std::domain_error("floor_ratio: division by zero");
  if (den < 0) {
    u = -u;
    v = -v;
    den = -den;
  }
  return floor_quadratic(static_cast<std::int64_t>(u), static_cast<std::int64_t>(v), d,
                         static_cast<std::int64_t>(den));
}

std::vector<Bar> bars(Flavor f, const Tile &t) {
  std::vector<Bar> out;
  for (const auto &l : local_lines(t.kind)) out.push_back(place(f, l, t.orientation, t.anchor));
  return out;
}

std::vector<Bar> bars(Flavor f, const HalfTile &h) {
  std::vector<Bar> out;
  for (const auto &l : local_lines(h.kind, h.side)) out.push_back(place(f, l, h.orientation, h.anchor));
  return out;
}

std::vector<int> line_directions(Flavor f) {
  if (f == Flavor::Penrose) return {1, 3, 5, 7, 9};
  return {0, 1, 2, 3};
}

std::size_t LineSet::direction_classes() const {
  std::set<int> dirs;
  for (const auto &l : lines) dirs.insert(l.direction);
  return dirs.size();
}

LinePeriod line_period(const Lattice &lat, int k) {
  const Flavor f = lat.flavor();
  LinePeriod r;
  Fx o1 = offset_along_normal(f, k, lat.p1()), o2 = offset_along_normal(f, k, lat.p2());
  Point v, w;
  Fx g;
  if (o1.sign() == 0 && o2.sign() == 0) return r;
  if (o2.sign() == 0) {
    v = lat.p1();
    w = lat.p2();
    g = o1;
  } else if (o1.sign() == 0) {
    v = lat.p2();
    w = lat.p1();
    g = o2;
  } else {
    // o1 / o2 must be rational for the lines to close.
    if (static_cast<__int128>(o1.a) * o2.b != static_cast<__int128>(o2.a) * o1.b) return r;
    std::int64_t p = o2.a != 0 ? o1.a : o1.b, q = o2.a != 0 ? o2.a : o2.b;
    if (q < 0) {
      p = -p;
      q = -q;
    }
    std::int64_t x, y;
    std::int64_t gg = ext_gcd(p < 0 ? -p : p, q, x, y);
    p /= gg;
    q /= gg;
    ext_gcd(p < 0 ? -p : p, q, x, y);
    if (p < 0) x = -x;
    if (o2.a % q != 0 || o2.b % q != 0) return r;
    g = Fx{o2.a / q, o2.b / q, o2.d};
    v = lat.p1().scaled(x) + lat.p2().scaled(y);
    w = lat.p1().scaled(q) - lat.p2().scaled(p);
  }
  if (g.sign() < 0) {
    g = -g;
    v = -v;
  }
  Fx t = along(f, k, w);
  if (t.sign() < 0) t = -t;
  r.closes = true;
  r.offset_period = g;
  r.along_period = t;
  r.offset_step = v;
  return r;
}

LineSet ammann_lines(const Tiling &t) {
  const Flavor f = t.flavor;
  LineSet out;
  out.flavor = f;
  out.periods = t.periods;
  std::map<std::pair<int, Fx>, std::vector<Interval>> grouped;
  if (!t.periods) {
    for (const auto &tile : t.tiles) {
      for (const auto &b : bars(f, tile)) grouped[{b.direction, b.offset}].push_back({b.begin, b.end});
    }
    for (const auto &half : t.halves) {
      for (const auto &b : bars(f, half)) grouped[{b.direction, b.offset}].push_back({b.begin, b.end});
    }
    for (auto &[key, iv] : grouped) {
      std::sort(iv.begin(), iv.end());
      Interval cur = iv[0];
      for (std::size_t i = 1; i < iv.size(); ++i) {
        if (iv[i].first <= cur.second) {
          if (iv[i].second > cur.second) cur.second = iv[i].second;
        } else {
          out.lines.push_back(AmmannLine{key.first, key.second, cur.first, cur.second, false});
          ++out.gaps;
          cur = iv[i];
        }
      }
      out.lines.push_back(AmmannLine{key.first, key.second, cur.first, cur.second, false});
    }
    return out;
  }
  std::map<int, LinePeriod> periods;
  for (int k : line_directions(f)) periods[k] = line_period(*t.periods, k);
  std::set<int> unclosed;
  for (const auto &tile : t.tiles) {
    for (auto b : bars(f, tile)) {
      const LinePeriod &lp = periods[b.direction];
      if (!lp.closes) {
        unclosed.insert(b.direction);
        continue;
      }
      std::int64_t n = floor_ratio(b.offset, lp.offset_period);
      Fx shift = along(f, b.direction, lp.offset_step).times(n);
      b.offset -= lp.offset_period.times(n);
      b.begin -= shift;
      b.end -= shift;
      std::int64_t q = floor_ratio(b.begin, lp.along_period);
      b.begin -= lp.along_period.times(q);
      b.end -= lp.along_period.times(q);
      auto &pieces = grouped[{b.direction, b.offset}];
      if (b.end <= lp.along_period) {
        pieces.push_back({b.begin, b.end});
      } else {
        pieces.push_back({b.begin, lp.along_period});
        pieces.push_back({Fx{0, 0, b.end.d}, b.end - lp.along_period});
      }
    }
  }
  out.unclosed = unclosed.size();
  for (auto &[key, pieces] : grouped) {
    const LinePeriod &lp = periods[key.first];
    out.gaps += coverage_gaps(pieces, lp.along_period);
    out.lines.push_back(AmmannLine{key.first, key.second, Fx{0, 0, radicand(f)}, lp.along_period, true});
  }
  return out;
}

MatchingReport check_matching(const Tiling &t) {
  MatchingReport r;
  r.arrows = check_arrows(t);
  LineSet lines = ammann_lines(t);
  r.gaps = lines.gaps;
  r.unclosed = lines.unclosed;
  return r;
}

namespace {

struct Solver {
  // Integer system rows: offset coefficient rows of two directions.
  std::array<std::array<std::int64_t, 4>, 4> adj{};
  std::int64_t det = 0;
};

std::int64_t det3(const std::array<std::array<std::int64_t, 4>, 4> &m, int skip_r, int skip_c) {
  std::int64_t a[3][3];
  int ri = 0;
  for (int r = 0; r < 4; ++r) {
    if (r == skip_r) continue;
    int ci = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == skip_c) continue;
      a[ri][ci++] = m[r][c];
    }
    ++ri;
  }
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

Solver make_solver(Flavor f, int k0, int k1) {
  std::array<std::array<std::int64_t, 4>, 4> m{};
  for (int j = 0; j < 4; ++j) {
    Point e;
    e.c[j] = 1;
    Fx a = offset_along_normal(f, k0, e), b = offset_along_normal(f, k1, e);
    m[0][j] = a.a;
    m[1][j] = a.b;
    m[2][j] = b.a;
    m[3][j] = b.b;
  }
  Solver s;
  for (int c = 0; c < 4; ++c) s.det += ((c % 2) ? -1 : 1) * m[0][c] * det3(m, 0, c);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) s.adj[c][r] = (((r + c) % 2) ? -1 : 1) * det3(m, r, c);
  }
  return s;
}

bool solve(const Solver &s, const std::array<std::int64_t, 4> &rhs, Point &out) {
  if (s.det == 0) return false;
  for (int i = 0; i < 4; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < 4; ++j) acc += static_cast<__int128>(s.adj[i][j]) * rhs[j];
    if (acc % s.det != 0) return false;
    out.c[i] = static_cast<std::int64_t>(acc / s.det);
  }
  return true;
}

struct LineIndex {
  Flavor f;
  std::optional<Lattice> lat;
  std::map<int, std::vector<Fx>> offsets;  // sorted, distinct
  std::map<std::pair<int, Fx>, std::vector<Interval>> segments;
  std::map<int, LinePeriod> periods;

  // Lines in direction k strictly inside the offset range (lo, hi); on a
  // patch only segments overlapping the along range (alo, ahi) count.
  std::size_t count_open(int k, Fx lo, Fx hi, const Fx &alo, const Fx &ahi) const {
    auto it = offsets.find(k);
    if (it == offsets.end()) return 0;
    const auto &v = it->second;
    if (!lat) {
      std::size_t n = 0;
      for (auto o = std::upper_bound(v.begin(), v.end(), lo); o != v.end() && *o < hi; ++o) {
        for (const auto &[s, e] : segments.at({k, *o})) {
          if (s < ahi && alo < e) {
            ++n;
            break;
          }
        }
      }
      return n;
    }
    auto count = [&](const Fx &a, const Fx &b, bool include_a) {
      auto first = include_a ? std::lower_bound(v.begin(), v.end(), a) : std::upper_bound(v.begin(), v.end(), a);
      auto last = std::lower_bound(v.begin(), v.end(), b);
      return last > first ? static_cast<std::size_t>(last - first) : std::size_t{0};
    };
    const LinePeriod &lp = periods.at(k);
    std::int64_t n = floor_ratio(lo, lp.offset_period);
    lo -= lp.offset_period.times(n);
    hi -= lp.offset_period.times(n);
    if (hi <= lp.offset_period) return count(lo, hi, false);
    return count(lo, lp.offset_period, false) + count(Fx{0, 0, lo.d}, hi - lp.offset_period, true);
  }

  bool has_bar(const Bar &b) const {
    if (lat) {
      const LinePeriod &lp = periods.at(b.direction);
      if (!lp.closes) return false;
      Fx o = b.offset - lp.offset_period.times(floor_ratio(b.offset, lp.offset_period));
      auto it = offsets.find(b.direction);
      return it != offsets.end() && std::binary_search(it->second.begin(), it->second.end(), o);
    }
    auto it = segments.find({b.direction, b.offset});
    if (it == segments.end()) return false;
    for (const auto &[s, e] : it->second) {
      if (s <= b.begin && b.end <= e) return true;
    }
    return false;
  }

  Fx reduce_offset(int k, const Fx &o) const {
    if (!lat) return o;
    const LinePeriod &lp = periods.at(k);
    return o - lp.offset_period.times(floor_ratio(o, lp.offset_period));
  }
};

// Interiors of two convex tiles meet unless some edge normal separates them.
// Normals are line directions: odd k for Penrose, 0..3 for AB.
bool overlaps(Flavor f, const std::array<Point, 4> &p, const std::array<Point, 4> &q) {
  for (int k : line_directions(f)) {
    Fx plo = along(f, k, p[0]), phi = plo, qlo = along(f, k, q[0]), qhi = qlo;
    for (int i = 1; i < 4; ++i) {
      Fx a = along(f, k, p[i]), b = along(f, k, q[i]);
      plo = std::min(plo, a);
      phi = std::max(phi, a);
      qlo = std::min(qlo, b);
      qhi = std::max(qhi, b);
    }
    if (phi <= qlo || qhi <= plo) return false;
  }
  return true;
}

// Pairs of overlapping tiles, found through a coarse grid on anchor
// positions (torus copies included).
std::size_t count_overlaps(Flavor f, const std::optional<Lattice> &lat, const std::vector<Tile> &tiles) {
  constexpr double kCell = 4.0;
  std::vector<Point> shifts{Point{}};
  if (lat) {
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        if (a != 0 || b != 0) shifts.push_back(lat->p1().scaled(a) + lat->p2().scaled(b));
      }
    }
  }
  std::map<std::pair<long, long>, std::vector<std::pair<std::size_t, std::size_t>>> grid;
  auto cell_of = [&](const Point &p) {
    auto xy = to_xy(f, p);
    return std::make_pair(static_cast<long>(std::floor(xy[0] / kCell)), static_cast<long>(std::floor(xy[1] / kCell)));
  };
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    for (std::size_t s = 0; s < shifts.size(); ++s) grid[cell_of(tiles[i].anchor + shifts[s])].push_back({i, s});
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < tiles.size(); ++i) {
    auto pv = vertices(f, tiles[i]);
    auto [cx, cy] = cell_of(tiles[i].anchor);
    for (long dx = -1; dx <= 1; ++dx) {
      for (long dy = -1; dy <= 1; ++dy) {
        auto it = grid.find({cx + dx, cy + dy});
        if (it == grid.end()) continue;
        for (const auto &[j, s] : it->second) {
          if (j < i || (j == i && s == 0)) continue;
          Tile moved = tiles[j];
          moved.anchor += shifts[s];
          if (overlaps(f, pv, vertices(f, moved))) ++n;
        }
      }
    }
  }
  return n;
}

// On a torus every edge is shared by two tiles; drop candidates until that
// holds.
void prune_unshared(Flavor f, const Lattice &lat, std::set<Tile> &tiles) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<Point, Point>, int> uses;
    for (const auto &t : tiles) {
      auto v = vertices(f, t);
      for (int i = 0; i < 4; ++i) ++uses[detail::edge_key(lat, v[i], v[(i + 1) % 4])];
    }
    for (auto it = tiles.begin(); it != tiles.end();) {
      auto v = vertices(f, *it);
      bool lonely = false;
      for (int i = 0; i < 4; ++i) lonely = lonely || uses[detail::edge_key(lat, v[i], v[(i + 1) % 4])] < 2;
      if (lonely) {
        it = tiles.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
}

}  // namespace

Tiling reconstruct(const LineSet &ls) {
  if (ls.lines.empty()) throw std::invalid_argument("reconstruct: empty line set");
  const Flavor f = ls.flavor;
  LineIndex idx{f, ls.periods, {}, {}, {}};
  if (ls.periods) {
    for (int k : line_directions(f)) idx.periods[k] = line_period(*ls.periods, k);
  }
  for (const auto &l : ls.lines) {
    idx.offsets[l.direction].push_back(l.offset);
    idx.segments[{l.direction, l.offset}].push_back({l.begin, l.end});
  }
  for (auto &[k, v] : idx.offsets) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  std::vector<std::pair<TileKind, int>> shapes;
  if (f == Flavor::Penrose) {
    for (TileKind kind : {TileKind::Thick, TileKind::Thin}) {
      for (int m = 0; m < 10; ++m) shapes.push_back({kind, m});
    }
  } else {
    for (int m = 0; m < 8; ++m) shapes.push_back({TileKind::Square, m});
    for (int m = 0; m < 4; ++m) shapes.push_back({TileKind::Rhombus, m});
  }

  const int h = half_turn_units(f);
  std::map<std::pair<int, int>, Solver> solvers;
  std::set<Tile> tested, accepted;
  const std::vector<Fx> none;
  for (const auto &[kind, m] : shapes) {
    const auto &loc = local_lines(kind);
    const LocalLine &l0 = loc[0], &l1 = loc[1];
    int k0 = l0.k + zeta_step(f) * m, k1 = l1.k + zeta_step(f) * m;
    int n0 = mod(k0, 2 * h), n1 = mod(k1, 2 * h);
    bool r0 = n0 >= h, r1 = n1 >= h;
    if (r0) n0 -= h;
    if (r1) n1 -= h;
    auto key = std::make_pair(mod(k0, 2 * h), mod(k1, 2 * h));
    if (!solvers.count(key)) solvers[key] = make_solver(f, k0, k1);
    const Solver &solver = solvers[key];
    auto i0 = idx.offsets.find(n0), i1 = idx.offsets.find(n1);
    const auto &off0 = i0 == idx.offsets.end() ? none : i0->second;
    const auto &off1 = i1 == idx.offsets.end() ? none : i1->second;
    std::vector<Fx> shifts{Fx{0, 0, radicand(f)}};
    if (ls.periods && idx.periods.at(n1).closes) {
      const Fx &g = idx.periods.at(n1).offset_period;
      shifts = {Fx{0, 0, radicand(f)}, g, -g};
    }
    for (const Fx &a : off0) {
      Fx t0 = (r0 ? -a : a) - l0.omega;
      for (const Fx &b0 : off1) {
        for (const Fx &sh : shifts) {
          Fx b = b0 + sh;
          Fx t1 = (r1 ? -b : b) - l1.omega;
          Point anchor;
          if (!solve(solver, {t0.a, t0.b, t1.a, t1.b}, anchor)) continue;
          Tile cand = canonical(f, Tile{kind, m, anchor});
          if (ls.periods) cand.anchor = ls.periods->reduce(cand.anchor);
          if (!tested.insert(cand).second) continue;
          // Every own bar must lie on a present line ...
          auto own = bars(f, cand);
          bool ok = true;
          for (const auto &bar : own) {
            if (!idx.has_bar(bar)) {
              ok = false;
              break;
            }
          }
          if (!ok) continue;
          // ... and no other line may cross the tile.
          auto poly = vertices(f, cand);
          for (int k : line_directions(f)) {
            Fx lo = offset_along_normal(f, k, poly[0]), hi = lo;
            Fx alo = along(f, k, poly[0]), ahi = alo;
            for (int i = 1; i < 4; ++i) {
              Fx o = offset_along_normal(f, k, poly[i]), a = along(f, k, poly[i]);
              lo = std::min(lo, o);
              hi = std::max(hi, o);
              alo = std::min(alo, a);
              ahi = std::max(ahi, a);
            }
            std::size_t expected = 0;
            for (const auto &bar : own) expected += bar.direction == k;
            if (idx.count_open(k, lo, hi, alo, ahi) != expected) {
              ok = false;
              break;
            }
          }
          if (ok) accepted.insert(cand);
        }
      }
    }
  }
  if (ls.periods) prune_unshared(f, *ls.periods, accepted);
  Tiling out;
  out.flavor = f;
  out.periods = ls.periods;
  out.tiles.assign(accepted.begin(), accepted.end());
  if (count_overlaps(f, out.periods, out.tiles) != 0) {
    throw std::invalid_argument("reconstruct: lines admit overlapping tiles");
  }
  out.canonicalize();
  // Every rebuilt bar must sit on the given lines; on a torus the lines must
  // come back exactly. Patch lines may extend further through loose halves.
  LineSet again = ammann_lines(out);
  bool consistent = ls.periods ? again.lines == ls.lines && again.gaps == ls.gaps : !again.lines.empty();
  if (consistent && !ls.periods) {
    for (const auto &l : again.lines) {
      Bar b{l.direction, l.offset, l.begin, l.end};
      if (!idx.has_bar(b)) consistent = false;
    }
  }
  if (!consistent) throw std::invalid_argument("reconstruct: inconsistent line set");
  return out;
}

std::vector<SpacingReport> spacing_law(const LineSet &ls) {
  std::map<int, std::vector<Fx>> offsets;
  for (const auto &l : ls.lines) offsets[l.direction].push_back(l.offset);
  std::vector<SpacingReport> out;
  const QuadraticValue phi = golden_phi();
  for (auto &[k, v] : offsets) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    SpacingReport r;
    r.direction = k;
    r.lines = v.size();
    std::vector<Fx> gaps;
    for (std::size_t i = 1; i < v.size(); ++i) gaps.push_back(v[i] - v[i - 1]);
    std::vector<Fx> distinct = gaps;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    r.two_lengths = distinct.size() == 2;
    if (r.two_lengths) {
      r.short_gap = distinct[0];
      r.long_gap = distinct[1];
      r.golden_ratio = r.long_gap.value() == r.short_gap.value() * phi;
      for (const auto &g : gaps) r.word.push_back(g == r.long_gap ? '1' : '0');
      r.legal = is_legal(r.word);
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace tilecode
