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

#include "tilecode/tiling.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

#include "tilecode/tiling_internal.hpp"

namespace tilecode {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

const char *to_string(TileKind k) {
  switch (k) {
    case TileKind::Thick: return "thick";
    case TileKind::Thin: return "thin";
    case TileKind::Square: return "square";
    case TileKind::Rhombus: return "rhombus";
  }
  return "?";
}

TileKind parse_tile_kind(const std::string &s) {
  if (s == "thick") return TileKind::Thick;
  if (s == "thin") return TileKind::Thin;
  if (s == "square") return TileKind::Square;
  if (s == "rhombus") return TileKind::Rhombus;
  throw std::invalid_argument("unknown tile kind: " + s);
}

Flavor flavor_of(TileKind k) {
  return (k == TileKind::Thick || k == TileKind::Thin) ? Flavor::Penrose : Flavor::AmmannBeenker;
}

int kind_index(TileKind k) { return (k == TileKind::Thick || k == TileKind::Square) ? 0 : 1; }

bool is_split(TileKind k) { return k != TileKind::Rhombus; }

int diagonal_step(TileKind k) { return k == TileKind::Thin ? 2 : 1; }

std::array<Point, 4> vertices(Flavor f, const Tile &t) {
  if (t.kind == TileKind::Rhombus) {
    Point e1 = unit(f, t.orientation), e2 = unit(f, t.orientation + 1);
    return {t.anchor, t.anchor + e1, t.anchor + e1 + e2, t.anchor + e2};
  }
  int k = diagonal_step(t.kind), m = t.orientation;
  Point am = t.anchor + unit(f, m - k), ap = t.anchor + unit(f, m + k);
  Point c = t.anchor + unit(f, m - k) + unit(f, m + k);
  return {t.anchor, am, c, ap};
}

std::array<Point, 3> vertices(Flavor f, const HalfTile &h) {
  int k = diagonal_step(h.kind), m = h.orientation;
  return {h.anchor + unit(f, m + h.side * k), h.anchor,
          h.anchor + unit(f, m - k) + unit(f, m + k)};
}

std::array<HalfTile, 2> split(const Tile &t) {
  if (!is_split(t.kind)) throw std::invalid_argument("split: rhombus tiles have no halves");
  return {HalfTile{t.kind, t.orientation, -1, t.anchor}, HalfTile{t.kind, t.orientation, 1, t.anchor}};
}

HalfTile half_from_triangle(Flavor f, TileKind kind, const Point &a, const Point &b, const Point &c) {
  int k = diagonal_step(kind);
  Point diag = c - b, leg = a - b;
  for (int m = 0; m < turn(f); ++m) {
    if (unit(f, m - k) + unit(f, m + k) != diag) continue;
    if (leg == unit(f, m + k)) return HalfTile{kind, m, 1, b};
    if (leg == unit(f, m - k)) return HalfTile{kind, m, -1, b};
  }
  throw MergeError("triangle does not match a half tile");
}

Tile rhombus_from(Flavor f, const Point &o, const Point &e1) {
  int m = unit_index(f, e1);
  if (m < 0) throw MergeError("rhombus edge is not a unit");
  return canonical(f, Tile{TileKind::Rhombus, m, o});
}

Tile canonical(Flavor f, const Tile &t) {
  Tile r = t;
  r.orientation = mod(t.orientation, turn(f));
  if (t.kind == TileKind::Rhombus && r.orientation >= 4) {
    r.anchor = t.anchor + unit(f, r.orientation) + unit(f, r.orientation + 1);
    r.orientation -= 4;
  }
  return r;
}

void Tiling::canonicalize() {
  for (auto &t : tiles) {
    t = canonical(flavor, t);
    if (periods) t.anchor = periods->reduce(t.anchor);
  }
  for (auto &h : halves) {
    h.orientation = mod(h.orientation, turn(flavor));
    if (periods) h.anchor = periods->reduce(h.anchor);
  }
  std::sort(tiles.begin(), tiles.end());
  std::sort(halves.begin(), halves.end());
}

bool operator==(const Tiling &a, const Tiling &b) {
  if (a.flavor != b.flavor || a.tiles != b.tiles || a.halves != b.halves) return false;
  if (a.periods.has_value() != b.periods.has_value()) return false;
  if (a.periods) {
    return a.periods->p1() == b.periods->p1() && a.periods->p2() == b.periods->p2();
  }
  return true;
}

namespace detail {

std::pair<Point, Point> edge_key(const std::optional<Lattice> &lat, const Point &p, const Point &q) {
  Point d = q - p;
  Point nd = p - q;
  if (d < nd) return {lat ? lat->reduce(q) : q, nd};
  return {lat ? lat->reduce(p) : p, d};
}

std::size_t UnitHash::operator()(const Unit &u) const {
  return PointHash()(u.anchor) ^ (static_cast<std::size_t>(u.orientation) * 131 +
                                  static_cast<std::size_t>(u.side + 2) * 7 +
                                  static_cast<std::size_t>(u.kind) * 1009);
}

Unit canonical_unit(Flavor f, const std::optional<Lattice> &lat, Unit u) {
  u.orientation = mod(u.orientation, turn(f));
  if (u.kind == TileKind::Rhombus) {
    Tile t = canonical(f, Tile{u.kind, u.orientation, u.anchor});
    u.orientation = t.orientation;
    u.anchor = t.anchor;
  }
  if (lat) u.anchor = lat->reduce(u.anchor);
  return u;
}

std::vector<Unit> units_of(const Tiling &t) {
  std::vector<Unit> out;
  out.reserve(2 * t.tiles.size() + t.halves.size());
  for (const auto &tile : t.tiles) {
    if (is_split(tile.kind)) {
      for (const auto &h : split(tile)) out.push_back(Unit{h.kind, h.orientation, h.side, h.anchor});
    } else {
      out.push_back(Unit{tile.kind, tile.orientation, 0, tile.anchor});
    }
  }
  for (const auto &h : t.halves) out.push_back(Unit{h.kind, h.orientation, h.side, h.anchor});
  return out;
}

// Children of one unit, orientations not reduced, rhombi not canonical.
void inflate_unit(Flavor f, const Unit &u, std::vector<Unit> &out) {
  const Point lam = inflation_factor(f);
  auto half = [&](TileKind kind, const Point &a, const Point &b, const Point &c) {
    HalfTile h = half_from_triangle(f, kind, a, b, c);
    out.push_back(Unit{h.kind, h.orientation, h.side, h.anchor});
  };
  auto rhomb = [&](const Point &o, const Point &e1) {
    int m = unit_index(f, e1);
    if (m < 0) throw MergeError("rhombus edge is not a unit");
    out.push_back(Unit{TileKind::Rhombus, m, 0, o});
  };
  if (u.kind == TileKind::Rhombus) {
    Point o1 = mul(f, lam, u.anchor);
    Point e1 = unit(f, u.orientation), e2 = unit(f, u.orientation + 1);
    Point le1 = mul(f, lam, e1), le2 = mul(f, lam, e2);
    Point p = o1 + le1, s = o1 + le2, q = p + le2;
    rhomb(o1, e1);
    rhomb(q, -e1);
    rhomb(p, rotate(f, e1, 2));
    Point x = o1 + e1 + e2, y = q - e1 - e2;
    half(TileKind::Square, x, p, o1 + e1);
    half(TileKind::Square, x, s, o1 + e2);
    half(TileKind::Square, y, p, q - e2);
    half(TileKind::Square, y, s, q - e1);
    return;
  }
  auto [a, b, c] = vertices(f, HalfTile{u.kind, u.orientation, u.side, u.anchor});
  Point a1 = mul(f, lam, a), b1 = mul(f, lam, b), c1 = mul(f, lam, c);
  switch (u.kind) {
    case TileKind::Thin: {
      Point p = a1 + (b - a);  // a1 + (b1 - a1) * tau
      half(TileKind::Thin, c1, p, b1);
      half(TileKind::Thick, p, c1, a1);
      break;
    }
    case TileKind::Thick: {
      Point q = b1 + (a - b), r = b1 + (c - b);
      half(TileKind::Thick, r, c1, a1);
      half(TileKind::Thick, q, r, b1);
      half(TileKind::Thin, r, q, a1);
      break;
    }
    case TileKind::Square: {
      Point e1 = a - b, e2 = c - a, dg = unit(f, u.orientation);
      rhomb(b1, rotate(f, e1, 1) == dg ? e1 : dg);
      Point x = b1 + e1 + dg;
      Point f2 = x - a1;
      rhomb(a1, rotate(f, e2, 1) == f2 ? e2 : f2);
      half(TileKind::Square, x, x + e2, b1 + dg);
      half(TileKind::Square, x, a1, b1 + e1);
      half(TileKind::Square, x + e2, c1, a1 + e2);
      break;
    }
    case TileKind::Rhombus: break;
  }
}

}  // namespace detail

using detail::Unit;

Tiling merge(Flavor f, std::vector<HalfTile> halves, std::vector<Tile> whole,
             std::optional<Lattice> periods) {
  Tiling out;
  out.flavor = f;
  out.periods = periods;
  for (auto &h : halves) {
    h.orientation = mod(h.orientation, turn(f));
    if (periods) h.anchor = periods->reduce(h.anchor);
  }
  std::sort(halves.begin(), halves.end(), [](const HalfTile &x, const HalfTile &y) {
    return std::tie(x.kind, x.orientation, x.anchor, x.side) <
           std::tie(y.kind, y.orientation, y.anchor, y.side);
  });
  for (std::size_t i = 0; i < halves.size(); ++i) {
    const HalfTile &h = halves[i];
    if (i + 1 < halves.size() && halves[i + 1] == h) {
      throw MergeError("half tile emitted twice (overlapping offspring)");
    }
    bool mate = i + 1 < halves.size() && halves[i + 1].kind == h.kind &&
                halves[i + 1].orientation == h.orientation && halves[i + 1].anchor == h.anchor;
    if (mate) {
      out.tiles.push_back(Tile{h.kind, h.orientation, h.anchor});
      ++i;
    } else {
      out.halves.push_back(h);
    }
  }
  if (!out.halves.empty()) {
    // A loose half may only sit on the patch boundary: no other tile may use
    // its diagonal.
    std::map<std::pair<Point, Point>, int> diagonals;
    auto add = [&](TileKind kind, int m, const Point &b) {
      int k = diagonal_step(kind);
      Point c = b + unit(f, m - k) + unit(f, m + k);
      ++diagonals[detail::edge_key(periods, b, c)];
    };
    for (const auto &t : out.tiles) add(t.kind, t.orientation, t.anchor);
    for (const auto &h : out.halves) add(h.kind, h.orientation, h.anchor);
    for (const auto &[key, n] : diagonals) {
      if (n > 1) throw MergeError("two non-mate halves share a diagonal");
    }
  }
  for (auto &t : whole) out.tiles.push_back(t);
  out.canonicalize();
  for (std::size_t i = 1; i < out.tiles.size(); ++i) {
    if (out.tiles[i] == out.tiles[i - 1]) throw MergeError("tile emitted twice");
  }
  return out;
}

Tiling inflate(const Tiling &t, unsigned steps) {
  Tiling cur = t;
  const Flavor f = t.flavor;
  const Point lam = inflation_factor(f);
  for (unsigned step = 0; step < steps; ++step) {
    std::vector<Unit> children;
    for (const Unit &u : detail::units_of(cur)) detail::inflate_unit(f, u, children);
    std::vector<HalfTile> halves;
    std::vector<Tile> whole;
    for (const Unit &c : children) {
      if (c.kind == TileKind::Rhombus) {
        whole.push_back(Tile{c.kind, c.orientation, c.anchor});
      } else {
        halves.push_back(HalfTile{c.kind, c.orientation, c.side, c.anchor});
      }
    }
    std::optional<Lattice> periods;
    if (cur.periods) {
      periods = Lattice(f, mul(f, lam, cur.periods->p1()), mul(f, lam, cur.periods->p2()));
    }
    cur = merge(f, std::move(halves), std::move(whole), periods);
  }
  return cur;
}

namespace {

struct Template {
  Unit parent;  // orientation 0, anchor 0
  std::vector<Unit> children;
};

const std::vector<Template> &templates(Flavor f) {
  static const auto build = [](Flavor g) {
    std::vector<Template> out;
    std::vector<Unit> parents;
    if (g == Flavor::Penrose) {
      for (TileKind k : {TileKind::Thick, TileKind::Thin}) {
        for (int s : {-1, 1}) parents.push_back(Unit{k, 0, s, Point{}});
      }
    } else {
      for (int s : {-1, 1}) parents.push_back(Unit{TileKind::Square, 0, s, Point{}});
      parents.push_back(Unit{TileKind::Rhombus, 0, 0, Point{}});
    }
    for (const Unit &p : parents) {
      Template t{p, {}};
      detail::inflate_unit(g, p, t.children);
      out.push_back(t);
    }
    return out;
  };
  static const std::vector<Template> pen = build(Flavor::Penrose);
  static const std::vector<Template> ab = build(Flavor::AmmannBeenker);
  return f == Flavor::Penrose ? pen : ab;
}

}  // namespace

Tiling deflate(const Tiling &t) {
  const Flavor f = t.flavor;
  const Point inv = inflation_inverse(f);
  std::optional<Lattice> parent_lattice;
  if (t.periods) {
    parent_lattice = Lattice(f, mul(f, inv, t.periods->p1()), mul(f, inv, t.periods->p2()));
  }
  std::vector<Unit> units = detail::units_of(t);
  for (auto &u : units) u = detail::canonical_unit(f, t.periods, u);
  {
    std::unordered_set<Unit, detail::UnitHash> distinct(units.begin(), units.end());
    if (distinct.size() != units.size()) throw IllegalTilingError("tile listed twice");
  }

  // Candidate parents from every (child, slot) pair.
  std::unordered_set<Unit, detail::UnitHash> candidates;
  for (const Unit &c : units) {
    std::vector<Unit> reps{c};
    if (c.kind == TileKind::Rhombus) {
      reps.push_back(Unit{c.kind, c.orientation + 4, 0,
                          c.anchor + unit(f, c.orientation) + unit(f, c.orientation + 1)});
    }
    for (const Template &tp : templates(f)) {
      for (const Unit &slot : tp.children) {
        if (slot.kind != c.kind || slot.side != c.side) continue;
        for (const Unit &rep : reps) {
          int m = mod(rep.orientation - slot.orientation, turn(f));
          Point anchor = mul(f, inv, rep.anchor - rotate(f, slot.anchor, m));
          Unit parent{tp.parent.kind, m, tp.parent.side, anchor};
          candidates.insert(detail::canonical_unit(f, parent_lattice, parent));
        }
      }
    }
  }

  // Complete candidates, then exact cover by propagation: a tile with a single
  // live candidate forces it, which kills every other candidate touching the
  // forced candidate's offspring.
  std::vector<Unit> cands;
  std::vector<std::vector<int>> cand_kids;
  std::unordered_map<Unit, int, detail::UnitHash> child_index;
  for (const auto &u : units) child_index.emplace(u, static_cast<int>(child_index.size()));
  std::vector<std::vector<int>> owners(units.size());
  std::vector<Unit> kids;
  for (const Unit &p : candidates) {
    kids.clear();
    detail::inflate_unit(f, p, kids);
    std::vector<int> idx;
    bool ok = true;
    for (auto &k : kids) {
      auto it = child_index.find(detail::canonical_unit(f, t.periods, k));
      if (it == child_index.end()) {
        ok = false;
        break;
      }
      idx.push_back(it->second);
    }
    if (!ok) continue;
    int id = static_cast<int>(cands.size());
    cands.push_back(p);
    for (int c : idx) owners[c].push_back(id);
    cand_kids.push_back(std::move(idx));
  }
  std::vector<char> alive(cands.size(), 1), chosen(cands.size(), 0), covered(units.size(), 0);
  std::vector<int> live_count(units.size());
  for (std::size_t c = 0; c < units.size(); ++c) live_count[c] = static_cast<int>(owners[c].size());
  std::vector<int> queue;
  for (std::size_t c = 0; c < units.size(); ++c) {
    if (live_count[c] == 0) throw IllegalTilingError("no consistent grouping: a tile has no parent");
    if (live_count[c] == 1) queue.push_back(static_cast<int>(c));
  }
  auto kill = [&](int id) {
    if (!alive[id]) return;
    alive[id] = 0;
    for (int c : cand_kids[id]) {
      if (--live_count[c] == 0 && !covered[c]) {
        throw IllegalTilingError("no consistent grouping: a tile has no parent");
      }
      if (live_count[c] == 1 && !covered[c]) queue.push_back(c);
    }
  };
  std::size_t n_covered = 0;
  while (!queue.empty()) {
    int c = queue.back();
    queue.pop_back();
    if (covered[c]) continue;
    int pick = -1;
    for (int id : owners[c]) {
      if (alive[id]) pick = id;
    }
    if (pick < 0) throw IllegalTilingError("no consistent grouping: a tile has no parent");
    chosen[pick] = 1;
    for (int k : cand_kids[pick]) {
      if (covered[k]) throw IllegalTilingError("no consistent grouping: overlapping parents");
      covered[k] = 1;
      ++n_covered;
    }
    for (int k : cand_kids[pick]) {
      for (int other : owners[k]) {
        if (other != pick) kill(other);
      }
    }
  }
  if (n_covered != units.size()) {
    throw IllegalTilingError("ambiguous grouping: some tiles admit several parents");
  }
  std::vector<Unit> accepted;
  for (std::size_t id = 0; id < cands.size(); ++id) {
    if (chosen[id]) accepted.push_back(cands[id]);
  }
  std::vector<HalfTile> halves;
  std::vector<Tile> whole;
  for (const Unit &p : accepted) {
    if (p.kind == TileKind::Rhombus) {
      whole.push_back(Tile{p.kind, p.orientation, p.anchor});
    } else {
      halves.push_back(HalfTile{p.kind, p.orientation, p.side, p.anchor});
    }
  }
  try {
    return merge(f, std::move(halves), std::move(whole), parent_lattice);
  } catch (const MergeError &e) {
    throw IllegalTilingError(std::string("parent tiles do not fit: ") + e.what());
  }
}

std::array<std::int64_t, 2> doubled_counts(const Tiling &t) {
  std::array<std::int64_t, 2> n{0, 0};
  for (const auto &tile : t.tiles) n[kind_index(tile.kind)] += 2;
  for (const auto &h : t.halves) n[kind_index(h.kind)] += 1;
  return n;
}

std::array<std::array<std::int64_t, 2>, 2> inflation_matrix(Flavor f) {
  if (f == Flavor::Penrose) return {{{2, 1}, {1, 1}}};
  return {{{3, 2}, {4, 3}}};
}

Tiling single_tile(TileKind kind, int orientation, const Point &anchor) {
  Tiling t;
  t.flavor = flavor_of(kind);
  t.tiles.push_back(Tile{kind, orientation, anchor});
  t.canonicalize();
  return t;
}

Tiling penrose_wheel() {
  const Flavor f = Flavor::Penrose;
  std::vector<HalfTile> halves;
  for (int i = 0; i < 10; ++i) {
    Point b = unit(f, i), c = unit(f, i + 1);
    if (i % 2 == 0) std::swap(b, c);
    halves.push_back(half_from_triangle(f, TileKind::Thin, Point{}, b, c));
  }
  return merge(f, halves, {}, std::nullopt);
}

Tiling periodic_rhombus_torus(TileKind kind) {
  const Flavor f = flavor_of(kind);
  Tiling t;
  t.flavor = f;
  if (kind == TileKind::Rhombus) {
    t.periods = Lattice(f, unit(f, 0), unit(f, 1));
    t.tiles.push_back(Tile{kind, 0, Point{}});
  } else if (kind == TileKind::Square) {
    t.periods = Lattice(f, unit(f, 0), unit(f, 2));
    t.tiles.push_back(Tile{kind, 1, Point{}});
  } else {
    int k = diagonal_step(kind);
    t.periods = Lattice(f, unit(f, -k), unit(f, k));
    t.tiles.push_back(Tile{kind, 0, Point{}});
  }
  t.canonicalize();
  return t;
}

namespace detail {

std::vector<EdgeLabel> edge_labels(Flavor f, const Tile &t) {
  std::vector<EdgeLabel> out;
  if (t.kind == TileKind::Rhombus) {
    auto v = vertices(f, t);
    out.push_back({v[0], v[1], 1});
    out.push_back({v[0], v[3], 1});
    out.push_back({v[2], v[1], 1});
    out.push_back({v[2], v[3], 1});
    return out;
  }
  for (const auto &h : split(t)) {
    auto more = edge_labels(f, h);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<EdgeLabel> edge_labels(Flavor f, const HalfTile &h) {
  auto [a, b, c] = vertices(f, h);
  switch (h.kind) {
    case TileKind::Thick: return {{a, c, 1}, {a, b, 2}};
    case TileKind::Thin: return {{a, c, 1}, {b, a, 2}};
    default: return {{b, a, 1}, {a, c, 1}};
  }
}

}  // namespace detail

ArrowReport check_arrows(const Tiling &t) {
  std::map<std::pair<Point, Point>, std::vector<std::pair<int, Point>>> seen;
  auto add = [&](const std::vector<detail::EdgeLabel> &labels) {
    for (const auto &e : labels) {
      seen[detail::edge_key(t.periods, e.tail, e.head)].push_back({e.type, e.head - e.tail});
    }
  };
  for (const auto &tile : t.tiles) add(detail::edge_labels(t.flavor, tile));
  for (const auto &h : t.halves) add(detail::edge_labels(t.flavor, h));
  ArrowReport r;
  r.edges = seen.size();
  for (const auto &[key, labels] : seen) {
    if (labels.size() > 2) ++r.overfull;
    if (labels.size() == 2) {
      ++r.shared;
      if (labels[0] != labels[1]) ++r.mismatched;
    }
  }
  return r;
}

}  // namespace tilecode
