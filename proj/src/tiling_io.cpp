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

#include "tilecode/tiling_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tilecode/ammann.hpp"
#include "tilecode/tiling_internal.hpp"

namespace tilecode {

using nlohmann::json;

namespace {

json point_json(const Point &p) { return json::array({p.c[0], p.c[1], p.c[2], p.c[3]}); }

Point point_from(const json &j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("point must be 4 integers");
  Point p;
  for (int i = 0; i < 4; ++i) p.c[i] = j.at(i).get<std::int64_t>();
  return p;
}

}  // namespace

std::string to_json(const Tiling &t) {
  json doc;
  doc["format"] = "tilecode-tiling";
  doc["flavor"] = to_string(t.flavor);
  doc["scale"] = 1;
  doc["periods"] = t.periods ? json::array({point_json(t.periods->p1()), point_json(t.periods->p2())}) : json();
  doc["tiles"] = json::array();
  for (const auto &tile : t.tiles) {
    doc["tiles"].push_back({{"kind", to_string(tile.kind)}, {"orientation", tile.orientation}, {"anchor", point_json(tile.anchor)}});
  }
  doc["halves"] = json::array();
  for (const auto &h : t.halves) {
    doc["halves"].push_back({{"kind", to_string(h.kind)},
                             {"orientation", h.orientation},
                             {"side", h.side},
                             {"anchor", point_json(h.anchor)}});
  }
  return doc.dump(1) + "\n";
}

Tiling tiling_from_json(const std::string &text) {
  try {
    json doc = json::parse(text);
    if (doc.value("format", "") != "tilecode-tiling") throw std::invalid_argument("not a tilecode tiling document");
    if (doc.value("scale", 1) != 1) throw std::invalid_argument("only scale 1 is supported");
    Tiling t;
    t.flavor = parse_flavor(doc.at("flavor").get<std::string>());
    if (!doc["periods"].is_null()) {
      t.periods = Lattice(t.flavor, point_from(doc["periods"].at(0)), point_from(doc["periods"].at(1)));
    }
    for (const auto &j : doc.at("tiles")) {
      Tile tile{parse_tile_kind(j.at("kind").get<std::string>()), j.at("orientation").get<int>(), point_from(j.at("anchor"))};
      if (flavor_of(tile.kind) != t.flavor) throw std::invalid_argument("tile kind does not match flavor");
      t.tiles.push_back(tile);
    }
    if (doc.contains("halves")) {
      for (const auto &j : doc["halves"]) {
        HalfTile h{parse_tile_kind(j.at("kind").get<std::string>()), j.at("orientation").get<int>(),
                   j.at("side").get<int>(), point_from(j.at("anchor"))};
        if (flavor_of(h.kind) != t.flavor || !is_split(h.kind) || (h.side != 1 && h.side != -1)) {
          throw std::invalid_argument("bad half tile");
        }
        t.halves.push_back(h);
      }
    }
    t.canonicalize();
    return t;
  } catch (const json::exception &e) {
    throw std::invalid_argument(std::string("malformed tiling document: ") + e.what());
  }
}

void save_tiling(const Tiling &t, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json(t);
}

Tiling load_tiling(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return tiling_from_json(buf.str());
}

std::set<Layer> parse_layers(const std::string &csv) {
  std::set<Layer> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "tiles") {
      out.insert(Layer::Tiles);
    } else if (item == "arrows") {
      out.insert(Layer::Arrows);
    } else if (item == "ammann") {
      out.insert(Layer::Ammann);
    } else if (!item.empty()) {
      throw std::invalid_argument("unknown layer: " + item);
    }
  }
  return out;
}

namespace {

struct Canvas {
  double scale = 40;
  double minx = std::numeric_limits<double>::infinity(), miny = minx;
  double maxx = -minx, maxy = -minx;
  std::ostringstream body;

  void extend(const std::array<double, 2> &p) {
    minx = std::min(minx, p[0]);
    maxx = std::max(maxx, p[0]);
    miny = std::min(miny, p[1]);
    maxy = std::max(maxy, p[1]);
  }
  // SVG y grows downward.
  std::string xy(const std::array<double, 2> &p) const {
    std::ostringstream s;
    s << p[0] * scale << ',' << -p[1] * scale;
    return s.str();
  }
};

const char *fill_of(TileKind k) {
  switch (k) {
    case TileKind::Thick: return "#e8c07d";
    case TileKind::Thin: return "#8fb8de";
    case TileKind::Square: return "#d7e3a1";
    default: return "#c9a3d9";
  }
}

// Point on the line {off_k = offset} at along-line coordinate a.
std::array<double, 2> on_line(Flavor f, int k, double offset, double a) {
  const double alpha = M_PI / half_turn_units(f);
  double real = a;
  if (f == Flavor::Penrose && k % 2 != 0) real *= std::sin(M_PI / 5);
  double c = std::cos(k * alpha), s = std::sin(k * alpha);
  return {real * c - offset * s, real * s + offset * c};
}

}  // namespace

std::string render_svg(const Tiling &t, const std::set<Layer> &layers) {
  const Flavor f = t.flavor;
  Canvas cv;
  for (const auto &tile : t.tiles) {
    for (const auto &p : vertices(f, tile)) cv.extend(to_xy(f, p));
  }
  for (const auto &h : t.halves) {
    for (const auto &p : vertices(f, h)) cv.extend(to_xy(f, p));
  }
  if (!std::isfinite(cv.minx)) cv.minx = cv.miny = cv.maxx = cv.maxy = 0;

  if (layers.count(Layer::Tiles)) {
    cv.body << "<g id=\"tiles\" stroke=\"#333\" stroke-width=\"1\">\n";
    for (const auto &tile : t.tiles) {
      cv.body << " <polygon fill=\"" << fill_of(tile.kind) << "\" points=\"";
      for (const auto &p : vertices(f, tile)) cv.body << cv.xy(to_xy(f, p)) << ' ';
      cv.body << "\"/>\n";
    }
    for (const auto &h : t.halves) {
      cv.body << " <polygon fill=\"" << fill_of(h.kind) << "\" fill-opacity=\"0.5\" points=\"";
      for (const auto &p : vertices(f, h)) cv.body << cv.xy(to_xy(f, p)) << ' ';
      cv.body << "\"/>\n";
    }
    cv.body << "</g>\n";
  }
  if (layers.count(Layer::Arrows)) {
    // One chevron per arrow at the edge midpoint, two for type 2 edges.
    cv.body << "<g id=\"arrows\" stroke=\"#b22\" stroke-width=\"1.5\" fill=\"none\">\n";
    auto draw = [&](const std::vector<detail::EdgeLabel> &labels) {
      for (const auto &e : labels) {
        auto a = to_xy(f, e.tail), b = to_xy(f, e.head);
        double dx = b[0] - a[0], dy = b[1] - a[1];
        for (int i = 0; i < e.type; ++i) {
          double t0 = 0.5 + 0.08 * i;
          std::array<double, 2> tip{a[0] + t0 * dx, a[1] + t0 * dy};
          std::array<double, 2> l{tip[0] - 0.1 * dx - 0.07 * dy, tip[1] - 0.1 * dy + 0.07 * dx};
          std::array<double, 2> r{tip[0] - 0.1 * dx + 0.07 * dy, tip[1] - 0.1 * dy - 0.07 * dx};
          cv.body << " <polyline points=\"" << cv.xy(l) << ' ' << cv.xy(tip) << ' ' << cv.xy(r) << "\"/>\n";
        }
      }
    };
    for (const auto &tile : t.tiles) draw(detail::edge_labels(f, tile));
    for (const auto &h : t.halves) draw(detail::edge_labels(f, h));
    cv.body << "</g>\n";
  }
  if (layers.count(Layer::Ammann)) {
    cv.body << "<g id=\"ammann\" stroke=\"#1a7f37\" stroke-width=\"1.2\">\n";
    auto draw = [&](const std::vector<Bar> &bs) {
      for (const auto &b : bs) {
        double o = b.offset.to_double();
        auto p = on_line(f, b.direction, o, b.begin.to_double());
        auto q = on_line(f, b.direction, o, b.end.to_double());
        cv.body << " <line x1=\"" << p[0] * cv.scale << "\" y1=\"" << -p[1] * cv.scale << "\" x2=\"" << q[0] * cv.scale
                << "\" y2=\"" << -q[1] * cv.scale << "\"/>\n";
      }
    };
    for (const auto &tile : t.tiles) draw(bars(f, tile));
    for (const auto &h : t.halves) draw(bars(f, h));
    cv.body << "</g>\n";
  }
  const double pad = 0.5;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (cv.minx - pad) * cv.scale << ' '
      << -(cv.maxy + pad) * cv.scale << ' ' << (cv.maxx - cv.minx + 2 * pad) * cv.scale << ' '
      << (cv.maxy - cv.miny + 2 * pad) * cv.scale << "\">\n"
      << cv.body.str() << "</svg>\n";
  return out.str();
}

}  // namespace tilecode
