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

#include "tilecode/cyclotomic.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tilecode {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// 16 * sin and 16 * cos of t*alpha as (a, b) over Q(sqrt D). For Penrose one
// of the two carries an implicit factor sin(pi/5), depending on parity of t.
struct Trig {
  std::int64_t sa, sb, ca, cb;
};

Trig penrose_trig(int t) {
  static const Trig table[10] = {
      {0, 0, 16, 0},   {-4, 4, 8, 8},  {16, 0, 4, 4},  {4, 4, 16, 0},    {8, 8, -4, 4},
      {16, 0, 0, 0},   {8, 8, 4, -4},  {4, 4, -16, 0}, {16, 0, -4, -4},  {-4, 4, -8, -8},
  };
  int u = mod(t, 20);
  Trig r = table[u % 10];
  if (u >= 10) r = Trig{-r.sa, -r.sb, -r.ca, -r.cb};
  return r;
}

Trig ab_trig(int t) {
  static const Trig table[4] = {
      {0, 0, 16, 0}, {0, 8, 0, 8}, {16, 0, 0, 0}, {0, 8, 0, -8},
  };
  int u = mod(t, 8);
  Trig r = table[u % 4];
  if (u >= 4) r = Trig{-r.sa, -r.sb, -r.ca, -r.cb};
  return r;
}

Trig trig(Flavor f, int t) { return f == Flavor::Penrose ? penrose_trig(t) : ab_trig(t); }

__int128 isqrt128(__int128 n) {
  if (n <= 0) return 0;
  auto r = static_cast<__int128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t floor_div(__int128 a, std::int64_t b) {
  __int128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<std::int64_t>(q);
}

QuadraticValue qv(std::int64_t a16, std::int64_t b16, int d) {
  return QuadraticValue(mpq_class(a16, 16), mpq_class(b16, 16), d);
}

// Real part and (possibly sin(pi/5)-scaled) imaginary part of zeta^j.
QuadraticValue re_unit(Flavor f, int j) {
  Trig t = trig(f, zeta_step(f) * j);
  return qv(t.ca, t.cb, radicand(f));
}
QuadraticValue im_unit(Flavor f, int j) {
  Trig t = trig(f, zeta_step(f) * j);
  return qv(t.sa, t.sb, radicand(f));
}

}  // namespace

const char *to_string(Flavor f) { return f == Flavor::Penrose ? "penrose" : "ammann-beenker"; }

Flavor parse_flavor(const std::string &s) {
  if (s == "penrose") return Flavor::Penrose;
  if (s == "ammann-beenker" || s == "ab") return Flavor::AmmannBeenker;
  throw std::invalid_argument("unknown tiling flavor: " + s);
}

int turn(Flavor f) { return f == Flavor::Penrose ? 10 : 8; }
int radicand(Flavor f) { return f == Flavor::Penrose ? 5 : 2; }
int half_turn_units(Flavor f) { return f == Flavor::Penrose ? 10 : 4; }
int zeta_step(Flavor f) { return f == Flavor::Penrose ? 2 : 1; }

Point &Point::operator+=(const Point &o) {
  for (int i = 0; i < 4; ++i) c[i] += o.c[i];
  return *this;
}
Point &Point::operator-=(const Point &o) {
  for (int i = 0; i < 4; ++i) c[i] -= o.c[i];
  return *this;
}
Point Point::operator-() const { return Point{{-c[0], -c[1], -c[2], -c[3]}}; }
Point Point::scaled(std::int64_t k) const { return Point{{c[0] * k, c[1] * k, c[2] * k, c[3] * k}}; }

std::size_t PointHash::operator()(const Point &p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.c) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Point rotate(Flavor f, const Point &p, int j) {
  int n = mod(j, turn(f));
  Point r = p;
  for (int step = 0; step < n; ++step) {
    std::int64_t top = r.c[3];
    Point s{{0, r.c[0], r.c[1], r.c[2]}};
    if (f == Flavor::Penrose) {
      // zeta^4 = zeta^3 - zeta^2 + zeta - 1
      s.c[0] -= top;
      s.c[1] += top;
      s.c[2] -= top;
      s.c[3] += top;
    } else {
      s.c[0] -= top;  // zeta^4 = -1
    }
    r = s;
  }
  return r;
}

Point unit(Flavor f, int j) {
  static const auto table = [] {
    std::array<std::array<Point, 10>, 2> t{};
    for (int which = 0; which < 2; ++which) {
      Flavor g = which == 0 ? Flavor::Penrose : Flavor::AmmannBeenker;
      for (int k = 0; k < turn(g); ++k) t[which][k] = rotate(g, Point{{1, 0, 0, 0}}, k);
    }
    return t;
  }();
  return table[f == Flavor::Penrose ? 0 : 1][mod(j, turn(f))];
}

Point mul(Flavor f, const Point &a, const Point &b) {
  Point r;
  for (int i = 0; i < 4; ++i) {
    if (a.c[i] == 0) continue;
    r += rotate(f, b, i).scaled(a.c[i]);
  }
  return r;
}

int unit_index(Flavor f, const Point &p) {
  for (int j = 0; j < turn(f); ++j) {
    if (unit(f, j) == p) return j;
  }
  return -1;
}

Point inflation_factor(Flavor f) {
  if (f == Flavor::Penrose) return Point{{0, 1, 0, 0}} - unit(f, 4);
  return Point{{1, 1, 0, -1}};
}

Point inflation_inverse(Flavor f) {
  if (f == Flavor::Penrose) return inflation_factor(f) - Point{{1, 0, 0, 0}};  // tau = phi - 1
  return inflation_factor(f) - Point{{2, 0, 0, 0}};                            // sqrt2 - 1
}

QuadraticValue inflation_value(Flavor f) {
  return f == Flavor::Penrose ? golden_phi() : silver_ratio();
}

int Fx::sign() const {
  if (b == 0 || d == 0) return (a > 0) - (a < 0);
  if (a == 0) return (b > 0) - (b < 0);
  if (a > 0 && b > 0) return 1;
  if (a < 0 && b < 0) return -1;
  __int128 aa = static_cast<__int128>(a) * a;
  __int128 bb = static_cast<__int128>(b) * b * d;
  if (a > 0) return aa > bb ? 1 : -1;
  return bb > aa ? 1 : -1;
}

double Fx::to_double() const {
  return (static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(d))) / kDen;
}

QuadraticValue Fx::value() const { return qv(a, b, b == 0 ? 0 : d); }

Fx Fx::from(const QuadraticValue &v, int d) {
  if (v.d() != 0 && v.d() != d && v.b() != 0) throw std::invalid_argument("Fx: radicand mismatch");
  mpq_class a = v.a() * 16, b = v.b() * 16;
  a.canonicalize();
  b.canonicalize();
  if (a.get_den() != 1 || b.get_den() != 1) {
    throw std::invalid_argument("Fx: value " + v.str() + " is not a multiple of 1/16");
  }
  return Fx{a.get_num().get_si(), b.get_num().get_si(), d};
}

Fx &Fx::operator+=(const Fx &o) {
  a += o.a;
  b += o.b;
  if (d == 0) d = o.d;
  return *this;
}
Fx &Fx::operator-=(const Fx &o) {
  a -= o.a;
  b -= o.b;
  if (d == 0) d = o.d;
  return *this;
}

std::strong_ordering operator<=>(const Fx &x, const Fx &y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fx::str() const { return value().str(); }

std::size_t FxHash::operator()(const Fx &x) const {
  return std::hash<std::int64_t>()(x.a) * 1000003u ^ std::hash<std::int64_t>()(x.b);
}

std::int64_t floor_quadratic(std::int64_t u, std::int64_t v, int d, std::int64_t den) {
  __int128 fl = 0;
  if (v != 0) {
    __int128 r = isqrt128(static_cast<__int128>(v) * v * d);
    fl = v > 0 ? r : -(r + 1);  // v*sqrt(d) is irrational
  }
  return floor_div(static_cast<__int128>(u) + fl, den);
}

Fx offset_along_normal(Flavor f, int k, const Point &p) {
  Fx r{0, 0, radicand(f)};
  for (int j = 0; j < 4; ++j) {
    if (p.c[j] == 0) continue;
    Trig t = trig(f, zeta_step(f) * j - k);
    r.a += p.c[j] * t.sa;
    r.b += p.c[j] * t.sb;
  }
  return r;
}

Fx along(Flavor f, int k, const Point &p) {
  Fx r{0, 0, radicand(f)};
  for (int j = 0; j < 4; ++j) {
    if (p.c[j] == 0) continue;
    Trig t = trig(f, zeta_step(f) * j - k);
    r.a += p.c[j] * t.ca;
    r.b += p.c[j] * t.cb;
  }
  return r;
}

std::array<double, 2> to_xy(Flavor f, const Point &p) {
  double x = 0, y = 0;
  double step = M_PI / (turn(f) / 2.0);
  for (int j = 0; j < 4; ++j) {
    x += p.c[j] * std::cos(j * step);
    y += p.c[j] * std::sin(j * step);
  }
  return {x, y};
}

std::string to_text(const Point &p) {
  std::ostringstream out;
  out << '[' << p.c[0] << ',' << p.c[1] << ',' << p.c[2] << ',' << p.c[3] << ']';
  return out.str();
}

Lattice::Lattice(Flavor f, const Point &p1, const Point &p2) : f_(f), p1_(p1), p2_(p2) {
  auto re = [&](const Point &p) {
    QuadraticValue r(0);
    for (int j = 0; j < 4; ++j) r += re_unit(f, j) * QuadraticValue(p.c[j]);
    return r;
  };
  auto im = [&](const Point &p) {
    QuadraticValue r(0);
    for (int j = 0; j < 4; ++j) r += im_unit(f, j) * QuadraticValue(p.c[j]);
    return r;
  };
  auto cross = [&](const Point &a, const Point &b) { return re(a) * im(b) - im(a) * re(b); };
  QuadraticValue det = cross(p1, p2);
  if (det.sign() == 0) throw std::invalid_argument("Lattice: degenerate periods");
  for (int axis = 0; axis < 2; ++axis) {
    std::array<QuadraticValue, 4> w;
    mpz_class den = 1;
    for (int j = 0; j < 4; ++j) {
      Point e = unit(f, j);
      w[j] = (axis == 0 ? cross(e, p2) : cross(p1, e)) / det;
      den = lcm(den, w[j].a().get_den());
      den = lcm(den, w[j].b().get_den());
    }
    den_[axis] = den.get_si();
    for (int j = 0; j < 4; ++j) {
      mpq_class ua = w[j].a() * den, vb = w[j].b() * den;
      u_[axis][j] = mpz_class(ua).get_si();
      v_[axis][j] = mpz_class(vb).get_si();
    }
  }
}

std::array<std::int64_t, 2> Lattice::cell(const Point &p) const {
  std::array<std::int64_t, 2> r{};
  for (int axis = 0; axis < 2; ++axis) {
    __int128 uu = 0, vv = 0;
    for (int j = 0; j < 4; ++j) {
      uu += static_cast<__int128>(p.c[j]) * u_[axis][j];
      vv += static_cast<__int128>(p.c[j]) * v_[axis][j];
    }
    r[axis] = floor_quadratic(static_cast<std::int64_t>(uu), static_cast<std::int64_t>(vv),
                              radicand(f_), den_[axis]);
  }
  return r;
}

Point Lattice::reduce(const Point &p) const {
  auto xy = cell(p);
  return p - p1_.scaled(xy[0]) - p2_.scaled(xy[1]);
}

}  // namespace tilecode
