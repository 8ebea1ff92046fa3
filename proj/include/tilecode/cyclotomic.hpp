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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "tilecode/quadratic.hpp"

namespace tilecode {

// Penrose coordinates live in Z[zeta_10], Ammann-Beenker in Z[zeta_8].
enum class Flavor { Penrose, AmmannBeenker };

const char *to_string(Flavor f);
Flavor parse_flavor(const std::string &s);

// Number of zeta steps in a full turn (10 or 8).
int turn(Flavor f);
// Radicand of the real subfield used by projections (5 or 2).
int radicand(Flavor f);
// Line directions are indexed in units of pi/10 (Penrose) or pi/4 (AB);
// this is the number of such units in a half turn.
int half_turn_units(Flavor f);
// zeta^j points along direction index step(f) * j.
int zeta_step(Flavor f);

// Integer vector over the power basis 1, zeta, zeta^2, zeta^3. Both rings
// have rank 4, so the representation is unique.
struct Point {
  std::array<std::int64_t, 4> c{0, 0, 0, 0};

  Point &operator+=(const Point &o);
  Point &operator-=(const Point &o);
  friend Point operator+(Point a, const Point &b) { return a += b; }
  friend Point operator-(Point a, const Point &b) { return a -= b; }
  Point operator-() const;
  Point scaled(std::int64_t k) const;
  friend bool operator==(const Point &, const Point &) = default;
  friend auto operator<=>(const Point &, const Point &) = default;
};

struct PointHash {
  std::size_t operator()(const Point &p) const;
};

// zeta^j, any integer j.
Point unit(Flavor f, int j);
Point mul(Flavor f, const Point &a, const Point &b);
// p * zeta^j.
Point rotate(Flavor f, const Point &p, int j);
// j with zeta^j == p, or -1.
int unit_index(Flavor f, const Point &p);

// Inflation factor as a ring element: golden ratio 1/tau = zeta - zeta^4 for
// Penrose, silver ratio 1 + sqrt2 = 1 + zeta - zeta^3 for AB. Both are units.
Point inflation_factor(Flavor f);
Point inflation_inverse(Flavor f);
QuadraticValue inflation_value(Flavor f);

// Exact number (a + b*sqrt(D))/16 with D = radicand(flavor). Every offset and
// along-line coordinate used by the Ammann machinery has this form.
struct Fx {
  std::int64_t a = 0, b = 0;
  int d = 0;  // 0 when b == 0 is forced (plain rational)

  static constexpr std::int64_t kDen = 16;

  int sign() const;
  double to_double() const;
  QuadraticValue value() const;
  static Fx from(const QuadraticValue &v, int d);  // throws if not representable

  Fx &operator+=(const Fx &o);
  Fx &operator-=(const Fx &o);
  friend Fx operator+(Fx x, const Fx &y) { return x += y; }
  friend Fx operator-(Fx x, const Fx &y) { return x -= y; }
  Fx operator-() const { return Fx{-a, -b, d}; }
  Fx times(std::int64_t k) const { return Fx{a * k, b * k, d}; }
  friend bool operator==(const Fx &x, const Fx &y) { return x.a == y.a && x.b == y.b; }
  friend std::strong_ordering operator<=>(const Fx &x, const Fx &y);
  std::string str() const;
};

struct FxHash {
  std::size_t operator()(const Fx &x) const;
};

// Largest integer <= (u + v*sqrt(d))/den, den > 0, exactly.
std::int64_t floor_quadratic(std::int64_t u, std::int64_t v, int d, std::int64_t den);

// Projections onto a line direction k (units of half_turn_units per pi).
// off = Im(e^{-ik.alpha} p). along = Re(e^{-ik.alpha} p), divided by
// sin(pi/5) for Penrose with odd k so it stays in Q(sqrt5); the scale is the
// same for every point, so comparisons and ratios are unaffected.
Fx offset_along_normal(Flavor f, int k, const Point &p);
Fx along(Flavor f, int k, const Point &p);

// Approximate Cartesian coordinates for rendering and sampling.
std::array<double, 2> to_xy(Flavor f, const Point &p);
std::string to_text(const Point &p);  // "[c0,c1,c2,c3]"

// Period lattice with exact reduction to the fundamental parallelogram.
class Lattice {
 public:
  Lattice() = default;
  Lattice(Flavor f, const Point &p1, const Point &p2);

  Flavor flavor() const { return f_; }
  const Point &p1() const { return p1_; }
  const Point &p2() const { return p2_; }
  // Coordinates of p in the basis (p1, p2), floored.
  std::array<std::int64_t, 2> cell(const Point &p) const;
  Point reduce(const Point &p) const;

 private:
  Flavor f_ = Flavor::Penrose;
  Point p1_, p2_;
  // x = (sum a_j u[0][j] + sqrt(D) sum a_j v[0][j]) / den[0], same for y.
  std::array<std::array<std::int64_t, 4>, 2> u_{}, v_{};
  std::array<std::int64_t, 2> den_{1, 1};
};

}  // namespace tilecode
