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

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace tilecode {

// Exact element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
//
// d == 0 marks a plain rational; such values combine with any field. Mixing
// two different nonzero radicands throws std::invalid_argument.
class QuadraticValue {
 public:
  QuadraticValue() = default;
  QuadraticValue(long v);  // NOLINT(google-explicit-constructor)
  QuadraticValue(mpq_class a);  // NOLINT(google-explicit-constructor)
  QuadraticValue(mpq_class a, mpq_class b, int d);

  static QuadraticValue sqrt_of(int d);  // the value sqrt(d)
  static QuadraticValue rational(long num, long den);

  const mpq_class &a() const { return a_; }
  const mpq_class &b() const { return b_; }
  int d() const { return d_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  double to_double() const;
  // Largest integer <= value, computed exactly.
  mpz_class floor() const;
  mpz_class ceil() const;
  QuadraticValue conjugate() const;
  // a^2 - d b^2.
  mpq_class norm() const;

  QuadraticValue &operator+=(const QuadraticValue &o);
  QuadraticValue &operator-=(const QuadraticValue &o);
  QuadraticValue &operator*=(const QuadraticValue &o);
  QuadraticValue &operator/=(const QuadraticValue &o);
  QuadraticValue operator-() const;

  friend QuadraticValue operator+(QuadraticValue x, const QuadraticValue &y) { return x += y; }
  friend QuadraticValue operator-(QuadraticValue x, const QuadraticValue &y) { return x -= y; }
  friend QuadraticValue operator*(QuadraticValue x, const QuadraticValue &y) { return x *= y; }
  friend QuadraticValue operator/(QuadraticValue x, const QuadraticValue &y) { return x /= y; }

  friend bool operator==(const QuadraticValue &x, const QuadraticValue &y);
  friend std::strong_ordering operator<=>(const QuadraticValue &x, const QuadraticValue &y);

  // Exact form "a/b + c/d*sqrt(D)"; rationals print without the radical.
  std::string str() const;
  // Fixed-point decimal with the given number of digits after the point.
  std::string decimal(int digits = 12) const;

  size_t hash() const;

 private:
  int merged_d(const QuadraticValue &o) const;
  void normalize();

  mpq_class a_{0};
  mpq_class b_{0};
  int d_ = 0;
};

std::ostream &operator<<(std::ostream &out, const QuadraticValue &v);

QuadraticValue pow(const QuadraticValue &x, unsigned e);

struct QuadraticHash {
  size_t operator()(const QuadraticValue &v) const { return v.hash(); }
};

// Frequently used constants.
QuadraticValue golden_tau();    // (sqrt5 - 1)/2
QuadraticValue golden_phi();    // (sqrt5 + 1)/2
QuadraticValue silver_ratio();  // 1 + sqrt2

}  // namespace tilecode
