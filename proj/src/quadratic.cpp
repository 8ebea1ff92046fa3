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

#include "tilecode/quadratic.hpp"

#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tilecode {

namespace {

constexpr mp_bitcnt_t kFloatBits = 320;

mpf_class to_mpf(const QuadraticValue &v) {
  mpf_class a(v.a(), kFloatBits);
  if (v.b() == 0) return a;
  mpf_class r(v.d(), kFloatBits);
  r = sqrt(r);
  mpf_class b(v.b(), kFloatBits);
  return a + b * r;
}

}  // namespace

QuadraticValue::QuadraticValue(long v) : a_(v) {}

QuadraticValue::QuadraticValue(mpq_class a) : a_(std::move(a)) { a_.canonicalize(); }

QuadraticValue::QuadraticValue(mpq_class a, mpq_class b, int d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d < 0) throw std::invalid_argument("radicand must be nonnegative");
  a_.canonicalize();
  b_.canonicalize();
  normalize();
}

QuadraticValue QuadraticValue::sqrt_of(int d) { return QuadraticValue(0, 1, d); }

QuadraticValue QuadraticValue::rational(long num, long den) { return QuadraticValue(mpq_class(num, den)); }

void QuadraticValue::normalize() {
  // squarefree radicand
  for (int f = 2; f * f <= d_; ++f) {
    while (d_ % (f * f) == 0) {
      d_ /= f * f;
      b_ *= f;
    }
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
  if (d_ == 0) b_ = 0;
}

int QuadraticValue::merged_d(const QuadraticValue &o) const {
  if (b_ == 0) return o.b_ == 0 ? (d_ ? d_ : o.d_) : o.d_;
  if (o.b_ == 0) return d_;
  if (d_ != o.d_) throw std::invalid_argument("mixing different quadratic fields");
  return d_;
}

int QuadraticValue::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  mpq_class lhs = a_ * a_;
  mpq_class rhs = b_ * b_ * d_;
  return cmp(lhs, rhs) > 0 ? sa : sb;
}

double QuadraticValue::to_double() const { return to_mpf(*this).get_d(); }

mpz_class QuadraticValue::floor() const {
  mpf_class f = to_mpf(*this);
  mpf_class fl(0, kFloatBits);
  mpf_floor(fl.get_mpf_t(), f.get_mpf_t());
  mpz_class k(fl);
  while ((*this - QuadraticValue(mpq_class(k))).sign() < 0) --k;
  while ((*this - QuadraticValue(mpq_class(k + 1))).sign() >= 0) ++k;
  return k;
}

mpz_class QuadraticValue::ceil() const {
  mpz_class f = (-*this).floor();
  return -f;
}

QuadraticValue QuadraticValue::conjugate() const { return QuadraticValue(a_, -b_, d_); }

mpq_class QuadraticValue::norm() const { return a_ * a_ - b_ * b_ * d_; }

QuadraticValue &QuadraticValue::operator+=(const QuadraticValue &o) {
  int d = merged_d(o);
  a_ += o.a_;
  b_ += o.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadraticValue &QuadraticValue::operator-=(const QuadraticValue &o) {
  int d = merged_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  d_ = d;
  normalize();
  return *this;
}

QuadraticValue &QuadraticValue::operator*=(const QuadraticValue &o) {
  int d = merged_d(o);
  if (b_ == 0 && o.b_ == 0) {
    a_ *= o.a_;
  } else {
    mpq_class na = a_ * o.a_ + b_ * o.b_ * d;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
  }
  d_ = d;
  normalize();
  return *this;
}

QuadraticValue &QuadraticValue::operator/=(const QuadraticValue &o) {
  if (o.a_ == 0 && o.b_ == 0) throw std::domain_error("division by zero");
  if (o.b_ == 0) {
    a_ /= o.a_;
    b_ /= o.a_;
    return *this;
  }
  mpq_class n = o.norm();
  QuadraticValue inv(o.a_ / n, -o.b_ / n, o.d_);
  return *this *= inv;
}

QuadraticValue QuadraticValue::operator-() const { return QuadraticValue(-a_, -b_, d_); }

bool operator==(const QuadraticValue &x, const QuadraticValue &y) {
  if (x.b_ != 0 && y.b_ != 0 && x.d_ != y.d_) return false;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

std::strong_ordering operator<=>(const QuadraticValue &x, const QuadraticValue &y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string QuadraticValue::str() const {
  std::string out = a_.get_str();
  if (b_ == 0) return out;
  mpq_class mag = abs(b_);
  std::string rad = "sqrt(" + std::to_string(d_) + ")";
  std::string coef = mag == 1 ? rad : mag.get_str() + "*" + rad;
  if (a_ == 0) return (b_ < 0 ? "-" : "") + coef;
  return out + (b_ < 0 ? " - " : " + ") + coef;
}

std::string QuadraticValue::decimal(int digits) const {
  mpf_class f = to_mpf(*this);
  std::ostringstream ss;
  ss.setf(std::ios::fixed);
  ss.precision(digits);
  ss << f;
  return ss.str();
}

size_t QuadraticValue::hash() const {
  size_t h1 = std::hash<std::string>()(a_.get_str());
  size_t h2 = std::hash<std::string>()(b_.get_str());
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}

std::ostream &operator<<(std::ostream &out, const QuadraticValue &v) { return out << v.str(); }

QuadraticValue pow(const QuadraticValue &x, unsigned e) {
  QuadraticValue r(1);
  QuadraticValue base = x;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

QuadraticValue golden_tau() { return QuadraticValue(mpq_class(-1, 2), mpq_class(1, 2), 5); }
QuadraticValue golden_phi() { return QuadraticValue(mpq_class(1, 2), mpq_class(1, 2), 5); }
QuadraticValue silver_ratio() { return QuadraticValue(1, 1, 2); }

}  // namespace tilecode
