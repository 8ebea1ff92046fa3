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

#include "tilecode/fibonacci.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tilecode/recovery.hpp"
#include "tilecode/substitution.hpp"

namespace tilecode {

Word to_word(const Bits &bits) { return fibonacci_rule().alphabet().parse(bits); }

Bits from_word(const Word &w) { return fibonacci_rule().alphabet().format(w); }

std::uint64_t fib(unsigned k) {
  if (k > 90) throw std::out_of_range("Fibonacci index too large");
  std::uint64_t a = 1, b = 1;
  for (unsigned i = 0; i < k; ++i) {
    std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

unsigned fib_tier(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  unsigned k = 0;
  while (n > fib(k) - 1) ++k;
  return k;
}

Bits inflate_bits(const Bits &bits, unsigned steps) {
  Bits cur = bits;
  for (unsigned s = 0; s < steps; ++s) {
    Bits next;
    next.reserve(cur.size() * 2);
    for (char c : cur) {
      if (c == '1') {
        next += "10";
      } else if (c == '0') {
        next += '1';
      } else {
        throw std::invalid_argument("not a binary word");
      }
    }
    cur = std::move(next);
  }
  return cur;
}

bool is_singular(const QuadraticValue &gamma) {
  if (gamma.b() != 0 && gamma.d() != 5) return false;
  mpq_class two_s = gamma.b() * 2;
  if (two_s.get_den() != 1) return false;
  mpq_class r_plus_s = gamma.a() + gamma.b();
  return r_plus_s.get_den() == 1;
}

Bits cut_and_project(const QuadraticValue &gamma, long lo, long hi, SingularConvention convention) {
  if (lo > hi) throw std::invalid_argument("empty range");
  if (gamma.b() != 0 && gamma.d() != 5) throw std::invalid_argument("gamma must lie in Q(sqrt5)");
  if (convention == SingularConvention::Refuse && is_singular(gamma)) {
    throw std::domain_error("singular gamma: choose a convention explicitly");
  }
  const QuadraticValue tau = golden_tau();
  const QuadraticValue threshold = QuadraticValue(1) - tau;
  QuadraticValue x = tau * QuadraticValue(lo) + gamma;
  bool right = convention == SingularConvention::RightClosed;
  // y is the representative of x mod 1 in [0,1), or (0,1] for right-closed.
  QuadraticValue y = right ? x - QuadraticValue(mpq_class(x.ceil())) + QuadraticValue(1)
                           : x - QuadraticValue(mpq_class(x.floor()));
  Bits out;
  out.reserve(static_cast<size_t>(hi - lo + 1));
  for (long n = lo; n <= hi; ++n) {
    int c = (y - threshold).sign();
    out.push_back((right ? c > 0 : c >= 0) ? '1' : '0');
    y += tau;
    int over = (y - QuadraticValue(1)).sign();
    if (right ? over > 0 : over >= 0) y -= QuadraticValue(1);
  }
  return out;
}

bool is_legal(const Bits &w) {
  Bits cur = w;
  for (char c : cur) {
    if (c != '0' && c != '1') return false;
  }
  while (cur.size() > 1) {
    auto p = try_parent_string(cur);
    if (!p) return false;
    cur = std::move(*p);
  }
  return true;
}

std::size_t complexity(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  return legal_words(fibonacci_rule(), n).size();
}

FrequencySpectrum spectrum(std::size_t n) {
  FrequencySpectrum s;
  s.n = n;
  s.k = fib_tier(n);
  const QuadraticValue tau = golden_tau();
  for (const Word &w : legal_words(fibonacci_rule(), n)) {
    SpectrumEntry e;
    e.word = from_word(w);
    // Each deflation step preserves occurrence counts and divides the length
    // by the golden ratio, so nu(K) = tau * nu(D(K)) and nu("") = 1.
    Bits cur = e.word;
    while (!cur.empty()) {
      cur = parent_string(cur);
      ++e.exponent;
    }
    e.frequency = pow(tau, e.exponent);
    s.entries.push_back(std::move(e));
  }
  std::sort(s.entries.begin(), s.entries.end(),
            [](const SpectrumEntry &a, const SpectrumEntry &b) { return a.word < b.word; });
  return s;
}

TierSizes expected_tier_sizes(std::size_t n) {
  unsigned k = fib_tier(n);
  TierSizes t;
  t.at_k = n - fib(k - 1) + 1;
  t.at_k1 = n - fib(k - 2) + 1;
  t.at_k2 = fib(k) - n - 1;
  return t;
}

EntropyValue entanglement_entropy(std::size_t n) {
  EntropyValue v;
  for (const auto &e : spectrum(n).entries) {
    double nu = e.frequency.to_double();
    v.direct -= nu * std::log(nu);
  }
  unsigned k = fib_tier(n);
  TierSizes t = expected_tier_sizes(n);
  const long double tau = (std::sqrt(5.0L) - 1) / 2;
  long double sum = static_cast<long double>(t.at_k) * k * std::pow(tau, k) +
                    static_cast<long double>(t.at_k1) * (k - 1) * std::pow(tau, k - 1) +
                    static_cast<long double>(t.at_k2) * (k - 2) * std::pow(tau, k - 2);
  v.closed_form = static_cast<double>(sum * std::log(1 / tau));
  return v;
}

}  // namespace tilecode
