// Copyright 2026 The Rainbow Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact-rational cardinality formulas of the switching argument.

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rainbow/core.hpp"

namespace rainbow::proofkit {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

inline std::int64_t floor_int(const Rational& q) {
  const auto n = q.numerator();
  const auto d = q.denominator();  // always > 0 after normalisation
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

inline std::int64_t ceil_int(const Rational& q) { return -floor_int(-q); }

// A strictly positive rational.
class Epsilon {
 public:
  Epsilon() = default;
  explicit Epsilon(Rational value) : value_(value) {
    if (value_ <= 0) throw PreconditionError("epsilon must be > 0");
  }
  Epsilon(std::int64_t num, std::int64_t den) : Epsilon(Rational(num, den)) {}

  // "p/q" or "p".
  static Epsilon parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
      std::size_t used = 0;
      const std::string num(text.substr(0, slash));
      const auto p = std::stoll(num, &used);
      if (used != num.size()) throw std::invalid_argument("trailing");
      std::int64_t q = 1;
      if (slash != std::string_view::npos) {
        const std::string den(text.substr(slash + 1));
        q = std::stoll(den, &used);
        if (used != den.size()) throw std::invalid_argument("trailing");
      }
      if (q == 0) throw std::invalid_argument("zero denominator");
      return Epsilon(p, q);
    } catch (const PreconditionError&) {
      throw;
    } catch (const std::exception&) {
      throw PreconditionError("epsilon must be a rational \"p/q\", got \"" + std::string(text) +
                              "\"");
    }
  }

  const Rational& value() const { return value_; }
  std::string str() const { return to_string(value_); }

  friend bool operator==(const Epsilon&, const Epsilon&) = default;

 private:
  Rational value_{1};
};

// strict: the asymptotic cardinalities; relaxed: every threshold is 1.
enum class Mode { strict, relaxed };

inline const char* to_string(Mode m) { return m == Mode::strict ? "strict" : "relaxed"; }

// Smallest t >= 1 with 1/(2t-1) <= eps, i.e. 2t-1 >= q/p.
inline int smallest_t(const Epsilon& eps) {
  const auto p = eps.value().numerator();
  const auto q = eps.value().denominator();
  const auto t = ceil_int(Rational(q + p, 2 * p));
  return static_cast<int>(std::max<std::int64_t>(1, t));
}

// |X_k| = |Y_k| = 2k eps n + k(7-3k)/2.
inline Rational s_k(int k, const Epsilon& eps, std::int64_t n) {
  return Rational(2 * k) * eps.value() * n + Rational(k * (7 - 3 * k), 2);
}

// |X'_{k+1}| = |Y'_{k+1}| = n/2 + (2k+1) eps n + (-3k^2+3k+2)/2.
inline Rational size_xy_prime(int k, const Epsilon& eps, std::int64_t n) {
  return Rational(n, 2) + Rational(2 * k + 1) * eps.value() * n +
         Rational(-3 * k * k + 3 * k + 2, 2);
}

// Lower bound on the edges of F_pi(k) from the free A-side into
// Y \ (Y_k u {y_1..y_k}): (1/2 + eps) n + 1 - 2k.
inline Rational n_k_required(int k, const Epsilon& eps, std::int64_t n) {
  return (Rational(1, 2) + eps.value()) * n + 1 - 2 * k;
}

// |X u {z_1..z_k, z}| - |X'_{k+1}| <= (n + k) - size_xy_prime(k).
inline Rational claim3_slack(int k, const Epsilon& eps, std::int64_t n) {
  return Rational(n + k) - size_xy_prime(k, eps, n);
}

// Edges every colour of R_{k+1} must have between X'_{k+1} and B \ Y,
// derived as (1/2 + eps) n + 1 minus the slack above. Equals s_{k+1}.
inline Rational claim3_edge_lower_bound(int k, const Epsilon& eps, std::int64_t n) {
  return (Rational(1, 2) + eps.value()) * n + 1 - claim3_slack(k, eps, n);
}

// Smallest n >= 1 with 2 t eps n + t(7-3t)/2 > n for t = smallest_t(eps).
// The slope 2 t eps - 1 is positive by the choice of t.
inline std::int64_t contradiction_threshold(const Epsilon& eps) {
  const int t = smallest_t(eps);
  const Rational slope = Rational(2 * t) * eps.value() - 1;
  const Rational deficit(t * (3 * t - 7), 2);
  // n * slope > deficit  <=>  n > deficit / slope
  const auto n = floor_int(deficit / slope) + 1;
  return std::max<std::int64_t>(1, n);
}

// Integer size demanded by a cardinality bound in the given mode; bounds
// are "at least" statements, so strict mode rounds up.
inline std::int64_t required_size(Mode mode, const Rational& bound) {
  return mode == Mode::strict ? ceil_int(bound) : 1;
}

}  // namespace rainbow::proofkit
