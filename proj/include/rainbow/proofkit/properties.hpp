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

// Checks of properties (P1)-(P7) on a switch state. Every failed property
// carries the step index and the edge or vertex that breaks it.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/proofkit/state.hpp"

namespace rainbow::proofkit {

struct PropertyCheck {
  bool holds = true;
  int step = 0;  // the index i at which the property fails
  std::optional<ColouredEdge> edge;
  std::optional<Vertex> vertex;
  std::optional<int> colour;
  std::string detail;
};

struct PropertyReport {
  std::array<PropertyCheck, 7> checks;

  // which in [1, 7]
  const PropertyCheck& operator[](int which) const {
    return checks.at(static_cast<std::size_t>(which - 1));
  }
  PropertyCheck& operator[](int which) { return checks.at(static_cast<std::size_t>(which - 1)); }

  bool all() const {
    for (const auto& c : checks) {
      if (!c.holds) return false;
    }
    return true;
  }

  std::vector<int> failed() const {
    std::vector<int> out;
    for (int p = 1; p <= 7; ++p) {
      if (!(*this)[p].holds) out.push_back(p);
    }
    return out;
  }
};

namespace detail {

inline void fail(PropertyCheck& c, int step, std::string detail) {
  if (!c.holds) return;  // keep the first witness
  c.holds = false;
  c.step = step;
  c.detail = std::move(detail);
}

}  // namespace detail

// Assumes structural_violations(st) is empty. P4 compares against
// ceil(s_k) in strict mode and only checks |X_k| = |Y_k| in relaxed mode.
inline PropertyReport verify_properties(const SwitchState& st) {
  PropertyReport rep;
  const auto& inst = st.instance();
  const int k = st.k();
  const auto sat = saturated_sets(st.r);

  for (int i = 1; i <= k; ++i) {
    const auto step = " at i = " + std::to_string(i);

    // P1: e_i in F_pi(i)
    if (st.e(i).colour != st.pi_of(i) || !inst.contains(st.e(i))) {
      auto& c = rep[1];
      detail::fail(c, i, "e_i = " + to_string(st.e(i)) + " is not in F_pi(i)" + step);
      c.edge = st.e(i);
    }

    // P2: g_i in F_pi(j) for some j < i
    if (!st.pi_index(st.g(i).colour, i) || !inst.contains(st.g(i))) {
      auto& c = rep[2];
      if (c.holds) {
        detail::fail(c, i, "g_i = " + to_string(st.g(i)) + " is not in any earlier F_pi(j)" + step);
        c.edge = st.g(i);
      }
    }

    // P5: a colour with an r-edge inside X_i x Y_i has an edge x_i -> B \ Y
    for (const auto& f : st.r.edges()) {
      if (!st.X(i).contains(f.edge.a) || !st.Y(i).contains(f.edge.b)) continue;
      const auto mate = inst.mate_of_a(f.colour, st.x(i));
      if (!mate || sat.y.contains(*mate)) {
        auto& c = rep[5];
        if (c.holds) {
          detail::fail(c, i,
                       "F_" + std::to_string(f.colour) + " meets r at " + to_string(f.edge) +
                           " but has no edge from x_i to B \\ Y" + step);
          c.edge = f;
          c.colour = f.colour;
        }
      }
    }

    // P6: every w in Y_i \ Y_(i-1) has a free partner in F_pi(i-1)
    const auto z_prev = st.z_set(i - 1);
    for (int w : st.Y(i)) {
      if (st.Y(i - 1).contains(w)) continue;
      const auto v = inst.mate_of_b(st.pi_of(i - 1), w);
      if (!v || sat.x.contains(*v) || z_prev.contains(*v)) {
        auto& c = rep[6];
        if (c.holds) {
          detail::fail(c, i,
                       "b" + std::to_string(w) +
                           " has no partner in F_pi(i-1) outside X and earlier z" + step);
          c.vertex = b_vertex(w);
        }
      }
    }

    // P7: g_i in F_pi(j) implies z_i outside X u {z_1..z_j}
    if (const auto j = st.pi_index(st.g(i).colour, i)) {
      if (sat.x.contains(st.z(i)) || st.z_set(*j).contains(st.z(i))) {
        auto& c = rep[7];
        if (c.holds) {
          detail::fail(c, i,
                       "z_i = a" + std::to_string(st.z(i)) +
                           " repeats an earlier z of its colour chain" + step);
          c.edge = st.g(i);
        }
      }
    }
  }

  // P3: e_1..e_k avoid X_k and Y_k
  for (int i = 1; i <= k && rep[3].holds; ++i) {
    if (st.X(k).contains(st.x(i))) {
      detail::fail(rep[3], k, "x_" + std::to_string(i) + " lies in X_k");
      rep[3].vertex = a_vertex(st.x(i));
    } else if (st.Y(k).contains(st.y(i))) {
      detail::fail(rep[3], k, "y_" + std::to_string(i) + " lies in Y_k");
      rep[3].vertex = b_vertex(st.y(i));
    }
  }

  // P4: |X_k| = |Y_k| (= s_k in strict mode)
  const auto xs = static_cast<std::int64_t>(st.X(k).size());
  const auto ys = static_cast<std::int64_t>(st.Y(k).size());
  if (xs != ys) {
    detail::fail(rep[4], k, "|X_k| != |Y_k|");
  } else if (st.mode == Mode::strict && k > 0 && xs != ceil_int(s_k(k, st.eps, st.n()))) {
    detail::fail(
        rep[4], k,
        "|X_k| = " + std::to_string(xs) + " but s_k = " + to_string(s_k(k, st.eps, st.n())));
  }
  return rep;
}

}  // namespace rainbow::proofkit
