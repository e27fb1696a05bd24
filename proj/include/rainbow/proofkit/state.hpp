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

// The induction state of the switching argument: a rainbow matching r that
// avoids colour 0, sequences e_i in r and g_i = z_i y_i outside r, vertex
// sets X_i, Y_i and the injection pi with pi(0) = 0.
//
// Indices follow the argument: e(1) is the first edge, X(0) = Y(0) = {}.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/proofkit/formulas.hpp"

namespace rainbow::proofkit {

struct SwitchState {
  std::shared_ptr<const Instance> inst;
  RainbowMatching r;
  Epsilon eps;
  int t = 1;
  Mode mode = Mode::relaxed;
  std::vector<ColouredEdge> e_seq;
  std::vector<ColouredEdge> g_seq;
  std::vector<VertexSet> x_sets;
  std::vector<VertexSet> y_sets;
  std::vector<int> pi{0};

  int k() const { return static_cast<int>(e_seq.size()); }
  int n() const { return inst->n_colours(); }
  const Instance& instance() const { return *inst; }

  const ColouredEdge& e(int i) const { return e_seq.at(static_cast<std::size_t>(i - 1)); }
  const ColouredEdge& g(int i) const { return g_seq.at(static_cast<std::size_t>(i - 1)); }
  int x(int i) const { return e(i).edge.a; }
  int y(int i) const { return e(i).edge.b; }
  int z(int i) const { return g(i).edge.a; }
  int pi_of(int i) const { return pi.at(static_cast<std::size_t>(i)); }

  const VertexSet& X(int i) const {
    static const VertexSet empty;
    return i == 0 ? empty : x_sets.at(static_cast<std::size_t>(i - 1));
  }
  const VertexSet& Y(int i) const {
    static const VertexSet empty;
    return i == 0 ? empty : y_sets.at(static_cast<std::size_t>(i - 1));
  }

  // {z_1, ..., z_upto}
  VertexSet z_set(int upto) const {
    VertexSet out;
    for (int i = 1; i <= upto; ++i) out.insert(z(i));
    return out;
  }

  // j in [0, below) with pi(j) == colour.
  std::optional<int> pi_index(int colour, int below) const {
    for (int j = 0; j < below && j < static_cast<int>(pi.size()); ++j) {
      if (pi[static_cast<std::size_t>(j)] == colour) return j;
    }
    return std::nullopt;
  }

  bool in_pi_image(int colour) const { return pi_index(colour, k() + 1).has_value(); }

  // Some i in [1, k] with w in Y_i \ Y_(i-1), scanning down from k while w
  // stays in the previous set. Requires w in Y_k.
  std::optional<int> first_layer_of(int w) const {
    if (k() == 0 || !Y(k()).contains(w)) return std::nullopt;
    int i = k();
    while (Y(i - 1).contains(w)) --i;
    return i;
  }

  SwitchState with_instance(std::shared_ptr<const Instance> other) const {
    SwitchState copy = *this;
    copy.inst = std::move(other);
    return copy;
  }
};

// The k = 0 state rooted at r. r must be a rainbow matching of the instance
// that does not use colour 0.
inline SwitchState initial_state(std::shared_ptr<const Instance> inst, RainbowMatching r,
                                 Epsilon eps, Mode mode) {
  if (!inst || inst->n_colours() < 1) {
    throw PreconditionError("initial_state: the instance needs a colour 0");
  }
  if (!is_rainbow_in(*inst, r)) {
    throw PreconditionError("initial_state: r is not a rainbow matching of the instance");
  }
  if (r.uses_colour(0)) {
    throw PreconditionError("initial_state: r must not use colour 0 (relabel first)");
  }
  SwitchState st;
  st.inst = std::move(inst);
  st.r = std::move(r);
  st.eps = eps;
  st.t = smallest_t(eps);
  st.mode = mode;
  return st;
}

// Checks the shape of the state: sequence lengths, pi injective with
// pi(0) = 0, e_i distinct edges of r, g_i distinct with g_i = z_i y_i and
// z_i outside X, X_i within X, Y_i = N(X_i | r).
inline std::vector<std::string> structural_violations(const SwitchState& st) {
  std::vector<std::string> out;
  if (!st.inst) {
    out.push_back("state has no instance");
    return out;
  }
  const int k = st.k();
  const auto& inst = *st.inst;
  if (static_cast<int>(st.g_seq.size()) != k || static_cast<int>(st.x_sets.size()) != k ||
      static_cast<int>(st.y_sets.size()) != k || static_cast<int>(st.pi.size()) != k + 1) {
    out.push_back("sequence lengths disagree with k = " + std::to_string(k));
    return out;
  }
  if (st.pi[0] != 0) out.push_back("pi(0) must be 0");
  {
    std::set<int> seen;
    for (int j = 0; j <= k; ++j) {
      const int c = st.pi_of(j);
      if (c < 0 || c >= inst.n_colours()) {
        out.push_back("pi(" + std::to_string(j) + ") out of range");
      } else if (!seen.insert(c).second) {
        out.push_back("pi is not injective at " + std::to_string(j));
      }
    }
  }
  if (!is_rainbow_in(inst, st.r)) out.push_back("r is not a rainbow matching of the instance");
  if (st.r.uses_colour(0)) out.push_back("r uses colour 0");
  const auto sat = saturated_sets(st.r);
  std::set<ColouredEdge> es, gs;
  for (int i = 1; i <= k; ++i) {
    const auto tag = " (i = " + std::to_string(i) + ")";
    if (!st.r.contains(st.e(i))) out.push_back("e_i is not an edge of r" + tag);
    if (!es.insert(st.e(i)).second) out.push_back("e_i repeats" + tag);
    if (!gs.insert(st.g(i)).second) out.push_back("g_i repeats" + tag);
    if (st.g(i).edge.b != st.y(i)) out.push_back("g_i does not end at y_i" + tag);
    if (sat.x.contains(st.z(i))) out.push_back("z_i is saturated by r" + tag);
    for (int v : st.X(i)) {
      if (!sat.x.contains(v)) out.push_back("X_i is not inside X" + tag);
    }
    if (st.Y(i) != neighbourhood_along(st.r, st.X(i))) {
      out.push_back("Y_i is not the r-neighbourhood of X_i" + tag);
    }
  }
  return out;
}

}  // namespace rainbow::proofkit
