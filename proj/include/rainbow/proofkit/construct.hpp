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

// The sets N_k, the premise searches of the first two claims, and the
// pigeonhole choice of x_(k+1), X_(k+1), Y_(k+1).

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/proofkit/state.hpp"

namespace rainbow::proofkit {

// Raised when no vertex meets the pigeonhole threshold.
class PigeonholeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An edge of F_pi(k) between A \ (X u {z_1..z_k}) and B \ Y.
struct Claim1Premise {
  ColouredEdge g;
};

// g in F_pi(k) from A \ (X u {z_1..z_k}) into Y_k, the r-edge e at g's
// B-endpoint, and e_bar in e's class from x_k to B \ Y.
struct Claim2Premise {
  ColouredEdge g;
  ColouredEdge e;
  ColouredEdge e_bar;
};

namespace detail {

inline VertexSet blocked_a(const SwitchState& st, const Saturation& sat, int z_upto) {
  VertexSet out = sat.x;
  const auto zs = st.z_set(z_upto);
  out.insert(zs.begin(), zs.end());
  return out;
}

}  // namespace detail

// First (lexicographic) edge of F_pi(k) between A \ (X u {z_1..z_k}) and B \ Y.
inline std::optional<Claim1Premise> find_claim1_premise(const SwitchState& st) {
  const auto sat = saturated_sets(st.r);
  const auto blocked = detail::blocked_a(st, sat, st.k());
  const int colour = st.pi_of(st.k());
  for (const Edge& e : st.instance().edges(colour)) {
    if (!blocked.contains(e.a) && !sat.y.contains(e.b)) return Claim1Premise{{e, colour}};
  }
  return std::nullopt;
}

inline std::optional<Claim2Premise> find_claim2_premise(const SwitchState& st) {
  const int k = st.k();
  if (k == 0) return std::nullopt;
  const auto& inst = st.instance();
  const auto sat = saturated_sets(st.r);
  const auto blocked = detail::blocked_a(st, sat, k);
  const int colour = st.pi_of(k);
  for (const Edge& edge : inst.edges(colour)) {
    if (blocked.contains(edge.a) || !st.Y(k).contains(edge.b)) continue;
    const auto e = st.r.at_b(edge.b);
    if (!e) continue;
    const auto bar = inst.mate_of_a(e->colour, st.x(k));
    if (!bar || sat.y.contains(*bar)) continue;
    return Claim2Premise{{edge, colour}, *e, {{st.x(k), *bar}, e->colour}};
  }
  return std::nullopt;
}

// Every w in Y \ (Y_k u {y_1..y_k}) with a partner v in F_pi(k), v outside
// X u {z_1..z_k}. No truncation.
inline VertexSet nk_candidates(const SwitchState& st) {
  const int k = st.k();
  const auto& inst = st.instance();
  const auto sat = saturated_sets(st.r);
  const auto blocked = detail::blocked_a(st, sat, k);
  VertexSet used_y;
  for (int i = 1; i <= k; ++i) used_y.insert(st.y(i));
  VertexSet out;
  for (int w : sat.y) {
    if (st.Y(k).contains(w) || used_y.contains(w)) continue;
    const auto v = inst.mate_of_b(st.pi_of(k), w);
    if (v && !blocked.contains(*v)) out.insert(w);
  }
  return out;
}

// N_k: in strict mode the ceil((1/2+eps)n + 1 - 2k) smallest candidates
// (all of them if there are fewer); in relaxed mode every candidate.
// The premises of the first two claims must be absent.
inline VertexSet construct_Nk(const SwitchState& st) {
  if (find_claim1_premise(st) || find_claim2_premise(st)) {
    throw PreconditionError("construct_Nk: a claim premise exists, augment instead");
  }
  auto all = nk_candidates(st);
  if (st.mode == Mode::relaxed) return all;
  const auto want = ceil_int(n_k_required(st.k(), st.eps, st.n()));
  VertexSet out;
  for (int w : all) {
    if (static_cast<std::int64_t>(out.size()) >= want) break;
    out.insert(w);
  }
  return out;
}

inline VertexSet construct_N0(const SwitchState& st) {
  if (st.k() != 0) throw PreconditionError("construct_N0: needs k = 0");
  return construct_Nk(st);
}

struct Selection {
  int x_next = -1;
  VertexSet x_set;
  VertexSet y_set;
  std::size_t served = 0;  // before strict-mode truncation
};

// Every admissible choice of x_(k+1), best first: x ranks by how many
// vertices v of x_prime it serves (v's r-edge lies in R[x_prime, y_prime]
// and v's colour has an edge from x to B \ Y), ties to the smaller index.
// The chosen X_(k+1) keeps the served vertices; strict mode truncates to
// `threshold` of them. Choices serving fewer than `threshold` are dropped.
inline std::vector<Selection> pigeonhole_choices(const SwitchState& st, const VertexSet& x_prime,
                                                 const VertexSet& y_prime, std::int64_t threshold) {
  const auto& inst = st.instance();
  const auto sat = saturated_sets(st.r);
  std::vector<std::pair<VertexSet, int>> served;
  for (int x : x_prime) {
    VertexSet good;
    for (int v : x_prime) {
      if (v == x) continue;
      const auto f = st.r.at_a(v);
      if (!f || !y_prime.contains(f->edge.b)) continue;
      const auto mate = inst.mate_of_a(f->colour, x);
      if (mate && !sat.y.contains(*mate)) good.insert(v);
    }
    if (static_cast<std::int64_t>(good.size()) >= std::max<std::int64_t>(threshold, 1)) {
      served.emplace_back(std::move(good), x);
    }
  }
  std::stable_sort(served.begin(), served.end(),
                   [](const auto& l, const auto& r) { return l.first.size() > r.first.size(); });
  std::vector<Selection> out;
  for (auto& [good, x] : served) {
    Selection sel;
    sel.x_next = x;
    sel.served = good.size();
    if (st.mode == Mode::strict) {
      for (int v : good) {
        if (static_cast<std::int64_t>(sel.x_set.size()) >= threshold) break;
        sel.x_set.insert(v);
      }
    } else {
      sel.x_set = std::move(good);
    }
    sel.y_set = neighbourhood_along(st.r, sel.x_set);
    out.push_back(std::move(sel));
  }
  return out;
}

inline Selection pigeonhole_select_with_threshold(const SwitchState& st, const VertexSet& x_prime,
                                                  const VertexSet& y_prime,
                                                  std::int64_t threshold) {
  auto choices = pigeonhole_choices(st, x_prime, y_prime, threshold);
  if (choices.empty()) {
    throw PigeonholeError("no vertex of X' serves " + std::to_string(threshold) +
                          " colours; a third-claim premise must exist");
  }
  return std::move(choices.front());
}

// Threshold ceil(s_(k+1)) in strict mode, 1 in relaxed mode.
inline Selection pigeonhole_select(const SwitchState& st, const VertexSet& x_prime,
                                   const VertexSet& y_prime) {
  return pigeonhole_select_with_threshold(st, x_prime, y_prime,
                                          required_size(st.mode, s_k(st.k() + 1, st.eps, st.n())));
}

}  // namespace rainbow::proofkit
