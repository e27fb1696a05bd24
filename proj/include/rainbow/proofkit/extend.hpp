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

// One induction step: augment through a claim premise when one exists,
// otherwise build N_k, X'_(k+1), Y'_(k+1) and extend the sequences.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/proofkit/construct.hpp"
#include "rainbow/proofkit/state.hpp"
#include "rainbow/proofkit/switches.hpp"

namespace rainbow::proofkit {

struct Claim3Premise {
  ColouredEdge f;
  ColouredEdge f_bar;
  ColouredEdge zw;
};

struct Extended {
  SwitchState state;
};

struct Augmented {
  RainbowMatching matching;
  int claim = 0;                      // 1, 2 or 3
  std::vector<ColouredEdge> premise;  // g | g, e, e_bar | f, f_bar, zw
};

// A cardinality demanded by the current mode is not available.
struct ThresholdInfeasible {
  std::string formula;  // "s_{k+1}", "N_k" or "pigeonhole"
  Rational required;
  std::int64_t available = 0;
};

using StepOutcome = std::variant<Extended, Augmented, ThresholdInfeasible>;

// N_k as the current mode defines it (see construct_Nk), without the
// premise precondition.
inline VertexSet mode_nk(const SwitchState& st) {
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

// First r-edge f = vw (lexicographic) with w in Y_k u N_k whose class has
// an edge f_bar from A \ (X u {z_1..z_k, z}) to B \ Y, where zw is the
// connecting edge given by P6 (w in Y_k) or by N_k.
inline std::optional<Claim3Premise> find_claim3_premise(const SwitchState& st,
                                                        const VertexSet& n_k) {
  const auto& inst = st.instance();
  const int k = st.k();
  const auto sat = saturated_sets(st.r);
  std::vector<ColouredEdge> fs(st.r.edges().begin(), st.r.edges().end());
  std::sort(fs.begin(), fs.end(),
            [](const ColouredEdge& l, const ColouredEdge& r) { return l.edge < r.edge; });
  const auto zs = st.z_set(k);
  for (const auto& f : fs) {
    const int w = f.edge.b;
    if (!st.Y(k).contains(w) && !n_k.contains(w)) continue;
    if (st.in_pi_image(f.colour)) continue;
    const auto cs = claim3_case(st, w, n_k);
    const int zc = st.pi_of(cs.chain_start);
    const auto z = inst.mate_of_b(zc, w);
    if (!z || sat.x.contains(*z) || st.z_set(cs.chain_start).contains(*z)) continue;
    for (const Edge& e : inst.edges(f.colour)) {
      if (sat.x.contains(e.a) || zs.contains(e.a) || e.a == *z || sat.y.contains(e.b)) continue;
      return Claim3Premise{f, {e, f.colour}, {{*z, w}, zc}};
    }
  }
  return std::nullopt;
}

// Claims tried in order 1, 2, 3; ties go to the lexicographically first
// edge. N_k follows the state's mode.
inline std::optional<Augmented> find_augmentation(const SwitchState& st) {
  if (const auto p = find_claim1_premise(st)) {
    return Augmented{claim1_switch(st, p->g), 1, {p->g}};
  }
  if (const auto p = find_claim2_premise(st)) {
    return Augmented{claim2_switch(st, p->g, p->e, p->e_bar), 2, {p->g, p->e, p->e_bar}};
  }
  if (const auto p = find_claim3_premise(st, mode_nk(st))) {
    return Augmented{claim3_switch(st, p->f, p->f_bar, p->zw), 3, {p->f, p->f_bar, p->zw}};
  }
  return std::nullopt;
}

// The state after choosing `sel`: e_(k+1) is the r-edge at x_(k+1),
// pi(k+1) its colour, and g_(k+1) = z y_(k+1) with z from N_k's partner
// edge in F_pi(k) if y_(k+1) in N_k, else from P6 at the first layer of
// Y_k containing y_(k+1).
inline SwitchState apply_selection(const SwitchState& st, const VertexSet& n_k,
                                   const Selection& sel) {
  const int k = st.k();
  const auto& inst = st.instance();
  const auto e = st.r.at_a(sel.x_next);
  if (!e) throw SwitchError("extend: x_(k+1) is not saturated by r");
  if (st.in_pi_image(e->colour)) throw SwitchError("extend: e_(k+1)'s colour is already in pi");
  const int y = e->edge.b;
  int c = k;
  if (!n_k.contains(y)) {
    const auto i = st.first_layer_of(y);
    if (!i) throw SwitchError("extend: y_(k+1) lies in neither N_k nor Y_k");
    c = *i - 1;
  }
  const auto z = inst.mate_of_b(st.pi_of(c), y);
  if (!z) throw SwitchError("extend: no partner for y_(k+1) in F_pi(c)");

  SwitchState next = st;
  next.e_seq.push_back(*e);
  next.g_seq.push_back({{*z, y}, st.pi_of(c)});
  next.x_sets.push_back(sel.x_set);
  next.y_sets.push_back(sel.y_set);
  next.pi.push_back(e->colour);
  return next;
}

namespace detail {

struct Frontier {
  std::optional<ThresholdInfeasible> infeasible;
  VertexSet n_k;
  VertexSet x_prime;
  VertexSet y_prime;
  std::int64_t threshold = 1;
};

inline Frontier frontier(const SwitchState& st) {
  Frontier fr;
  const int k = st.k();
  const auto sat = saturated_sets(st.r);
  const auto n = st.n();
  if (st.mode == Mode::strict) {
    const auto s_next = s_k(k + 1, st.eps, n);
    if (ceil_int(s_next) > static_cast<std::int64_t>(sat.y.size())) {
      fr.infeasible =
          ThresholdInfeasible{"s_{k+1}", s_next, static_cast<std::int64_t>(sat.y.size())};
      return fr;
    }
  }
  const auto all = nk_candidates(st);
  const Rational n_req = st.mode == Mode::strict ? n_k_required(k, st.eps, n) : Rational(1);
  if (static_cast<std::int64_t>(all.size()) < required_size(st.mode, n_req)) {
    fr.infeasible = ThresholdInfeasible{"N_k", n_req, static_cast<std::int64_t>(all.size())};
    return fr;
  }
  fr.n_k = mode_nk(st);
  fr.y_prime = st.Y(k);
  fr.y_prime.insert(fr.n_k.begin(), fr.n_k.end());
  fr.x_prime = neighbourhood_along_from_b(st.r, fr.y_prime);
  fr.threshold = required_size(st.mode, s_k(k + 1, st.eps, n));
  return fr;
}

}  // namespace detail

// Every extended state reachable from st, best pigeonhole choice first.
// Does not look for augmentations.
inline std::vector<SwitchState> extension_candidates(const SwitchState& st) {
  std::vector<SwitchState> out;
  const auto fr = detail::frontier(st);
  if (fr.infeasible) return out;
  for (const auto& sel : pigeonhole_choices(st, fr.x_prime, fr.y_prime, fr.threshold)) {
    out.push_back(apply_selection(st, fr.n_k, sel));
  }
  return out;
}

inline StepOutcome extend_state(const SwitchState& st) {
  if (const auto p = find_claim1_premise(st)) {
    return Augmented{claim1_switch(st, p->g), 1, {p->g}};
  }
  if (const auto p = find_claim2_premise(st)) {
    return Augmented{claim2_switch(st, p->g, p->e, p->e_bar), 2, {p->g, p->e, p->e_bar}};
  }
  const auto fr = detail::frontier(st);
  if (fr.infeasible) return *fr.infeasible;
  if (const auto p = find_claim3_premise(st, fr.n_k)) {
    return Augmented{claim3_switch(st, p->f, p->f_bar, p->zw), 3, {p->f, p->f_bar, p->zw}};
  }
  const auto choices = pigeonhole_choices(st, fr.x_prime, fr.y_prime, fr.threshold);
  if (choices.empty()) {
    std::int64_t best = 0;
    for (const auto& sel : pigeonhole_choices(st, fr.x_prime, fr.y_prime, 1)) {
      best = std::max<std::int64_t>(best, static_cast<std::int64_t>(sel.served));
    }
    return ThresholdInfeasible{"pigeonhole", Rational(fr.threshold), best};
  }
  return Extended{apply_selection(st, fr.n_k, choices.front())};
}

}  // namespace rainbow::proofkit
