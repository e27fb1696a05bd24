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

// Colour chains and the three exchanges that turn a switch state plus a
// premise edge into a rainbow matching one larger than r.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/proofkit/construct.hpp"
#include "rainbow/proofkit/state.hpp"

namespace rainbow::proofkit {

// The exchange produced something that is not a larger rainbow matching.
// Cannot happen on a state that passes verify_properties.
class SwitchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// j_1 > j_2 > ... > j_s = 0 with g_i in F_pi(j_1) and g_(j_l) in
// F_pi(j_(l+1)). Requires 1 <= i <= k.
inline std::vector<int> colour_chain(const SwitchState& st, int i) {
  if (i < 1 || i > st.k()) throw PreconditionError("colour_chain: need 1 <= i <= k");
  std::vector<int> chain;
  int cur = i;
  while (cur > 0) {
    const auto j = st.pi_index(st.g(cur).colour, cur);
    if (!j) {
      throw PreconditionError("colour_chain: g_" + std::to_string(cur) +
                              " is not in an earlier pi-class (P2 broken)");
    }
    chain.push_back(*j);
    cur = *j;
  }
  return chain;
}

struct Exchange {
  std::vector<ColouredEdge> removed;
  std::vector<ColouredEdge> added;
};

// Chain part of every switch, started at index c: drop e_c, e_(j_1), ...,
// e_(j_(s-1)) and add g_c, g_(j_1), ..., g_(j_(s-1)). Empty for c = 0.
inline Exchange chain_exchange(const SwitchState& st, int c) {
  Exchange ex;
  if (c == 0) return ex;
  ex.removed.push_back(st.e(c));
  ex.added.push_back(st.g(c));
  const auto chain = colour_chain(st, c);
  for (std::size_t l = 0; l + 1 < chain.size(); ++l) {
    ex.removed.push_back(st.e(chain[l]));
    ex.added.push_back(st.g(chain[l]));
  }
  return ex;
}

namespace detail {

inline void require(bool ok, const char* op, const std::string& what) {
  if (!ok) throw PreconditionError(std::string(op) + ": " + what);
}

inline RainbowMatching finish(const SwitchState& st, const Exchange& ex, const char* op) {
  RainbowMatching out;
  try {
    out = exchange(st.r, ex.removed, ex.added);
  } catch (const PreconditionError& e) {
    throw SwitchError(std::string(op) + ": " + e.what());
  }
  if (!is_rainbow_in(st.instance(), out) || out.size() != st.r.size() + 1) {
    throw SwitchError(std::string(op) + ": exchange is not a larger rainbow matching");
  }
  return out;
}

}  // namespace detail

// g in F_pi(k) between A \ (X u {z_1..z_k}) and B \ Y:
// (r \ {e_k, e_(j_1), ...}) u {g_k, g_(j_1), ..., g}.
inline RainbowMatching claim1_switch(const SwitchState& st, const ColouredEdge& g) {
  constexpr const char* op = "claim1_switch";
  const int k = st.k();
  const auto sat = saturated_sets(st.r);
  detail::require(g.colour == st.pi_of(k) && st.instance().contains(g), op,
                  "g must be an edge of F_pi(k)");
  detail::require(!sat.x.contains(g.edge.a) && !st.z_set(k).contains(g.edge.a), op,
                  "g must start in A \\ (X u {z_1..z_k})");
  detail::require(!sat.y.contains(g.edge.b), op, "g must end in B \\ Y");
  auto ex = chain_exchange(st, k);
  ex.added.push_back(g);
  return detail::finish(st, ex, op);
}

// g in F_pi(k) from A \ (X u {z_1..z_k}) into Y_k, e the r-edge at g's
// B-endpoint (colour j outside the pi-image), e_bar in F_j from x_k to B \ Y:
// (r \ {e_k, e_(j_1), ..., e}) u {g_k, g_(j_1), ..., e_bar, g}.
inline RainbowMatching claim2_switch(const SwitchState& st, const ColouredEdge& g,
                                     const ColouredEdge& e, const ColouredEdge& e_bar) {
  constexpr const char* op = "claim2_switch";
  const int k = st.k();
  detail::require(k >= 1, op, "needs k >= 1");
  const auto& inst = st.instance();
  const auto sat = saturated_sets(st.r);
  detail::require(g.colour == st.pi_of(k) && inst.contains(g), op, "g must be an edge of F_pi(k)");
  detail::require(!sat.x.contains(g.edge.a) && !st.z_set(k).contains(g.edge.a), op,
                  "g must start in A \\ (X u {z_1..z_k})");
  detail::require(st.Y(k).contains(g.edge.b), op, "g must end in Y_k");
  detail::require(st.r.at_b(g.edge.b) == e, op, "e must be the r-edge adjacent to g");
  detail::require(st.X(k).contains(e.edge.a), op, "e must lie between X_k and Y_k");
  detail::require(!st.in_pi_image(e.colour), op, "e's colour must lie outside the pi-image");
  detail::require(e_bar.colour == e.colour, op, "e_bar must have the colour of e");
  detail::require(inst.contains(e_bar), op, "e_bar must be an edge of its class");
  detail::require(e_bar.edge.a == st.x(k), op, "e_bar must start at x_k");
  detail::require(!sat.y.contains(e_bar.edge.b), op, "e_bar must end in B \\ Y");
  auto ex = chain_exchange(st, k);
  ex.removed.push_back(e);
  ex.added.push_back(e_bar);
  ex.added.push_back(g);
  return detail::finish(st, ex, op);
}

// Which case applies to f = vw in R[X'_(k+1), Y'_(k+1)], and the index c
// whose colour the connecting edge zw must carry: c = j_1 - 1 when w lies in
// Y_(j_1) \ Y_(j_1 - 1) for some j_1 <= k, c = k when w lies in N_k.
struct Claim3Case {
  bool w_in_y_k = false;
  int chain_start = 0;
};

inline Claim3Case claim3_case(const SwitchState& st, int w, const VertexSet& n_k) {
  if (const auto j1 = st.first_layer_of(w)) return {true, *j1 - 1};
  if (n_k.contains(w)) return {false, st.k()};
  throw PreconditionError("claim3_switch: w lies in neither Y_k nor N_k");
}

// f = vw in F_j n R[X'_(k+1), Y'_(k+1)] with j outside the pi-image, zw the
// edge joining w to a free vertex z (in F_pi(j_1 - 1) or F_pi(k)), f_bar in
// F_j from A \ (X u {z_1..z_k, z}) to B \ Y:
// (r \ {e_c, e_(j_2), ..., f}) u {g_c, g_(j_2), ..., f_bar, zw},
// which is (r \ {f}) u {f_bar, zw} when zw lies in F_0.
inline RainbowMatching claim3_switch(const SwitchState& st, const ColouredEdge& f,
                                     const ColouredEdge& f_bar, const ColouredEdge& zw) {
  constexpr const char* op = "claim3_switch";
  const int k = st.k();
  const auto& inst = st.instance();
  const auto sat = saturated_sets(st.r);
  detail::require(st.r.contains(f), op, "f must be an edge of r");
  const auto n_k = st.mode == Mode::strict ? construct_Nk(st) : nk_candidates(st);
  VertexSet y_prime = st.Y(k);
  y_prime.insert(n_k.begin(), n_k.end());
  detail::require(y_prime.contains(f.edge.b), op, "f must lie in R[X'_(k+1), Y'_(k+1)]");
  detail::require(!st.in_pi_image(f.colour), op, "f's colour must lie outside the pi-image");
  const int w = f.edge.b;
  const auto cs = claim3_case(st, w, n_k);
  const int z = zw.edge.a;
  detail::require(zw.edge.b == w, op, "zw must end at w");
  detail::require(
      zw.colour == st.pi_of(cs.chain_start) && inst.contains(zw), op,
      cs.w_in_y_k ? "zw must be an edge of F_pi(j_1 - 1)" : "zw must be an edge of F_pi(k)");
  detail::require(!sat.x.contains(z) && !st.z_set(cs.chain_start).contains(z), op,
                  "z must lie outside X and the z's of its chain");
  detail::require(f_bar.colour == f.colour && inst.contains(f_bar), op,
                  "f_bar must be an edge of f's class");
  detail::require(
      !sat.x.contains(f_bar.edge.a) && !st.z_set(k).contains(f_bar.edge.a) && f_bar.edge.a != z, op,
      "f_bar must start in A \\ (X u {z_1..z_k, z})");
  detail::require(!sat.y.contains(f_bar.edge.b), op, "f_bar must end in B \\ Y");
  auto ex = chain_exchange(st, cs.chain_start);
  ex.removed.push_back(f);
  ex.added.push_back(f_bar);
  ex.added.push_back(zw);
  return detail::finish(st, ex, op);
}

}  // namespace rainbow::proofkit
