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

#include <gtest/gtest.h>

#include "rainbow/json_io.hpp"
#include "rainbow/proofkit.hpp"

namespace rainbow::proofkit {
namespace {

using Classes = std::vector<std::vector<Edge>>;

ColouredEdge ce(int a, int b, int colour) { return {{a, b}, colour}; }

struct StateFixture {
  int a_size = 0;
  int b_size = 0;
  Classes classes;
  std::vector<ColouredEdge> r;
  std::vector<int> pi{0};
  std::vector<ColouredEdge> e;
  std::vector<ColouredEdge> g;
  std::vector<VertexSet> x_sets;
  Mode mode = Mode::relaxed;
  Epsilon eps{1, 2};
};

SwitchState make_state(const StateFixture& s) {
  SwitchState st;
  st.inst = std::make_shared<const Instance>(s.a_size, s.b_size, s.classes);
  st.r = RainbowMatching(s.r);
  st.eps = s.eps;
  st.t = smallest_t(s.eps);
  st.mode = s.mode;
  st.pi = s.pi;
  st.e_seq = s.e;
  st.g_seq = s.g;
  st.x_sets = s.x_sets;
  for (const auto& x : s.x_sets) st.y_sets.push_back(neighbourhood_along(st.r, x));
  return st;
}

// n = 2: r = {a1b1}, e_1 = a1b1, g_1 = a2b1 in F_0, and g = a3b2 in F_1.
StateFixture claim1_base() {
  StateFixture s;
  s.a_size = 4;
  s.b_size = 3;
  s.classes = {{{2, 1}}, {{1, 1}, {3, 2}}};
  s.r = {ce(1, 1, 1)};
  s.pi = {0, 1};
  s.e = {ce(1, 1, 1)};
  s.g = {ce(2, 1, 0)};
  s.x_sets = {{}};
  return s;
}

// n = 3: r = {a1b1, a2b2}, e_1 = a1b1, g_1 = a4b1 in F_0, X_1 = {a2},
// a3b2 in F_0 for P6, a1b3 in F_2 for P5, and g = a5b2 in F_1.
StateFixture claim2_base() {
  StateFixture s;
  s.a_size = 6;
  s.b_size = 4;
  s.classes = {{{4, 1}, {3, 2}}, {{1, 1}, {5, 2}}, {{2, 2}, {1, 3}}};
  s.r = {ce(1, 1, 1), ce(2, 2, 2)};
  s.pi = {0, 1};
  s.e = {ce(1, 1, 1)};
  s.g = {ce(4, 1, 0)};
  s.x_sets = {{2}};
  return s;
}

void expect_valid(const SwitchState& st) {
  EXPECT_TRUE(structural_violations(st).empty());
  const auto rep = verify_properties(st);
  EXPECT_TRUE(rep.all()) << (rep.failed().empty() ? "" : rep[rep.failed().front()].detail);
}

TEST(Properties, ClaimOneBaseStatePasses) { expect_valid(make_state(claim1_base())); }

TEST(Properties, ClaimTwoBaseStatePasses) { expect_valid(make_state(claim2_base())); }

TEST(Properties, RecolouredGFailsP2) {
  auto s = claim1_base();
  s.g = {ce(2, 1, 1)};
  const auto rep = verify_properties(make_state(s));
  EXPECT_FALSE(rep[2].holds);
  EXPECT_EQ(rep[2].step, 1);
  EXPECT_EQ(rep[2].edge, ce(2, 1, 1));
  EXPECT_TRUE(rep[1].holds);
}

TEST(Properties, YContainingYOneFailsP3) {
  auto st = make_state(claim1_base());
  st.y_sets[0] = {1};
  const auto rep = verify_properties(st);
  EXPECT_FALSE(rep[3].holds);
  EXPECT_EQ(rep[3].vertex, b_vertex(1));
}

TEST(Properties, MissingP5EdgeFails) {
  auto s = claim2_base();
  s.classes[2] = {{2, 2}};
  const auto rep = verify_properties(make_state(s));
  EXPECT_FALSE(rep[5].holds);
  EXPECT_EQ(rep[5].colour, 2);
}

TEST(Properties, MissingP6PartnerFails) {
  auto s = claim2_base();
  s.classes[0] = {{4, 1}};
  const auto rep = verify_properties(make_state(s));
  EXPECT_FALSE(rep[6].holds);
  EXPECT_EQ(rep[6].vertex, b_vertex(2));
}

TEST(Properties, RepeatedZFailsP7) {
  // g_2 in F_pi(1) may not reuse z_1.
  StateFixture s;
  s.a_size = 5;
  s.b_size = 4;
  s.classes = {{{3, 1}}, {{1, 1}, {3, 2}}, {{2, 2}}};
  s.r = {ce(1, 1, 1), ce(2, 2, 2)};
  s.pi = {0, 1, 2};
  s.e = {ce(1, 1, 1), ce(2, 2, 2)};
  s.g = {ce(3, 1, 0), ce(3, 2, 1)};
  s.x_sets = {{}, {}};
  const auto rep = verify_properties(make_state(s));
  EXPECT_FALSE(rep[7].holds);
  EXPECT_EQ(rep[7].step, 2);
}

TEST(Properties, StrictModeChecksSK) {
  auto s = claim1_base();
  s.mode = Mode::strict;
  const auto rep = verify_properties(make_state(s));
  EXPECT_FALSE(rep[4].holds);
}

TEST(Structure, DetectsBrokenShapes) {
  auto st = make_state(claim2_base());
  st.pi.push_back(2);
  EXPECT_FALSE(structural_violations(st).empty());
  st = make_state(claim2_base());
  st.pi[1] = 0;
  EXPECT_FALSE(structural_violations(st).empty());
  st = make_state(claim2_base());
  st.y_sets[0] = {1, 2};
  EXPECT_FALSE(structural_violations(st).empty());
  st = make_state(claim2_base());
  st.g_seq[0] = ce(2, 1, 0);
  EXPECT_FALSE(structural_violations(st).empty());
}

TEST(State, InitialStateGuards) {
  auto inst = std::make_shared<const Instance>(2, 2, Classes{{{0, 0}}, {{1, 1}}});
  EXPECT_THROW(initial_state(inst, RainbowMatching({ce(0, 0, 0)}), Epsilon(1, 2), Mode::relaxed),
               PreconditionError);
  EXPECT_THROW(initial_state(inst, RainbowMatching({ce(0, 1, 1)}), Epsilon(1, 2), Mode::relaxed),
               PreconditionError);
  const auto st = initial_state(inst, RainbowMatching({ce(1, 1, 1)}), Epsilon(1, 4), Mode::strict);
  EXPECT_EQ(st.k(), 0);
  EXPECT_EQ(st.t, 3);
}

StateFixture chain_fixture(int g3_from, int g2_from) {
  // r = {a_i b_i : i = 1..3}, e_i = a_i b_i, z_i = a_(3+i).
  StateFixture s;
  s.a_size = 7;
  s.b_size = 4;
  s.classes = {{}, {{1, 1}}, {{2, 2}}, {{3, 3}}};
  s.r = {ce(1, 1, 1), ce(2, 2, 2), ce(3, 3, 3)};
  s.pi = {0, 1, 2, 3};
  s.e = {ce(1, 1, 1), ce(2, 2, 2), ce(3, 3, 3)};
  s.g = {ce(4, 1, 0), ce(5, 2, g2_from), ce(6, 3, g3_from)};
  for (const auto& g : s.g) s.classes[static_cast<std::size_t>(g.colour)].push_back(g.edge);
  s.x_sets = {{}, {}, {}};
  return s;
}

TEST(ColourChain, Examples) {
  EXPECT_EQ(colour_chain(make_state(claim1_base()), 1), std::vector<int>({0}));
  EXPECT_EQ(colour_chain(make_state(chain_fixture(2, 0)), 3), std::vector<int>({2, 0}));
  EXPECT_EQ(colour_chain(make_state(chain_fixture(2, 1)), 3), std::vector<int>({2, 1, 0}));
  EXPECT_EQ(colour_chain(make_state(chain_fixture(0, 1)), 3), std::vector<int>({0}));
  EXPECT_THROW(colour_chain(make_state(chain_fixture(2, 1)), 0), PreconditionError);
}

TEST(ColourChain, BrokenP2IsReported) {
  auto st = make_state(chain_fixture(2, 0));
  st.g_seq[2].colour = 3;
  EXPECT_THROW(colour_chain(st, 3), PreconditionError);
}

TEST(ClaimOne, SingleStep) {
  const auto st = make_state(claim1_base());
  const auto before = st.r;
  const auto out = claim1_switch(st, ce(3, 2, 1));
  EXPECT_EQ(out, RainbowMatching({ce(2, 1, 0), ce(3, 2, 1)}));
  EXPECT_EQ(st.r, before);
}

TEST(ClaimOne, TwoStepChain) {
  // chain [1, 0]: drop e_2, e_1; add g_2, g_1 and g = a5b3 in F_2.
  StateFixture s;
  s.a_size = 6;
  s.b_size = 4;
  s.classes = {{{3, 1}}, {{1, 1}, {4, 2}}, {{2, 2}, {5, 3}}};
  s.r = {ce(1, 1, 1), ce(2, 2, 2)};
  s.pi = {0, 1, 2};
  s.e = {ce(1, 1, 1), ce(2, 2, 2)};
  s.g = {ce(3, 1, 0), ce(4, 2, 1)};
  s.x_sets = {{}, {}};
  const auto st = make_state(s);
  expect_valid(st);
  const auto out = claim1_switch(st, ce(5, 3, 2));
  EXPECT_EQ(out, RainbowMatching({ce(3, 1, 0), ce(4, 2, 1), ce(5, 3, 2)}));
}

TEST(ClaimOne, Preconditions) {
  const auto st = make_state(claim1_base());
  EXPECT_THROW(claim1_switch(st, ce(3, 2, 0)), PreconditionError);  // not in F_0
  EXPECT_THROW(claim1_switch(st, ce(1, 1, 1)), PreconditionError);  // starts in X
}

TEST(ClaimTwo, Example) {
  const auto st = make_state(claim2_base());
  const auto out = claim2_switch(st, ce(5, 2, 1), ce(2, 2, 2), ce(1, 3, 2));
  EXPECT_EQ(out, RainbowMatching({ce(4, 1, 0), ce(1, 3, 2), ce(5, 2, 1)}));
}

TEST(ClaimTwo, Preconditions) {
  const auto st = make_state(claim2_base());
  EXPECT_THROW(claim2_switch(st, ce(5, 2, 1), ce(2, 2, 2), ce(1, 2, 2)), PreconditionError);
  EXPECT_THROW(claim2_switch(st, ce(5, 2, 1), ce(2, 2, 2), ce(1, 3, 1)), PreconditionError);
  EXPECT_THROW(claim2_switch(st, ce(5, 2, 1), ce(1, 1, 1), ce(1, 3, 2)), PreconditionError);
}

// n = 3, k = 1, f = a2b2 in F_2 with b2 in Y_1 \ Y_0, so the connecting
// edge a3b2 lies in F_0 and the chain is empty.
StateFixture claim3_degenerate() {
  StateFixture s;
  s.a_size = 6;
  s.b_size = 4;
  s.classes = {{{5, 1}, {3, 2}}, {{1, 1}}, {{2, 2}, {4, 3}, {1, 0}}};
  s.r = {ce(1, 1, 1), ce(2, 2, 2)};
  s.pi = {0, 1};
  s.e = {ce(1, 1, 1)};
  s.g = {ce(5, 1, 0)};
  s.x_sets = {{2}};
  return s;
}

TEST(ClaimThree, DegenerateExchange) {
  const auto st = make_state(claim3_degenerate());
  expect_valid(st);
  EXPECT_EQ(claim3_case(st, 2, {}).chain_start, 0);
  const auto out = claim3_switch(st, ce(2, 2, 2), ce(4, 3, 2), ce(3, 2, 0));
  EXPECT_EQ(out, RainbowMatching({ce(1, 1, 1), ce(3, 2, 0), ce(4, 3, 2)}));
}

// n = 4, k = 1, w = b3 in N_1 through a7b3 in F_1, f = a3b3 in F_3.
StateFixture claim3_nk() {
  StateFixture s;
  s.a_size = 9;
  s.b_size = 5;
  s.classes = {{{5, 1}, {6, 2}}, {{1, 1}, {7, 3}}, {{2, 2}, {1, 0}}, {{3, 3}, {8, 4}}};
  s.r = {ce(1, 1, 1), ce(2, 2, 2), ce(3, 3, 3)};
  s.pi = {0, 1};
  s.e = {ce(1, 1, 1)};
  s.g = {ce(5, 1, 0)};
  s.x_sets = {{2}};
  return s;
}

TEST(ClaimThree, NkCaseRunsTheChain) {
  const auto st = make_state(claim3_nk());
  expect_valid(st);
  EXPECT_EQ(nk_candidates(st), VertexSet({3}));
  const auto cs = claim3_case(st, 3, nk_candidates(st));
  EXPECT_FALSE(cs.w_in_y_k);
  EXPECT_EQ(cs.chain_start, 1);
  const auto out = claim3_switch(st, ce(3, 3, 3), ce(8, 4, 3), ce(7, 3, 1));
  EXPECT_EQ(out, RainbowMatching({ce(5, 1, 0), ce(7, 3, 1), ce(2, 2, 2), ce(8, 4, 3)}));
}

TEST(ClaimThree, Preconditions) {
  const auto st = make_state(claim3_nk());
  // f's colour inside the pi-image
  EXPECT_THROW(claim3_switch(st, ce(1, 1, 1), ce(8, 4, 3), ce(7, 3, 1)), PreconditionError);
  // w in neither Y_k nor N_k
  auto s = claim3_nk();
  s.classes[1] = {{1, 1}};
  EXPECT_THROW(claim3_switch(make_state(s), ce(3, 3, 3), ce(8, 4, 3), ce(7, 3, 1)),
               PreconditionError);
  // f_bar starting at z
  EXPECT_THROW(claim3_switch(st, ce(3, 3, 3), ce(7, 4, 3), ce(7, 3, 1)), PreconditionError);
}

TEST(Construct, NZero) {
  const RainbowMatching r({ce(1, 1, 1), ce(2, 2, 2), ce(3, 3, 3)});
  const Classes rest = {{{1, 1}}, {{2, 2}}, {{3, 3}}};
  auto with_f0 = [&](std::vector<Edge> f0) {
    Classes cls{std::move(f0)};
    cls.insert(cls.end(), rest.begin(), rest.end());
    return initial_state(std::make_shared<const Instance>(10, 10, cls), r, Epsilon(1, 2),
                         Mode::relaxed);
  };
  EXPECT_EQ(construct_N0(with_f0({{4, 1}, {5, 2}})), VertexSet({1, 2}));
  EXPECT_THROW(construct_N0(with_f0({{4, 1}, {9, 9}})), PreconditionError);
  EXPECT_TRUE(construct_N0(with_f0({})).empty());
  EXPECT_THROW(construct_N0(make_state(claim1_base())), PreconditionError);
}

TEST(Construct, NZeroStrictTruncation) {
  // n = 10, eps = 1/10: (1/2 + eps) n + 1 = 7 of the 9 candidates.
  std::vector<ColouredEdge> r;
  Classes cls(10);
  for (int i = 1; i <= 9; ++i) {
    r.push_back(ce(i, i, i));
    cls[static_cast<std::size_t>(i)].push_back({i, i});
    cls[0].push_back({10 + i, i});
  }
  const auto st = initial_state(std::make_shared<const Instance>(20, 10, cls), RainbowMatching(r),
                                Epsilon(1, 10), Mode::strict);
  const auto nk = construct_N0(st);
  EXPECT_EQ(nk, VertexSet({1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(static_cast<std::int64_t>(nk.size()), ceil_int(n_k_required(0, st.eps, st.n())));
}

// n = 6, k = 1, r = {a_i b_i}, X_1 = {a2}; F_1 reaches b3, b4, b5 from
// free vertices.
StateFixture nk_fixture() {
  StateFixture s;
  s.a_size = 13;
  s.b_size = 6;
  s.classes = {{{7, 1}, {8, 2}}, {{1, 1}, {9, 3}, {10, 4}, {11, 5}},
               {{2, 2}, {1, 0}}, {{3, 3}},
               {{4, 4}},         {{5, 5}}};
  for (int i = 1; i <= 5; ++i) s.r.push_back(ce(i, i, i));
  s.pi = {0, 1};
  s.e = {ce(1, 1, 1)};
  s.g = {ce(7, 1, 0)};
  s.x_sets = {{2}};
  return s;
}

TEST(Construct, NkFilters) {
  const auto st = make_state(nk_fixture());
  expect_valid(st);
  EXPECT_EQ(construct_Nk(st), VertexSet({3, 4, 5}));
  // an F_1 edge into Y_1 is excluded from N_1 but is a second-claim premise
  auto s = nk_fixture();
  s.classes[1].push_back({12, 2});
  const auto with_premise = make_state(s);
  EXPECT_EQ(nk_candidates(with_premise), VertexSet({3, 4, 5}));
  EXPECT_THROW(construct_Nk(with_premise), PreconditionError);
  // an F_1 edge from X does not count
  s = nk_fixture();
  s.classes[1] = {{1, 1}, {9, 3}, {3, 4}};
  EXPECT_EQ(nk_candidates(make_state(s)), VertexSet({3}));
}

// n = 5, k = 0, r = {a_i b_i : i = 1..4}, colours 2..4 reach B \ Y from a1.
SwitchState pigeonhole_state(Classes extra) {
  Classes cls = {{}, {{1, 1}}, {{2, 2}}, {{3, 3}}, {{4, 4}}};
  for (std::size_t c = 0; c < extra.size(); ++c) {
    cls[c].insert(cls[c].end(), extra[c].begin(), extra[c].end());
  }
  std::vector<ColouredEdge> r;
  for (int i = 1; i <= 4; ++i) r.push_back(ce(i, i, i));
  return initial_state(std::make_shared<const Instance>(5, 9, cls), RainbowMatching(r),
                       Epsilon(1, 2), Mode::relaxed);
}

TEST(Pigeonhole, Unanimity) {
  const auto st = pigeonhole_state({{}, {{2, 8}}, {{1, 5}}, {{1, 6}}, {{1, 7}}});
  const VertexSet all{1, 2, 3, 4};
  const auto sel = pigeonhole_select(st, all, all);
  EXPECT_EQ(sel.x_next, 1);
  EXPECT_EQ(sel.x_set, VertexSet({2, 3, 4}));
  EXPECT_EQ(sel.y_set, VertexSet({2, 3, 4}));
  EXPECT_FALSE(sel.x_set.contains(sel.x_next));
  for (int v : sel.x_set) {
    const auto colour = st.r.at_a(v)->colour;
    const auto mate = st.instance().mate_of_a(colour, sel.x_next);
    ASSERT_TRUE(mate.has_value());
    EXPECT_FALSE(saturated_sets(st.r).y.contains(*mate));
  }
}

TEST(Pigeonhole, ThresholdTwo) {
  const VertexSet all{1, 2, 3, 4};
  const auto both = pigeonhole_state({{}, {}, {{1, 5}}, {{1, 6}}, {}});
  const auto sel = pigeonhole_select_with_threshold(both, all, all, 2);
  EXPECT_EQ(sel.x_next, 1);
  EXPECT_EQ(sel.x_set, VertexSet({2, 3}));
  const auto disjoint = pigeonhole_state({{}, {}, {{1, 5}}, {{4, 6}}, {}});
  EXPECT_THROW(pigeonhole_select_with_threshold(disjoint, all, all, 2), PigeonholeError);
  EXPECT_EQ(pigeonhole_select_with_threshold(disjoint, all, all, 1).x_next, 1);
}

TEST(Pigeonhole, TiesGoToTheSmallerIndex) {
  const VertexSet all{1, 2, 3, 4};
  const auto st = pigeonhole_state({{}, {{4, 5}}, {}, {}, {{1, 6}}});
  EXPECT_EQ(pigeonhole_select(st, all, all).x_next, 1);
}

// n = 3, k = 0: F_0 reaches b1 and b2 from a3 and a4; a1 serves a2 via F_2.
SwitchState extendable_root() {
  auto inst =
      std::make_shared<const Instance>(5, 3, Classes{{{3, 1}, {4, 2}}, {{1, 1}}, {{2, 2}, {1, 0}}});
  return initial_state(inst, RainbowMatching({ce(1, 1, 1), ce(2, 2, 2)}), Epsilon(1, 2),
                       Mode::relaxed);
}

TEST(Extend, BaseCaseAugmentsThroughClaimOne) {
  auto inst = std::make_shared<const Instance>(2, 2, Classes{{{0, 0}}, {{1, 1}}});
  const auto st = initial_state(inst, RainbowMatching({ce(1, 1, 1)}), Epsilon(1, 2), Mode::relaxed);
  const auto out = extend_state(st);
  ASSERT_TRUE(std::holds_alternative<Augmented>(out));
  const auto& aug = std::get<Augmented>(out);
  EXPECT_EQ(aug.claim, 1);
  EXPECT_EQ(aug.matching.size(), 2u);
  EXPECT_TRUE(is_rainbow_in(*inst, aug.matching));
}

TEST(Extend, BaseCaseExtends) {
  const auto st = extendable_root();
  const auto out = extend_state(st);
  ASSERT_TRUE(std::holds_alternative<Extended>(out));
  const auto& next = std::get<Extended>(out).state;
  EXPECT_EQ(next.k(), 1);
  EXPECT_EQ(next.e(1), ce(1, 1, 1));
  EXPECT_EQ(next.g(1), ce(3, 1, 0));
  EXPECT_EQ(next.pi, std::vector<int>({0, 1}));
  EXPECT_EQ(next.X(1), VertexSet({2}));
  EXPECT_EQ(next.Y(1), VertexSet({2}));
  expect_valid(next);
}

TEST(Extend, StrictModeRunsOutOfRoom) {
  // n = 10, eps = 1/4, k = 1 with |X_1| = s_1 = 7: s_2 = 11 > |Y| = 9.
  Classes cls(10);
  std::vector<ColouredEdge> r;
  for (int i = 1; i <= 9; ++i) {
    r.push_back(ce(i, i, i));
    cls[static_cast<std::size_t>(i)].push_back({i, i});
  }
  cls[0].push_back({10, 1});
  VertexSet x1;
  for (int i = 2; i <= 8; ++i) {
    x1.insert(i);
    cls[static_cast<std::size_t>(i)].push_back({1, 10 + i});
    cls[0].push_back({10 + i, i});
  }
  StateFixture s;
  s.a_size = 19;
  s.b_size = 19;
  s.classes = cls;
  s.r = r;
  s.pi = {0, 1};
  s.e = {ce(1, 1, 1)};
  s.g = {ce(10, 1, 0)};
  s.x_sets = {x1};
  s.mode = Mode::strict;
  s.eps = Epsilon(1, 4);
  const auto st = make_state(s);
  expect_valid(st);
  const auto out = extend_state(st);
  ASSERT_TRUE(std::holds_alternative<ThresholdInfeasible>(out));
  const auto& inf = std::get<ThresholdInfeasible>(out);
  EXPECT_EQ(inf.formula, "s_{k+1}");
  EXPECT_EQ(inf.required, Rational(11));
  EXPECT_EQ(inf.available, 9);
}

TEST(Extend, FindsClaimTwoBeforeExtending) {
  auto s = claim2_base();
  const auto out = extend_state(make_state(s));
  ASSERT_TRUE(std::holds_alternative<Augmented>(out));
  EXPECT_EQ(std::get<Augmented>(out).claim, 2);
}

TEST(Extend, FindsClaimThree) {
  const auto out = extend_state(make_state(claim3_nk()));
  ASSERT_TRUE(std::holds_alternative<Augmented>(out));
  const auto& aug = std::get<Augmented>(out);
  EXPECT_EQ(aug.claim, 3);
  EXPECT_EQ(aug.matching.size(), 4u);
}

TEST(Trace, RoundTripAndVerify) {
  const auto root = extendable_root();
  const auto recs = run_trace(root, 5);
  ASSERT_FALSE(recs.empty());
  EXPECT_EQ(recs.front().kind, TraceRecord::Kind::extended);
  const auto j = trace_to_json(root.instance(), recs);
  const auto v = verify_trace(parse_json(dump_canonical(j)));
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.steps, recs.size());
  const auto st =
      state_from_json(j["steps"][0]["state"], std::make_shared<const Instance>(root.instance()));
  EXPECT_EQ(state_to_json(st), j["steps"][0]["state"]);
}

TEST(Trace, TamperedGColourNamesP2AndStep) {
  const auto root = extendable_root();
  auto j = trace_to_json(root.instance(), run_trace(root, 5));
  j["steps"][0]["state"]["g"][0][0] = 1;
  const auto v = verify_trace(j);
  ASSERT_FALSE(v.ok);
  bool named = false;
  for (const auto& f : v.failures) {
    if (f.find("step 0") != std::string::npos && f.find("P2") != std::string::npos) named = true;
  }
  EXPECT_TRUE(named);
}

TEST(Trace, EmptyTraceIsVacuouslyValid) {
  const auto v = verify_trace(parse_json("{\"steps\":[]}"));
  EXPECT_TRUE(v.ok);
  EXPECT_EQ(v.steps, 0u);
}

TEST(Trace, BadAugmentationIsCaught) {
  auto inst = std::make_shared<const Instance>(2, 2, Classes{{{0, 0}}, {{1, 1}}});
  const auto st = initial_state(inst, RainbowMatching({ce(1, 1, 1)}), Epsilon(1, 2), Mode::relaxed);
  auto j = trace_to_json(*inst, run_trace(st, 3));
  ASSERT_EQ(j["steps"][0]["outcome"], "augmented");
  EXPECT_TRUE(verify_trace(j).ok);
  j["steps"][0]["matching"] = to_json(RainbowMatching({ce(1, 1, 1)}));
  EXPECT_FALSE(verify_trace(j).ok);
}

}  // namespace
}  // namespace rainbow::proofkit
