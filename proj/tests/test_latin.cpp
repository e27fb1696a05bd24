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

#include "rainbow/latin.hpp"
#include "rainbow/oracle.hpp"
#include "support/oracles.hpp"

namespace rainbow {
namespace {

LatinSquare sq(const std::vector<std::vector<int>>& rows) { return LatinSquare(rows); }

TEST(Latin, ValidSquares) {
  EXPECT_TRUE(validate_latin(sq({{0}})).empty());
  EXPECT_TRUE(validate_latin(sq({{0, 1}, {1, 0}})).empty());
}

TEST(Latin, RepeatedColumnSymbol) {
  const auto v = validate_latin(sq({{0, 1}, {0, 1}}));
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].kind, LatinViolation::Kind::ColumnRepeat);
  EXPECT_EQ(v[0].line, 0);
  EXPECT_EQ(v[0].symbol, 0);
}

TEST(Latin, SymbolOutOfRange) {
  const auto v = validate_latin(sq({{0, 2}, {1, 0}}));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, LatinViolation::Kind::SymbolOutOfRange);
}

TEST(Latin, NonSquareIsRejected) { EXPECT_THROW(sq({{0, 1}, {1}}), PreconditionError); }

TEST(Latin, OrderOneGraph) {
  const auto inst = latin_to_instance(sq({{0}}));
  ASSERT_EQ(inst.n_colours(), 1);
  EXPECT_EQ(inst.classes()[0], std::vector<Edge>({{0, 0}}));
}

TEST(Latin, OrderTwoGraphUsesColumnsAsA) {
  const auto inst = latin_to_instance(sq({{0, 1}, {1, 0}}));
  EXPECT_EQ(inst.classes()[0], std::vector<Edge>({{0, 0}, {1, 1}}));
  EXPECT_EQ(inst.classes()[1], std::vector<Edge>({{0, 1}, {1, 0}}));
}

TEST(Latin, CyclicGraphHasPerfectMatchingClasses) {
  const auto inst = latin_to_instance(gen_cyclic(4));
  EXPECT_TRUE(validate_instance(inst).empty());
  for (int c = 0; c < 4; ++c) EXPECT_EQ(inst.class_size(c), 4u);
}

TEST(Latin, InstanceRoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ls = gen_random_latin(5, seed);
    EXPECT_EQ(instance_to_latin(latin_to_instance(ls)), ls);
  }
}

TEST(Latin, NonLatinInstanceIsRejected) {
  EXPECT_THROW(instance_to_latin(Instance(2, 2, {{{0, 0}}, {{1, 1}}})), PreconditionError);
}

TEST(Latin, TransversalConversion) {
  const LatinSquare ls({{0, 1}, {1, 0}});
  EXPECT_EQ(rainbow_to_transversal(ls, RainbowMatching{}).size(), 0u);
  EXPECT_THROW(rainbow_to_transversal(ls, RainbowMatching({{{0, 0}, 0}, {{1, 0}, 1}})),
               PreconditionError);
  EXPECT_THROW(rainbow_to_transversal(ls, RainbowMatching({{{0, 0}, 0}, {{0, 1}, 1}})),
               PreconditionError);
  const auto pt = rainbow_to_transversal(ls, RainbowMatching({{{0, 0}, 0}}));
  ASSERT_EQ(pt.size(), 1u);
  EXPECT_EQ(pt.entries()[0], (Cell{0, 0}));
  EXPECT_EQ(transversal_to_rainbow(ls, pt), RainbowMatching({{{0, 0}, 0}}));
}

TEST(Latin, TransversalRoundTripOnRandomSquares) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto ls = gen_random_latin(5, seed);
    const auto best = max_rainbow(latin_to_instance(ls), SearchBudget::unlimited()).best;
    const auto pt = rainbow_to_transversal(ls, best);
    EXPECT_TRUE(is_partial_transversal(ls, pt));
    EXPECT_EQ(transversal_to_rainbow(ls, pt), best);
  }
}

TEST(Latin, Generators) {
  EXPECT_EQ(gen_cyclic(1), sq({{0}}));
  EXPECT_EQ(gen_cyclic(2), sq({{0, 1}, {1, 0}}));
  EXPECT_EQ(gen_random_latin(1, 9), sq({{0}}));
  EXPECT_TRUE(validate_latin(gen_random_latin(5, 3)).empty());
  EXPECT_EQ(gen_random_latin(5, 3), gen_random_latin(5, 3));
}

TEST(Latin, CyclicFourHasNoTransversal) {
  EXPECT_EQ(testing::max_partial_transversal(gen_cyclic(4)), 3);
  EXPECT_EQ(max_rainbow(latin_to_instance(gen_cyclic(4)), SearchBudget::unlimited()).best.size(),
            3u);
}

TEST(Latin, OracleAgreesWithTransversalBacktracker) {
  for (int n = 1; n <= 6; ++n) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto ls = gen_random_latin(n, seed);
      EXPECT_EQ(static_cast<int>(
                    max_rainbow(latin_to_instance(ls), SearchBudget::unlimited()).best.size()),
                testing::max_partial_transversal(ls))
          << "n = " << n << ", seed = " << seed;
    }
  }
}

TEST(Latin, TextFormat) {
  const auto ls = gen_cyclic(3);
  EXPECT_EQ(latin_to_text(ls), "3\n0 1 2\n1 2 0\n2 0 1\n");
  EXPECT_EQ(latin_from_text(latin_to_text(ls)), ls);
  EXPECT_THROW(latin_from_text("2\n0 1\n1"), PreconditionError);
  EXPECT_THROW(latin_from_text("x"), PreconditionError);
  EXPECT_THROW(latin_from_text("1\n0 0"), PreconditionError);
}

}  // namespace
}  // namespace rainbow
