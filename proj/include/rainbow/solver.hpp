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

// Constructive pipeline: greedy start, augmentation through the switch
// machinery, exact oracle as the last resort.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/proofkit/extend.hpp"
#include "rainbow/proofkit/state.hpp"

namespace rainbow {

// Colours by ascending class size (ties shuffled by seed), each taking its
// lexicographically first edge with both endpoints free. The result is
// maximal by inclusion.
inline RainbowMatching greedy_rainbow(const Instance& inst, std::uint64_t seed) {
  std::vector<int> order(static_cast<std::size_t>(inst.n_colours()));
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::stable_sort(order.begin(), order.end(),
                   [&inst](int l, int r) { return inst.class_size(l) < inst.class_size(r); });
  std::vector<char> used_a(static_cast<std::size_t>(inst.a_size()), 0);
  std::vector<char> used_b(static_cast<std::size_t>(inst.b_size()), 0);
  std::vector<ColouredEdge> picked;
  for (int c : order) {
    for (const Edge& e : inst.edges(c)) {
      auto& ua = used_a[static_cast<std::size_t>(e.a)];
      auto& ub = used_b[static_cast<std::size_t>(e.b)];
      if (ua || ub) continue;
      ua = ub = 1;
      picked.push_back({e, c});
      break;
    }
  }
  return RainbowMatching(std::move(picked));
}

inline constexpr std::uint64_t kDefaultAugmentNodes = 100000;
inline constexpr int kMaxAugmentDepth = 8;

namespace detail {

class AugmentSearch {
 public:
  AugmentSearch(std::uint64_t max_nodes, std::optional<std::chrono::milliseconds> max_time)
      : max_nodes_(max_nodes), max_time_(max_time), start_(std::chrono::steady_clock::now()) {}

  bool exhausted() const { return exhausted_; }
  bool cut() const { return cut_; }
  void reset_cut() { cut_ = false; }

  std::optional<RainbowMatching> run(const proofkit::SwitchState& st, int depth) {
    if (exhausted_ || !tick()) return std::nullopt;
    if (auto aug = proofkit::find_augmentation(st)) return std::move(aug->matching);
    if (st.k() >= depth) {
      cut_ = true;
      return std::nullopt;
    }
    for (const auto& next : proofkit::extension_candidates(st)) {
      if (auto found = run(next, depth)) return found;
      if (exhausted_) break;
    }
    return std::nullopt;
  }

 private:
  bool tick() {
    if (++nodes_ > max_nodes_) {
      exhausted_ = true;
      return false;
    }
    if (max_time_ && (nodes_ & 255U) == 0 &&
        std::chrono::steady_clock::now() - start_ >= *max_time_) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  std::uint64_t max_nodes_;
  std::optional<std::chrono::milliseconds> max_time_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool cut_ = false;
};

}  // namespace detail

// Looks for a rainbow matching of size |r| + 1 reached by a Claim 1-3
// switch over relaxed-mode states rooted at r. Each unused colour in turn
// plays the role of colour 0; depth (k) is deepened iteratively up to
// min(n - 1, 8). An absent result is not a proof of optimality. Without a
// node limit the search uses kDefaultAugmentNodes.
inline std::optional<RainbowMatching> augment(const Instance& inst, const RainbowMatching& r,
                                              const SearchBudget& budget = {}) {
  if (!is_rainbow_in(inst, r)) throw PreconditionError("augment: r is not a rainbow matching");
  std::vector<int> unused;
  for (int c = 0; c < inst.n_colours(); ++c) {
    if (!r.uses_colour(c) && inst.class_size(c) > 0) unused.push_back(c);
  }
  if (unused.empty()) return std::nullopt;

  // Any positive epsilon works in relaxed mode; it only fixes t.
  const proofkit::Epsilon eps(proofkit::Rational(1, 2));
  struct Root {
    int colour;
    proofkit::SwitchState state;
  };
  std::vector<Root> roots;
  for (int c : unused) {
    auto swapped = std::make_shared<const Instance>(swap_colours(inst, c, 0));
    roots.push_back(
        {c, proofkit::initial_state(swapped, swap_colours(r, c, 0), eps, proofkit::Mode::relaxed)});
  }

  detail::AugmentSearch search(budget.max_nodes.value_or(kDefaultAugmentNodes), budget.max_time);
  const int max_depth = std::min(inst.n_colours() - 1, kMaxAugmentDepth);
  for (int depth = 0; depth <= max_depth; ++depth) {
    search.reset_cut();
    for (const auto& root : roots) {
      if (auto found = search.run(root.state, depth)) {
        return swap_colours(*found, root.colour, 0);
      }
      if (search.exhausted()) return std::nullopt;
    }
    if (!search.cut()) break;  // nothing left below this depth
  }
  return std::nullopt;
}

struct SolveResult {
  enum class Method { greedy, augmented, oracle };
  RainbowMatching matching;
  Method method = Method::greedy;
  int augment_steps = 0;
  // Set only when the oracle proved no larger matching exists.
  bool certified_optimal = false;
};

inline const char* to_string(SolveResult::Method m) {
  switch (m) {
    case SolveResult::Method::greedy: return "greedy";
    case SolveResult::Method::augmented: return "augmented";
    case SolveResult::Method::oracle: return "oracle";
  }
  return "?";
}

struct SolveOptions {
  std::uint64_t seed = 0;
  bool oracle_fallback = true;
  int workers = 1;
};

// Greedy, then augment until the target is met. Two consecutive augment
// failures (the second with double the node budget) hand over to the
// oracle, which runs under `budget` and stops at the target.
inline SolveResult solve(const Instance& inst, int target, const SearchBudget& budget,
                         const SolveOptions& opt = {}) {
  if (target < 0 || target > inst.n_colours()) {
    throw PreconditionError("solve: target must lie in [0, n_colours]");
  }
  SolveResult res;
  res.matching = greedy_rainbow(inst, opt.seed);
  const std::uint64_t base_nodes = budget.max_nodes.value_or(kDefaultAugmentNodes);
  int failures = 0;
  while (res.matching.size() < static_cast<std::size_t>(target) && failures < 2) {
    SearchBudget b = budget;
    b.max_nodes = failures == 0 ? base_nodes : 2 * base_nodes;
    if (auto next = augment(inst, res.matching, b)) {
      res.matching = std::move(*next);
      res.method = SolveResult::Method::augmented;
      ++res.augment_steps;
      failures = 0;
    } else {
      ++failures;
    }
  }
  if (res.matching.size() < static_cast<std::size_t>(target) && opt.oracle_fallback) {
    const auto rep = max_rainbow(inst, budget, {opt.workers, target});
    if (rep.best.size() > res.matching.size()) {
      res.matching = rep.best;
      res.method = SolveResult::Method::oracle;
    }
    res.certified_optimal = rep.optimal && rep.best.size() == res.matching.size();
  }
  return res;
}

}  // namespace rainbow
