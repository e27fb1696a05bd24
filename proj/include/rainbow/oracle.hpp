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

// Exact maximum rainbow matching by branch and bound, plus an unpruned
// enumerator used as an independent cross-check.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "rainbow/core.hpp"

namespace rainbow {

struct SearchBudget {
  std::optional<std::uint64_t> max_nodes;
  std::optional<std::chrono::milliseconds> max_time;

  static SearchBudget unlimited() { return {}; }
  static SearchBudget nodes(std::uint64_t n) { return {n, std::nullopt}; }
  static SearchBudget time(std::chrono::milliseconds t) { return {std::nullopt, t}; }

  bool is_unlimited() const { return !max_nodes && !max_time; }
};

struct SearchOptions {
  int workers = 1;
  // Stop as soon as a matching of this size is found.
  std::optional<int> stop_at;
};

struct SearchReport {
  RainbowMatching best;
  // No rainbow matching larger than `best` exists.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
  int workers = 1;
};

// min(non-empty colours, |A|, |B|).
inline int trivial_upper_bound(const Instance& inst) {
  int colours = 0;
  for (int c = 0; c < inst.n_colours(); ++c) {
    if (inst.class_size(c) > 0) ++colours;
  }
  return std::min({colours, inst.a_size(), inst.b_size()});
}

namespace detail {

// Shared between workers: the best size found so far and the node counter.
struct SearchShared {
  std::atomic<int> best_size{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
};

class RainbowSearch {
 public:
  static constexpr int kUndecided = -2;
  static constexpr int kSkipped = -1;

  RainbowSearch(const Instance& inst, const SearchBudget& budget, int target, SearchShared& shared)
      : inst_(inst),
        budget_(budget),
        target_(target),
        shared_(shared),
        start_(std::chrono::steady_clock::now()),
        used_a_(static_cast<std::size_t>(inst.a_size()), 0),
        used_b_(static_cast<std::size_t>(inst.b_size()), 0),
        choice_(static_cast<std::size_t>(inst.n_colours()), kUndecided),
        prev_in_group_(static_cast<std::size_t>(inst.n_colours()), -1) {
    // Colours with identical classes are interchangeable; members of a group
    // must pick strictly increasing edge indices, and once one member skips
    // all later ones skip.
    std::map<std::vector<Edge>, int> last_member;
    for (int c = 0; c < inst.n_colours(); ++c) {
      const auto& cls = inst.classes()[static_cast<std::size_t>(c)];
      auto [it, fresh] = last_member.try_emplace(cls, c);
      if (!fresh) {
        prev_in_group_[static_cast<std::size_t>(c)] = it->second;
        it->second = c;
      }
    }
  }

  // A top-level branch to explore: which colour, and which edge (or skip).
  struct RootOption {
    int colour = -1;
    int edge_index = kSkipped;
  };

  // Options at the root in exploration order; empty when nothing to branch.
  std::vector<RootOption> root_options() {
    std::vector<RootOption> out;
    const int c = pick_branch_colour();
    if (c < 0) return out;
    for (int idx : candidates(c, true)) out.push_back({c, idx});
    out.push_back({c, kSkipped});
    return out;
  }

  void run() { dfs(); }

  void run_from(const RootOption& opt) {
    ++local_nodes_;
    shared_.nodes.fetch_add(1, std::memory_order_relaxed);
    if (opt.edge_index == kSkipped) {
      choice_[static_cast<std::size_t>(opt.colour)] = kSkipped;
      dfs();
      choice_[static_cast<std::size_t>(opt.colour)] = kUndecided;
    } else {
      take(opt.colour, opt.edge_index);
      dfs();
      untake(opt.colour);
    }
  }

  const std::vector<ColouredEdge>& best() const { return best_; }
  std::uint64_t local_nodes() const { return local_nodes_; }

 private:
  std::size_t uc(int c) const { return static_cast<std::size_t>(c); }

  bool free_edge(const Edge& e) const {
    return !used_a_[static_cast<std::size_t>(e.a)] && !used_b_[static_cast<std::size_t>(e.b)];
  }

  // Edge indices of colour c usable now; `ordered` applies the group order.
  std::vector<int> candidates(int c, bool ordered) const {
    std::vector<int> out;
    int min_index = 0;
    if (ordered) {
      const int prev = prev_in_group_[uc(c)];
      if (prev >= 0) {
        const int pc = choice_[uc(prev)];
        if (pc == kSkipped) return out;
        min_index = pc + 1;
      }
    }
    const auto edges = inst_.edges(c);
    for (int i = min_index; i < static_cast<int>(edges.size()); ++i) {
      if (free_edge(edges[static_cast<std::size_t>(i)])) out.push_back(i);
    }
    return out;
  }

  bool eligible(int c) const {
    if (choice_[uc(c)] != kUndecided) return false;
    const int prev = prev_in_group_[uc(c)];
    return prev < 0 || choice_[uc(prev)] != kUndecided;
  }

  // Fail-first: the eligible colour with the fewest candidates.
  int pick_branch_colour() const {
    int best_colour = -1;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (int c = 0; c < inst_.n_colours(); ++c) {
      if (!eligible(c)) continue;
      const auto n = candidates(c, true).size();
      if (n > 0 && n < best_count) {
        best_count = n;
        best_colour = c;
      }
    }
    return best_colour;
  }

  // Admissible bound on how many more edges can be added.
  int remaining_bound() const {
    int colours = 0;
    std::vector<char> seen_a(used_a_.size(), 0), seen_b(used_b_.size(), 0);
    int free_a = 0, free_b = 0;
    for (int c = 0; c < inst_.n_colours(); ++c) {
      if (choice_[uc(c)] != kUndecided) continue;
      bool any = false;
      for (const Edge& e : inst_.edges(c)) {
        if (!free_edge(e)) continue;
        any = true;
        if (!seen_a[static_cast<std::size_t>(e.a)]++) ++free_a;
        if (!seen_b[static_cast<std::size_t>(e.b)]++) ++free_b;
      }
      if (any) ++colours;
    }
    return std::min({colours, free_a, free_b});
  }

  void take(int c, int idx) {
    const Edge& e = inst_.edges(c)[static_cast<std::size_t>(idx)];
    used_a_[static_cast<std::size_t>(e.a)] = 1;
    used_b_[static_cast<std::size_t>(e.b)] = 1;
    choice_[uc(c)] = idx;
    current_.push_back({e, c});
  }

  void untake(int c) {
    const Edge& e = inst_.edges(c)[static_cast<std::size_t>(choice_[uc(c)])];
    used_a_[static_cast<std::size_t>(e.a)] = 0;
    used_b_[static_cast<std::size_t>(e.b)] = 0;
    choice_[uc(c)] = kUndecided;
    current_.pop_back();
  }

  bool out_of_budget() {
    if (shared_.stop.load(std::memory_order_relaxed)) return true;
    const auto total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    ++local_nodes_;
    if (budget_.max_nodes && total > *budget_.max_nodes) {
      shared_.budget_hit = true;
      shared_.stop = true;
      return true;
    }
    if (budget_.max_time && (local_nodes_ & 1023U) == 0 &&
        std::chrono::steady_clock::now() - start_ >= *budget_.max_time) {
      shared_.budget_hit = true;
      shared_.stop = true;
      return true;
    }
    return false;
  }

  void record() {
    const int size = static_cast<int>(current_.size());
    if (size <= static_cast<int>(best_.size())) return;
    best_ = current_;
    int seen = shared_.best_size.load();
    while (size > seen && !shared_.best_size.compare_exchange_weak(seen, size)) {
    }
    if (size >= target_) shared_.stop = true;
  }

  void dfs() {
    record();
    if (shared_.stop.load(std::memory_order_relaxed)) return;
    const int cur = static_cast<int>(current_.size());
    if (cur + remaining_bound() <= shared_.best_size.load(std::memory_order_relaxed)) {
      return;
    }
    const int c = pick_branch_colour();
    if (c < 0) return;
    for (int idx : candidates(c, true)) {
      if (out_of_budget()) return;
      take(c, idx);
      dfs();
      untake(c);
      if (shared_.stop.load(std::memory_order_relaxed)) return;
    }
    if (out_of_budget()) return;
    choice_[uc(c)] = kSkipped;
    dfs();
    choice_[uc(c)] = kUndecided;
  }

  const Instance& inst_;
  SearchBudget budget_;
  int target_;
  SearchShared& shared_;
  std::chrono::steady_clock::time_point start_;
  std::vector<char> used_a_, used_b_;
  std::vector<int> choice_;
  std::vector<int> prev_in_group_;
  std::vector<ColouredEdge> current_, best_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace detail

// Branch on the colour with the fewest usable edges, trying "skip" last.
// Prunes with: current + min(open colours, free A, free B) <= best.
// With workers > 1 the root branches are distributed over threads sharing
// the best-size bound; the optimum is the same, node counts are not.
inline SearchReport max_rainbow(const Instance& inst, const SearchBudget& budget,
                                const SearchOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  const int ub = trivial_upper_bound(inst);
  const int target = options.stop_at ? std::min(*options.stop_at, ub) : ub;
  detail::SearchShared shared;
  SearchReport report;
  report.workers = std::max(1, options.workers);

  if (report.workers == 1) {
    detail::RainbowSearch search(inst, budget, target, shared);
    search.run();
    report.best = RainbowMatching(search.best());
  } else {
    detail::RainbowSearch root(inst, budget, target, shared);
    const auto options_at_root = root.root_options();
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::vector<ColouredEdge> best;
    std::size_t best_option = std::numeric_limits<std::size_t>::max();
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= options_at_root.size() || shared.stop.load()) return;
        detail::RainbowSearch search(inst, budget, target, shared);
        search.run_from(options_at_root[i]);
        std::lock_guard lock(mu);
        const auto& found = search.best();
        if (found.size() > best.size() ||
            (found.size() == best.size() && !found.empty() && i < best_option)) {
          best = found;
          best_option = i;
        }
      }
    };
    std::vector<std::thread> threads;
    for (int w = 0; w < report.workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    report.best = RainbowMatching(std::move(best));
  }

  const auto size = static_cast<int>(report.best.size());
  report.optimal = size >= ub || (!shared.budget_hit && size < target);
  report.nodes_explored = shared.nodes.load();
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

// Enumerates every choice of at most one edge per colour; no pruning.
// Guarded to n_colours <= 8 and class sizes <= 8.
inline SearchReport naive_max_rainbow(const Instance& inst) {
  if (inst.n_colours() > 8) {
    throw PreconditionError("naive_max_rainbow: at most 8 colours");
  }
  for (int c = 0; c < inst.n_colours(); ++c) {
    if (inst.class_size(c) > 8) {
      throw PreconditionError("naive_max_rainbow: class sizes must be <= 8");
    }
  }
  const auto start = std::chrono::steady_clock::now();
  std::vector<ColouredEdge> current, best;
  std::vector<char> used_a(static_cast<std::size_t>(inst.a_size()), 0);
  std::vector<char> used_b(static_cast<std::size_t>(inst.b_size()), 0);
  std::uint64_t nodes = 0;

  auto rec = [&](auto&& self, int c) -> void {
    ++nodes;
    if (c == inst.n_colours()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    self(self, c + 1);
    for (const Edge& e : inst.edges(c)) {
      auto& ua = used_a[static_cast<std::size_t>(e.a)];
      auto& ub = used_b[static_cast<std::size_t>(e.b)];
      if (ua || ub) continue;
      ua = ub = 1;
      current.push_back({e, c});
      self(self, c + 1);
      current.pop_back();
      ua = ub = 0;
    }
  };
  rec(rec, 0);

  SearchReport report;
  report.best = RainbowMatching(std::move(best));
  report.optimal = true;
  report.nodes_explored = nodes;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace rainbow
