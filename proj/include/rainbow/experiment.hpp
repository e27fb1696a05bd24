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

// Empirical estimation of f(n) and mu(n, l): search families of n matchings
// of size m for one whose best rainbow matching is below n - l.

#pragma once

#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/gen.hpp"
#include "rainbow/oracle.hpp"

namespace rainbow {

enum class SweepMode { exhaustive, randomized };

inline const char* to_string(SweepMode m) {
  return m == SweepMode::exhaustive ? "exhaustive" : "randomized";
}

struct ExperimentReport {
  int n = 0;
  int m = 0;
  int ell = 0;
  SweepMode mode = SweepMode::randomized;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<Instance> counterexample;
  // Seed that regenerates the counterexample in randomized mode.
  std::optional<std::uint64_t> counterexample_seed;
  std::uint64_t instances_checked = 0;
  std::chrono::milliseconds elapsed{0};
};

// Stateless per-trial seed so any trial can be replayed on its own.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace detail {

inline bool has_rainbow_of_size(const Instance& inst, int size) {
  if (size <= 0) return true;
  SearchOptions opts;
  opts.stop_at = size;
  return static_cast<int>(max_rainbow(inst, SearchBudget::unlimited(), opts).best.size()) >= size;
}

// Calls visit(matching) for every matching of size m between the first
// 2m A-vertices and the first 2m B-vertices; stops when visit returns false.
template <typename Visit>
void for_each_matching(int m, Visit&& visit) {
  const int u = 2 * m;
  std::vector<char> pick_a(static_cast<std::size_t>(u), 0), pick_b(static_cast<std::size_t>(u), 0);
  std::fill(pick_a.begin(), pick_a.begin() + m, 1);
  std::fill(pick_b.begin(), pick_b.begin() + m, 1);
  auto chosen = [](const std::vector<char>& mask) {
    std::vector<int> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      if (mask[i]) out.push_back(static_cast<int>(i));
    }
    return out;
  };
  // prev_permutation over a 1..10..0 mask walks every m-subset.
  do {
    const auto as = chosen(pick_a);
    std::fill(pick_b.begin(), pick_b.end(), 0);
    std::fill(pick_b.begin(), pick_b.begin() + m, 1);
    do {
      auto bs = chosen(pick_b);
      do {
        std::vector<Edge> cls;
        for (int i = 0; i < m; ++i) {
          cls.push_back({as[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(i)]});
        }
        if (!visit(std::move(cls))) return;
      } while (std::next_permutation(bs.begin(), bs.end()));
    } while (std::prev_permutation(pick_b.begin(), pick_b.end()));
  } while (std::prev_permutation(pick_a.begin(), pick_a.end()));
}

}  // namespace detail

// Exhaustive mode (n = 2 only): F_0 is fixed to {a_i b_i : i < m}, which is
// no loss of generality up to relabelling, and F_1 ranges over every size-m
// matching of the 2m x 2m universe. Randomized mode (n <= 6) draws
// gen_random_instance(n, m, trial_seed(seed, i)) for i < trials.
inline ExperimentReport estimate_mu(int n, int ell, int m, SweepMode mode, std::uint64_t trials,
                                    std::uint64_t seed) {
  if (ell < 0 || ell > n) throw PreconditionError("estimate_mu: need 0 <= ell <= n");
  if (m < 0) throw PreconditionError("estimate_mu: m must be >= 0");
  if (mode == SweepMode::exhaustive && n != 2) {
    throw PreconditionError("exhaustive mode is only available for n = 2");
  }
  if (mode == SweepMode::randomized && (n < 1 || n > 6)) {
    throw PreconditionError("randomized mode needs 1 <= n <= 6");
  }
  const auto start = std::chrono::steady_clock::now();
  ExperimentReport rep;
  rep.n = n;
  rep.m = m;
  rep.ell = ell;
  rep.mode = mode;
  rep.seed = seed;
  const int target = n - ell;

  if (mode == SweepMode::exhaustive) {
    std::vector<Edge> f0;
    for (int i = 0; i < m; ++i) f0.push_back({i, i});
    detail::for_each_matching(m, [&](std::vector<Edge> f1) {
      ++rep.instances_checked;
      Instance inst(2 * m, 2 * m, {f0, std::move(f1)});
      if (!detail::has_rainbow_of_size(inst, target)) {
        rep.counterexample = std::move(inst);
        return false;
      }
      return true;
    });
    rep.trials = rep.instances_checked;
  } else {
    rep.trials = trials;
    for (std::uint64_t i = 0; i < trials; ++i) {
      const auto s = trial_seed(seed, i);
      auto inst = gen_random_instance(n, m, s);
      ++rep.instances_checked;
      if (!detail::has_rainbow_of_size(inst, target)) {
        rep.counterexample = std::move(inst);
        rep.counterexample_seed = s;
        break;
      }
    }
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return rep;
}

inline ExperimentReport estimate_f(int n, int m, SweepMode mode, std::uint64_t trials,
                                   std::uint64_t seed) {
  return estimate_mu(n, 0, m, mode, trials, seed);
}

inline const char* experiment_csv_header() {
  return "n,m,ell,mode,trials,seed,counterexample_found,instances_checked,elapsed_ms";
}

inline std::string to_csv_row(const ExperimentReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.m << ',' << r.ell << ',' << to_string(r.mode) << ',' << r.trials << ','
      << r.seed << ',' << (r.counterexample ? "true" : "false") << ',' << r.instances_checked << ','
      << r.elapsed.count();
  return out.str();
}

}  // namespace rainbow
