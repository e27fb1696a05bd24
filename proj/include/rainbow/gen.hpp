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

// Instance generators: extremal witnesses and seeded random families.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "rainbow/core.hpp"
#include "rainbow/latin.hpp"

namespace rainbow {

// Sharpness witness for 2n-1 matchings of size n: n-1 copies of
// {a_i b_i} followed by n-1 copies of {a_i b_(i+1 mod n)}. All classes live
// on one 2n-cycle and the best rainbow matching has size n-1.
inline Instance gen_drisko(int n) {
  if (n < 2) throw PreconditionError("gen_drisko: n must be >= 2");
  std::vector<Edge> m0, m1;
  for (int i = 0; i < n; ++i) {
    m0.push_back({i, i});
    m1.push_back({i, (i + 1) % n});
  }
  std::vector<std::vector<Edge>> classes;
  for (int i = 0; i + 1 < n; ++i) classes.push_back(m0);
  for (int i = 0; i + 1 < n; ++i) classes.push_back(m1);
  return Instance(n, n, std::move(classes));
}

// Graph of the cyclic square of even order, which has no transversal.
inline Instance gen_no_transversal(int n) {
  if (n < 2 || n % 2 != 0) {
    throw PreconditionError("gen_no_transversal: n must be even and >= 2");
  }
  return latin_to_instance(gen_cyclic(n));
}

// n classes, each a uniform random matching of size m: m random A-vertices,
// m random B-vertices and a random bijection between them.
inline Instance gen_random_instance(int n, int m, int a_size, int b_size, std::uint64_t seed) {
  if (n < 0 || m < 0 || a_size < 0 || b_size < 0) {
    throw PreconditionError("gen_random_instance: sizes must be non-negative");
  }
  if (m > std::min(a_size, b_size)) {
    throw PreconditionError("gen_random_instance: m exceeds the universe");
  }
  std::mt19937_64 rng(seed);
  std::vector<int> as(static_cast<std::size_t>(a_size)), bs(static_cast<std::size_t>(b_size));
  std::iota(as.begin(), as.end(), 0);
  std::iota(bs.begin(), bs.end(), 0);
  std::vector<std::vector<Edge>> classes(static_cast<std::size_t>(n));
  for (auto& cls : classes) {
    // Partial Fisher-Yates: the first m entries are a uniform m-subset in
    // uniform order, so pairing them position-wise is a uniform bijection.
    for (int i = 0; i < m; ++i) {
      std::uniform_int_distribution<int> pa(i, a_size - 1), pb(i, b_size - 1);
      std::swap(as[static_cast<std::size_t>(i)], as[static_cast<std::size_t>(pa(rng))]);
      std::swap(bs[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(pb(rng))]);
      cls.push_back({as[static_cast<std::size_t>(i)], bs[static_cast<std::size_t>(i)]});
    }
  }
  return Instance(a_size, b_size, std::move(classes));
}

// Default universe for sweeps: n + m vertices per side.
inline Instance gen_random_instance(int n, int m, std::uint64_t seed) {
  return gen_random_instance(n, m, n + m, n + m, seed);
}

}  // namespace rainbow
