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

// Runs the solver over random families on a tight (m + 1)-vertex universe and
// prints a CSV of how often each stage reached a rainbow matching of size n.

#include <iostream>

#include "rainbow/rainbow.hpp"

int main() {
  using namespace rainbow;
  constexpr int kTrials = 500;
  std::cout << "n,m,trials,greedy,augmented,oracle,missed\n";
  for (int n = 3; n <= 5; ++n) {
    for (int m = n; m <= 2 * n; ++m) {
      int counts[3] = {0, 0, 0};
      int missed = 0;
      for (int i = 0; i < kTrials; ++i) {
        const auto inst =
            gen_random_instance(n, m, m + 1, m + 1, trial_seed(7, static_cast<std::uint64_t>(i)));
        const auto res = solve(inst, n, SearchBudget::nodes(kDefaultAugmentNodes));
        if (res.matching.size() < static_cast<std::size_t>(n)) {
          ++missed;
        } else {
          ++counts[static_cast<int>(res.method)];
        }
      }
      std::cout << n << ',' << m << ',' << kTrials << ',' << counts[0] << ',' << counts[1] << ','
                << counts[2] << ',' << missed << '\n';
    }
  }
}
