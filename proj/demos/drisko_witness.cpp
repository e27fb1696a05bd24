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

// Builds the Drisko family for n = 2..6, shows that the best rainbow
// matching has size n - 1, and that adding one more matching restores a
// full rainbow matching.

#include <iostream>

#include "rainbow/rainbow.hpp"

int main() {
  using namespace rainbow;
  for (int n = 2; n <= 6; ++n) {
    const auto inst = gen_drisko(n);
    const auto rep = max_rainbow(inst, SearchBudget::unlimited());
    auto classes = inst.classes();
    classes.push_back(classes.front());
    const Instance plus_one(inst.a_size(), inst.b_size(), classes);
    const auto more = max_rainbow(plus_one, SearchBudget::unlimited());
    std::cout << "n=" << n << "  " << inst.n_colours() << " matchings: best " << rep.best.size()
              << (rep.optimal ? " (optimal)" : "") << "  " << plus_one.n_colours()
              << " matchings: best " << more.best.size() << '\n';
  }
  std::cout << "witness for n=3: " << matching_to_string(max_rainbow(gen_drisko(3), {}).best)
            << '\n';
}
