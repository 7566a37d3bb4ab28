// Copyright 2026 The qadd Authors.
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

// Prints the memoized carry tree of a tree adder, one node per line.

#include <cstdlib>
#include <iostream>
#include <string>

#include <qadd/qadd.hpp>

namespace {

std::string name(char tag, const qadd::carry_tree::key& k) {
  return std::string(1, tag) + "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qadd;
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 7;
  std::optional<carry_tree> tree;
  const auto nl = build_tree(n, &tree);

  std::cout << "products\n";
  for (const auto& [k, e] : tree->products()) {
    std::cout << "  " << name('P', k);
    if (e.upper) std::cout << " = " << name('P', *e.upper) << " & " << name('P', *e.lower);
    std::cout << '\n';
  }
  std::cout << "carries\n";
  for (const auto& [k, e] : tree->carries()) {
    std::cout << "  " << name('Q', k);
    if (e.upper) {
      std::cout << " = " << name('Q', *e.upper) << " | " << name('Q', *e.lower) << " & " << name('P', *e.span)
                << "  levels=" << tree->levels(k);
    }
    std::cout << '\n';
  }
  std::cout << "nodes=" << nl.size() << '\n';
  return 0;
}
