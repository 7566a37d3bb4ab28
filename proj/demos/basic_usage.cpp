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

// Builds each adder at one width, adds two numbers, and prints cost figures.

#include <iostream>

#include <qadd/qadd.hpp>

int main() {
  using namespace qadd;
  const auto a = qword::from_msd_string("3120");
  const auto b = qword::from_msd_string("0233");
  const qudit cin{1};
  const auto truth = oracle_add(a, b, cin);
  std::cout << a << " + " << b << " + " << cin.value() << " = " << truth.cout.value() << truth.sum << "\n\n";

  for (auto kind : all_adder_kinds) {
    const adder_spec spec{kind, a.width(), 2, 2};
    const auto nl = build(spec);
    const auto out = nl.run(a, b, cin);
    const auto row = compare(nl, spec, documented_conventions(kind));
    std::cout << to_string(kind) << ": S=" << out.sum << " C=" << out.cout.value() << "  delay=" << row.meas_delay
              << " gates=" << row.meas_gates << " inputs=" << row.meas_inputs << '\n';
  }
  return 0;
}
