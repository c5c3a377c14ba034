// Copyright 2026 The detscore Authors.
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

// Concrete corpora for the three illustrated term scenarios. Eight documents
// per corpus; the counts list how often term "t" occurs in each document.
// Every document also carries one filler token so none is empty.

#ifndef DETSCORE_TESTS_TESTING_SCENARIOS_H_
#define DETSCORE_TESTS_TESTING_SCENARIOS_H_

#include <string>
#include <vector>

#include "testing/random_corpus.h"

namespace detscore::testing {

struct Scenario {
  std::vector<int> positive;
  std::vector<int> negative;
};

// Widely spread in C_p, most occurrences in C_p.
inline const Scenario kSpreadScenario{{2, 2, 2, 2, 2, 2, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0}};
// Same totals, but the C_p surplus comes from one document.
inline const Scenario kConcentratedScenario{{9, 1, 1, 1, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0}};
// Nearly even split between corpora, consistent spread in C_p.
inline const Scenario kBalancedScenario{{1, 1, 1, 1, 2, 1, 0, 0}, {1, 1, 1, 1, 1, 1, 0, 0}};

inline TokenPair ScenarioPair(const Scenario& s) {
  const auto build = [](const std::vector<int>& counts, char prefix) {
    std::vector<TokenDoc> docs;
    for (std::size_t i = 0; i < counts.size(); ++i) {
      TokenDoc d{std::string(1, prefix) + std::to_string(i), {"filler"}};
      for (int k = 0; k < counts[i]; ++k) d.tokens.push_back("t");
      docs.push_back(std::move(d));
    }
    return docs;
  };
  return {build(s.positive, 'p'), build(s.negative, 'n')};
}

}  // namespace detscore::testing

#endif  // DETSCORE_TESTS_TESTING_SCENARIOS_H_
