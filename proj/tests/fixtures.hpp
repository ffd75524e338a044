// Copyright 2026 The smq Authors
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

// Shared instances and brute-force helpers for the test binaries. Nothing
// here calls into the solver paths it is used to check.

#ifndef SMQ_TESTS_FIXTURES_HPP_
#define SMQ_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "smq/model.hpp"

namespace smq::testing {

// Two men both ranking w1 first; w1 prefers m2. Scores as in the
// two-couple quantitative example.
inline QuantInstance InstanceA() {
  return Validate({2, {{9, 1}, {3, 2}}, {{1, 2}, {3, 1}}});
}

// alpha = 2 makes m1 indifferent between w1 (3) and w2 (2).
inline QuantInstance InstanceB() {
  return Validate({2, {{3, 2}, {4, 2}}, {{8, 5}, {3, 1}}});
}

// (m1,w1) has a very strong additive link although w1 prefers m2.
inline QuantInstance InstanceC() {
  return Validate({2, {{30, 3}, {4, 3}}, {{5, 6}, {10, 2}}});
}

inline QuantInstance SingleCouple() { return Validate({1, {{5}}, {{7}}}); }

// {(m1,w1),(m2,w2)} and {(m1,w2),(m2,w1)}.
inline Marriage Straight() { return Marriage({0, 1}); }
inline Marriage Crossed() { return Marriage({1, 0}); }

inline std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Hand-rolled stable-set filter on scores: (m,w) blocks when
// better(m's values) and better(w's values) both hold.
inline std::vector<Marriage> BruteForceStable(
    int n, const std::function<bool(int m, int w, const Marriage&)>& blocks) {
  std::vector<Marriage> out;
  for (const auto& p : AllPermutations(n)) {
    Marriage marriage(p);
    bool stable = true;
    for (int m = 0; m < n && stable; ++m) {
      for (int w = 0; w < n && stable; ++w) {
        if (marriage.wife(m) != w && blocks(m, w, marriage)) stable = false;
      }
    }
    if (stable) out.push_back(marriage);
  }
  return out;
}

// Every n=2 instance with scores drawn from 0..max_value, rows distinct.
inline std::vector<QuantInstance> ExhaustiveTwoByTwo(Score max_value) {
  std::vector<std::vector<Score>> rows;
  for (Score a = 0; a <= max_value; ++a) {
    for (Score b = 0; b <= max_value; ++b) {
      if (a != b) rows.push_back({a, b});
    }
  }
  std::vector<QuantInstance> out;
  for (const auto& r0 : rows) {
    for (const auto& r1 : rows) {
      for (const auto& r2 : rows) {
        for (const auto& r3 : rows) {
          out.push_back(Validate({2, {r0, r1}, {r2, r3}}));
        }
      }
    }
  }
  return out;
}

}  // namespace smq::testing

#endif  // SMQ_TESTS_FIXTURES_HPP_
