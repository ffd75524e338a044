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

#include "smq/alpha.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "smq/gale_shapley.hpp"

namespace smq {

Alpha::Alpha(Score value) : value_(value) {
  if (value < 1) {
    throw std::invalid_argument("alpha must be >= 1, got " +
                                std::to_string(value));
  }
}

int SemiorderProfile::CountIncomparablePairs() const {
  int count = 0;
  const int n = size();
  for (Side side : {Side::kMen, Side::kWomen}) {
    for (int person = 0; person < n; ++person) {
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (Incomparable(side, person, a, b)) ++count;
        }
      }
    }
  }
  return count;
}

SemiorderProfile AlphaTransform(const QuantInstance& instance, Alpha alpha) {
  return SemiorderProfile(instance, alpha);
}

TotalOrder::TotalOrder(std::vector<int> ranking)
    : ranking_(std::move(ranking)), position_(ranking_.size(), -1) {
  const int n = static_cast<int>(ranking_.size());
  for (int pos = 0; pos < n; ++pos) {
    const int person = ranking_[pos];
    if (person < 0 || person >= n || position_[person] != -1) {
      throw std::invalid_argument("total order is not a permutation");
    }
    position_[person] = pos;
  }
}

TotalOrder TotalOrder::Reversed() const {
  return TotalOrder(std::vector<int>(ranking_.rbegin(), ranking_.rend()));
}

std::vector<Score> ScoreSums(const QuantInstance& instance, Side ranked) {
  const int n = instance.size();
  const Side voters = Opposite(ranked);
  std::vector<Score> sums(n, 0);
  for (int voter = 0; voter < n; ++voter) {
    for (int candidate = 0; candidate < n; ++candidate) {
      sums[candidate] += instance.score(voters, voter, candidate);
    }
  }
  return sums;
}

TotalOrder ScoreSumRule(const QuantInstance& instance, Side ranked) {
  const std::vector<Score> sums = ScoreSums(instance, ranked);
  std::vector<int> ranking(sums.size());
  std::iota(ranking.begin(), ranking.end(), 0);
  std::stable_sort(ranking.begin(), ranking.end(),
                   [&](int a, int b) { return sums[a] > sums[b]; });
  return TotalOrder(std::move(ranking));
}

StrictProfile Linearize(const SemiorderProfile& semiorder,
                        const TotalOrder& men_order,
                        const TotalOrder& women_order) {
  const int n = semiorder.size();
  if (men_order.size() != n || women_order.size() != n) {
    throw std::invalid_argument("popularity orders must cover all n people");
  }
  auto extend = [&](Side side, int person, const TotalOrder& tiebreak) {
    std::vector<int> remaining(tiebreak.ranking());
    std::vector<int> out;
    out.reserve(n);
    while (!remaining.empty()) {
      // `remaining` stays sorted by tiebreak, so the first unbeaten
      // candidate is the one to emit.
      auto unbeaten =
          std::find_if(remaining.begin(), remaining.end(), [&](int candidate) {
            return std::none_of(remaining.begin(), remaining.end(),
                                [&](int other) {
                                  return semiorder.StrictlyPrefers(
                                      side, person, other, candidate);
                                });
          });
      out.push_back(*unbeaten);
      remaining.erase(unbeaten);
    }
    return out;
  };
  std::vector<std::vector<int>> men(n), women(n);
  for (int person = 0; person < n; ++person) {
    men[person] = extend(Side::kMen, person, women_order);
    women[person] = extend(Side::kWomen, person, men_order);
  }
  return StrictProfile(std::move(men), std::move(women));
}

LexAlphaSolution SolveLexMaleAlpha(const QuantInstance& instance, Alpha alpha,
                                   const VotingRule& rule) {
  TotalOrder men_order = rule(instance, Side::kMen);
  TotalOrder women_order = rule(instance, Side::kWomen);
  StrictProfile linearized =
      Linearize(AlphaTransform(instance, alpha), men_order, women_order);
  Marriage marriage = GaleShapley(linearized, Side::kMen);
  return LexAlphaSolution{std::move(men_order), std::move(women_order),
                          std::move(linearized), std::move(marriage)};
}

Marriage LexMaleAlphaGs(const QuantInstance& instance, Alpha alpha,
                        const VotingRule& rule) {
  return SolveLexMaleAlpha(instance, alpha, rule).marriage;
}

}  // namespace smq
