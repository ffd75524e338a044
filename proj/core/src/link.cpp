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

#include "smq/link.hpp"

#include <algorithm>

#include "smq/gale_shapley.hpp"

namespace smq {

std::string_view ToString(LinkMode mode) {
  return mode == LinkMode::kAdditive ? "link-add" : "link-max";
}

Score LinkValue(const QuantInstance& instance, int man, int woman,
                LinkMode mode) {
  const Score his = instance.score(Side::kMen, man, woman);
  const Score hers = instance.score(Side::kWomen, woman, man);
  return mode == LinkMode::kAdditive ? his + hers : std::max(his, hers);
}

Score MarriageLink(const QuantInstance& instance, const Marriage& marriage,
                   LinkMode mode) {
  Score total = 0;
  for (int m = 0; m < marriage.size(); ++m) {
    const Score link = LinkValue(instance, m, marriage.wife(m), mode);
    total = mode == LinkMode::kAdditive ? total + link : std::max(total, link);
  }
  return total;
}

WeakProfile LinkTransform(const QuantInstance& instance, LinkMode mode) {
  const int n = instance.size();
  std::vector<std::vector<Score>> men(n, std::vector<Score>(n));
  std::vector<std::vector<Score>> women(n, std::vector<Score>(n));
  for (int m = 0; m < n; ++m) {
    for (int w = 0; w < n; ++w) {
      men[m][w] = women[w][m] = LinkValue(instance, m, w, mode);
    }
  }
  return WeakProfile(std::move(men), std::move(women));
}

bool HasTies(const WeakProfile& profile) {
  for (Side side : {Side::kMen, Side::kWomen}) {
    for (int person = 0; person < profile.size(); ++person) {
      const auto& entries = profile.entries(side, person);
      for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i].value == entries[i - 1].value) return true;
      }
    }
  }
  return false;
}

StrictProfile LinearizeByIndex(const WeakProfile& profile) {
  const int n = profile.size();
  auto side_prefs = [&](Side side) {
    std::vector<std::vector<int>> prefs(n);
    for (int person = 0; person < n; ++person) {
      for (const auto& entry : profile.entries(side, person)) {
        prefs[person].push_back(entry.candidate);
      }
    }
    return prefs;
  };
  return StrictProfile(side_prefs(Side::kMen), side_prefs(Side::kWomen));
}

Marriage LinkStableGs(const QuantInstance& instance, LinkMode mode) {
  return GaleShapley(LinearizeByIndex(LinkTransform(instance, mode)),
                     Side::kMen);
}

}  // namespace smq
