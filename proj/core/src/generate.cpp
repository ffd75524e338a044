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

#include "smq/generate.hpp"

#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace smq {

namespace {

// The engine's raw output is fully specified by the standard; the
// distribution classes are not, so sampling is done by hand for
// reproducibility across standard libraries.
std::uint64_t Below(std::mt19937_64& engine, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = engine();
  } while (draw >= limit);
  return draw % bound;
}

// Floyd's algorithm: n distinct values from 1..max_score, in draw order.
std::vector<Score> DistinctRow(std::mt19937_64& engine, int n,
                               Score max_score) {
  std::vector<Score> row;
  std::unordered_set<Score> used;
  for (Score j = max_score - n + 1; j <= max_score; ++j) {
    const Score t = 1 + static_cast<Score>(Below(engine, j));
    const Score pick = used.count(t) ? j : t;
    used.insert(pick);
    row.push_back(pick);
  }
  // Floyd's draw order is biased; shuffle so positions are uniform.
  for (std::size_t i = row.size(); i > 1; --i) {
    std::swap(row[i - 1], row[Below(engine, i)]);
  }
  return row;
}

}  // namespace

QuantInstance RandomInstance(int n, std::uint64_t seed, Score max_score) {
  if (n < 1 || max_score < n || max_score > kMaxScore) {
    throw std::invalid_argument("need 1 <= n <= max_score <= kMaxScore");
  }
  std::mt19937_64 engine(seed);
  RawInstance raw;
  raw.n = n;
  for (int i = 0; i < n; ++i)
    raw.men.push_back(DistinctRow(engine, n, max_score));
  for (int i = 0; i < n; ++i) {
    raw.women.push_back(DistinctRow(engine, n, max_score));
  }
  return Validate(std::move(raw));
}

StrictProfile RandomProfile(int n, std::uint64_t seed) {
  std::mt19937_64 engine(seed);
  auto side = [&] {
    std::vector<std::vector<int>> prefs(n, std::vector<int>(n));
    for (auto& list : prefs) {
      std::iota(list.begin(), list.end(), 0);
      for (std::size_t i = list.size(); i > 1; --i) {
        std::swap(list[i - 1], list[Below(engine, i)]);
      }
    }
    return prefs;
  };
  auto men = side();
  auto women = side();
  return StrictProfile(std::move(men), std::move(women));
}

}  // namespace smq
