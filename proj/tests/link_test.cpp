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
#include <set>

#include "fixtures.hpp"
#include "gtest/gtest.h"
#include "smq/generate.hpp"
#include "smq/oracle.hpp"
#include "smq/stability.hpp"

namespace smq {
namespace {

using testing::BruteForceStable;
using testing::Crossed;
using testing::InstanceA;
using testing::InstanceC;
using testing::SingleCouple;
using testing::Straight;

bool SameRankingsAsClassical(const WeakProfile& w, const StrictProfile& c) {
  if (HasTies(w)) return false;
  for (Side side : {Side::kMen, Side::kWomen}) {
    for (int x = 0; x < w.size(); ++x) {
      const auto& entries = w.entries(side, x);
      for (int k = 0; k < w.size(); ++k) {
        if (entries[k].candidate != c.prefs(side, x)[k]) return false;
      }
    }
  }
  return true;
}

bool AllScoresDistinct(const QuantInstance& p) {
  std::set<Score> seen;
  for (Side side : {Side::kMen, Side::kWomen}) {
    for (const auto& row : p.scores(side)) seen.insert(row.begin(), row.end());
  }
  return seen.size() == static_cast<std::size_t>(2 * p.size() * p.size());
}

TEST(LinkValueTest, LinkExample) {
  const QuantInstance p = InstanceC();
  EXPECT_EQ(LinkValue(p, 0, 0, LinkMode::kAdditive), 35);
  EXPECT_EQ(LinkValue(p, 1, 1, LinkMode::kAdditive), 5);
  EXPECT_EQ(LinkValue(p, 0, 1, LinkMode::kAdditive), 13);
  EXPECT_EQ(LinkValue(p, 1, 0, LinkMode::kAdditive), 10);
  EXPECT_EQ(LinkValue(InstanceA(), 0, 0, LinkMode::kMaximal), 9);
}

TEST(MarriageLinkTest, LinkExample) {
  EXPECT_EQ(MarriageLink(InstanceC(), Straight(), LinkMode::kAdditive), 40);
  EXPECT_EQ(MarriageLink(InstanceC(), Crossed(), LinkMode::kAdditive), 23);
  EXPECT_EQ(MarriageLink(InstanceC(), Straight(), LinkMode::kMaximal), 30);
  EXPECT_EQ(MarriageLink(SingleCouple(), Marriage({0}), LinkMode::kMaximal), 7);
  EXPECT_EQ(MarriageLink(SingleCouple(), Marriage({0}), LinkMode::kAdditive),
            12);
}

TEST(LinkTransformTest, LinkExampleAdditive) {
  const WeakProfile w = LinkTransform(InstanceC(), LinkMode::kAdditive);
  using E = WeakProfile::Entry;
  EXPECT_EQ(w.entries(Side::kMen, 0), (std::vector<E>{{0, 35}, {1, 13}}));
  EXPECT_EQ(w.entries(Side::kMen, 1), (std::vector<E>{{0, 10}, {1, 5}}));
  EXPECT_EQ(w.entries(Side::kWomen, 0), (std::vector<E>{{0, 35}, {1, 10}}));
  EXPECT_EQ(w.entries(Side::kWomen, 1), (std::vector<E>{{0, 13}, {1, 5}}));
  EXPECT_FALSE(HasTies(w));
}

TEST(LinkTransformTest, UnchangedRankingsReproduceClassicalProfile) {
  // Every person's order already agrees with the link order.
  const QuantInstance p = Validate({2, {{10, 1}, {1, 10}}, {{10, 1}, {1, 10}}});
  EXPECT_TRUE(SameRankingsAsClassical(LinkTransform(p, LinkMode::kAdditive),
                                      DeriveClassical(p)));
  EXPECT_FALSE(
      SameRankingsAsClassical(LinkTransform(InstanceC(), LinkMode::kAdditive),
                              DeriveClassical(InstanceC())));
}

TEST(LinkTransformTest, SymmetricScoresKeepClassicalRankingsUnderMax) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const QuantInstance base = RandomInstance(n, seed, 4 * n);
    RawInstance raw{n, base.men_scores(), base.men_scores()};
    // Symmetric means p(w_j, m_i) = p(m_i, w_j); columns must stay distinct.
    for (int w = 0; w < n; ++w) {
      for (int m = 0; m < n; ++m) raw.women[w][m] = base.men_scores()[m][w];
    }
    bool columns_distinct = true;
    for (const auto& row : raw.women) {
      if (std::set<Score>(row.begin(), row.end()).size() != row.size()) {
        columns_distinct = false;
      }
    }
    if (!columns_distinct) continue;
    const QuantInstance p = Validate(raw);
    EXPECT_TRUE(SameRankingsAsClassical(LinkTransform(p, LinkMode::kMaximal),
                                        DeriveClassical(p)));
  }
}

TEST(LinkTransformTest, BothMembersOfAPairCarryTheSameValue) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    const QuantInstance p = RandomInstance(n, seed, 2 * n);
    for (LinkMode mode : {LinkMode::kAdditive, LinkMode::kMaximal}) {
      const WeakProfile w = LinkTransform(p, mode);
      for (int m = 0; m < n; ++m) {
        for (int f = 0; f < n; ++f) {
          EXPECT_EQ(w.value(Side::kMen, m, f), w.value(Side::kWomen, f, m));
          EXPECT_EQ(w.value(Side::kMen, m, f), LinkValue(p, m, f, mode));
        }
      }
    }
  }
}

TEST(HasTiesTest, DetectsEqualValues) {
  // la(m1,w1) = la(m1,w2) = 5.
  const QuantInstance p = Validate({2, {{1, 2}, {3, 1}}, {{4, 2}, {3, 4}}});
  EXPECT_TRUE(HasTies(LinkTransform(p, LinkMode::kAdditive)));
  EXPECT_FALSE(HasTies(LinkTransform(InstanceA(), LinkMode::kMaximal)));
}

TEST(LinearizeByIndexTest, TiesResolvedByIndex) {
  const WeakProfile w({{4, 4, 9}, {1, 2, 3}, {5, 5, 5}},
                      {{1, 2, 3}, {3, 2, 1}, {7, 7, 0}});
  const StrictProfile s = LinearizeByIndex(w);
  EXPECT_EQ(s.prefs(Side::kMen, 0), (std::vector<int>{2, 0, 1}));
  EXPECT_EQ(s.prefs(Side::kMen, 2), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(s.prefs(Side::kWomen, 2), (std::vector<int>{0, 1, 2}));
}

TEST(LinkStableGsTest, LinkExampleAdditive) {
  const Marriage m = LinkStableGs(InstanceC(), LinkMode::kAdditive);
  EXPECT_EQ(m, Straight());
  EXPECT_EQ(MarriageLink(InstanceC(), m, LinkMode::kAdditive), 40);
}

TEST(LinkStableGsTest, SingleCouple) {
  EXPECT_EQ(LinkStableGs(SingleCouple(), LinkMode::kAdditive), Marriage({0}));
  EXPECT_EQ(LinkStableGs(SingleCouple(), LinkMode::kMaximal), Marriage({0}));
}

TEST(LinkStableGsTest, TwoCoupleInstanceUnderMax) {
  const QuantInstance p = InstanceA();
  // Oracle: hand-written max-link blocking predicate over both marriages,
  // then the best aggregate among the survivors.
  auto lm = [&](int m, int w) {
    return std::max(p.score(Side::kMen, m, w), p.score(Side::kWomen, w, m));
  };
  const auto stable = BruteForceStable(2, [&](int m, int w, const Marriage& x) {
    return lm(m, w) > lm(m, x.wife(m)) && lm(m, w) > lm(x.husband(w), w);
  });
  ASSERT_EQ(stable.size(), 1u);
  EXPECT_EQ(stable[0], Straight());
  EXPECT_EQ(LinkStableGs(p, LinkMode::kMaximal), Straight());
}

class LinkFuzz : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(LinkFuzz, OutputIsLinkStable) {
  const std::uint64_t seed = GetParam();
  const int n = 1 + static_cast<int>(seed % 8);
  const QuantInstance p = RandomInstance(n, seed, n + seed % 5);
  for (LinkMode mode : {LinkMode::kAdditive, LinkMode::kMaximal}) {
    EXPECT_TRUE(
        BlockingPairs(p, LinkStableGs(p, mode), Notion::Link(mode)).stable());
  }
}

TEST_P(LinkFuzz, NoTiesMeansUniqueHighestLink) {
  const std::uint64_t seed = GetParam();
  const int n = 2 + static_cast<int>(seed % 4);
  const QuantInstance p = RandomInstance(n, seed, 3 * n);
  for (LinkMode mode : {LinkMode::kAdditive, LinkMode::kMaximal}) {
    if (HasTies(LinkTransform(p, mode))) continue;
    const auto best = HighestLink(p, mode);
    ASSERT_EQ(best.size(), 1u) << SerializeInstance(p);
    EXPECT_EQ(best[0], LinkStableGs(p, mode));
  }
}

TEST_P(LinkFuzz, DistinctScoresGiveUniqueMaxLinkOptimum) {
  const std::uint64_t seed = GetParam();
  const int n = 2 + static_cast<int>(seed % 4);
  const QuantInstance p = RandomInstance(n, seed, 1000);
  if (!AllScoresDistinct(p)) GTEST_SKIP();
  EXPECT_FALSE(HasTies(LinkTransform(p, LinkMode::kMaximal)));
  const auto best = HighestLink(p, LinkMode::kMaximal);
  ASSERT_EQ(best.size(), 1u);
  EXPECT_EQ(best[0], LinkStableGs(p, LinkMode::kMaximal));
}

TEST_P(LinkFuzz, ClassicalRankingsGiveClassicalStableSet) {
  const std::uint64_t seed = GetParam();
  const int n = 2 + static_cast<int>(seed % 3);
  // Rows chosen so every comparison agrees: man i and woman i rank each
  // other by the same distance.
  RawInstance raw{n, {}, {}};
  raw.men.assign(n, std::vector<Score>(n));
  raw.women.assign(n, std::vector<Score>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Score d = (i - j + n) % n;
      raw.men[i][j] = 10 * (n - d) + static_cast<Score>(seed % 7);
      raw.women[j][i] = 10 * (n - d) + static_cast<Score>(seed % 5);
    }
  }
  const QuantInstance p = Validate(raw);
  for (LinkMode mode : {LinkMode::kAdditive, LinkMode::kMaximal}) {
    ASSERT_TRUE(
        SameRankingsAsClassical(LinkTransform(p, mode), DeriveClassical(p)));
    EXPECT_EQ(EnumerateStable(p, Notion::Link(mode)).marriages(),
              EnumerateStable(p, Notion::Classical()).marriages());
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, LinkFuzz,
                         ::testing::Range<std::uint64_t>(0, 80));

}  // namespace
}  // namespace smq
