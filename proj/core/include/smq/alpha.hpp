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

#ifndef SMQ_ALPHA_HPP_
#define SMQ_ALPHA_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "smq/model.hpp"

namespace smq {

// Minimum score gap that counts as a preference. Always >= 1.
class Alpha {
 public:
  // Throws std::invalid_argument for values below 1.
  explicit Alpha(Score value);

  Score value() const { return value_; }

  friend bool operator==(Alpha, Alpha) = default;

 private:
  Score value_;
};

// Partial-order view of an instance: x prefers a to b iff
// p(x,a) - p(x,b) >= alpha; closer scores are incomparable.
class SemiorderProfile {
 public:
  SemiorderProfile(QuantInstance instance, Alpha alpha)
      : instance_(std::move(instance)), alpha_(alpha) {}

  int size() const { return instance_.size(); }
  const QuantInstance& instance() const { return instance_; }
  Alpha alpha() const { return alpha_; }

  bool StrictlyPrefers(Side side, int person, int a, int b) const {
    return instance_.score(side, person, a) -
               instance_.score(side, person, b) >=
           alpha_.value();
  }
  bool Incomparable(Side side, int person, int a, int b) const {
    return a != b && !StrictlyPrefers(side, person, a, b) &&
           !StrictlyPrefers(side, person, b, a);
  }

  // Number of unordered incomparable candidate pairs over all 2n lists.
  int CountIncomparablePairs() const;

 private:
  QuantInstance instance_;
  Alpha alpha_;
};

SemiorderProfile AlphaTransform(const QuantInstance& instance, Alpha alpha);

// A strict ranking of everyone on one side, most popular first.
class TotalOrder {
 public:
  // Throws std::invalid_argument unless `ranking` is a permutation of 0..n-1.
  explicit TotalOrder(std::vector<int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }
  int position(int person) const { return position_[person]; }
  bool Precedes(int a, int b) const { return position_[a] < position_[b]; }

  TotalOrder Reversed() const;

  friend bool operator==(const TotalOrder& a, const TotalOrder& b) {
    return a.ranking_ == b.ranking_;
  }

 private:
  std::vector<int> ranking_;
  std::vector<int> position_;
};

// Orders the people of `ranked` using the scores the other side gives them.
using VotingRule = std::function<TotalOrder(const QuantInstance&, Side ranked)>;

// Total score each person on `ranked` receives from the opposite side.
std::vector<Score> ScoreSums(const QuantInstance& instance, Side ranked);

// Decreasing total received score, ties broken by ascending index.
TotalOrder ScoreSumRule(const QuantInstance& instance, Side ranked);

// Linear extension of every list of `semiorder`. Each step emits, among the
// remaining candidates that no remaining candidate strictly beats, the one
// ranked first by `women_order` (for men's lists) or `men_order` (for
// women's lists).
StrictProfile Linearize(const SemiorderProfile& semiorder,
                        const TotalOrder& men_order,
                        const TotalOrder& women_order);

struct LexAlphaSolution {
  TotalOrder men_order;
  TotalOrder women_order;
  StrictProfile linearized;
  Marriage marriage;
};

// Popularity orders from `rule`, the order-guided linearization of the
// alpha view, then men-proposing deferred acceptance.
LexAlphaSolution SolveLexMaleAlpha(const QuantInstance& instance, Alpha alpha,
                                   const VotingRule& rule = ScoreSumRule);

Marriage LexMaleAlphaGs(const QuantInstance& instance, Alpha alpha,
                        const VotingRule& rule = ScoreSumRule);

}  // namespace smq

#endif  // SMQ_ALPHA_HPP_
