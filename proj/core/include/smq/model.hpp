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

#ifndef SMQ_MODEL_HPP_
#define SMQ_MODEL_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace smq {

using Score = std::int64_t;

// Scores above this bound are rejected so that sums over a whole market
// never overflow.
inline constexpr Score kMaxScore = 2147483647;

enum class Side { kMen, kWomen };

constexpr Side Opposite(Side side) {
  return side == Side::kMen ? Side::kWomen : Side::kMen;
}

// "m3", "w1": 1-based names used in every human-facing output.
std::string PersonName(Side side, int index);

enum class ValidationErrorKind {
  kSyntax,
  kZeroSize,
  kNonSquare,
  kNegativeScore,
  kScoreTooLarge,
  kDuplicateScore,
};

std::string_view ToString(ValidationErrorKind kind);

class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationErrorKind kind, const std::string& message);

  ValidationErrorKind kind() const { return kind_; }

 private:
  ValidationErrorKind kind_;
};

// Unchecked instance data as read from a file or built by hand.
struct RawInstance {
  std::int64_t n = 0;
  std::vector<std::vector<Score>> men;
  std::vector<std::vector<Score>> women;
};

// A stable marriage problem with quantitative preferences.
//
// men_scores()[i][j] is the value man i gives woman j, women_scores()[i][j]
// the value woman i gives man j. Every row holds pairwise distinct
// non-negative integers, so each person's induced ranking is strict. The
// same value may appear in rows of different people.
class QuantInstance {
 public:
  int size() const { return n_; }

  std::span<const std::vector<Score>> scores(Side side) const {
    return side == Side::kMen ? men_ : women_;
  }
  const std::vector<std::vector<Score>>& men_scores() const { return men_; }
  const std::vector<std::vector<Score>>& women_scores() const { return women_; }

  // Value `person` (on `side`) gives `candidate` (on the opposite side).
  Score score(Side side, int person, int candidate) const {
    return (side == Side::kMen ? men_ : women_)[person][candidate];
  }

  friend bool operator==(const QuantInstance&, const QuantInstance&) = default;

 private:
  friend QuantInstance Validate(RawInstance raw);

  QuantInstance(int n, std::vector<std::vector<Score>> men,
                std::vector<std::vector<Score>> women)
      : n_(n), men_(std::move(men)), women_(std::move(women)) {}

  int n_;
  std::vector<std::vector<Score>> men_;
  std::vector<std::vector<Score>> women_;
};

// Checks every instance invariant; throws ValidationError naming the first
// violation found.
QuantInstance Validate(RawInstance raw);

// Strict total orders for all 2n people, most preferred first.
class StrictProfile {
 public:
  // Throws std::invalid_argument unless both sides hold n permutations of
  // 0..n-1.
  StrictProfile(std::vector<std::vector<int>> men_prefs,
                std::vector<std::vector<int>> women_prefs);

  int size() const { return static_cast<int>(men_prefs_.size()); }

  const std::vector<int>& prefs(Side side, int person) const {
    return (side == Side::kMen ? men_prefs_ : women_prefs_)[person];
  }
  const std::vector<std::vector<int>>& men_prefs() const { return men_prefs_; }
  const std::vector<std::vector<int>>& women_prefs() const {
    return women_prefs_;
  }

  // Position of `candidate` in the list of `person`; 0 is the top choice.
  int rank(Side side, int person, int candidate) const {
    return (side == Side::kMen ? men_rank_ : women_rank_)[person][candidate];
  }

  bool prefers(Side side, int person, int a, int b) const {
    return rank(side, person, a) < rank(side, person, b);
  }

  friend bool operator==(const StrictProfile& a, const StrictProfile& b) {
    return a.men_prefs_ == b.men_prefs_ && a.women_prefs_ == b.women_prefs_;
  }

 private:
  std::vector<std::vector<int>> men_prefs_;
  std::vector<std::vector<int>> women_prefs_;
  std::vector<std::vector<int>> men_rank_;
  std::vector<std::vector<int>> women_rank_;
};

// Thrown when a partner array is not a permutation.
class MalformedMarriage : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A perfect matching; partner_of_man()[i] is the woman married to man i.
class Marriage {
 public:
  explicit Marriage(std::vector<int> partner_of_man);

  int size() const { return static_cast<int>(wife_.size()); }
  int wife(int man) const { return wife_[man]; }
  int husband(int woman) const { return husband_[woman]; }
  int partner(Side side, int person) const {
    return side == Side::kMen ? wife_[person] : husband_[person];
  }
  const std::vector<int>& partner_of_man() const { return wife_; }

  friend bool operator==(const Marriage& a, const Marriage& b) {
    return a.wife_ == b.wife_;
  }
  friend auto operator<=>(const Marriage& a, const Marriage& b) {
    return a.wife_ <=> b.wife_;
  }

 private:
  std::vector<int> wife_;
  std::vector<int> husband_;
};

// Preferences with ties: every person attaches a derived value to each
// candidate. Lists are kept sorted by decreasing value, ties by ascending
// candidate index.
class WeakProfile {
 public:
  struct Entry {
    int candidate;
    Score value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  // values_men[i][j]: value of woman j for man i; values_women likewise.
  // Throws std::invalid_argument on shape mismatch or negative values.
  WeakProfile(std::vector<std::vector<Score>> values_men,
              std::vector<std::vector<Score>> values_women);

  int size() const { return static_cast<int>(men_values_.size()); }

  const std::vector<Entry>& entries(Side side, int person) const {
    return (side == Side::kMen ? men_entries_ : women_entries_)[person];
  }
  Score value(Side side, int person, int candidate) const {
    return (side == Side::kMen ? men_values_
                               : women_values_)[person][candidate];
  }

 private:
  std::vector<std::vector<Score>> men_values_;
  std::vector<std::vector<Score>> women_values_;
  std::vector<std::vector<Entry>> men_entries_;
  std::vector<std::vector<Entry>> women_entries_;
};

// The classical problem induced by the scores: each list sorted by
// decreasing own score.
StrictProfile DeriveClassical(const QuantInstance& instance);

// Instance JSON: {"n":N,"men":[[...]],"women":[[...]]}.
// Throws ValidationError (kSyntax for malformed JSON or wrong types).
QuantInstance ParseInstance(std::string_view text);
std::string SerializeInstance(const QuantInstance& instance);

// Marriage JSON: {"match":[j1,...,jn]} with 0-based woman indices.
Marriage ParseMarriage(std::string_view text);
std::string SerializeMarriage(const Marriage& marriage);

// "1,0,2" -> Marriage. Throws MalformedMarriage on bad tokens or a
// non-permutation.
Marriage ParseMarriageList(std::string_view text);

}  // namespace smq

#endif  // SMQ_MODEL_HPP_
