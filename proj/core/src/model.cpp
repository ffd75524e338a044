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

#include "smq/model.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <utility>

#include "json.hpp"

namespace smq {

namespace {

using nlohmann::ordered_json;

bool IsPermutation(const std::vector<int>& values, int n) {
  if (static_cast<int>(values.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : values) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::vector<int>> RankTable(
    const std::vector<std::vector<int>>& prefs) {
  std::vector<std::vector<int>> rank(prefs.size(),
                                     std::vector<int>(prefs.size()));
  for (std::size_t person = 0; person < prefs.size(); ++person) {
    for (std::size_t pos = 0; pos < prefs[person].size(); ++pos) {
      rank[person][prefs[person][pos]] = static_cast<int>(pos);
    }
  }
  return rank;
}

void CheckMatrix(const std::vector<std::vector<Score>>& rows, std::int64_t n,
                 Side side) {
  const char* label = side == Side::kMen ? "men" : "women";
  if (static_cast<std::int64_t>(rows.size()) != n) {
    throw ValidationError(ValidationErrorKind::kNonSquare,
                          std::string(label) + " matrix has " +
                              std::to_string(rows.size()) + " rows, expected " +
                              std::to_string(n));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<std::int64_t>(rows[i].size()) != n) {
      throw ValidationError(ValidationErrorKind::kNonSquare,
                            std::string(label) + " row " +
                                std::to_string(i + 1) + " has " +
                                std::to_string(rows[i].size()) +
                                " entries, expected " + std::to_string(n));
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string who = PersonName(side, static_cast<int>(i));
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const std::string whom = PersonName(Opposite(side), static_cast<int>(j));
      if (rows[i][j] < 0) {
        throw ValidationError(ValidationErrorKind::kNegativeScore,
                              who + " gives " + whom + " negative score " +
                                  std::to_string(rows[i][j]));
      }
      if (rows[i][j] > kMaxScore) {
        throw ValidationError(ValidationErrorKind::kScoreTooLarge,
                              who + " gives " + whom + " score " +
                                  std::to_string(rows[i][j]) +
                                  " above the supported maximum");
      }
    }
    for (std::size_t a = 0; a < rows[i].size(); ++a) {
      for (std::size_t b = a + 1; b < rows[i].size(); ++b) {
        if (rows[i][a] == rows[i][b]) {
          throw ValidationError(
              ValidationErrorKind::kDuplicateScore,
              who + " gives " +
                  PersonName(Opposite(side), static_cast<int>(a)) + " and " +
                  PersonName(Opposite(side), static_cast<int>(b)) +
                  " the same score " + std::to_string(rows[i][a]));
        }
      }
    }
  }
}

std::vector<std::vector<Score>> ReadMatrix(const ordered_json& doc,
                                           const char* key) {
  if (!doc.contains(key)) {
    throw ValidationError(ValidationErrorKind::kSyntax,
                          std::string("missing key \"") + key + "\"");
  }
  const auto& value = doc.at(key);
  if (!value.is_array()) {
    throw ValidationError(ValidationErrorKind::kSyntax,
                          std::string("\"") + key + "\" must be an array");
  }
  std::vector<std::vector<Score>> rows;
  rows.reserve(value.size());
  for (const auto& row : value) {
    if (!row.is_array()) {
      throw ValidationError(
          ValidationErrorKind::kSyntax,
          std::string("rows of \"") + key + "\" must be arrays");
    }
    std::vector<Score> out;
    out.reserve(row.size());
    for (const auto& cell : row) {
      if (cell.is_number_unsigned()) {
        auto v = cell.get<std::uint64_t>();
        out.push_back(v > static_cast<std::uint64_t>(kMaxScore)
                          ? kMaxScore + 1
                          : static_cast<Score>(v));
      } else if (cell.is_number_integer()) {
        out.push_back(cell.get<std::int64_t>());
      } else {
        throw ValidationError(
            ValidationErrorKind::kSyntax,
            std::string("entries of \"") + key + "\" must be integers");
      }
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

ordered_json ParseJson(std::string_view text) {
  try {
    return ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw ValidationError(ValidationErrorKind::kSyntax, e.what());
  }
}

}  // namespace

std::string PersonName(Side side, int index) {
  return (side == Side::kMen ? "m" : "w") + std::to_string(index + 1);
}

std::string_view ToString(ValidationErrorKind kind) {
  switch (kind) {
    case ValidationErrorKind::kSyntax:
      return "SyntaxError";
    case ValidationErrorKind::kZeroSize:
      return "ZeroSize";
    case ValidationErrorKind::kNonSquare:
      return "NonSquare";
    case ValidationErrorKind::kNegativeScore:
      return "NegativeScore";
    case ValidationErrorKind::kScoreTooLarge:
      return "ScoreTooLarge";
    case ValidationErrorKind::kDuplicateScore:
      return "DuplicateScore";
  }
  return "Unknown";
}

ValidationError::ValidationError(ValidationErrorKind kind,
                                 const std::string& message)
    : std::runtime_error(std::string(ToString(kind)) + ": " + message),
      kind_(kind) {}

QuantInstance Validate(RawInstance raw) {
  if (raw.n < 1) {
    throw ValidationError(ValidationErrorKind::kZeroSize,
                          "n must be at least 1, got " + std::to_string(raw.n));
  }
  CheckMatrix(raw.men, raw.n, Side::kMen);
  CheckMatrix(raw.women, raw.n, Side::kWomen);
  return QuantInstance(static_cast<int>(raw.n), std::move(raw.men),
                       std::move(raw.women));
}

StrictProfile::StrictProfile(std::vector<std::vector<int>> men_prefs,
                             std::vector<std::vector<int>> women_prefs)
    : men_prefs_(std::move(men_prefs)), women_prefs_(std::move(women_prefs)) {
  const int n = static_cast<int>(men_prefs_.size());
  if (n < 1 || static_cast<int>(women_prefs_.size()) != n) {
    throw std::invalid_argument("profile needs n >= 1 lists on each side");
  }
  for (const auto* side : {&men_prefs_, &women_prefs_}) {
    for (const auto& list : *side) {
      if (!IsPermutation(list, n)) {
        throw std::invalid_argument("preference list is not a permutation");
      }
    }
  }
  men_rank_ = RankTable(men_prefs_);
  women_rank_ = RankTable(women_prefs_);
}

Marriage::Marriage(std::vector<int> partner_of_man)
    : wife_(std::move(partner_of_man)) {
  const int n = static_cast<int>(wife_.size());
  if (n < 1 || !IsPermutation(wife_, n)) {
    throw MalformedMarriage("marriage is not a permutation of 0.." +
                            std::to_string(n - 1));
  }
  husband_.assign(n, 0);
  for (int m = 0; m < n; ++m) husband_[wife_[m]] = m;
}

WeakProfile::WeakProfile(std::vector<std::vector<Score>> values_men,
                         std::vector<std::vector<Score>> values_women)
    : men_values_(std::move(values_men)),
      women_values_(std::move(values_women)) {
  const std::size_t n = men_values_.size();
  if (n < 1 || women_values_.size() != n) {
    throw std::invalid_argument("weak profile needs n >= 1 rows per side");
  }
  auto build = [n](const std::vector<std::vector<Score>>& values) {
    std::vector<std::vector<Entry>> entries(n);
    for (std::size_t person = 0; person < n; ++person) {
      if (values[person].size() != n) {
        throw std::invalid_argument("weak profile row has wrong length");
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (values[person][c] < 0) {
          throw std::invalid_argument("weak profile values must be >= 0");
        }
        entries[person].push_back({static_cast<int>(c), values[person][c]});
      }
      std::stable_sort(
          entries[person].begin(), entries[person].end(),
          [](const Entry& a, const Entry& b) { return a.value > b.value; });
    }
    return entries;
  };
  men_entries_ = build(men_values_);
  women_entries_ = build(women_values_);
}

StrictProfile DeriveClassical(const QuantInstance& instance) {
  const int n = instance.size();
  auto side_prefs = [&](Side side) {
    std::vector<std::vector<int>> prefs(n);
    for (int person = 0; person < n; ++person) {
      auto& list = prefs[person];
      list.resize(n);
      std::iota(list.begin(), list.end(), 0);
      std::sort(list.begin(), list.end(), [&](int a, int b) {
        return instance.score(side, person, a) >
               instance.score(side, person, b);
      });
    }
    return prefs;
  };
  return StrictProfile(side_prefs(Side::kMen), side_prefs(Side::kWomen));
}

QuantInstance ParseInstance(std::string_view text) {
  const ordered_json doc = ParseJson(text);
  if (!doc.is_object()) {
    throw ValidationError(ValidationErrorKind::kSyntax,
                          "instance must be a JSON object");
  }
  if (!doc.contains("n") || !doc.at("n").is_number_integer()) {
    throw ValidationError(ValidationErrorKind::kSyntax,
                          "\"n\" must be an integer");
  }
  RawInstance raw;
  raw.n = doc.at("n").is_number_unsigned()
              ? static_cast<std::int64_t>(std::min<std::uint64_t>(
                    doc.at("n").get<std::uint64_t>(), 1u << 30))
              : doc.at("n").get<std::int64_t>();
  raw.men = ReadMatrix(doc, "men");
  raw.women = ReadMatrix(doc, "women");
  return Validate(std::move(raw));
}

std::string SerializeInstance(const QuantInstance& instance) {
  ordered_json doc;
  doc["n"] = instance.size();
  doc["men"] = instance.men_scores();
  doc["women"] = instance.women_scores();
  return doc.dump();
}

Marriage ParseMarriage(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const ordered_json::parse_error& e) {
    throw MalformedMarriage(e.what());
  }
  if (!doc.is_object() || !doc.contains("match") ||
      !doc.at("match").is_array()) {
    throw MalformedMarriage("marriage JSON needs a \"match\" array");
  }
  std::vector<int> partners;
  for (const auto& cell : doc.at("match")) {
    if (!cell.is_number_integer()) {
      throw MalformedMarriage("\"match\" entries must be integers");
    }
    const auto v = cell.get<std::int64_t>();
    if (v < 0 || v > (1 << 30)) {
      throw MalformedMarriage("woman index out of range");
    }
    partners.push_back(static_cast<int>(v));
  }
  return Marriage(std::move(partners));
}

std::string SerializeMarriage(const Marriage& marriage) {
  ordered_json doc;
  doc["match"] = marriage.partner_of_man();
  return doc.dump();
}

Marriage ParseMarriageList(std::string_view text) {
  std::vector<int> partners;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(pos, end - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw MalformedMarriage("bad marriage entry \"" + std::string(token) +
                              "\"");
    }
    partners.push_back(value);
    pos = end + 1;
  }
  return Marriage(std::move(partners));
}

}  // namespace smq
