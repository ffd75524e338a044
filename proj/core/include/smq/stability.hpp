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

#ifndef SMQ_STABILITY_HPP_
#define SMQ_STABILITY_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smq/alpha.hpp"
#include "smq/link.hpp"
#include "smq/model.hpp"

namespace smq {

enum class NotionKind { kClassical, kAlpha, kLinkAdditive, kLinkMaximal };

// A stability notion; `alpha` is set iff kind == kAlpha.
struct Notion {
  NotionKind kind = NotionKind::kClassical;
  std::optional<Alpha> alpha;

  static Notion Classical() { return {NotionKind::kClassical, std::nullopt}; }
  static Notion AlphaGap(Alpha a) { return {NotionKind::kAlpha, a}; }
  static Notion Link(LinkMode mode) {
    return {mode == LinkMode::kAdditive ? NotionKind::kLinkAdditive
                                        : NotionKind::kLinkMaximal,
            std::nullopt};
  }

  friend bool operator==(const Notion&, const Notion&) = default;
};

// "classical", "alpha", "link-add", "link-max".
std::string_view ToString(NotionKind kind);
// Throws std::invalid_argument on unknown names. `alpha` is required for
// "alpha" and rejected otherwise.
Notion ParseNotion(std::string_view name, std::optional<Score> alpha);

// The four values compared by a blocking predicate, in the notion's own
// currency: raw scores for classical/alpha, link strengths for link notions.
struct Witness {
  Score man_candidate;    // m's value for w
  Score man_current;      // m's value for his partner
  Score woman_candidate;  // w's value for m
  Score woman_current;    // w's value for her partner

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct BlockingPair {
  int man;
  int woman;
  Witness witness;

  friend bool operator==(const BlockingPair&, const BlockingPair&) = default;
};

struct BlockingReport {
  Notion notion;
  std::vector<BlockingPair> pairs;  // ordered by (man, woman)

  bool stable() const { return pairs.empty(); }
};

// Witness if (man, woman) blocks `marriage` under `notion`.
std::optional<Witness> BlockingWitness(const QuantInstance& instance,
                                       const Marriage& marriage,
                                       const Notion& notion, int man,
                                       int woman);

BlockingReport BlockingPairs(const QuantInstance& instance,
                             const Marriage& marriage, const Notion& notion);

// Stops at the first blocking pair.
bool IsStable(const QuantInstance& instance, const Marriage& marriage,
              const Notion& notion);

// Every man weakly prefers his partner in `a` (by his own scores) and at
// least one strictly prefers it.
bool Dominates(const QuantInstance& instance, const Marriage& a,
               const Marriage& b);

enum class LexResult { kFirst, kSecond, kEqual };

// Men are scanned in `men_order`; the first man whose partners differ
// decides, in favour of the marriage giving him the partner `women_order`
// ranks higher.
LexResult LexCompare(const Marriage& a, const Marriage& b,
                     const TotalOrder& men_order,
                     const TotalOrder& women_order);

// {"notion":...,"alpha":...,"pairs":[{"m":i,"w":j,"witness":{...}}]}
std::string SerializeReport(const BlockingReport& report);

}  // namespace smq

#endif  // SMQ_STABILITY_HPP_
