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

#include "smq/stability.hpp"

#include <stdexcept>

#include "json.hpp"

namespace smq {

namespace {

Witness Values(const QuantInstance& instance, const Marriage& marriage,
               const Notion& notion, int man, int woman) {
  const int his_wife = marriage.wife(man);
  const int her_husband = marriage.husband(woman);
  switch (notion.kind) {
    case NotionKind::kClassical:
    case NotionKind::kAlpha:
      return {instance.score(Side::kMen, man, woman),
              instance.score(Side::kMen, man, his_wife),
              instance.score(Side::kWomen, woman, man),
              instance.score(Side::kWomen, woman, her_husband)};
    case NotionKind::kLinkAdditive:
    case NotionKind::kLinkMaximal: {
      const LinkMode mode = notion.kind == NotionKind::kLinkAdditive
                                ? LinkMode::kAdditive
                                : LinkMode::kMaximal;
      const Score pair = LinkValue(instance, man, woman, mode);
      return {pair, LinkValue(instance, man, his_wife, mode), pair,
              LinkValue(instance, her_husband, woman, mode)};
    }
  }
  throw std::logic_error("unknown notion");
}

}  // namespace

std::string_view ToString(NotionKind kind) {
  switch (kind) {
    case NotionKind::kClassical:
      return "classical";
    case NotionKind::kAlpha:
      return "alpha";
    case NotionKind::kLinkAdditive:
      return "link-add";
    case NotionKind::kLinkMaximal:
      return "link-max";
  }
  return "unknown";
}

Notion ParseNotion(std::string_view name, std::optional<Score> alpha) {
  if (name == "alpha") {
    if (!alpha) throw std::invalid_argument("notion alpha requires --alpha");
    return Notion::AlphaGap(Alpha(*alpha));
  }
  if (alpha) {
    throw std::invalid_argument("--alpha is only valid with notion alpha");
  }
  if (name == "classical") return Notion::Classical();
  if (name == "link-add") return Notion::Link(LinkMode::kAdditive);
  if (name == "link-max") return Notion::Link(LinkMode::kMaximal);
  throw std::invalid_argument("unknown notion \"" + std::string(name) + "\"");
}

std::optional<Witness> BlockingWitness(const QuantInstance& instance,
                                       const Marriage& marriage,
                                       const Notion& notion, int man,
                                       int woman) {
  if (marriage.wife(man) == woman) return std::nullopt;
  const Witness v = Values(instance, marriage, notion, man, woman);
  bool blocks = false;
  switch (notion.kind) {
    case NotionKind::kAlpha: {
      const Score gap = notion.alpha.value().value();
      blocks = v.man_candidate - v.man_current >= gap &&
               v.woman_candidate - v.woman_current >= gap;
      break;
    }
    default:
      blocks = v.man_candidate > v.man_current &&
               v.woman_candidate > v.woman_current;
      break;
  }
  if (!blocks) return std::nullopt;
  return v;
}

BlockingReport BlockingPairs(const QuantInstance& instance,
                             const Marriage& marriage, const Notion& notion) {
  BlockingReport report{notion, {}};
  for (int m = 0; m < instance.size(); ++m) {
    for (int w = 0; w < instance.size(); ++w) {
      if (auto witness = BlockingWitness(instance, marriage, notion, m, w)) {
        report.pairs.push_back({m, w, *witness});
      }
    }
  }
  return report;
}

bool IsStable(const QuantInstance& instance, const Marriage& marriage,
              const Notion& notion) {
  for (int m = 0; m < instance.size(); ++m) {
    for (int w = 0; w < instance.size(); ++w) {
      if (BlockingWitness(instance, marriage, notion, m, w)) return false;
    }
  }
  return true;
}

bool Dominates(const QuantInstance& instance, const Marriage& a,
               const Marriage& b) {
  bool strict = false;
  for (int m = 0; m < instance.size(); ++m) {
    const Score in_a = instance.score(Side::kMen, m, a.wife(m));
    const Score in_b = instance.score(Side::kMen, m, b.wife(m));
    if (in_a < in_b) return false;
    if (in_a > in_b) strict = true;
  }
  return strict;
}

LexResult LexCompare(const Marriage& a, const Marriage& b,
                     const TotalOrder& men_order,
                     const TotalOrder& women_order) {
  for (int man : men_order.ranking()) {
    const int wa = a.wife(man);
    const int wb = b.wife(man);
    if (wa != wb) {
      return women_order.Precedes(wa, wb) ? LexResult::kFirst
                                          : LexResult::kSecond;
    }
  }
  return LexResult::kEqual;
}

std::string SerializeReport(const BlockingReport& report) {
  nlohmann::ordered_json doc;
  doc["notion"] = ToString(report.notion.kind);
  if (report.notion.alpha) {
    doc["alpha"] = report.notion.alpha->value();
  } else {
    doc["alpha"] = nullptr;
  }
  doc["pairs"] = nlohmann::ordered_json::array();
  for (const auto& pair : report.pairs) {
    nlohmann::ordered_json witness;
    witness["man_candidate"] = pair.witness.man_candidate;
    witness["man_current"] = pair.witness.man_current;
    witness["woman_candidate"] = pair.witness.woman_candidate;
    witness["woman_current"] = pair.witness.woman_current;
    doc["pairs"].push_back(
        {{"m", pair.man}, {"w", pair.woman}, {"witness", std::move(witness)}});
  }
  return doc.dump();
}

}  // namespace smq
