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

#include "smq/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace smq {

namespace {

void CheckBound(int n, const OracleOptions& options) {
  if (n > options.max_n) throw SizeBoundError(n, options.max_n);
}

// Every permutation whose first element is `first`, lexicographically.
void ScanPrefix(int n, int first,
                const std::function<bool(const Marriage&)>& keep,
                std::vector<Marriage>& out) {
  std::vector<int> rest;
  for (int w = 0; w < n; ++w) {
    if (w != first) rest.push_back(w);
  }
  std::vector<int> partners(n);
  partners[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), partners.begin() + 1);
    Marriage candidate(partners);
    if (keep(candidate)) out.push_back(std::move(candidate));
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

SizeBoundError::SizeBoundError(int n, int bound)
    : std::runtime_error("SizeBound: n = " + std::to_string(n) +
                         " exceeds the enumeration bound " +
                         std::to_string(bound)) {}

std::vector<Marriage> FilterMarriages(
    int n, const std::function<bool(const Marriage&)>& keep,
    const OracleOptions& options) {
  CheckBound(n, options);
  unsigned jobs =
      options.jobs == 0 ? std::thread::hardware_concurrency() : options.jobs;
  jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(n));

  std::vector<std::vector<Marriage>> by_first(n);
  if (jobs == 1) {
    for (int first = 0; first < n; ++first) {
      ScanPrefix(n, first, keep, by_first[first]);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
      workers.emplace_back([&] {
        try {
          for (int first = next++; first < n; first = next++) {
            ScanPrefix(n, first, keep, by_first[first]);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& worker : workers) worker.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<Marriage> out;
  for (auto& chunk : by_first) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Marriage> StableSet::marriages() const {
  std::vector<Marriage> out;
  out.reserve(entries.size());
  for (const auto& entry : entries) out.push_back(entry.marriage);
  return out;
}

bool StableSet::Contains(const Marriage& marriage) const {
  return std::any_of(entries.begin(), entries.end(), [&](const auto& entry) {
    return entry.marriage == marriage;
  });
}

StableSet EnumerateStable(const QuantInstance& instance, const Notion& notion,
                          const OracleOptions& options) {
  const std::vector<Marriage> stable = FilterMarriages(
      instance.size(),
      [&](const Marriage& m) { return IsStable(instance, m, notion); },
      options);
  StableSet set{notion, {}};
  set.entries.reserve(stable.size());
  for (const auto& marriage : stable) {
    const bool dominated =
        std::any_of(stable.begin(), stable.end(), [&](const Marriage& other) {
          return Dominates(instance, other, marriage);
        });
    set.entries.push_back(
        {marriage, !dominated,
         MarriageLink(instance, marriage, LinkMode::kAdditive),
         MarriageLink(instance, marriage, LinkMode::kMaximal), std::nullopt});
  }
  return set;
}

std::vector<Marriage> Undominated(const QuantInstance& instance,
                                  const StableSet& set) {
  std::vector<Marriage> out;
  for (const auto& entry : set.entries) {
    const bool dominated = std::any_of(
        set.entries.begin(), set.entries.end(), [&](const StableEntry& other) {
          return Dominates(instance, other.marriage, entry.marriage);
        });
    if (!dominated) out.push_back(entry.marriage);
  }
  return out;
}

void AnnotateLexRanks(StableSet& set, const TotalOrder& men_order,
                      const TotalOrder& women_order) {
  std::vector<std::size_t> order(set.entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return LexCompare(set.entries[a].marriage, set.entries[b].marriage,
                      men_order, women_order) == LexResult::kFirst;
  });
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    set.entries[order[rank]].lex_rank = static_cast<int>(rank);
  }
}

Marriage LexOptimum(const QuantInstance& instance, Alpha alpha,
                    const TotalOrder& men_order, const TotalOrder& women_order,
                    const OracleOptions& options) {
  const std::vector<Marriage> stable =
      EnumerateStable(instance, Notion::AlphaGap(alpha), options).marriages();
  // Non-empty: the classical stable set is never empty and is contained in
  // every alpha-stable set.
  Marriage best = stable.front();
  for (const auto& candidate : stable) {
    if (LexCompare(candidate, best, men_order, women_order) ==
        LexResult::kFirst) {
      best = candidate;
    }
  }
  return best;
}

std::vector<Marriage> HighestLink(const QuantInstance& instance, LinkMode mode,
                                  const OracleOptions& options) {
  const StableSet set = EnumerateStable(instance, Notion::Link(mode), options);
  Score best = -1;
  std::vector<Marriage> out;
  for (const auto& entry : set.entries) {
    const Score link =
        mode == LinkMode::kAdditive ? entry.link_add : entry.link_max;
    if (link > best) {
      best = link;
      out.clear();
    }
    if (link == best) out.push_back(entry.marriage);
  }
  return out;
}

FeasiblePartners ComputeFeasiblePartners(const QuantInstance& instance,
                                         Alpha alpha,
                                         const OracleOptions& options) {
  const int n = instance.size();
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  for (const auto& entry :
       EnumerateStable(instance, Notion::AlphaGap(alpha), options).entries) {
    for (int m = 0; m < n; ++m) seen[m][entry.marriage.wife(m)] = true;
  }
  FeasiblePartners out{std::vector<std::vector<int>>(n),
                       std::vector<std::vector<int>>(n)};
  for (int m = 0; m < n; ++m) {
    for (int w = 0; w < n; ++w) {
      if (seen[m][w]) {
        out.of_man[m].push_back(w);
        out.of_woman[w].push_back(m);
      }
    }
  }
  return out;
}

std::vector<Marriage> ClassicalStableMarriages(const StrictProfile& profile,
                                               const OracleOptions& options) {
  const int n = profile.size();
  return FilterMarriages(
      n,
      [&](const Marriage& marriage) {
        for (int m = 0; m < n; ++m) {
          for (int w = 0; w < n; ++w) {
            if (profile.prefers(Side::kMen, m, w, marriage.wife(m)) &&
                profile.prefers(Side::kWomen, w, m, marriage.husband(w))) {
              return false;
            }
          }
        }
        return true;
      },
      options);
}

std::vector<Marriage> WeaklyStableMarriages(const SemiorderProfile& profile,
                                            const OracleOptions& options) {
  const int n = profile.size();
  return FilterMarriages(
      n,
      [&](const Marriage& marriage) {
        for (int m = 0; m < n; ++m) {
          for (int w = 0; w < n; ++w) {
            if (profile.StrictlyPrefers(Side::kMen, m, w, marriage.wife(m)) &&
                profile.StrictlyPrefers(Side::kWomen, w, m,
                                        marriage.husband(w))) {
              return false;
            }
          }
        }
        return true;
      },
      options);
}

std::vector<Marriage> WeaklyStableMarriages(const WeakProfile& profile,
                                            const OracleOptions& options) {
  const int n = profile.size();
  return FilterMarriages(
      n,
      [&](const Marriage& marriage) {
        for (int m = 0; m < n; ++m) {
          for (int w = 0; w < n; ++w) {
            if (profile.value(Side::kMen, m, w) >
                    profile.value(Side::kMen, m, marriage.wife(m)) &&
                profile.value(Side::kWomen, w, m) >
                    profile.value(Side::kWomen, w, marriage.husband(w))) {
              return false;
            }
          }
        }
        return true;
      },
      options);
}

std::string SerializeStableSet(const StableSet& set) {
  nlohmann::ordered_json doc;
  doc["notion"] = ToString(set.notion.kind);
  if (set.notion.alpha) {
    doc["alpha"] = set.notion.alpha->value();
  } else {
    doc["alpha"] = nullptr;
  }
  doc["marriages"] = nlohmann::ordered_json::array();
  for (const auto& entry : set.entries) {
    nlohmann::ordered_json item;
    item["match"] = entry.marriage.partner_of_man();
    item["undominated"] = entry.undominated;
    item["link_add"] = entry.link_add;
    item["link_max"] = entry.link_max;
    if (entry.lex_rank) item["lex_rank"] = *entry.lex_rank;
    doc["marriages"].push_back(std::move(item));
  }
  return doc.dump();
}

}  // namespace smq
