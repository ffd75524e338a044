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

#ifndef SMQ_ORACLE_HPP_
#define SMQ_ORACLE_HPP_

// Exhaustive ground truth over all n! marriages. Every enumeration visits
// marriages in lexicographic order of the partner array and returns them in
// that order, whatever the worker count.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smq/alpha.hpp"
#include "smq/link.hpp"
#include "smq/model.hpp"
#include "smq/stability.hpp"

namespace smq {

class SizeBoundError : public std::runtime_error {
 public:
  SizeBoundError(int n, int bound);
};

struct OracleOptions {
  int max_n = 8;
  // Workers split the scan by the first man's partner. 0 means one per
  // hardware thread.
  unsigned jobs = 1;
};

// All marriages of size n accepted by `keep`, in lexicographic order.
// `keep` must be safe to call concurrently when jobs > 1.
std::vector<Marriage> FilterMarriages(
    int n, const std::function<bool(const Marriage&)>& keep,
    const OracleOptions& options = {});

struct StableEntry {
  Marriage marriage;
  bool undominated = false;
  Score link_add = 0;
  Score link_max = 0;
  // 0 for the lex-best member; set by AnnotateLexRanks.
  std::optional<int> lex_rank;
};

struct StableSet {
  Notion notion;
  std::vector<StableEntry> entries;

  std::vector<Marriage> marriages() const;
  bool Contains(const Marriage& marriage) const;
};

StableSet EnumerateStable(const QuantInstance& instance, const Notion& notion,
                          const OracleOptions& options = {});

// Members of `set` no other member dominates.
std::vector<Marriage> Undominated(const QuantInstance& instance,
                                  const StableSet& set);

void AnnotateLexRanks(StableSet& set, const TotalOrder& men_order,
                      const TotalOrder& women_order);

// The lex-maximum alpha-stable marriage under the given popularity orders.
Marriage LexOptimum(const QuantInstance& instance, Alpha alpha,
                    const TotalOrder& men_order, const TotalOrder& women_order,
                    const OracleOptions& options = {});

// Link-stable marriages attaining the largest MarriageLink for `mode`.
std::vector<Marriage> HighestLink(const QuantInstance& instance, LinkMode mode,
                                  const OracleOptions& options = {});

struct FeasiblePartners {
  std::vector<std::vector<int>> of_man;    // sorted woman indices
  std::vector<std::vector<int>> of_woman;  // sorted man indices
};

FeasiblePartners ComputeFeasiblePartners(const QuantInstance& instance,
                                         Alpha alpha,
                                         const OracleOptions& options = {});

// Filters that never touch BlockingPairs; they evaluate weak stability
// directly on a derived profile and serve as the second route in checks.
std::vector<Marriage> ClassicalStableMarriages(
    const StrictProfile& profile, const OracleOptions& options = {});
std::vector<Marriage> WeaklyStableMarriages(const SemiorderProfile& profile,
                                            const OracleOptions& options = {});
std::vector<Marriage> WeaklyStableMarriages(const WeakProfile& profile,
                                            const OracleOptions& options = {});

// {"notion":...,"alpha":...,"marriages":[{"match":[...],"undominated":b,
//  "link_add":i,"link_max":i}]}; "lex_rank" is added when annotated.
std::string SerializeStableSet(const StableSet& set);

}  // namespace smq

#endif  // SMQ_ORACLE_HPP_
