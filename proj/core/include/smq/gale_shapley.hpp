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

#ifndef SMQ_GALE_SHAPLEY_HPP_
#define SMQ_GALE_SHAPLEY_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "smq/model.hpp"

namespace smq {

// Deferred acceptance. With Side::kMen the result is the male-optimal stable
// marriage, with Side::kWomen the female-optimal one (computed by letting the
// women propose). The lowest-indexed free proposer always moves next.
Marriage GaleShapley(const StrictProfile& profile, Side proposing = Side::kMen);

// Same algorithm, but the next proposer is drawn uniformly from the free
// set with a seeded engine. The result must not depend on the seed.
Marriage GaleShapleyRandomOrder(const StrictProfile& profile, Side proposing,
                                std::uint64_t seed);

enum class ProposalOutcome {
  kEngaged,    // receiver was free
  kRejected,   // receiver kept her current partner
  kDisplaced,  // receiver dropped `displaced` for the proposer
};

struct ProposalEvent {
  int proposer;
  int receiver;
  ProposalOutcome outcome;
  std::optional<int> displaced;
};

struct ProposalTrace {
  Side proposing;
  std::vector<ProposalEvent> events;
  Marriage result;
};

// Replays GaleShapley and records every proposal in order. Indices in the
// events are on the proposing / receiving side respectively.
ProposalTrace StepTrace(const StrictProfile& profile,
                        Side proposing = Side::kMen);

}  // namespace smq

#endif  // SMQ_GALE_SHAPLEY_HPP_
