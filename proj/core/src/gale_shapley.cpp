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

#include "smq/gale_shapley.hpp"

#include <random>
#include <utility>

namespace smq {

namespace {

constexpr int kFree = -1;

// Engagement state for one run. Proposers are on side `proposing`.
class DeferredAcceptance {
 public:
  DeferredAcceptance(const StrictProfile& profile, Side proposing)
      : profile_(profile),
        proposing_(proposing),
        n_(profile.size()),
        next_choice_(n_, 0),
        fiance_of_receiver_(n_, kFree),
        fiance_of_proposer_(n_, kFree) {}

  // One proposal by a free proposer; returns the proposer that is free
  // afterwards, if any.
  std::optional<int> Propose(int proposer, std::vector<ProposalEvent>* trace) {
    const int receiver =
        profile_.prefs(proposing_, proposer)[next_choice_[proposer]++];
    const int current = fiance_of_receiver_[receiver];
    if (current == kFree) {
      Engage(proposer, receiver);
      Record(trace, {proposer, receiver, ProposalOutcome::kEngaged, {}});
      return std::nullopt;
    }
    if (profile_.prefers(Opposite(proposing_), receiver, proposer, current)) {
      fiance_of_proposer_[current] = kFree;
      Engage(proposer, receiver);
      Record(trace, {proposer, receiver, ProposalOutcome::kDisplaced, current});
      return current;
    }
    Record(trace, {proposer, receiver, ProposalOutcome::kRejected, {}});
    return proposer;
  }

  Marriage Result() const {
    if (proposing_ == Side::kMen) return Marriage(fiance_of_proposer_);
    return Marriage(fiance_of_receiver_);
  }

  int size() const { return n_; }

 private:
  void Engage(int proposer, int receiver) {
    fiance_of_receiver_[receiver] = proposer;
    fiance_of_proposer_[proposer] = receiver;
  }

  static void Record(std::vector<ProposalEvent>* trace, ProposalEvent event) {
    if (trace != nullptr) trace->push_back(event);
  }

  const StrictProfile& profile_;
  Side proposing_;
  int n_;
  std::vector<int> next_choice_;
  std::vector<int> fiance_of_receiver_;
  std::vector<int> fiance_of_proposer_;
};

// Proposers start in index order; a displaced proposer always has a lower
// index than every proposer not yet started, so following the displacement
// chain is exactly "lowest-indexed free proposer moves next".
Marriage RunAscending(const StrictProfile& profile, Side proposing,
                      std::vector<ProposalEvent>* trace) {
  DeferredAcceptance state(profile, proposing);
  for (int start = 0; start < state.size(); ++start) {
    std::optional<int> free = start;
    while (free) free = state.Propose(*free, trace);
  }
  return state.Result();
}

}  // namespace

Marriage GaleShapley(const StrictProfile& profile, Side proposing) {
  return RunAscending(profile, proposing, nullptr);
}

Marriage GaleShapleyRandomOrder(const StrictProfile& profile, Side proposing,
                                std::uint64_t seed) {
  DeferredAcceptance state(profile, proposing);
  std::mt19937_64 engine(seed);
  std::vector<int> free_set(state.size());
  for (int i = 0; i < state.size(); ++i) free_set[i] = i;
  while (!free_set.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, free_set.size() - 1);
    const std::size_t slot = pick(engine);
    std::swap(free_set[slot], free_set.back());
    const int proposer = free_set.back();
    free_set.pop_back();
    if (auto still_free = state.Propose(proposer, nullptr)) {
      free_set.push_back(*still_free);
    }
  }
  return state.Result();
}

ProposalTrace StepTrace(const StrictProfile& profile, Side proposing) {
  std::vector<ProposalEvent> events;
  Marriage result = RunAscending(profile, proposing, &events);
  return ProposalTrace{proposing, std::move(events), std::move(result)};
}

}  // namespace smq
