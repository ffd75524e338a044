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

#ifndef SMQ_LINK_HPP_
#define SMQ_LINK_HPP_

#include <string_view>

#include "smq/model.hpp"

namespace smq {

// How the two scores of a pair combine into the strength of its link.
enum class LinkMode {
  kAdditive,  // p(m,w) + p(w,m)
  kMaximal,   // max(p(m,w), p(w,m))
};

std::string_view ToString(LinkMode mode);

Score LinkValue(const QuantInstance& instance, int man, int woman,
                LinkMode mode);

// Sum (additive) or maximum (maximal) of the pair links of `marriage`.
Score MarriageLink(const QuantInstance& instance, const Marriage& marriage,
                   LinkMode mode);

// Every person's value for a candidate is replaced by the pair's link, so
// both members of a pair carry the same value. Ties are possible.
WeakProfile LinkTransform(const QuantInstance& instance, LinkMode mode);

// True if some person gives the same value to two candidates.
bool HasTies(const WeakProfile& profile);

// Ties broken by ascending candidate index.
StrictProfile LinearizeByIndex(const WeakProfile& profile);

// Men-proposing deferred acceptance on the index-linearized link profile.
Marriage LinkStableGs(const QuantInstance& instance, LinkMode mode);

}  // namespace smq

#endif  // SMQ_LINK_HPP_
