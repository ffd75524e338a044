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

#ifndef SMQ_GENERATE_HPP_
#define SMQ_GENERATE_HPP_

#include <cstdint>

#include "smq/model.hpp"

namespace smq {

// Random instance whose rows are drawn without replacement from
// 1..max_score. Identical for identical arguments on a given build.
// Throws std::invalid_argument unless 1 <= n <= max_score <= kMaxScore.
QuantInstance RandomInstance(int n, std::uint64_t seed, Score max_score = 100);

// Random strict profile (uniform permutations per person).
StrictProfile RandomProfile(int n, std::uint64_t seed);

}  // namespace smq

#endif  // SMQ_GENERATE_HPP_
