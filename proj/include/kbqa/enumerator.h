// Copyright 2026 The kbqa Authors.
//
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

#ifndef KBQA_ENUMERATOR_H_
#define KBQA_ENUMERATOR_H_

#include <optional>
#include <set>
#include <span>
#include <vector>

#include "kbqa/knowledge_base.h"
#include "kbqa/plan.h"

namespace kbqa {

// Disallowed actions applied before a candidate is emitted.
struct Constraints {
  std::set<RelationId> denied_relations;
  std::set<Function> denied_functions;
  // Keep at most this many candidates (after canonical sorting); >= 1.
  std::optional<int> max_candidates;
  // Emit (COUNT e) for a bare entity leaf e.
  bool allow_count_of_leaf = false;

  bool Allows(const Plan& candidate) const;
};

// Extends each beam plan by one function application, and joins pairs of
// overlapping beam plans with AND. Every returned plan type-checks and
// executes; all but COUNT plans have a non-empty denotation. The result is
// deduplicated and in canonical order. Throws InvalidBeamPlan when a beam
// member does not execute.
std::vector<Plan> CandidatePlans(const KnowledgeBase& kb,
                                 std::span<const Plan> beam,
                                 const Constraints& constraints = {});

}  // namespace kbqa

#endif  // KBQA_ENUMERATOR_H_
