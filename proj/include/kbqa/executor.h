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

#ifndef KBQA_EXECUTOR_H_
#define KBQA_EXECUTOR_H_

#include <cstdint>
#include <string>
#include <variant>

#include "kbqa/knowledge_base.h"
#include "kbqa/plan.h"

namespace kbqa {

struct Count {
  std::int64_t value = 0;
  friend auto operator<=>(const Count&, const Count&) = default;
};

using Denotation = std::variant<EntitySet, LiteralSet, Count>;

// Count denotations are never empty.
bool IsEmpty(const Denotation& denotation);

// JSON text: a sorted array of ids / literal surface forms, or an integer.
std::string DenotationToString(const Denotation& denotation);

// Type-checks, then evaluates. Throws TypeError or UnknownIdentifier.
Denotation Execute(const KnowledgeBase& kb, const Plan& plan);

// Building blocks shared with candidate enumeration. Inputs must already be
// well-typed.
Denotation ApplyJoin(const KnowledgeBase& kb, const EntitySet& operand,
                     const RelationId& relation, bool inverse);
EntitySet ApplySuperlative(const KnowledgeBase& kb, const EntitySet& operand,
                           const RelationId& relation, Function function);
EntitySet ApplyComparative(const KnowledgeBase& kb, const RelationId& relation,
                           const LiteralSet& values, Function function);
EntitySet Intersect(const EntitySet& a, const EntitySet& b);

}  // namespace kbqa

#endif  // KBQA_EXECUTOR_H_
