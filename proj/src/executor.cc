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

#include "kbqa/executor.h"

#include <algorithm>
#include <iterator>
#include <optional>

#include "json.hpp"

namespace kbqa {
namespace {

bool Satisfies(std::partial_ordering order, Function function) {
  switch (function) {
    case Function::kLt:
      return order == std::partial_ordering::less;
    case Function::kLe:
      return order == std::partial_ordering::less ||
             order == std::partial_ordering::equivalent;
    case Function::kGt:
      return order == std::partial_ordering::greater;
    case Function::kGe:
      return order == std::partial_ordering::greater ||
             order == std::partial_ordering::equivalent;
    default:
      return false;
  }
}

const EntitySet& AsEntities(const Denotation& d) {
  return std::get<EntitySet>(d);
}

Denotation Evaluate(const KnowledgeBase& kb, const Plan& plan) {
  switch (plan.kind()) {
    case PlanKind::kEntity:
      return EntitySet{plan.symbol()};
    case PlanKind::kClass:
      return kb.InstancesOf(plan.symbol());
    case PlanKind::kLiteral:
      return LiteralSet{plan.literal()};
    case PlanKind::kApply:
      break;
  }
  auto args = plan.args();
  switch (plan.function()) {
    case Function::kJoin:
      return ApplyJoin(kb, AsEntities(Evaluate(kb, args[0])), plan.relation(),
                       plan.inverse());
    case Function::kAnd:
      return Intersect(AsEntities(Evaluate(kb, args[0])),
                       AsEntities(Evaluate(kb, args[1])));
    case Function::kArgMax:
    case Function::kArgMin:
      return ApplySuperlative(kb, AsEntities(Evaluate(kb, args[0])),
                              plan.relation(), plan.function());
    case Function::kCount:
      return Count{static_cast<std::int64_t>(
          AsEntities(Evaluate(kb, args[0])).size())};
    default:
      return ApplyComparative(kb, plan.relation(),
                              std::get<LiteralSet>(Evaluate(kb, args[0])),
                              plan.function());
  }
}

}  // namespace

bool IsEmpty(const Denotation& denotation) {
  if (const auto* entities = std::get_if<EntitySet>(&denotation)) {
    return entities->empty();
  }
  if (const auto* literals = std::get_if<LiteralSet>(&denotation)) {
    return literals->empty();
  }
  return false;
}

std::string DenotationToString(const Denotation& denotation) {
  nlohmann::json out;
  if (const auto* entities = std::get_if<EntitySet>(&denotation)) {
    out = nlohmann::json::array();
    for (const auto& id : *entities) out.push_back(id);
  } else if (const auto* literals = std::get_if<LiteralSet>(&denotation)) {
    out = nlohmann::json::array();
    for (const auto& literal : *literals) out.push_back(literal.ToString());
  } else {
    out = std::get<Count>(denotation).value;
  }
  return out.dump();
}

Denotation Execute(const KnowledgeBase& kb, const Plan& plan) {
  TypeCheck(plan, kb);
  return Evaluate(kb, plan);
}

Denotation ApplyJoin(const KnowledgeBase& kb, const EntitySet& operand,
                     const RelationId& relation, bool inverse) {
  if (!inverse) {
    EntitySet out;
    for (const auto& object : operand) {
      const auto& subjects = kb.Subjects(Term(object), relation);
      out.insert(subjects.begin(), subjects.end());
    }
    return out;
  }
  const RelationSchema& schema = kb.relation(relation);
  if (schema.has_literal_range()) {
    LiteralSet out;
    for (const auto& subject : operand) {
      for (const auto& term : kb.Objects(subject, relation)) {
        out.insert(std::get<Literal>(term));
      }
    }
    return out;
  }
  EntitySet out;
  for (const auto& subject : operand) {
    for (const auto& term : kb.Objects(subject, relation)) {
      out.insert(std::get<EntityId>(term));
    }
  }
  return out;
}

EntitySet ApplySuperlative(const KnowledgeBase& kb, const EntitySet& operand,
                           const RelationId& relation, Function function) {
  const bool want_max = function == Function::kArgMax;
  auto better = [&](const Literal& a, const Literal& b) {
    auto order = CompareValues(a, b);
    return want_max ? order == std::partial_ordering::greater
                    : order == std::partial_ordering::less;
  };
  std::optional<Literal> best;
  EntitySet winners;
  for (const auto& member : operand) {
    const auto& values = kb.Objects(member, relation);
    if (values.empty()) continue;
    // An entity's key is its own extreme value.
    std::optional<Literal> key;
    for (const auto& term : values) {
      const Literal& value = std::get<Literal>(term);
      if (!key || better(value, *key)) key = value;
    }
    if (!best || better(*key, *best)) {
      best = key;
      winners = {member};
    } else if (CompareValues(*key, *best) ==
               std::partial_ordering::equivalent) {
      winners.insert(member);
    }
  }
  return winners;
}

EntitySet ApplyComparative(const KnowledgeBase& kb, const RelationId& relation,
                           const LiteralSet& values, Function function) {
  EntitySet out;
  for (const auto& [subject, value] : kb.LiteralFacts(relation)) {
    for (const auto& bound : values) {
      if (Satisfies(CompareValues(value, bound), function)) {
        out.insert(subject);
        break;
      }
    }
  }
  return out;
}

EntitySet Intersect(const EntitySet& a, const EntitySet& b) {
  EntitySet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

}  // namespace kbqa
