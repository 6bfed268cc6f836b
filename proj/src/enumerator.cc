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

#include "kbqa/enumerator.h"

#include <map>

#include "kbqa/error.h"
#include "kbqa/executor.h"

namespace kbqa {

bool Constraints::Allows(const Plan& candidate) const {
  if (!denied_functions.empty()) {
    for (Function f : FunctionsUsed(candidate)) {
      if (denied_functions.contains(f)) return false;
    }
  }
  if (!denied_relations.empty()) {
    for (const auto& r : RelationsUsed(candidate)) {
      if (denied_relations.contains(r)) return false;
    }
  }
  return true;
}

std::vector<Plan> CandidatePlans(const KnowledgeBase& kb,
                                 std::span<const Plan> beam,
                                 const Constraints& constraints) {
  if (constraints.max_candidates && *constraints.max_candidates < 1) {
    throw Error("max_candidates must be at least 1");
  }
  std::map<std::string, Plan> found;
  auto emit = [&](Plan candidate) {
    if (constraints.Allows(candidate)) {
      found.emplace(candidate.canonical(), std::move(candidate));
    }
  };

  std::vector<std::pair<Plan, EntitySet>> entity_plans;
  for (const Plan& plan : beam) {
    Denotation denotation;
    try {
      denotation = Execute(kb, plan);
    } catch (const Error& e) {
      throw InvalidBeamPlan("beam plan " + plan.canonical() +
                            " does not execute: " + e.what());
    }

    if (const auto* entities = std::get_if<EntitySet>(&denotation)) {
      for (const auto& cls : kb.ClassesOf(*entities)) {
        emit(Plan::And(Plan::Class(cls), plan));
      }
      for (const auto& r : kb.RelationsFrom(*entities, Direction::kBackward)) {
        emit(Plan::Join(r, false, plan));
      }
      const auto outgoing = kb.RelationsFrom(*entities, Direction::kForward);
      for (const auto& r : outgoing) emit(Plan::Join(r, true, plan));
      // Superlatives take a class or a derived set, never a bare entity.
      if (plan.kind() != PlanKind::kEntity) {
        for (const auto& r : outgoing) {
          if (!kb.relation(r).is_orderable()) continue;
          emit(Plan::Superlative(Function::kArgMax, plan, r));
          emit(Plan::Superlative(Function::kArgMin, plan, r));
        }
      }
      if (!plan.is_leaf() || constraints.allow_count_of_leaf) {
        emit(Plan::Count(plan));
      }
      entity_plans.emplace_back(plan, *entities);
    } else if (const auto* literals = std::get_if<LiteralSet>(&denotation)) {
      if (literals->size() != 1) continue;
      const LiteralKind kind = literals->begin()->kind();
      if (!IsOrderable(kind)) continue;
      for (const auto& [r, schema] : kb.relations()) {
        if (!schema.is_orderable() ||
            !AreComparable(schema.literal_range(), kind)) {
          continue;
        }
        for (Function f : kComparatives) {
          if (!ApplyComparative(kb, r, *literals, f).empty()) {
            emit(Plan::Comparative(f, r, plan));
          }
        }
      }
    }
  }

  for (std::size_t i = 0; i < entity_plans.size(); ++i) {
    for (std::size_t j = i + 1; j < entity_plans.size(); ++j) {
      const Plan& a = entity_plans[i].first;
      const Plan& b = entity_plans[j].first;
      if (a.kind() == PlanKind::kEntity || b.kind() == PlanKind::kEntity) {
        continue;
      }
      if (a == b) continue;
      if (!Intersect(entity_plans[i].second, entity_plans[j].second).empty()) {
        emit(Plan::And(a, b));
      }
    }
  }

  std::vector<Plan> out;
  out.reserve(found.size());
  for (auto& [text, plan] : found) {
    if (constraints.max_candidates &&
        static_cast<int>(out.size()) >= *constraints.max_candidates) {
      break;
    }
    out.push_back(std::move(plan));
  }
  return out;
}

}  // namespace kbqa
