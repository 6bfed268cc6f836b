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

#include "brute_force.h"

#include <map>

#include "reference_executor.h"

namespace kbqa::testing {
namespace {

bool NonEmpty(const Denotation& d) {
  if (const auto* e = std::get_if<EntitySet>(&d)) return !e->empty();
  if (const auto* l = std::get_if<LiteralSet>(&d)) return !l->empty();
  return true;
}

}  // namespace

std::set<std::string> BruteForcePlans(const KnowledgeBase& kb,
                                      const std::vector<Plan>& leaves,
                                      int max_length) {
  // by_length[n]: accepted plans with n applications, keyed by text.
  std::vector<std::map<std::string, Plan>> by_length(max_length + 1);
  for (const Plan& leaf : leaves) by_length[0].emplace(leaf.canonical(), leaf);

  auto accept = [&](const Plan& plan) {
    auto d = ReferenceExecute(kb, plan);
    if (!d) return false;
    if (plan.function() == Function::kCount) {
      return !plan.args()[0].is_leaf();
    }
    return NonEmpty(*d);
  };
  auto single_literal = [&](const Plan& plan) {
    auto d = ReferenceExecute(kb, plan);
    return d && std::holds_alternative<LiteralSet>(*d) &&
           std::get<LiteralSet>(*d).size() == 1;
  };

  std::vector<Plan> classes;
  for (const auto& c : kb.classes()) classes.push_back(Plan::Class(c));

  for (int n = 1; n <= max_length; ++n) {
    std::vector<Plan> raw;
    for (const auto& [text, child] : by_length[n - 1]) {
      for (const auto& [r, schema] : kb.relations()) {
        raw.push_back(Plan::Join(r, false, child));
        raw.push_back(Plan::Join(r, true, child));
        raw.push_back(Plan::Superlative(Function::kArgMax, child, r));
        raw.push_back(Plan::Superlative(Function::kArgMin, child, r));
        if (single_literal(child)) {
          for (Function f : kComparatives) {
            raw.push_back(Plan::Comparative(f, r, child));
          }
        }
      }
      raw.push_back(Plan::Count(child));
      for (const Plan& c : classes) raw.push_back(Plan::And(c, child));
    }
    for (int i = 0; i <= n - 1; ++i) {
      for (const auto& [ta, a] : by_length[i]) {
        for (const auto& [tb, b] : by_length[n - 1 - i]) {
          if (ta != tb) raw.push_back(Plan::And(a, b));
        }
      }
    }
    for (const Plan& plan : raw) {
      if (accept(plan)) by_length[n].emplace(plan.canonical(), plan);
    }
  }
  std::set<std::string> out;
  for (int n = 1; n <= max_length; ++n) {
    for (const auto& [text, plan] : by_length[n]) out.insert(text);
  }
  return out;
}

}  // namespace kbqa::testing
