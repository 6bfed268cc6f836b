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

#ifndef KBQA_PLAN_H_
#define KBQA_PLAN_H_

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbqa/knowledge_base.h"
#include "kbqa/literal.h"

namespace kbqa {

enum class Function { kJoin, kAnd, kArgMax, kArgMin, kLt, kLe, kGt, kGe, kCount };

inline constexpr std::array<Function, 9> kAllFunctions = {
    Function::kJoin, Function::kAnd, Function::kArgMax,
    Function::kArgMin, Function::kLt, Function::kLe,
    Function::kGt, Function::kGe, Function::kCount};

inline constexpr std::array<Function, 4> kComparatives = {
    Function::kLt, Function::kLe, Function::kGt, Function::kGe};

std::string_view FunctionName(Function function);
std::optional<Function> FunctionFromName(std::string_view name);
bool IsComparative(Function function);
bool IsSuperlative(Function function);

enum class PlanKind { kEntity, kClass, kLiteral, kApply };

// An immutable S-expression plan. Copies share structure. The factories keep
// the tree canonical (AND operands ordered), so structural equality and
// equality of rendered text coincide.
//
// Surface forms:
//   (JOIN r p)       subjects s with (s r o), o in p
//   (JOIN r~ p)      objects o with (s r o), s in p
//   (AND a b)        intersection; a may be a class
//   (ARGMAX p r)     members of p with the largest r value; ARGMIN alike
//   (LT r v)         subjects whose r value is < some value of v; LE/GT/GE
//   (COUNT p)        cardinality
class Plan {
 public:
  static Plan Entity(EntityId id);
  static Plan Class(ClassId id);
  static Plan Constant(Literal value);
  // `inverse` selects the forward (object-reaching) traversal, written `r~`.
  static Plan Join(RelationId relation, bool inverse, Plan operand);
  static Plan And(Plan a, Plan b);
  static Plan Superlative(Function function, Plan operand, RelationId relation);
  static Plan Comparative(Function function, RelationId relation, Plan value);
  static Plan Count(Plan operand);

  PlanKind kind() const { return node_->kind; }
  bool is_leaf() const { return node_->kind != PlanKind::kApply; }
  // Entity or class id of a leaf.
  const std::string& symbol() const { return node_->symbol; }
  const Literal& literal() const { return *node_->literal; }
  Function function() const { return node_->function; }
  // Empty for AND and COUNT.
  const RelationId& relation() const { return node_->relation; }
  bool inverse() const { return node_->inverse; }
  std::span<const Plan> args() const { return node_->args; }

  // Number of function applications; leaves have length 0.
  int length() const { return node_->length; }
  const std::string& canonical() const { return node_->canonical; }

  friend bool operator==(const Plan& a, const Plan& b);
  // Canonical text order.
  friend bool operator<(const Plan& a, const Plan& b) {
    return a.canonical() < b.canonical();
  }

 private:
  struct Node {
    PlanKind kind = PlanKind::kApply;
    std::string symbol;
    std::optional<Literal> literal;
    Function function = Function::kJoin;
    RelationId relation;
    bool inverse = false;
    std::vector<Plan> args;
    int length = 0;
    std::string canonical;
  };

  explicit Plan(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Plan MakeApply(Function function, RelationId relation, bool inverse,
                        std::vector<Plan> args);

  std::shared_ptr<const Node> node_;
};

// Throws SyntaxError, ArityError or UnknownFunction. A bare symbol is a
// class in the first operand of AND, ARGMAX and ARGMIN, and an entity
// everywhere else.
Plan ParsePlan(std::string_view text);

inline const std::string& RenderPlan(const Plan& plan) {
  return plan.canonical();
}

inline int PlanLength(const Plan& plan) { return plan.length(); }

enum class ResultKind { kEntitySet, kLiteralSet, kInteger };

struct ResultType {
  ResultKind kind = ResultKind::kEntitySet;
  // Set when kind == kLiteralSet.
  std::optional<LiteralKind> literal_kind;

  friend bool operator==(const ResultType&, const ResultType&) = default;
};

std::string_view ResultKindName(ResultKind kind);

// Throws TypeError naming the offending subexpression, or UnknownIdentifier.
ResultType TypeCheck(const Plan& plan, const KnowledgeBase& kb);

// Distinct function-application subexpressions of `plan`, including the plan
// itself when it is not a leaf, in canonical order.
std::vector<Plan> ApplySubexpressions(const Plan& plan);

// Relations mentioned anywhere in the plan.
std::vector<RelationId> RelationsUsed(const Plan& plan);
// Function applications anywhere in the plan.
std::vector<Function> FunctionsUsed(const Plan& plan);

// Gold sub-plans by length: step(t) holds every distinct subexpression of
// the target with exactly t applications.
class GoldDecomposition {
 public:
  const Plan& target() const { return target_; }
  int length() const { return static_cast<int>(steps_.size()); }
  // Empty outside 1..length().
  std::span<const Plan> step(int t) const;
  bool Contains(const Plan& plan) const;

 private:
  friend GoldDecomposition DeriveGoldDecomposition(const Plan& target);
  GoldDecomposition(Plan target, std::vector<std::vector<Plan>> steps)
      : target_(std::move(target)), steps_(std::move(steps)) {}

  Plan target_;
  std::vector<std::vector<Plan>> steps_;
};

// Throws DegenerateGold for a leaf target.
GoldDecomposition DeriveGoldDecomposition(const Plan& target);

}  // namespace kbqa

#endif  // KBQA_PLAN_H_
