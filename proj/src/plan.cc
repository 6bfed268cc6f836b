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

#include "kbqa/plan.h"

#include <algorithm>
#include <map>
#include <set>

#include "kbqa/error.h"

namespace kbqa {
namespace {

constexpr std::array<std::string_view, 9> kFunctionNames = {
    "JOIN", "AND", "ARGMAX", "ARGMIN", "LT", "LE", "GT", "GE", "COUNT"};

int Arity(Function function) { return function == Function::kCount ? 1 : 2; }

// Intermediate S-expression tree; positions are byte offsets.
struct SExpr {
  enum class Type { kSymbol, kLiteral, kList };
  Type type = Type::kSymbol;
  std::string text;
  std::optional<Literal> literal;
  std::vector<SExpr> items;
  std::size_t position = 0;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr ReadAll() {
    SkipSpace();
    if (pos_ >= text_.size()) throw SyntaxError("empty plan", pos_);
    SExpr expr = Read();
    SkipSpace();
    if (pos_ < text_.size()) {
      throw SyntaxError("unexpected trailing input", pos_);
    }
    return expr;
  }

 private:
  static bool IsDelimiter(char c) {
    return c == '(' || c == ')' || c == '"' || c == ' ' || c == '\t' ||
           c == '\n' || c == '\r';
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  SExpr Read() {
    SkipSpace();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    SExpr expr;
    expr.position = pos_;
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      expr.type = SExpr::Type::kList;
      while (true) {
        SkipSpace();
        if (pos_ >= text_.size()) {
          throw SyntaxError("missing ')'", pos_);
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        expr.items.push_back(Read());
      }
    } else if (c == ')') {
      throw SyntaxError("unexpected ')'", pos_);
    } else if (c == '"') {
      expr.type = SExpr::Type::kLiteral;
      std::size_t consumed = 0;
      try {
        expr.literal = ParseLiteralToken(text_.substr(pos_), &consumed);
      } catch (const InvalidLiteral& e) {
        throw SyntaxError(e.what(), pos_);
      }
      pos_ += consumed;
      if (pos_ < text_.size() && !IsDelimiter(text_[pos_])) {
        throw SyntaxError("unexpected character after literal", pos_);
      }
    } else {
      std::size_t start = pos_;
      while (pos_ < text_.size() && !IsDelimiter(text_[pos_])) ++pos_;
      expr.text = std::string(text_.substr(start, pos_ - start));
    }
    return expr;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

RelationId ReadRelation(const SExpr& expr, bool allow_inverse,
                        bool* inverse) {
  if (expr.type != SExpr::Type::kSymbol) {
    throw SyntaxError("expected a relation name", expr.position);
  }
  std::string name = expr.text;
  *inverse = false;
  if (!name.empty() && name.back() == '~') {
    if (!allow_inverse) {
      throw SyntaxError("'~' is only allowed on a JOIN relation",
                        expr.position);
    }
    name.pop_back();
    *inverse = true;
  }
  if (!IsValidIdentifier(name)) {
    throw SyntaxError("invalid relation name '" + expr.text + "'",
                      expr.position);
  }
  return name;
}

Plan ToPlan(const SExpr& expr, bool class_slot) {
  switch (expr.type) {
    case SExpr::Type::kLiteral:
      return Plan::Constant(*expr.literal);
    case SExpr::Type::kSymbol:
      if (!IsValidIdentifier(expr.text)) {
        throw SyntaxError("invalid identifier '" + expr.text + "'",
                          expr.position);
      }
      return class_slot ? Plan::Class(expr.text) : Plan::Entity(expr.text);
    case SExpr::Type::kList:
      break;
  }
  if (expr.items.empty()) throw SyntaxError("empty list", expr.position);
  const SExpr& head = expr.items[0];
  if (head.type != SExpr::Type::kSymbol) {
    throw SyntaxError("expected a function name", head.position);
  }
  auto function = FunctionFromName(head.text);
  if (!function) {
    throw UnknownFunction("unknown function '" + head.text + "' at position " +
                          std::to_string(head.position));
  }
  int given = static_cast<int>(expr.items.size()) - 1;
  if (given != Arity(*function)) {
    throw ArityError(std::string(FunctionName(*function)) + " takes " +
                     std::to_string(Arity(*function)) + " arguments, got " +
                     std::to_string(given) + " at position " +
                     std::to_string(expr.position));
  }
  bool inverse = false;
  switch (*function) {
    case Function::kJoin: {
      RelationId relation = ReadRelation(expr.items[1], true, &inverse);
      return Plan::Join(relation, inverse, ToPlan(expr.items[2], false));
    }
    case Function::kAnd: {
      // An entity leaf only ever meets a class under AND, so a lone bare
      // symbol is a class, and of two bare symbols the first one is.
      const bool a_symbol = expr.items[1].type == SExpr::Type::kSymbol;
      const bool b_symbol = expr.items[2].type == SExpr::Type::kSymbol;
      return Plan::And(ToPlan(expr.items[1], true),
                       ToPlan(expr.items[2], b_symbol && !a_symbol));
    }
    case Function::kArgMax:
    case Function::kArgMin: {
      Plan operand = ToPlan(expr.items[1], true);
      return Plan::Superlative(*function, operand,
                               ReadRelation(expr.items[2], false, &inverse));
    }
    case Function::kCount:
      return Plan::Count(ToPlan(expr.items[1], false));
    default: {
      RelationId relation = ReadRelation(expr.items[1], false, &inverse);
      return Plan::Comparative(*function, relation,
                               ToPlan(expr.items[2], false));
    }
  }
}

ResultType EntitySetType() { return {ResultKind::kEntitySet, std::nullopt}; }

[[noreturn]] void Mistyped(const Plan& plan, const std::string& message) {
  throw TypeError(message + " in " + plan.canonical());
}

ResultType CheckNode(const Plan& plan, const KnowledgeBase& kb,
                     bool class_allowed) {
  switch (plan.kind()) {
    case PlanKind::kEntity:
      if (!kb.HasEntity(plan.symbol())) {
        throw UnknownEntity("unknown entity '" + plan.symbol() + "'");
      }
      return EntitySetType();
    case PlanKind::kClass:
      if (!class_allowed) {
        Mistyped(plan, "class used outside an AND or superlative operand");
      }
      if (!kb.HasClass(plan.symbol())) {
        throw UnknownIdentifier("unknown class '" + plan.symbol() + "'");
      }
      return EntitySetType();
    case PlanKind::kLiteral:
      return {ResultKind::kLiteralSet, plan.literal().kind()};
    case PlanKind::kApply:
      break;
  }
  auto args = plan.args();
  auto require_entities = [&](const Plan& arg, bool allow_class) {
    ResultType type = CheckNode(arg, kb, allow_class);
    if (type.kind != ResultKind::kEntitySet) {
      Mistyped(plan, std::string(FunctionName(plan.function())) +
                         " expects an entity set, got " +
                         std::string(ResultKindName(type.kind)) + " " +
                         arg.canonical());
    }
  };
  switch (plan.function()) {
    case Function::kJoin: {
      const RelationSchema& schema = kb.relation(plan.relation());
      require_entities(args[0], false);
      if (plan.inverse() && schema.has_literal_range()) {
        return {ResultKind::kLiteralSet, schema.literal_range()};
      }
      return EntitySetType();
    }
    case Function::kAnd:
      require_entities(args[0], true);
      require_entities(args[1], true);
      if (args[0].kind() == PlanKind::kClass &&
          args[1].kind() == PlanKind::kClass) {
        Mistyped(plan, "AND of two classes");
      }
      if ((args[0].kind() == PlanKind::kEntity &&
           args[1].kind() != PlanKind::kClass) ||
          (args[1].kind() == PlanKind::kEntity &&
           args[0].kind() != PlanKind::kClass)) {
        Mistyped(plan, "an entity leaf is only intersected with a class");
      }
      return EntitySetType();
    case Function::kArgMax:
    case Function::kArgMin: {
      const RelationSchema& schema = kb.relation(plan.relation());
      require_entities(args[0], true);
      if (args[0].kind() == PlanKind::kEntity) {
        Mistyped(plan, "superlative needs a class or a derived set operand");
      }
      if (!schema.is_orderable()) {
        Mistyped(plan, "relation '" + plan.relation() +
                           "' has no ordered literal range");
      }
      return EntitySetType();
    }
    case Function::kCount:
      require_entities(args[0], false);
      return {ResultKind::kInteger, std::nullopt};
    default: {
      const RelationSchema& schema = kb.relation(plan.relation());
      if (!schema.is_orderable()) {
        Mistyped(plan, "relation '" + plan.relation() +
                           "' has no ordered literal range");
      }
      ResultType value = CheckNode(args[0], kb, false);
      if (value.kind != ResultKind::kLiteralSet ||
          !AreComparable(*value.literal_kind, schema.literal_range())) {
        Mistyped(plan, "comparative value " + args[0].canonical() +
                           " is not comparable with range of '" +
                           plan.relation() + "'");
      }
      return EntitySetType();
    }
  }
}

void CollectApplies(const Plan& plan, std::map<std::string, Plan>* out) {
  if (plan.is_leaf()) return;
  out->emplace(plan.canonical(), plan);
  for (const auto& arg : plan.args()) CollectApplies(arg, out);
}

template <typename Fn>
void Walk(const Plan& plan, Fn&& fn) {
  fn(plan);
  for (const auto& arg : plan.args()) Walk(arg, fn);
}

}  // namespace

std::string_view FunctionName(Function function) {
  return kFunctionNames[static_cast<int>(function)];
}

std::optional<Function> FunctionFromName(std::string_view name) {
  for (std::size_t i = 0; i < kFunctionNames.size(); ++i) {
    if (kFunctionNames[i] == name) return static_cast<Function>(i);
  }
  return std::nullopt;
}

bool IsComparative(Function function) {
  return function == Function::kLt || function == Function::kLe ||
         function == Function::kGt || function == Function::kGe;
}

bool IsSuperlative(Function function) {
  return function == Function::kArgMax || function == Function::kArgMin;
}

std::string_view ResultKindName(ResultKind kind) {
  switch (kind) {
    case ResultKind::kEntitySet:
      return "entity-set";
    case ResultKind::kLiteralSet:
      return "literal-set";
    case ResultKind::kInteger:
      return "integer";
  }
  return "?";
}

Plan Plan::Entity(EntityId id) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::kEntity;
  node->canonical = id;
  node->symbol = std::move(id);
  return Plan(std::move(node));
}

Plan Plan::Class(ClassId id) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::kClass;
  node->canonical = id;
  node->symbol = std::move(id);
  return Plan(std::move(node));
}

Plan Plan::Constant(Literal value) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::kLiteral;
  node->canonical = value.ToString();
  node->literal = std::move(value);
  return Plan(std::move(node));
}

Plan Plan::MakeApply(Function function, RelationId relation, bool inverse,
                     std::vector<Plan> args) {
  auto node = std::make_shared<Node>();
  node->kind = PlanKind::kApply;
  node->function = function;
  node->relation = std::move(relation);
  node->inverse = inverse;
  node->args = std::move(args);
  node->length = 1;
  for (const auto& arg : node->args) node->length += arg.length();

  std::string& text = node->canonical;
  text = "(";
  text += FunctionName(function);
  auto append_relation = [&] {
    text += ' ';
    text += node->relation;
    if (node->inverse) text += '~';
  };
  switch (function) {
    case Function::kJoin:
    case Function::kLt:
    case Function::kLe:
    case Function::kGt:
    case Function::kGe:
      append_relation();
      text += ' ';
      text += node->args[0].canonical();
      break;
    case Function::kArgMax:
    case Function::kArgMin:
      text += ' ';
      text += node->args[0].canonical();
      append_relation();
      break;
    case Function::kAnd:
    case Function::kCount:
      for (const auto& arg : node->args) {
        text += ' ';
        text += arg.canonical();
      }
      break;
  }
  text += ')';
  return Plan(std::move(node));
}

Plan Plan::Join(RelationId relation, bool inverse, Plan operand) {
  return MakeApply(Function::kJoin, std::move(relation), inverse,
                   {std::move(operand)});
}

Plan Plan::And(Plan a, Plan b) {
  bool a_class = a.kind() == PlanKind::kClass;
  bool b_class = b.kind() == PlanKind::kClass;
  if ((b_class && !a_class) ||
      (a_class == b_class && b.canonical() < a.canonical())) {
    std::swap(a, b);
  }
  return MakeApply(Function::kAnd, "", false, {std::move(a), std::move(b)});
}

Plan Plan::Superlative(Function function, Plan operand, RelationId relation) {
  if (!IsSuperlative(function)) {
    throw ArityError("Superlative() needs ARGMAX or ARGMIN");
  }
  return MakeApply(function, std::move(relation), false, {std::move(operand)});
}

Plan Plan::Comparative(Function function, RelationId relation, Plan value) {
  if (!IsComparative(function)) {
    throw ArityError("Comparative() needs LT, LE, GT or GE");
  }
  return MakeApply(function, std::move(relation), false, {std::move(value)});
}

Plan Plan::Count(Plan operand) {
  return MakeApply(Function::kCount, "", false, {std::move(operand)});
}

bool operator==(const Plan& a, const Plan& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.canonical() != b.canonical()) return false;
  if (a.is_leaf()) return true;
  if (a.function() != b.function() || a.relation() != b.relation() ||
      a.inverse() != b.inverse()) {
    return false;
  }
  return std::equal(a.args().begin(), a.args().end(), b.args().begin(),
                    b.args().end());
}

Plan ParsePlan(std::string_view text) {
  return ToPlan(Reader(text).ReadAll(), false);
}

ResultType TypeCheck(const Plan& plan, const KnowledgeBase& kb) {
  return CheckNode(plan, kb, false);
}

std::vector<Plan> ApplySubexpressions(const Plan& plan) {
  std::map<std::string, Plan> found;
  CollectApplies(plan, &found);
  std::vector<Plan> out;
  out.reserve(found.size());
  for (auto& [text, sub] : found) out.push_back(sub);
  return out;
}

std::vector<RelationId> RelationsUsed(const Plan& plan) {
  std::vector<RelationId> out;
  Walk(plan, [&](const Plan& node) {
    if (!node.is_leaf() && !node.relation().empty()) {
      out.push_back(node.relation());
    }
  });
  return out;
}

std::vector<Function> FunctionsUsed(const Plan& plan) {
  std::vector<Function> out;
  Walk(plan, [&](const Plan& node) {
    if (!node.is_leaf()) out.push_back(node.function());
  });
  return out;
}

std::span<const Plan> GoldDecomposition::step(int t) const {
  if (t < 1 || t > length()) return {};
  return steps_[t - 1];
}

bool GoldDecomposition::Contains(const Plan& plan) const {
  auto members = step(plan.length());
  return std::find(members.begin(), members.end(), plan) != members.end();
}

GoldDecomposition DeriveGoldDecomposition(const Plan& target) {
  if (target.is_leaf()) {
    throw DegenerateGold("gold plan '" + target.canonical() +
                         "' has no function application");
  }
  std::vector<std::vector<Plan>> steps(target.length());
  for (const auto& sub : ApplySubexpressions(target)) {
    steps[sub.length() - 1].push_back(sub);
  }
  return GoldDecomposition(target, std::move(steps));
}

}  // namespace kbqa
