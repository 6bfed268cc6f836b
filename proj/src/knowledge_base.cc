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

#include "kbqa/knowledge_base.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "kbqa/error.h"

namespace kbqa {
namespace {

const std::set<std::string>& ReservedNames() {
  static const std::set<std::string> names = {"integer", "float", "string",
                                              "date", "type"};
  return names;
}

std::string RangeName(const std::variant<ClassId, LiteralKind>& range) {
  if (const auto* cls = std::get_if<ClassId>(&range)) return *cls;
  return std::string(KindName(std::get<LiteralKind>(range)));
}

std::vector<std::pair<std::string, std::size_t>> SplitWhitespace(
    const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    fields.emplace_back(line.substr(start, i - start), start + 1);
  }
  return fields;
}

bool IsSkippable(const std::string& line) {
  auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

void StripCarriageReturn(std::string* line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

// Re-throws a validation error with its file position prepended.
template <typename Fn>
void WithLocation(const std::string& file, std::size_t line, Fn&& fn) {
  const std::string where = file + ":" + std::to_string(line) + ": ";
  try {
    fn();
  } catch (const DuplicateDeclaration& e) {
    throw DuplicateDeclaration(where + e.what());
  } catch (const SchemaViolation& e) {
    throw SchemaViolation(where + e.what());
  }
}

struct SchemaLine {
  std::size_t number;
  std::vector<std::pair<std::string, std::size_t>> fields;
};

void LoadSchema(std::istream& in, const std::string& name,
                KnowledgeBase::Builder* builder) {
  std::vector<SchemaLine> classes, rest;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    StripCarriageReturn(&line);
    if (IsSkippable(line)) continue;
    auto fields = SplitWhitespace(line);
    const std::string& keyword = fields[0].first;
    std::size_t expected = 0;
    if (keyword == "class") {
      expected = 2;
    } else if (keyword == "relation") {
      expected = 4;
    } else if (keyword == "type") {
      expected = 3;
    } else {
      throw ParseError(name + ":" + std::to_string(number) + ":1: unknown " +
                           "schema keyword '" + keyword + "'",
                       number, 1);
    }
    if (fields.size() != expected) {
      std::size_t column = fields.size() > expected
                               ? fields[expected].second
                               : line.size() + 1;
      throw ParseError(name + ":" + std::to_string(number) + ":" +
                           std::to_string(column) + ": '" + keyword +
                           "' takes " + std::to_string(expected - 1) +
                           " arguments",
                       number, column);
    }
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!IsValidIdentifier(fields[i].first)) {
        throw ParseError(name + ":" + std::to_string(number) + ":" +
                             std::to_string(fields[i].second) +
                             ": invalid identifier '" + fields[i].first + "'",
                         number, fields[i].second);
      }
    }
    (keyword == "class" ? classes : rest).push_back({number, fields});
  }
  for (const auto& decl : classes) {
    WithLocation(name, decl.number,
                 [&] { builder->AddClass(decl.fields[1].first); });
  }
  for (const auto& decl : rest) {
    WithLocation(name, decl.number, [&] {
      const auto& f = decl.fields;
      if (f[0].first == "relation") {
        std::variant<ClassId, LiteralKind> range = f[3].first;
        if (auto kind = KindFromName(f[3].first)) range = *kind;
        builder->AddRelation(f[1].first, f[2].first, range);
      } else {
        builder->AddType(f[1].first, f[2].first);
      }
    });
  }
}

void LoadTriples(std::istream& in, const std::string& name,
                 KnowledgeBase::Builder* builder) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    StripCarriageReturn(&line);
    if (IsSkippable(line)) continue;
    std::vector<std::string> fields;
    std::vector<std::size_t> columns;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      columns.push_back(start + 1);
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    auto fail = [&](std::size_t field, const std::string& message) {
      std::size_t column = field < columns.size() ? columns[field] : 1;
      throw ParseError(name + ":" + std::to_string(number) + ":" +
                           std::to_string(column) + ": " + message,
                       number, column);
    };
    if (fields.size() != 3) {
      fail(fields.size() > 3 ? 3 : 0,
           "expected 3 tab-separated fields, got " +
               std::to_string(fields.size()));
    }
    for (std::size_t i = 0; i < 2; ++i) {
      if (!IsValidIdentifier(fields[i])) {
        fail(i, "invalid identifier '" + fields[i] + "'");
      }
    }
    Term object;
    if (!fields[2].empty() && fields[2][0] == '"') {
      std::size_t consumed = 0;
      try {
        object = ParseLiteralToken(fields[2], &consumed);
      } catch (const InvalidLiteral& e) {
        fail(2, e.what());
      }
      if (consumed != fields[2].size()) fail(2, "trailing text after literal");
    } else {
      if (!IsValidIdentifier(fields[2])) {
        fail(2, "invalid identifier '" + fields[2] + "'");
      }
      object = fields[2];
    }
    WithLocation(name, number, [&] {
      builder->AddTriple(fields[0], fields[1], std::move(object));
    });
  }
}

const std::set<Term>& EmptyTerms() {
  static const std::set<Term> empty;
  return empty;
}

const EntitySet& EmptyEntities() {
  static const EntitySet empty;
  return empty;
}

}  // namespace

bool IsValidIdentifier(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    unsigned char u = static_cast<unsigned char>(c);
    if (u <= ' ' || c == '(' || c == ')' || c == '"' || c == '~' ||
        c == '#' || c == '\\' || u == 0x7f) {
      return false;
    }
  }
  // Identifiers must sort after '(' so canonical AND ordering puts
  // compound operands first.
  return static_cast<unsigned char>(id[0]) > '(';
}

std::string TermToString(const Term& term) {
  if (const auto* id = std::get_if<EntityId>(&term)) return *id;
  return std::get<Literal>(term).ToString();
}

KnowledgeBase::Builder& KnowledgeBase::Builder::AddClass(const ClassId& id) {
  if (!IsValidIdentifier(id)) {
    throw SchemaViolation("invalid class identifier '" + id + "'");
  }
  if (ReservedNames().contains(id)) {
    throw SchemaViolation("'" + id + "' is reserved and cannot name a class");
  }
  if (classes_.contains(id)) {
    throw DuplicateDeclaration("class '" + id + "' declared twice");
  }
  if (relations_.contains(id) || membership_.contains(id)) {
    throw DuplicateDeclaration("class '" + id +
                               "' collides with a relation or entity name");
  }
  classes_.insert(id);
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::AddRelation(
    const RelationId& id, const ClassId& domain,
    std::variant<ClassId, LiteralKind> range) {
  if (!IsValidIdentifier(id)) {
    throw SchemaViolation("invalid relation identifier '" + id + "'");
  }
  if (ReservedNames().contains(id)) {
    throw SchemaViolation("'" + id + "' is reserved and cannot name a relation");
  }
  if (relations_.contains(id)) {
    throw DuplicateDeclaration("relation '" + id + "' declared twice");
  }
  if (classes_.contains(id) || membership_.contains(id)) {
    throw DuplicateDeclaration("relation '" + id +
                               "' collides with a class or entity name");
  }
  if (!classes_.contains(domain)) {
    throw SchemaViolation("relation '" + id + "' has undeclared domain '" +
                          domain + "'");
  }
  if (const auto* cls = std::get_if<ClassId>(&range);
      cls && !classes_.contains(*cls)) {
    throw SchemaViolation("relation '" + id + "' has undeclared range '" +
                          *cls + "'");
  }
  relations_.emplace(id, RelationSchema{domain, std::move(range)});
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::AddType(const EntityId& entity,
                                                        const ClassId& cls) {
  if (!IsValidIdentifier(entity)) {
    throw SchemaViolation("invalid entity identifier '" + entity + "'");
  }
  if (!classes_.contains(cls)) {
    throw SchemaViolation("entity '" + entity + "' typed with undeclared " +
                          "class '" + cls + "'");
  }
  if (classes_.contains(entity) || relations_.contains(entity) ||
      ReservedNames().contains(entity)) {
    throw DuplicateDeclaration("entity '" + entity +
                               "' collides with a class, relation or " +
                               "reserved name");
  }
  if (!membership_[entity].insert(cls).second) {
    throw DuplicateDeclaration("entity '" + entity + "' typed '" + cls +
                               "' twice");
  }
  return *this;
}

KnowledgeBase::Builder& KnowledgeBase::Builder::AddTriple(EntityId subject,
                                                          RelationId relation,
                                                          Term object) {
  auto rel = relations_.find(relation);
  const std::string shown = subject + " " + relation + " " +
                            TermToString(object);
  if (rel == relations_.end()) {
    throw SchemaViolation("unknown relation '" + relation + "' in triple '" +
                          shown + "'");
  }
  auto subject_classes = membership_.find(subject);
  if (subject_classes == membership_.end()) {
    throw SchemaViolation("unknown subject entity '" + subject +
                          "' in triple '" + shown + "'");
  }
  const RelationSchema& schema = rel->second;
  if (!subject_classes->second.contains(schema.domain)) {
    throw SchemaViolation("subject '" + subject + "' is not in domain class '" +
                          schema.domain + "' of '" + relation + "'");
  }
  if (const auto* literal = std::get_if<Literal>(&object)) {
    if (!schema.has_literal_range() ||
        schema.literal_range() != literal->kind()) {
      throw SchemaViolation("object " + literal->ToString() +
                            " does not match range '" +
                            RangeName(schema.range) + "' of '" + relation +
                            "'");
    }
  } else {
    const EntityId& target = std::get<EntityId>(object);
    auto object_classes = membership_.find(target);
    if (object_classes == membership_.end()) {
      throw SchemaViolation("unknown object entity '" + target +
                            "' in triple '" + shown + "'");
    }
    if (schema.has_literal_range() ||
        !object_classes->second.contains(schema.class_range())) {
      throw SchemaViolation("object '" + target + "' is not in range '" +
                            RangeName(schema.range) + "' of '" + relation +
                            "'");
    }
  }
  triples_.push_back({std::move(subject), std::move(relation),
                      std::move(object)});
  return *this;
}

KnowledgeBase KnowledgeBase::Builder::Build() const {
  KnowledgeBase kb;
  kb.classes_ = classes_;
  kb.relations_ = relations_;
  kb.membership_ = membership_;
  for (const auto& cls : classes_) kb.instances_[cls];
  for (const auto& [entity, classes] : membership_) {
    kb.entities_.insert(entity);
    for (const auto& cls : classes) kb.instances_[cls].insert(entity);
  }
  kb.triples_ = triples_;
  std::sort(kb.triples_.begin(), kb.triples_.end());
  kb.triples_.erase(std::unique(kb.triples_.begin(), kb.triples_.end()),
                    kb.triples_.end());
  for (const auto& triple : kb.triples_) {
    kb.forward_[triple.subject][triple.relation].insert(triple.object);
    kb.backward_[triple.object][triple.relation].insert(triple.subject);
    if (const auto* literal = std::get_if<Literal>(&triple.object)) {
      kb.literal_facts_[triple.relation].emplace_back(triple.subject,
                                                      *literal);
    }
  }
  return kb;
}

KnowledgeBase KnowledgeBase::Load(const std::filesystem::path& triples_path,
                                  const std::filesystem::path& schema_path) {
  std::ifstream schema(schema_path);
  if (!schema) {
    throw ParseError("cannot open schema file " + schema_path.string(), 0, 0);
  }
  std::ifstream triples(triples_path);
  if (!triples) {
    throw ParseError("cannot open triples file " + triples_path.string(), 0,
                     0);
  }
  return FromStreams(triples, schema, triples_path.string(),
                     schema_path.string());
}

KnowledgeBase KnowledgeBase::FromStreams(std::istream& triples,
                                         std::istream& schema,
                                         const std::string& triples_name,
                                         const std::string& schema_name) {
  Builder builder;
  LoadSchema(schema, schema_name, &builder);
  LoadTriples(triples, triples_name, &builder);
  return builder.Build();
}

const RelationSchema& KnowledgeBase::relation(const RelationId& id) const {
  auto it = relations_.find(id);
  if (it == relations_.end()) {
    throw UnknownRelation("unknown relation '" + id + "'");
  }
  return it->second;
}

void KnowledgeBase::CheckEntity(const EntityId& id) const {
  if (!entities_.contains(id)) {
    throw UnknownEntity("unknown entity '" + id + "'");
  }
}

const std::set<ClassId>& KnowledgeBase::ClassesOf(
    const EntityId& entity) const {
  auto it = membership_.find(entity);
  if (it == membership_.end()) {
    throw UnknownEntity("unknown entity '" + entity + "'");
  }
  return it->second;
}

const EntitySet& KnowledgeBase::InstancesOf(const ClassId& cls) const {
  auto it = instances_.find(cls);
  if (it == instances_.end()) {
    throw UnknownIdentifier("unknown class '" + cls + "'");
  }
  return it->second;
}

std::set<RelationId> KnowledgeBase::RelationsFrom(const EntitySet& frontier,
                                                  Direction direction) const {
  std::set<RelationId> out;
  for (const auto& entity : frontier) {
    CheckEntity(entity);
    if (direction == Direction::kForward) {
      auto it = forward_.find(entity);
      if (it == forward_.end()) continue;
      for (const auto& [relation, objects] : it->second) out.insert(relation);
    } else {
      auto it = backward_.find(Term(entity));
      if (it == backward_.end()) continue;
      for (const auto& [relation, subjects] : it->second) {
        out.insert(relation);
      }
    }
  }
  return out;
}

std::set<ClassId> KnowledgeBase::ClassesOf(const EntitySet& frontier) const {
  std::set<ClassId> out;
  for (const auto& entity : frontier) {
    const auto& classes = ClassesOf(entity);
    out.insert(classes.begin(), classes.end());
  }
  return out;
}

std::set<Term> KnowledgeBase::Follow(const EntitySet& frontier,
                                     const RelationId& relation,
                                     Direction direction) const {
  this->relation(relation);
  std::set<Term> out;
  for (const auto& entity : frontier) {
    CheckEntity(entity);
    if (direction == Direction::kForward) {
      const auto& objects = Objects(entity, relation);
      out.insert(objects.begin(), objects.end());
    } else {
      for (const auto& subject : Subjects(Term(entity), relation)) {
        out.insert(subject);
      }
    }
  }
  return out;
}

const std::set<Term>& KnowledgeBase::Objects(const EntityId& subject,
                                             const RelationId& relation) const {
  auto it = forward_.find(subject);
  if (it == forward_.end()) return EmptyTerms();
  auto jt = it->second.find(relation);
  return jt == it->second.end() ? EmptyTerms() : jt->second;
}

const EntitySet& KnowledgeBase::Subjects(const Term& object,
                                         const RelationId& relation) const {
  auto it = backward_.find(object);
  if (it == backward_.end()) return EmptyEntities();
  auto jt = it->second.find(relation);
  return jt == it->second.end() ? EmptyEntities() : jt->second;
}

const std::vector<std::pair<EntityId, Literal>>& KnowledgeBase::LiteralFacts(
    const RelationId& relation) const {
  static const std::vector<std::pair<EntityId, Literal>> empty;
  auto it = literal_facts_.find(relation);
  return it == literal_facts_.end() ? empty : it->second;
}

std::vector<std::string> KnowledgeBase::relation_signatures() const {
  std::vector<std::string> out;
  for (const auto& [id, schema] : relations_) {
    out.push_back(id + " " + schema.domain + " " + RangeName(schema.range));
  }
  return out;
}

}  // namespace kbqa
