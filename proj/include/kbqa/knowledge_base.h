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

#ifndef KBQA_KNOWLEDGE_BASE_H_
#define KBQA_KNOWLEDGE_BASE_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "kbqa/literal.h"

namespace kbqa {

using EntityId = std::string;
using ClassId = std::string;
using RelationId = std::string;

using EntitySet = std::set<EntityId>;
using LiteralSet = std::set<Literal>;

// A triple object: an entity or a literal.
using Term = std::variant<EntityId, Literal>;

// Forward walks subject -> object, backward walks object -> subject.
enum class Direction { kForward, kBackward };

struct RelationSchema {
  ClassId domain;
  // Either a class or a literal kind.
  std::variant<ClassId, LiteralKind> range;

  bool has_literal_range() const {
    return std::holds_alternative<LiteralKind>(range);
  }
  LiteralKind literal_range() const { return std::get<LiteralKind>(range); }
  const ClassId& class_range() const { return std::get<ClassId>(range); }
  // True when superlatives and comparatives apply.
  bool is_orderable() const {
    return has_literal_range() && IsOrderable(literal_range());
  }
};

struct Triple {
  EntityId subject;
  RelationId relation;
  Term object;

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// Immutable typed triple store. Construct with Load() or a Builder; every
// accessor is const and safe to call from many threads.
class KnowledgeBase {
 public:
  class Builder;

  // Reads the tab-separated triples file and the schema file. Throws
  // ParseError, SchemaViolation or DuplicateDeclaration.
  static KnowledgeBase Load(const std::filesystem::path& triples_path,
                            const std::filesystem::path& schema_path);
  static KnowledgeBase FromStreams(std::istream& triples, std::istream& schema,
                                   const std::string& triples_name = "triples",
                                   const std::string& schema_name = "schema");

  const EntitySet& entities() const { return entities_; }
  const std::set<ClassId>& classes() const { return classes_; }
  const std::map<RelationId, RelationSchema>& relations() const {
    return relations_;
  }
  // Non-type triples in sorted order.
  const std::vector<Triple>& triples() const { return triples_; }

  bool HasEntity(const EntityId& id) const { return entities_.contains(id); }
  bool HasClass(const ClassId& id) const { return classes_.contains(id); }
  bool HasRelation(const RelationId& id) const {
    return relations_.contains(id);
  }

  // Throws UnknownRelation.
  const RelationSchema& relation(const RelationId& id) const;
  // Throws UnknownEntity.
  const std::set<ClassId>& ClassesOf(const EntityId& entity) const;
  // Throws UnknownIdentifier for an undeclared class.
  const EntitySet& InstancesOf(const ClassId& cls) const;

  // Relations with at least one edge leaving (forward) or entering
  // (backward) the frontier. Throws UnknownEntity.
  std::set<RelationId> RelationsFrom(const EntitySet& frontier,
                                     Direction direction) const;
  // Union of class membership. Throws UnknownEntity.
  std::set<ClassId> ClassesOf(const EntitySet& frontier) const;
  // One hop along `relation`. Forward returns objects of frontier subjects;
  // backward returns subjects whose object is in the frontier. Throws
  // UnknownRelation or UnknownEntity.
  std::set<Term> Follow(const EntitySet& frontier, const RelationId& relation,
                        Direction direction) const;

  // Objects of (subject, relation, *); empty when there are none.
  const std::set<Term>& Objects(const EntityId& subject,
                                const RelationId& relation) const;
  // Subjects of (*, relation, object).
  const EntitySet& Subjects(const Term& object,
                            const RelationId& relation) const;
  // (subject, literal) pairs of a literal-ranged relation.
  const std::vector<std::pair<EntityId, Literal>>& LiteralFacts(
      const RelationId& relation) const;

  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.entities_ == b.entities_ && a.classes_ == b.classes_ &&
           a.membership_ == b.membership_ && a.triples_ == b.triples_ &&
           a.relation_signatures() == b.relation_signatures();
  }

 private:
  KnowledgeBase() = default;
  void CheckEntity(const EntityId& id) const;
  std::vector<std::string> relation_signatures() const;

  EntitySet entities_;
  std::set<ClassId> classes_;
  std::map<RelationId, RelationSchema> relations_;
  std::map<EntityId, std::set<ClassId>> membership_;
  std::map<ClassId, EntitySet> instances_;
  std::vector<Triple> triples_;
  std::map<EntityId, std::map<RelationId, std::set<Term>>> forward_;
  std::map<Term, std::map<RelationId, EntitySet>> backward_;
  std::map<RelationId, std::vector<std::pair<EntityId, Literal>>>
      literal_facts_;
};

// Incremental construction with the same validation as the file loader.
class KnowledgeBase::Builder {
 public:
  // Each throws DuplicateDeclaration or SchemaViolation.
  Builder& AddClass(const ClassId& id);
  Builder& AddRelation(const RelationId& id, const ClassId& domain,
                       std::variant<ClassId, LiteralKind> range);
  Builder& AddType(const EntityId& entity, const ClassId& cls);
  // Checked against the declared schema at Build() time.
  Builder& AddTriple(EntityId subject, RelationId relation, Term object);

  // Throws SchemaViolation naming the first offending triple.
  KnowledgeBase Build() const;

 private:
  std::set<ClassId> classes_;
  std::map<RelationId, RelationSchema> relations_;
  std::map<EntityId, std::set<ClassId>> membership_;
  std::vector<Triple> triples_;
};

// True when `id` may be used as an entity, class or relation name.
bool IsValidIdentifier(std::string_view id);

std::string TermToString(const Term& term);

}  // namespace kbqa

#endif  // KBQA_KNOWLEDGE_BASE_H_
