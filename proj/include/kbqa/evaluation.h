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

#ifndef KBQA_EVALUATION_H_
#define KBQA_EVALUATION_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kbqa/dataset.h"
#include "kbqa/executor.h"
#include "kbqa/knowledge_base.h"
#include "kbqa/plan.h"

namespace kbqa {

// Canonical-structure equality.
bool ExactMatch(const Plan& predicted, const Plan& gold);

// Set F1 over denotations. Two empty sets score 1, counts score 1 when
// equal, and a set against a count scores 0.
double DenotationF1(const Denotation& predicted, const Denotation& gold);

// Number of relation uses (JOIN, comparatives, superlatives) in a plan.
int RelationCount(const Plan& plan);

struct EvalRow {
  std::string qid;
  std::optional<std::string> predicted;
  std::string gold;
  bool exact_match = false;
  double f1 = 0;
  int gold_length = 0;
  int gold_relations = 0;
  // Why the prediction could not be scored, if it could not.
  std::optional<std::string> error;
};

struct EvalGroup {
  int count = 0;
  double mean_em = 0;
  double mean_f1 = 0;
};

struct EvalReport {
  std::vector<EvalRow> rows;
  int count = 0;
  int predicted = 0;
  double mean_em = 0;
  double mean_f1 = 0;
  std::map<int, EvalGroup> by_length;
  std::map<int, EvalGroup> by_relations;

  // {"per_example": [...], "aggregates": {...}}
  std::string ToJson() const;
  std::string ToText() const;
};

// Scores every dataset example that carries a gold plan. A missing
// prediction, or one that fails to execute, gets EM false and F1 0. Throws
// UnknownQid for predictions outside the dataset.
EvalReport Evaluate(const KnowledgeBase& kb,
                    const std::vector<DatasetExample>& dataset,
                    const std::map<std::string, Plan>& predictions);

}  // namespace kbqa

#endif  // KBQA_EVALUATION_H_
