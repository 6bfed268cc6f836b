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

#ifndef KBQA_DATASET_H_
#define KBQA_DATASET_H_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kbqa/knowledge_base.h"
#include "kbqa/literal.h"
#include "kbqa/plan.h"

namespace kbqa {

// One JSONL line:
//   {"qid": str, "utterance": str, "entities": [str],
//    "literals": [{"kind": str, "lexical": str}], "gold_plan": str?}
struct DatasetExample {
  std::string qid;
  std::string utterance;
  std::vector<EntityId> entity_proposals;
  std::vector<Literal> literal_proposals;
  std::optional<Plan> gold_plan;

  // Entity and literal leaves, the search's starting beam.
  std::vector<Plan> InitialPlans() const;
  std::string ToJson() const;
};

// Throws ParseError naming the line (and qid when known), including for
// duplicate qids and unparsable gold plans.
std::vector<DatasetExample> ParseDataset(std::istream& in,
                                         const std::string& name = "dataset");
std::vector<DatasetExample> LoadDataset(const std::filesystem::path& path);
void WriteDataset(const std::filesystem::path& path,
                  const std::vector<DatasetExample>& examples);

// One row of a predictions file: {"qid", "plan", "score", "steps"}; plan and
// score are null when the search failed, with the reason under "error".
struct Prediction {
  std::string qid;
  std::optional<Plan> plan;
  std::optional<double> score;
  int steps = 0;
  std::optional<std::string> error;

  std::string ToJson() const;
};

std::vector<Prediction> ParsePredictions(std::istream& in,
                                         const std::string& name = "predictions");
std::vector<Prediction> LoadPredictions(const std::filesystem::path& path);

}  // namespace kbqa

#endif  // KBQA_DATASET_H_
