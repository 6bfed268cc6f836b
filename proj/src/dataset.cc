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

#include "kbqa/dataset.h"

#include <fstream>
#include <set>

#include "json.hpp"
#include "kbqa/error.h"

namespace kbqa {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& name, std::size_t line,
                       const std::string& qid, const std::string& message) {
  std::string where = name + ":" + std::to_string(line) + ": ";
  if (!qid.empty()) where += "qid " + qid + ": ";
  throw ParseError(where + message, line, 1);
}

bool IsBlank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::vector<Plan> DatasetExample::InitialPlans() const {
  std::vector<Plan> plans;
  for (const auto& id : entity_proposals) plans.push_back(Plan::Entity(id));
  for (const auto& literal : literal_proposals) {
    plans.push_back(Plan::Constant(literal));
  }
  return plans;
}

std::string DatasetExample::ToJson() const {
  json out;
  out["qid"] = qid;
  out["utterance"] = utterance;
  out["entities"] = entity_proposals;
  out["literals"] = json::array();
  for (const auto& literal : literal_proposals) {
    out["literals"].push_back(
        {{"kind", KindName(literal.kind())}, {"lexical", literal.lexical()}});
  }
  if (gold_plan) out["gold_plan"] = gold_plan->canonical();
  return out.dump();
}

std::vector<DatasetExample> ParseDataset(std::istream& in,
                                         const std::string& name) {
  std::vector<DatasetExample> examples;
  std::set<std::string> qids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (IsBlank(line)) continue;
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object()) {
      Fail(name, number, "", "not a JSON object");
    }
    DatasetExample example;
    if (!row.contains("qid") || !row["qid"].is_string()) {
      Fail(name, number, "", "missing string 'qid'");
    }
    example.qid = row["qid"].get<std::string>();
    const std::string& qid = example.qid;
    if (!qids.insert(qid).second) Fail(name, number, qid, "duplicate qid");
    if (!row.contains("utterance") || !row["utterance"].is_string()) {
      Fail(name, number, qid, "missing string 'utterance'");
    }
    example.utterance = row["utterance"].get<std::string>();
    if (row.contains("entities")) {
      if (!row["entities"].is_array()) {
        Fail(name, number, qid, "'entities' must be an array");
      }
      for (const auto& id : row["entities"]) {
        if (!id.is_string()) {
          Fail(name, number, qid, "'entities' must hold strings");
        }
        example.entity_proposals.push_back(id.get<std::string>());
      }
    }
    if (row.contains("literals")) {
      if (!row["literals"].is_array()) {
        Fail(name, number, qid, "'literals' must be an array");
      }
      for (const auto& item : row["literals"]) {
        if (!item.is_object() || !item.contains("kind") ||
            !item.contains("lexical") || !item["kind"].is_string() ||
            !item["lexical"].is_string()) {
          Fail(name, number, qid,
               "literals need string 'kind' and 'lexical'");
        }
        auto kind = KindFromName(item["kind"].get<std::string>());
        if (!kind) {
          Fail(name, number, qid,
               "unknown literal kind '" + item["kind"].get<std::string>() +
                   "'");
        }
        try {
          example.literal_proposals.push_back(
              Literal::Parse(*kind, item["lexical"].get<std::string>()));
        } catch (const InvalidLiteral& e) {
          Fail(name, number, qid, e.what());
        }
      }
    }
    if (row.contains("gold_plan") && !row["gold_plan"].is_null()) {
      if (!row["gold_plan"].is_string()) {
        Fail(name, number, qid, "'gold_plan' must be a string");
      }
      try {
        example.gold_plan = ParsePlan(row["gold_plan"].get<std::string>());
      } catch (const Error& e) {
        Fail(name, number, qid, std::string("bad gold_plan: ") + e.what());
      }
    }
    examples.push_back(std::move(example));
  }
  return examples;
}

std::vector<DatasetExample> LoadDataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open dataset " + path.string(), 0, 0);
  return ParseDataset(in, path.string());
}

void WriteDataset(const std::filesystem::path& path,
                  const std::vector<DatasetExample>& examples) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write dataset " + path.string());
  for (const auto& example : examples) out << example.ToJson() << "\n";
}

std::string Prediction::ToJson() const {
  json out;
  out["qid"] = qid;
  out["plan"] = plan ? json(plan->canonical()) : json(nullptr);
  out["score"] = score ? json(*score) : json(nullptr);
  out["steps"] = steps;
  if (error) out["error"] = *error;
  return out.dump();
}

std::vector<Prediction> ParsePredictions(std::istream& in,
                                         const std::string& name) {
  std::vector<Prediction> predictions;
  std::set<std::string> qids;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (IsBlank(line)) continue;
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_object() || !row.contains("qid") ||
        !row["qid"].is_string()) {
      Fail(name, number, "", "expected an object with string 'qid'");
    }
    Prediction prediction;
    prediction.qid = row["qid"].get<std::string>();
    if (!qids.insert(prediction.qid).second) {
      Fail(name, number, prediction.qid, "duplicate qid");
    }
    if (row.contains("plan") && row["plan"].is_string()) {
      try {
        prediction.plan = ParsePlan(row["plan"].get<std::string>());
      } catch (const Error& e) {
        Fail(name, number, prediction.qid, std::string("bad plan: ") + e.what());
      }
    }
    if (row.contains("score") && row["score"].is_number()) {
      prediction.score = row["score"].get<double>();
    }
    if (row.contains("steps") && row["steps"].is_number_integer()) {
      prediction.steps = row["steps"].get<int>();
    }
    if (row.contains("error") && row["error"].is_string()) {
      prediction.error = row["error"].get<std::string>();
    }
    predictions.push_back(std::move(prediction));
  }
  return predictions;
}

std::vector<Prediction> LoadPredictions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open predictions " + path.string(), 0, 0);
  return ParsePredictions(in, path.string());
}

}  // namespace kbqa
