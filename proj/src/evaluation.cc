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

#include "kbqa/evaluation.h"

#include <cstdio>
#include <set>
#include <sstream>

#include "json.hpp"
#include "kbqa/error.h"

namespace kbqa {
namespace {

using nlohmann::json;

template <typename Set>
double SetF1(const Set& predicted, const Set& gold) {
  if (predicted.empty() && gold.empty()) return 1.0;
  if (predicted.empty() || gold.empty()) return 0.0;
  std::size_t common = 0;
  for (const auto& item : predicted) common += gold.count(item);
  if (common == 0) return 0.0;
  const double p = static_cast<double>(common) / predicted.size();
  const double r = static_cast<double>(common) / gold.size();
  return 2 * p * r / (p + r);
}

void AddTo(std::map<int, EvalGroup>& groups, int key, const EvalRow& row) {
  EvalGroup& group = groups[key];
  group.count += 1;
  group.mean_em += row.exact_match ? 1.0 : 0.0;
  group.mean_f1 += row.f1;
}

void Finish(std::map<int, EvalGroup>& groups) {
  for (auto& [key, group] : groups) {
    group.mean_em /= group.count;
    group.mean_f1 /= group.count;
  }
}

json GroupsJson(const std::map<int, EvalGroup>& groups) {
  json out = json::array();
  for (const auto& [key, group] : groups) {
    out.push_back({{"key", key},
                   {"count", group.count},
                   {"mean_em", group.mean_em},
                   {"mean_f1", group.mean_f1}});
  }
  return out;
}

std::string Fixed(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.4f", value);
  return buffer;
}

}  // namespace

bool ExactMatch(const Plan& predicted, const Plan& gold) {
  return RenderPlan(predicted) == RenderPlan(gold);
}

double DenotationF1(const Denotation& predicted, const Denotation& gold) {
  if (predicted.index() != gold.index()) return 0.0;
  if (const auto* count = std::get_if<Count>(&predicted)) {
    return *count == std::get<Count>(gold) ? 1.0 : 0.0;
  }
  if (const auto* entities = std::get_if<EntitySet>(&predicted)) {
    return SetF1(*entities, std::get<EntitySet>(gold));
  }
  return SetF1(std::get<LiteralSet>(predicted), std::get<LiteralSet>(gold));
}

int RelationCount(const Plan& plan) {
  if (plan.is_leaf()) return 0;
  int count = plan.relation().empty() ? 0 : 1;
  for (const Plan& arg : plan.args()) count += RelationCount(arg);
  return count;
}

EvalReport Evaluate(const KnowledgeBase& kb,
                    const std::vector<DatasetExample>& dataset,
                    const std::map<std::string, Plan>& predictions) {
  std::set<std::string> qids;
  for (const auto& example : dataset) qids.insert(example.qid);
  for (const auto& [qid, plan] : predictions) {
    if (!qids.count(qid)) throw UnknownQid("prediction for unknown qid " + qid);
  }

  EvalReport report;
  for (const auto& example : dataset) {
    if (!example.gold_plan) continue;
    const Plan& gold = *example.gold_plan;
    EvalRow row;
    row.qid = example.qid;
    row.gold = gold.canonical();
    row.gold_length = gold.length();
    row.gold_relations = RelationCount(gold);
    auto it = predictions.find(example.qid);
    if (it != predictions.end()) {
      const Plan& predicted = it->second;
      row.predicted = predicted.canonical();
      row.exact_match = ExactMatch(predicted, gold);
      try {
        row.f1 = DenotationF1(Execute(kb, predicted), Execute(kb, gold));
      } catch (const Error& e) {
        row.error = e.what();
        row.f1 = 0;
      }
      report.predicted += 1;
    }
    report.mean_em += row.exact_match ? 1.0 : 0.0;
    report.mean_f1 += row.f1;
    AddTo(report.by_length, row.gold_length, row);
    AddTo(report.by_relations, row.gold_relations, row);
    report.rows.push_back(std::move(row));
  }
  report.count = static_cast<int>(report.rows.size());
  if (report.count > 0) {
    report.mean_em /= report.count;
    report.mean_f1 /= report.count;
  }
  Finish(report.by_length);
  Finish(report.by_relations);
  return report;
}

std::string EvalReport::ToJson() const {
  json out;
  out["per_example"] = json::array();
  for (const EvalRow& row : rows) {
    json item = {{"qid", row.qid},
                 {"predicted", row.predicted ? json(*row.predicted) : json()},
                 {"gold", row.gold},
                 {"em", row.exact_match},
                 {"f1", row.f1},
                 {"gold_length", row.gold_length},
                 {"gold_relations", row.gold_relations}};
    if (row.error) item["error"] = *row.error;
    out["per_example"].push_back(std::move(item));
  }
  out["aggregates"] = {{"count", count},
                       {"predicted", predicted},
                       {"mean_em", mean_em},
                       {"mean_f1", mean_f1},
                       {"by_gold_length", GroupsJson(by_length)},
                       {"by_relation_count", GroupsJson(by_relations)}};
  return out.dump(2) + "\n";
}

std::string EvalReport::ToText() const {
  std::ostringstream out;
  out << "examples  " << count << "  (predicted " << predicted << ")\n";
  out << "EM        " << Fixed(mean_em) << "\n";
  out << "F1        " << Fixed(mean_f1) << "\n";
  auto table = [&out](const char* title,
                      const std::map<int, EvalGroup>& groups) {
    out << "\n" << title << "\n";
    out << "  key  count      EM      F1\n";
    for (const auto& [key, group] : groups) {
      char line[64];
      std::snprintf(line, sizeof line, "  %3d  %5d  %.4f  %.4f\n", key,
                    group.count, group.mean_em, group.mean_f1);
      out << line;
    }
  };
  table("by gold plan length (function applications)", by_length);
  table("by relation count (JOIN, comparative, superlative)", by_relations);
  return out.str();
}

}  // namespace kbqa
