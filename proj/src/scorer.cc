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

#include "kbqa/scorer.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "kbqa/error.h"

namespace kbqa {

double LexicalScore(std::string_view utterance, const Plan& candidate) {
  return Featurize(utterance, candidate)[kPlanRecall] +
         0.01 * candidate.length();
}

std::vector<double> LexicalScorer::Score(
    std::string_view utterance, std::span<const Plan> candidates) const {
  const auto tokens = UtteranceTokens(utterance);
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    scores.push_back(Featurize(tokens, candidate)[kPlanRecall] +
                     0.01 * candidate.length());
  }
  return scores;
}

std::string RankingModel::ToJson() const {
  nlohmann::json out;
  out["feature_version"] = feature_version;
  out["weights"] = std::vector<double>(weights.data(),
                                       weights.data() + weights.size());
  return out.dump();
}

RankingModel RankingModel::FromJson(std::string_view text) {
  nlohmann::json in;
  try {
    in = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model: ") + e.what(), 0, 0);
  }
  if (!in.is_object() || !in.contains("weights") ||
      !in["weights"].is_array() || !in.contains("feature_version") ||
      !in["feature_version"].is_string()) {
    throw ParseError("model: expected {\"feature_version\", \"weights\"}", 0,
                     0);
  }
  RankingModel model;
  model.feature_version = in["feature_version"].get<std::string>();
  const auto& weights = in["weights"];
  model.weights.resize(static_cast<Eigen::Index>(weights.size()));
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!weights[i].is_number() ||
        !std::isfinite(weights[i].get<double>())) {
      throw ParseError("model: weight " + std::to_string(i) +
                           " is not a finite number",
                       0, 0);
    }
    model.weights[static_cast<Eigen::Index>(i)] = weights[i].get<double>();
  }
  return model;
}

RankingModel RankingModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file " + path.string(), 0, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return FromJson(buffer.str());
}

void RankingModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write model file " + path.string());
  out << ToJson() << "\n";
}

double LinearScore(const RankingModel& model, std::string_view utterance,
                   const Plan& candidate) {
  if (model.weights.size() != kFeatureDim) {
    throw DimensionMismatch("model has " +
                            std::to_string(model.weights.size()) +
                            " weights, features have " +
                            std::to_string(kFeatureDim));
  }
  return model.weights.dot(Featurize(utterance, candidate));
}

LinearScorer::LinearScorer(RankingModel model) : model_(std::move(model)) {
  if (model_.weights.size() != kFeatureDim) {
    throw DimensionMismatch("model has " +
                            std::to_string(model_.weights.size()) +
                            " weights, features have " +
                            std::to_string(kFeatureDim));
  }
}

std::vector<double> LinearScorer::Score(
    std::string_view utterance, std::span<const Plan> candidates) const {
  const auto tokens = UtteranceTokens(utterance);
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    scores.push_back(model_.weights.dot(Featurize(tokens, candidate)));
  }
  return scores;
}

std::vector<double> FunctionScorer::Score(
    std::string_view utterance, std::span<const Plan> candidates) const {
  std::vector<double> scores;
  scores.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    scores.push_back(fn_(utterance, candidate));
  }
  return scores;
}

}  // namespace kbqa
