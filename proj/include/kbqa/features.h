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

#ifndef KBQA_FEATURES_H_
#define KBQA_FEATURES_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "kbqa/plan.h"

namespace kbqa {

inline constexpr int kFeatureDim = 13;
inline constexpr std::string_view kFeatureVersion = "lexical-overlap-v1";

// Layout:
//   0  jaccard(utterance tokens, plan tokens)
//   1  |plan ∩ utterance| / |plan|
//   2  |plan ∩ utterance| / |utterance|
//   3  plan length / 10
//   4+ one-hot root function, in kAllFunctions order; all zero for a leaf
using FeatureVector = Eigen::Matrix<double, kFeatureDim, 1>;

enum FeatureIndex {
  kJaccard = 0,
  kPlanRecall = 1,
  kUtterancePrecision = 2,
  kLengthFeature = 3,
  kRootFunction = 4,
};

// The 25 words dropped from utterances and plan tokens.
const std::set<std::string>& Stopwords();

// Splits an identifier on '.', '_', '~' and camelCase boundaries, lowercased.
// "ComputerEmulator" -> {computer, emulator}.
std::vector<std::string> TokenizeSchema(std::string_view identifier);

// Lowercased alphanumeric runs with stopwords removed.
std::vector<std::string> TokenizeUtterance(std::string_view utterance);

// Folds a trailing plural/verb 's' so "emulates" matches "emulate".
std::string NormalizeToken(std::string_view token);

// Normalized content tokens of an utterance.
std::set<std::string> UtteranceTokens(std::string_view utterance);
// Normalized tokens of every identifier and literal in the plan, plus one
// cue word per comparative, superlative and COUNT application.
std::set<std::string> PlanTokens(const Plan& plan);

FeatureVector Featurize(std::string_view utterance, const Plan& candidate);
FeatureVector Featurize(const std::set<std::string>& utterance_tokens,
                        const Plan& candidate);

}  // namespace kbqa

#endif  // KBQA_FEATURES_H_
