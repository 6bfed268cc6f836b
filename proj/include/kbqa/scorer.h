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

#ifndef KBQA_SCORER_H_
#define KBQA_SCORER_H_

#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "kbqa/features.h"
#include "kbqa/plan.h"

namespace kbqa {

// Plausibility S(utterance, candidate) -> real for a batch of candidates.
// Implementations are deterministic; scores are raw reals, not
// probabilities.
class Scorer {
 public:
  virtual ~Scorer() = default;
  // One finite score per candidate, order-aligned.
  virtual std::vector<double> Score(std::string_view utterance,
                                    std::span<const Plan> candidates) const = 0;
};

// Share of plan tokens found in the utterance plus a 0.01 bonus per
// application, so a fully supported extension outranks its subplan.
double LexicalScore(std::string_view utterance, const Plan& candidate);

class LexicalScorer : public Scorer {
 public:
  std::vector<double> Score(std::string_view utterance,
                            std::span<const Plan> candidates) const override;
};

struct RankingModel {
  Eigen::VectorXd weights = Eigen::VectorXd::Zero(kFeatureDim);
  std::string feature_version{kFeatureVersion};

  // {"feature_version": str, "weights": [13 numbers]}
  std::string ToJson() const;
  // Throws ParseError on malformed input or non-finite weights.
  static RankingModel FromJson(std::string_view text);
  static RankingModel Load(const std::filesystem::path& path);
  void Save(const std::filesystem::path& path) const;
};

// dot(weights, Featurize(utterance, candidate)). Throws DimensionMismatch.
double LinearScore(const RankingModel& model, std::string_view utterance,
                   const Plan& candidate);

class LinearScorer : public Scorer {
 public:
  // Throws DimensionMismatch.
  explicit LinearScorer(RankingModel model);
  std::vector<double> Score(std::string_view utterance,
                            std::span<const Plan> candidates) const override;

 private:
  RankingModel model_;
};

// Adapts a per-candidate function; handy for oracle and adversarial scorers.
class FunctionScorer : public Scorer {
 public:
  using Fn = std::function<double(std::string_view, const Plan&)>;
  explicit FunctionScorer(Fn fn) : fn_(std::move(fn)) {}
  std::vector<double> Score(std::string_view utterance,
                            std::span<const Plan> candidates) const override;

 private:
  Fn fn_;
};

}  // namespace kbqa

#endif  // KBQA_SCORER_H_
