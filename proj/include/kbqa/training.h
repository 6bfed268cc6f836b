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

#ifndef KBQA_TRAINING_H_
#define KBQA_TRAINING_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "kbqa/dataset.h"
#include "kbqa/enumerator.h"
#include "kbqa/features.h"
#include "kbqa/knowledge_base.h"
#include "kbqa/plan.h"
#include "kbqa/scorer.h"

namespace kbqa {

struct TrainConfig {
  // The loss is averaged over every pool item, so gradients are small.
  double learning_rate = 50.0;
  int epochs = 40;
  double l2_penalty = 0.0;
  std::uint64_t rng_seed = 0;
  int beam_size = 5;
  // Examples per gradient update; 0 means the whole dataset.
  int batch_size = 0;
  Constraints constraints;
};

// One softmax pool: C_t plus the previous step's golds.
struct RankingPool {
  int step = 0;
  // The teacher-forced beam this step expanded.
  std::vector<Plan> beam;
  std::vector<Plan> plans;
  // Row i holds the features of plans[i].
  Eigen::Matrix<double, Eigen::Dynamic, kFeatureDim> features;
  // Indices into plans of the members of G_t.
  std::vector<int> gold;
};

struct LossAndGradient {
  double loss = 0;
  Eigen::VectorXd gradient = Eigen::VectorXd::Zero(kFeatureDim);
  // Z: pool items summed over the steps that contributed.
  int pool_items = 0;
};

// Listwise cross-entropy of the pools under `weights`, divided by Z, with
// its exact gradient. Pools without gold are skipped.
LossAndGradient ListwiseObjective(const Eigen::VectorXd& weights,
                                  std::span<const RankingPool> pools);

// The same loss from raw scores: pool_scores[s] are the scores of pool s and
// gold[s] the gold positions in it.
double ListwiseLoss(std::span<const std::vector<double>> pool_scores,
                    std::span<const std::vector<int>> gold);

// Replays teacher-forced beam search for one example under `model` and
// returns the pools of steps 1..T+1. The beam at step t is the top
// beam_size candidates plus every gold subexpression of length <= t.
// Throws GoldNotReproducible when a gold subexpression never shows up among
// the candidates, and Error when the example has no gold plan.
std::vector<RankingPool> TeacherForcedPools(const KnowledgeBase& kb,
                                            const DatasetExample& example,
                                            const RankingModel& model,
                                            const TrainConfig& config);

LossAndGradient TrainingStep(const KnowledgeBase& kb,
                             const DatasetExample& example,
                             const RankingModel& model,
                             const TrainConfig& config);

struct SkippedExample {
  std::string qid;
  std::string reason;
};

struct TrainResult {
  RankingModel model;
  // Mean per-example loss of each epoch, measured before its updates.
  std::vector<double> epoch_losses;
  std::vector<SkippedExample> skipped;
};

// Gradient descent with L2 from zero weights. Examples whose golds cannot be
// reproduced are skipped and reported. Throws EmptyPool when nothing is left
// to train on and NonFiniteLoss if the loss blows up.
TrainResult Train(const KnowledgeBase& kb,
                  std::span<const DatasetExample> dataset,
                  const TrainConfig& config);

}  // namespace kbqa

#endif  // KBQA_TRAINING_H_
