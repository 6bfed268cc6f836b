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

#include "kbqa/training.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "kbqa/error.h"
#include "kbqa/search.h"

namespace kbqa {
namespace {

// log(sum(exp(scores))) without overflow.
double LogSumExp(const Eigen::VectorXd& scores) {
  const double top = scores.maxCoeff();
  return top + std::log((scores.array() - top).exp().sum());
}

}  // namespace

LossAndGradient ListwiseObjective(const Eigen::VectorXd& weights,
                                  std::span<const RankingPool> pools) {
  if (weights.size() != kFeatureDim) {
    throw DimensionMismatch("weights have dimension " +
                            std::to_string(weights.size()) + ", expected " +
                            std::to_string(kFeatureDim));
  }
  LossAndGradient out;
  for (const RankingPool& pool : pools) {
    if (pool.gold.empty()) continue;
    const Eigen::VectorXd scores = pool.features * weights;
    const double log_z = LogSumExp(scores);
    const Eigen::VectorXd p = (scores.array() - log_z).exp().matrix();
    const Eigen::VectorXd expected = pool.features.transpose() * p;
    for (int g : pool.gold) {
      out.loss += log_z - scores(g);
      out.gradient += expected - pool.features.row(g).transpose();
    }
    out.pool_items += static_cast<int>(pool.plans.size());
  }
  if (out.pool_items > 0) {
    out.loss /= out.pool_items;
    out.gradient /= out.pool_items;
  }
  return out;
}

double ListwiseLoss(std::span<const std::vector<double>> pool_scores,
                    std::span<const std::vector<int>> gold) {
  if (pool_scores.size() != gold.size()) {
    throw Error("one gold list is needed per pool");
  }
  double loss = 0;
  std::size_t z = 0;
  for (std::size_t s = 0; s < pool_scores.size(); ++s) {
    if (gold[s].empty()) continue;
    const auto& scores = pool_scores[s];
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(
        scores.data(), static_cast<Eigen::Index>(scores.size()));
    const double log_z = LogSumExp(v);
    for (int g : gold[s]) loss += log_z - v(g);
    z += scores.size();
  }
  return z == 0 ? 0.0 : loss / static_cast<double>(z);
}

std::vector<RankingPool> TeacherForcedPools(const KnowledgeBase& kb,
                                            const DatasetExample& example,
                                            const RankingModel& model,
                                            const TrainConfig& config) {
  if (!example.gold_plan) {
    throw Error("example " + example.qid + " has no gold plan");
  }
  if (model.weights.size() != kFeatureDim) {
    throw DimensionMismatch("model has dimension " +
                            std::to_string(model.weights.size()));
  }
  if (config.beam_size < 1) throw Error("beam_size must be at least 1");
  TypeCheck(*example.gold_plan, kb);
  const GoldDecomposition gold = DeriveGoldDecomposition(*example.gold_plan);
  const int T = gold.length();
  const std::set<std::string> utterance = UtteranceTokens(example.utterance);

  std::vector<Plan> beam = example.InitialPlans();
  if (beam.empty()) {
    throw GoldNotReproducible(example.qid + ": no entity or literal proposals");
  }
  std::vector<RankingPool> pools;
  std::span<const Plan> previous_gold;
  for (int t = 1; t <= T + 1; ++t) {
    std::vector<Plan> candidates =
        CandidatePlans(kb, beam, config.constraints);
    std::span<const Plan> current_gold = gold.step(t <= T ? t : T);

    RankingPool pool;
    pool.step = t;
    pool.beam = beam;
    pool.plans = candidates;
    std::set<std::string> seen;
    for (const Plan& plan : candidates) seen.insert(plan.canonical());
    for (const Plan& plan : previous_gold) {
      if (seen.insert(plan.canonical()).second) pool.plans.push_back(plan);
    }
    for (const Plan& g : current_gold) {
      auto it = std::find(pool.plans.begin(), pool.plans.end(), g);
      if (it == pool.plans.end()) {
        throw GoldNotReproducible(example.qid + ": " + g.canonical() +
                                  " is not a step " + std::to_string(t) +
                                  " candidate");
      }
      pool.gold.push_back(static_cast<int>(it - pool.plans.begin()));
    }
    pool.features.resize(static_cast<Eigen::Index>(pool.plans.size()),
                         kFeatureDim);
    for (std::size_t i = 0; i < pool.plans.size(); ++i) {
      pool.features.row(static_cast<Eigen::Index>(i)) =
          Featurize(utterance, pool.plans[i]).transpose();
    }

    if (t <= T) {
      const auto n = static_cast<Eigen::Index>(candidates.size());
      const Eigen::VectorXd scores =
          pool.features.topRows(n) * model.weights;
      std::vector<double> score_list(scores.data(), scores.data() + n);
      std::vector<Plan> next;
      std::set<std::string> in_beam;
      for (const ScoredPlan& scored :
           TopK(candidates, score_list, config.beam_size)) {
        in_beam.insert(scored.plan.canonical());
        next.push_back(scored.plan);
      }
      for (int s = 1; s <= t; ++s) {
        for (const Plan& g : gold.step(s)) {
          if (in_beam.insert(g.canonical()).second) next.push_back(g);
        }
      }
      beam = std::move(next);
    }
    if (!pool.gold.empty()) pools.push_back(std::move(pool));
    previous_gold = current_gold;
  }
  return pools;
}

LossAndGradient TrainingStep(const KnowledgeBase& kb,
                             const DatasetExample& example,
                             const RankingModel& model,
                             const TrainConfig& config) {
  const std::vector<RankingPool> pools =
      TeacherForcedPools(kb, example, model, config);
  return ListwiseObjective(model.weights, pools);
}

TrainResult Train(const KnowledgeBase& kb,
                  std::span<const DatasetExample> dataset,
                  const TrainConfig& config) {
  if (!(config.learning_rate >= 0) || !std::isfinite(config.learning_rate)) {
    throw Error("learning rate must be a finite non-negative number");
  }
  if (config.epochs < 0) throw Error("epochs must be non-negative");
  if (config.batch_size < 0) throw Error("batch_size must be non-negative");

  TrainResult result;
  std::vector<const DatasetExample*> usable;
  const RankingModel probe;
  for (const DatasetExample& example : dataset) {
    try {
      TeacherForcedPools(kb, example, probe, config);
      usable.push_back(&example);
    } catch (const GoldNotReproducible& e) {
      result.skipped.push_back({example.qid, e.what()});
    } catch (const DegenerateGold& e) {
      result.skipped.push_back({example.qid, e.what()});
    }
  }
  if (usable.empty()) throw EmptyPool("no trainable examples");

  std::mt19937_64 rng(config.rng_seed);
  const std::size_t n = usable.size();
  const std::size_t batch =
      config.batch_size == 0 ? n
                             : std::min<std::size_t>(config.batch_size, n);
  RankingModel& model = result.model;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(usable.begin(), usable.end(), rng);
    double epoch_loss = 0;
    for (std::size_t start = 0; start < n; start += batch) {
      const std::size_t end = std::min(n, start + batch);
      Eigen::VectorXd gradient = Eigen::VectorXd::Zero(kFeatureDim);
      for (std::size_t i = start; i < end; ++i) {
        LossAndGradient step = TrainingStep(kb, *usable[i], model, config);
        if (!std::isfinite(step.loss) || !step.gradient.allFinite()) {
          throw NonFiniteLoss("non-finite loss on " + usable[i]->qid +
                              " in epoch " + std::to_string(epoch + 1));
        }
        epoch_loss += step.loss;
        gradient += step.gradient;
      }
      gradient /= static_cast<double>(end - start);
      gradient += config.l2_penalty * model.weights;
      model.weights -= config.learning_rate * gradient;
    }
    result.epoch_losses.push_back(epoch_loss / static_cast<double>(n));
  }
  return result;
}

}  // namespace kbqa
