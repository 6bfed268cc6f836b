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

#include "kbqa/search.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"
#include "kbqa/error.h"

namespace kbqa {
namespace {

nlohmann::json ScoredJson(std::span<const ScoredPlan> plans) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& sp : plans) {
    out.push_back({{"plan", sp.plan.canonical()}, {"score", sp.score}});
  }
  return out;
}

std::vector<double> ScoreBatch(const Scorer& scorer, std::string_view utterance,
                               std::span<const Plan> candidates) {
  std::vector<double> scores;
  try {
    scores = scorer.Score(utterance, candidates);
  } catch (const std::exception& e) {
    throw ScorerFailure(std::string("scorer failed: ") + e.what());
  }
  if (scores.size() != candidates.size()) {
    throw ScorerFailure("scorer returned " + std::to_string(scores.size()) +
                        " scores for " + std::to_string(candidates.size()) +
                        " candidates");
  }
  for (double s : scores) {
    if (!std::isfinite(s)) throw ScorerFailure("scorer returned a non-finite score");
  }
  return scores;
}

}  // namespace

std::string SearchTrace::ToJson() const {
  nlohmann::json out;
  out["steps"] = nlohmann::json::array();
  for (const auto& step : steps) {
    out["steps"].push_back({{"step", step.step},
                            {"best_score", step.best_score},
                            {"beam", ScoredJson(step.beam)},
                            {"candidates", ScoredJson(step.candidates)}});
  }
  if (best) {
    out["best"] = {{"plan", best->plan.canonical()}, {"score", best->score}};
  } else {
    out["best"] = nullptr;
  }
  out["termination_step"] = termination_step;
  return out.dump(2);
}

std::vector<ScoredPlan> TopK(std::span<const Plan> candidates,
                             std::span<const double> scores, int k) {
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return candidates[a].canonical() < candidates[b].canonical();
  });
  if (static_cast<int>(order.size()) > k) order.resize(k);
  std::vector<ScoredPlan> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back({candidates[i], scores[i]});
  return out;
}

SearchTrace Search(const KnowledgeBase& kb, std::string_view utterance,
                   std::span<const Plan> initial_plans, const Scorer& scorer,
                   const SearchConfig& config) {
  if (initial_plans.empty()) {
    throw EmptyInitialPlans("search needs at least one initial plan");
  }
  if (config.beam_size < 1 || config.max_steps < 1) {
    throw Error("beam size and max steps must be at least 1");
  }
  SearchTrace trace;
  std::vector<Plan> beam(initial_plans.begin(), initial_plans.end());
  for (int t = 1; t <= config.max_steps; ++t) {
    trace.termination_step = t;
    std::vector<Plan> candidates = CandidatePlans(kb, beam, config.constraints);
    if (candidates.empty()) break;
    std::vector<double> scores = ScoreBatch(scorer, utterance, candidates);

    SearchStep step;
    step.step = t;
    step.beam = TopK(candidates, scores, config.beam_size);
    step.best_score = step.beam.front().score;
    step.candidates.reserve(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      step.candidates.push_back({candidates[i], scores[i]});
    }
    if (!trace.best || step.best_score > trace.best->score) {
      trace.best = step.beam.front();
    }
    const bool stop = !trace.steps.empty() &&
                      CheckTermination(trace.steps.back().best_score,
                                       step.best_score);
    beam.clear();
    for (const auto& sp : step.beam) beam.push_back(sp.plan);
    trace.steps.push_back(std::move(step));
    if (stop) break;
  }
  return trace;
}

}  // namespace kbqa
