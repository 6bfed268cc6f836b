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

#ifndef KBQA_SEARCH_H_
#define KBQA_SEARCH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kbqa/enumerator.h"
#include "kbqa/knowledge_base.h"
#include "kbqa/plan.h"
#include "kbqa/scorer.h"

namespace kbqa {

struct SearchConfig {
  int beam_size = 5;
  int max_steps = 10;
  Constraints constraints;
};

struct ScoredPlan {
  Plan plan;
  double score = 0;
};

struct SearchStep {
  int step = 0;
  // C_t in canonical order with scores.
  std::vector<ScoredPlan> candidates;
  // P_t, best first.
  std::vector<ScoredPlan> beam;
  double best_score = 0;
};

struct SearchTrace {
  std::vector<SearchStep> steps;
  // Highest-scoring beam member over all steps; the earliest step wins a
  // tie. Empty only if the first step had no candidates.
  std::optional<ScoredPlan> best;
  // Step at which the loop stopped.
  int termination_step = 0;

  // Debug dump: per-step candidates and scores, beam and best plan.
  std::string ToJson() const;
};

// True when the best score dropped strictly below the previous step's.
inline bool CheckTermination(double previous_best, double current_best) {
  return current_best < previous_best;
}

// Ranks by score, ties broken by ascending canonical text; keeps k.
std::vector<ScoredPlan> TopK(std::span<const Plan> candidates,
                             std::span<const double> scores, int k);

// Bottom-up beam search from the initial plans. Throws EmptyInitialPlans,
// InvalidBeamPlan, or ScorerFailure wrapping whatever the scorer raised.
SearchTrace Search(const KnowledgeBase& kb, std::string_view utterance,
                   std::span<const Plan> initial_plans, const Scorer& scorer,
                   const SearchConfig& config = {});

}  // namespace kbqa

#endif  // KBQA_SEARCH_H_
