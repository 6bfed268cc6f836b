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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.h"
#include "generators.h"
#include "kbqa/dataset.h"
#include "kbqa/enumerator.h"
#include "kbqa/error.h"
#include "kbqa/evaluation.h"
#include "kbqa/executor.h"
#include "kbqa/remote_scorer.h"
#include "kbqa/search.h"
#include "kbqa/training.h"
#include "reference_executor.h"
#include "synthetic.h"

namespace kbqa {
namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

// The 50-question suite shared by several criteria.
const std::vector<DatasetExample>& Suite() {
  static const auto suite = testing::SyntheticQuestions(50, 2026, "suite");
  return suite;
}

FunctionScorer Oracle(const Plan& gold) {
  auto g = std::make_shared<GoldDecomposition>(DeriveGoldDecomposition(gold));
  return FunctionScorer([g](std::string_view, const Plan& c) {
    return testing::OracleScore(*g, c);
  });
}

Verdict Faithfulness() {
  const auto start = Clock::now();
  testing::Rng rng(1);
  long checked = 0, bad = 0;
  std::string first_bad;
  for (int round = 0; round < 1000; ++round) {
    const KnowledgeBase kb = testing::RandomKb(rng);
    std::vector<Plan> beam = testing::RandomLeaves(rng, kb, 4);
    for (int step = 0; step < 3 && !beam.empty(); ++step) {
      const std::vector<Plan> candidates = CandidatePlans(kb, beam);
      for (const Plan& c : candidates) {
        ++checked;
        bool ok = true;
        try {
          TypeCheck(c, kb);
          const Denotation d = Execute(kb, c);
          if (c.function() != Function::kCount && IsEmpty(d)) ok = false;
        } catch (const Error&) {
          ok = false;
        }
        if (!ok && bad++ == 0) first_bad = c.canonical();
      }
      std::vector<Plan> next;
      std::sample(candidates.begin(), candidates.end(),
                  std::back_inserter(next), 6, rng);
      beam = std::move(next);
    }
  }
  const double seconds = Seconds(start);
  Verdict v;
  v.pass = bad == 0 && checked > 0 && seconds < 60;
  v.detail = std::to_string(checked) + " candidates, " + std::to_string(bad) +
             " unfaithful" + (first_bad.empty() ? "" : " (e.g. " + first_bad + ")") +
             Fmt(", %.1fs", seconds);
  return v;
}

Verdict EnumerationOracle() {
  const auto start = Clock::now();
  const KnowledgeBase& kb = testing::MiniKb();
  std::vector<Plan> leaves;
  for (const EntityId& e : kb.entities()) leaves.push_back(Plan::Entity(e));
  leaves.push_back(Plan::Constant(Literal::Integer(40)));

  // Closure with an unbounded beam: every candidate feeds the next level.
  std::set<std::string> closure;
  std::vector<Plan> beam = leaves;
  std::set<std::string> in_beam;
  for (const Plan& p : beam) in_beam.insert(p.canonical());
  for (int level = 0; level < 2; ++level) {
    bool grew = false;
    for (const Plan& c : CandidatePlans(kb, beam)) {
      if (c.length() > 2) continue;
      closure.insert(c.canonical());
      if (in_beam.insert(c.canonical()).second) {
        beam.push_back(c);
        grew = true;
      }
    }
    if (!grew) break;
  }
  const std::set<std::string> brute = testing::BruteForcePlans(kb, leaves, 2);
  std::vector<std::string> missing, extra;
  std::set_difference(brute.begin(), brute.end(), closure.begin(),
                      closure.end(), std::back_inserter(missing));
  std::set_difference(closure.begin(), closure.end(), brute.begin(),
                      brute.end(), std::back_inserter(extra));
  const double seconds = Seconds(start);
  Verdict v;
  v.pass = missing.empty() && extra.empty() && seconds < 10;
  v.detail = std::to_string(closure.size()) + " plans by closure, " +
             std::to_string(brute.size()) + " by brute force";
  if (!missing.empty()) v.detail += ", missing " + missing.front();
  if (!extra.empty()) v.detail += ", extra " + extra.front();
  v.detail += Fmt(", %.2fs", seconds);
  return v;
}

Verdict ExecutorOracle() {
  testing::Rng rng(3);
  int compared = 0, disagreements = 0, attempts = 0;
  std::string first;
  while (compared < 1000 && attempts < 100000) {
    ++attempts;
    const KnowledgeBase kb = testing::RandomKb(rng);
    for (int i = 0; i < 5 && compared < 1000; ++i) {
      const Plan p = testing::RandomPlan(rng, kb, 3);
      const auto expected = testing::ReferenceExecute(kb, p);
      std::optional<Denotation> actual;
      try {
        actual = Execute(kb, p);
      } catch (const TypeError&) {
      }
      if (actual.has_value() != expected.has_value() ||
          (actual && *actual != *expected)) {
        if (disagreements++ == 0) first = p.canonical();
      }
      if (actual && expected) ++compared;
    }
  }
  Verdict v;
  v.pass = compared >= 1000 && disagreements == 0;
  v.detail = std::to_string(compared) + " executed pairs, " +
             std::to_string(disagreements) + " disagreements" +
             (first.empty() ? "" : " (e.g. " + first + ")");
  return v;
}

Verdict OracleSearch() {
  int exact = 0, late = 0;
  std::set<Function> functions;
  std::set<int> lengths;
  for (const DatasetExample& q : Suite()) {
    for (Function f : FunctionsUsed(*q.gold_plan)) functions.insert(f);
    lengths.insert(q.gold_plan->length());
    const auto initial = q.InitialPlans();
    const SearchTrace trace = Search(testing::SyntheticWorld(), q.utterance,
                                     initial, Oracle(*q.gold_plan));
    if (trace.best && ExactMatch(trace.best->plan, *q.gold_plan)) ++exact;
    if (trace.termination_step > q.gold_plan->length() + 1) ++late;
  }
  const int n = static_cast<int>(Suite().size());
  Verdict v;
  v.pass = n == 50 && exact == n && late == 0 && functions.size() == 9 &&
           lengths == std::set<int>{1, 2, 3, 4};
  v.detail = "EM " + std::to_string(exact) + "/" + std::to_string(n) + ", " +
             std::to_string(late) + " late terminations, " +
             std::to_string(functions.size()) + " functions, lengths " +
             std::to_string(*lengths.begin()) + ".." +
             std::to_string(*lengths.rbegin());
  return v;
}

Verdict GradientCheck() {
  const auto questions = testing::SyntheticQuestions(20, 5, "grad");
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal(0.0, 1.0);
  double worst = 0;
  const double h = 1e-5;
  for (int point = 0; point < 100; ++point) {
    const DatasetExample& q = questions[point % questions.size()];
    RankingModel model;
    for (int i = 0; i < kFeatureDim; ++i) model.weights(i) = normal(rng);
    const auto pools =
        TeacherForcedPools(testing::SyntheticWorld(), q, model, TrainConfig());
    const Eigen::VectorXd analytic =
        ListwiseObjective(model.weights, pools).gradient;
    Eigen::VectorXd numeric(kFeatureDim);
    for (int i = 0; i < kFeatureDim; ++i) {
      Eigen::VectorXd plus = model.weights, minus = model.weights;
      plus(i) += h;
      minus(i) -= h;
      numeric(i) = (ListwiseObjective(plus, pools).loss -
                    ListwiseObjective(minus, pools).loss) /
                   (2 * h);
    }
    const double scale = std::max({analytic.norm(), numeric.norm(), 1e-12});
    worst = std::max(worst, (analytic - numeric).norm() / scale);
  }
  return {worst < 1e-4, Fmt("max relative error %.2e over 100 points", worst)};
}

Verdict ToyLoss() {
  const std::vector<std::vector<double>> scores = {{1.0, 0.0}, {0.0, 1.0}};
  const std::vector<std::vector<int>> gold = {{0}, {1}};
  const double loss = ListwiseLoss(scores, gold);
  return {std::abs(loss - 0.15663) <= 1e-5, Fmt("loss %.7f", loss)};
}

Verdict EndToEndTraining() {
  const auto start = Clock::now();
  const auto train = testing::SyntheticQuestions(200, 7001, "train");
  const auto dev = testing::SyntheticQuestions(50, 7002, "dev");
  const KnowledgeBase& kb = testing::SyntheticWorld();
  const TrainResult result = Train(kb, train, TrainConfig());
  double worst_rise = 0;
  for (std::size_t i = 1; i < result.epoch_losses.size(); ++i) {
    worst_rise = std::max(worst_rise,
                          result.epoch_losses[i] - result.epoch_losses[i - 1]);
  }
  const LinearScorer scorer(result.model);
  int exact = 0;
  for (const DatasetExample& q : dev) {
    const auto initial = q.InitialPlans();
    const SearchTrace trace = Search(kb, q.utterance, initial, scorer);
    if (trace.best && ExactMatch(trace.best->plan, *q.gold_plan)) ++exact;
  }
  const double em = exact / static_cast<double>(dev.size());
  const double seconds = Seconds(start);
  Verdict v;
  v.pass = em >= 0.90 && worst_rise <= 1e-6 && seconds < 300 &&
           result.skipped.empty();
  v.detail = Fmt("dev EM %.3f, loss %.4f -> ", em, result.epoch_losses.front()) +
             Fmt("%.4f, largest rise %.1e, ", result.epoch_losses.back(),
                 worst_rise) +
             Fmt("%.1fs", seconds);
  return v;
}

Verdict MetricSpotValues() {
  const double f1 =
      DenotationF1(EntitySet{"alice"}, EntitySet{"alice", "bob"});
  const bool em = ExactMatch(ParsePlan("(AND Emulator (JOIN emulates java))"),
                             ParsePlan("(AND (JOIN emulates java) Emulator)"));
  return {f1 == 2.0 / 3.0 && em,
          Fmt("F1 %.17g, ", f1) + (em ? "EM order-invariant" : "EM order-sensitive")};
}

std::string PredictionLines(const Scorer& scorer) {
  std::ostringstream out;
  for (const DatasetExample& q : Suite()) {
    const auto initial = q.InitialPlans();
    const SearchTrace trace =
        Search(testing::SyntheticWorld(), q.utterance, initial, scorer);
    Prediction p;
    p.qid = q.qid;
    if (trace.best) {
      p.plan = trace.best->plan;
      p.score = trace.best->score;
    }
    p.steps = trace.termination_step;
    out << p.ToJson() << "\n";
  }
  return out.str();
}

Verdict RemoteEquivalence() {
  const std::string local = PredictionLines(LexicalScorer());
  RemoteOptions options;
  options.initial_backoff = std::chrono::milliseconds(1);
  std::string detail;
  bool pass = true;
  for (int fail_every : {0, 7}) {
    MockScoringServer server({.fail_every = fail_every});
    server.Start();
    const std::string remote =
        PredictionLines(RemoteScorer(server.url(), options));
    server.Stop();
    const bool same = remote == local;
    pass = pass && same && (fail_every == 0 || server.dropped() > 0);
    detail += (detail.empty() ? "" : "; ") + std::string("fail_every ") +
              std::to_string(fail_every) + ": " +
              (same ? "identical" : "DIFFERENT") + ", " +
              std::to_string(server.dropped()) + " dropped";
  }
  return {pass, detail};
}

Verdict AdversarialTermination() {
  std::vector<std::pair<std::string, FunctionScorer>> scorers;
  scorers.emplace_back("increasing", FunctionScorer([](std::string_view,
                                                       const Plan& c) {
                         return static_cast<double>(c.length());
                       }));
  scorers.emplace_back("constant", FunctionScorer([](std::string_view,
                                                     const Plan&) {
                         return 0.0;
                       }));
  scorers.emplace_back(
      "random", FunctionScorer([](std::string_view u, const Plan& c) {
        std::seed_seq seq(c.canonical().begin(), c.canonical().end());
        std::mt19937_64 rng(seq);
        rng.seed(rng() ^ std::hash<std::string_view>()(u));
        return std::uniform_real_distribution<double>(-1, 1)(rng);
      }));
  int runs = 0, overruns = 0;
  SearchConfig config;
  config.max_steps = 6;
  for (const auto& [name, scorer] : scorers) {
    for (const DatasetExample& q : Suite()) {
      const auto initial = q.InitialPlans();
      const SearchTrace trace =
          Search(testing::SyntheticWorld(), q.utterance, initial, scorer, config);
      ++runs;
      if (trace.termination_step > config.max_steps ||
          static_cast<int>(trace.steps.size()) > config.max_steps) {
        ++overruns;
      }
    }
  }
  return {overruns == 0, std::to_string(runs) + " searches, " +
                             std::to_string(overruns) + " past max_steps"};
}

int Main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"candidate faithfulness on 1000 random KBs", Faithfulness},
      {"enumeration closure equals brute force", EnumerationOracle},
      {"executor agrees with reference executor", ExecutorOracle},
      {"oracle-scored search recovers every gold", OracleSearch},
      {"analytic gradient matches finite differences", GradientCheck},
      {"toy listwise loss", ToyLoss},
      {"end-to-end training reaches dev EM >= 0.90", EndToEndTraining},
      {"metric spot values", MetricSpotValues},
      {"remote mock scorer matches local lexical", RemoteEquivalence},
      {"adversarial scorers halt within max_steps", AdversarialTermination},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << index << ". " << name
              << ": " << v.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace kbqa

int main() { return kbqa::Main(); }
