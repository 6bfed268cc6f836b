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

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "doctest.h"
#include "generators.h"
#include "kbqa/error.h"
#include "kbqa/features.h"
#include "kbqa/retrieval.h"
#include "kbqa/scorer.h"
#include "synthetic.h"

namespace kbqa {
namespace {

using Strings = std::vector<std::string>;

TEST_CASE("schema tokenizer") {
  CHECK(TokenizeSchema("ComputerEmulator") == Strings{"computer", "emulator"});
  CHECK(TokenizeSchema("age") == Strings{"age"});
  CHECK(TokenizeSchema("emulates~") == Strings{"emulates"});
  CHECK(TokenizeSchema("people.person.place_of_birth") ==
        Strings{"people", "person", "place", "of", "birth"});
  CHECK(TokenizeSchema("HTTPServer") == Strings{"http", "server"});
  CHECK(TokenizeSchema("") == Strings{});
}

TEST_CASE("utterance tokenizer drops stopwords and punctuation") {
  CHECK(TokenizeUtterance("Which emulators, emulate JAVA?") ==
        Strings{"emulators", "emulate", "java"});
  CHECK(Stopwords().size() == 25);
  CHECK(UtteranceTokens("how many emulators") ==
        std::set<std::string>{"how", "many", "emulator"});
  CHECK(NormalizeToken("class") == "class");
  CHECK(NormalizeToken("has") == "has");
}

TEST_CASE("featurize the worked example") {
  // Utterance {emulator, emulate, java}; plan {emulate, java}.
  FeatureVector f =
      Featurize("which emulators emulate java", ParsePlan("(JOIN emulates java)"));
  CHECK(f(kJaccard) == doctest::Approx(2.0 / 3.0));
  CHECK(f(kPlanRecall) == doctest::Approx(1.0));
  CHECK(f(kUtterancePrecision) == doctest::Approx(2.0 / 3.0));
  CHECK(f(kLengthFeature) == doctest::Approx(0.1));
  CHECK(f(kRootFunction + 0) == 1.0);
  CHECK(f.tail(8).sum() == 0.0);
}

TEST_CASE("featurize edge cases") {
  FeatureVector empty = Featurize("", ParsePlan("(JOIN emulates java)"));
  CHECK(empty.head(3).isZero());
  FeatureVector leaf = Featurize("java", ParsePlan("java"));
  CHECK(leaf.tail(9).isZero());
  CHECK(leaf(kLengthFeature) == 0.0);
  FeatureVector count =
      Featurize("how many", ParsePlan("(COUNT (JOIN emulates java))"));
  CHECK(count(kRootFunction + 8) == 1.0);
  CHECK(count.tail(9).sum() == 1.0);
}

TEST_CASE("lexical score by hand") {
  const std::string u = "how many emulators emulate java";
  const Plan gold = ParsePlan("(COUNT (AND Emulator (JOIN emulates java)))");
  const Plan other = ParsePlan("(JOIN knows java)");
  // Gold tokens {many, emulator, emulate, java} all appear: 1 + 0.03.
  CHECK(LexicalScore(u, gold) == doctest::Approx(1.03));
  // {know, java}: half recalled, plus 0.01.
  CHECK(LexicalScore(u, other) == doctest::Approx(0.51));
  CHECK(LexicalScore(u, gold) > LexicalScore(u, other));
  CHECK(LexicalScore(u, gold) == LexicalScore(u, gold));
  const Plan sub = ParsePlan("(JOIN emulates java)");
  const Plan ext = ParsePlan("(AND Emulator (JOIN emulates java))");
  CHECK(LexicalScore(u, ext) > LexicalScore(u, sub));
}

TEST_CASE("linear score") {
  const std::string u = "which emulators emulate java";
  const Plan join = ParsePlan("(JOIN emulates java)");
  const Plan conj = ParsePlan("(AND Emulator (JOIN emulates java))");
  RankingModel model;
  CHECK(LinearScore(model, u, join) == 0.0);
  model.weights(kRootFunction) = 1.0;
  CHECK(LinearScore(model, u, join) == 1.0);
  CHECK(LinearScore(model, u, conj) == 0.0);
  model.weights.setZero();
  model.weights(kJaccard) = 1.0;
  CHECK(LinearScore(model, u, join) == doctest::Approx(2.0 / 3.0));
  model.weights = Eigen::VectorXd::Zero(5);
  CHECK_THROWS_AS(LinearScore(model, u, join), DimensionMismatch);
  CHECK_THROWS_AS(LinearScorer{model}, DimensionMismatch);
}

TEST_CASE("model JSON round trip") {
  RankingModel model;
  for (int i = 0; i < kFeatureDim; ++i) model.weights(i) = 0.1 * i - 0.35;
  RankingModel back = RankingModel::FromJson(model.ToJson());
  CHECK(back.weights == model.weights);
  CHECK(back.feature_version == kFeatureVersion);
  CHECK_THROWS_AS(RankingModel::FromJson("{"), ParseError);
  CHECK_THROWS_AS(LinearScorer(RankingModel::FromJson(
                      R"({"feature_version": "lexical-overlap-v1", "weights": [1, 2]})")),
                  DimensionMismatch);
  CHECK_THROWS_AS(RankingModel::FromJson(R"({"weights": []})"), ParseError);
}

// Scorer properties on the synthetic world.

TEST_CASE("batch scoring equals one-at-a-time scoring, deterministically") {
  const auto questions = testing::SyntheticQuestions(20, 4, "p");
  RankingModel model;
  std::mt19937_64 rng(9);
  for (int i = 0; i < kFeatureDim; ++i) {
    model.weights(i) = std::normal_distribution<double>()(rng);
  }
  LexicalScorer lexical;
  LinearScorer linear(model);
  for (const auto& q : questions) {
    std::vector<Plan> plans = {*q.gold_plan};
    for (const Plan& sub : ApplySubexpressions(*q.gold_plan)) plans.push_back(sub);
    for (const Scorer* scorer : {static_cast<const Scorer*>(&lexical),
                                 static_cast<const Scorer*>(&linear)}) {
      auto batch = scorer->Score(q.utterance, plans);
      REQUIRE(batch.size() == plans.size());
      CHECK(batch == scorer->Score(q.utterance, plans));
      for (std::size_t j = 0; j < plans.size(); ++j) {
        auto single = scorer->Score(q.utterance, std::span(&plans[j], 1));
        CHECK(single[0] == batch[j]);
        CHECK(std::isfinite(batch[j]));
      }
    }
  }
}

TEST_CASE("lexical argmax ignores candidate order") {
  const auto questions = testing::SyntheticQuestions(20, 5, "p");
  std::mt19937_64 rng(1);
  LexicalScorer scorer;
  for (const auto& q : questions) {
    std::vector<Plan> plans = ApplySubexpressions(*q.gold_plan);
    plans.push_back(ParsePlan("(JOIN speaks english)"));
    plans.push_back(ParsePlan("(COUNT (JOIN born_in paris))"));
    auto best = [&](const std::vector<Plan>& ps) {
      auto s = scorer.Score(q.utterance, ps);
      double top = *std::max_element(s.begin(), s.end());
      std::set<std::string> winners;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if (s[i] == top) winners.insert(ps[i].canonical());
      }
      return winners;
    };
    auto before = best(plans);
    std::shuffle(plans.begin(), plans.end(), rng);
    CHECK(best(plans) == before);
  }
}

// Retrieval.

// Textbook BM25, written out term by term.
double ReferenceBm25(const std::vector<Strings>& docs, const Strings& doc,
                     const Strings& query) {
  const double k1 = 1.2, b = 0.75;
  double avg = 0;
  for (const auto& d : docs) avg += d.size();
  avg /= docs.size();
  double total = 0;
  for (const std::string& term : query) {
    int n = 0;
    for (const auto& d : docs) {
      if (std::find(d.begin(), d.end(), term) != d.end()) ++n;
    }
    const double idf = std::log(1 + (docs.size() - n + 0.5) / (n + 0.5));
    const double tf = std::count(doc.begin(), doc.end(), term);
    total += idf * tf * (k1 + 1) / (tf + k1 * (1 - b + b * doc.size() / avg));
  }
  return total;
}

TEST_CASE("in-context selection basics") {
  std::vector<InContextExample> one = {{"who knows java", "(JOIN knows java)"}};
  CHECK(SelectInContextExamples(one, "anything at all", 1) == one);
  std::vector<InContextExample> pool = {
      {"who knows java", "(JOIN knows java)"},
      {"how many emulators emulate java",
       "(COUNT (JOIN emulates java))"},
      {"which emulators emulate basic", "(JOIN emulates basic)"}};
  CHECK(SelectInContextExamples(pool, "which emulators emulate basic", 1)[0] ==
        pool[2]);
  CHECK(SelectInContextExamples(pool, "x", 10).size() == 3);
  CHECK_THROWS_AS(SelectInContextExamples({}, "x", 1), EmptyPool);
  CHECK_THROWS_AS(SelectInContextExamples(pool, "x", 0), Error);
  // No overlap anywhere: every score ties and pool order decides.
  CHECK(SelectInContextExamples(pool, "zzz", 2) ==
        std::vector<InContextExample>{pool[0], pool[1]});
}

TEST_CASE("BM25 selection matches a reference implementation") {
  const auto questions = testing::SyntheticQuestions(100, 12, "pool");
  std::vector<InContextExample> pool;
  std::vector<Strings> docs;
  for (const auto& q : questions) {
    pool.push_back({q.utterance, q.gold_plan->canonical()});
    docs.push_back(RetrievalTokens(q.utterance));
  }
  const auto probes = testing::SyntheticQuestions(20, 99, "q");
  for (const auto& probe : probes) {
    const Strings query = RetrievalTokens(probe.utterance);
    auto scores = Bm25Scores(docs, query);
    std::vector<std::pair<double, int>> ranked;
    for (std::size_t i = 0; i < docs.size(); ++i) {
      const double ref = ReferenceBm25(docs, docs[i], query);
      CHECK(scores[i] == doctest::Approx(ref).epsilon(1e-12));
      ranked.emplace_back(-ref, static_cast<int>(i));
    }
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](auto& a, auto& b) { return a.first < b.first; });
    auto chosen = SelectInContextExamples(pool, probe.utterance, 10);
    REQUIRE(chosen.size() == 10);
    for (int i = 0; i < 10; ++i) {
      // Equal reference scores may legitimately swap only if tied.
      CHECK(ReferenceBm25(docs, RetrievalTokens(chosen[i].utterance), query) ==
            doctest::Approx(-ranked[i].first).epsilon(1e-12));
    }
  }
}

TEST_CASE("prompt layout") {
  CHECK(BuildPrompt({}, "who knows java") ==
        "Please translate the following questions to lisp like programs.\n"
        "Question: who knows java\nProgram:");
  std::vector<InContextExample> two = {{"u1", "(JOIN knows java)"},
                                       {"u2", "(COUNT (JOIN knows basic))"}};
  CHECK(BuildPrompt(two, "q") ==
        "Please translate the following questions to lisp like programs.\n"
        "Question: u1\nProgram: (JOIN knows java)\n"
        "Question: u2\nProgram: (COUNT (JOIN knows basic))\n"
        "Question: q\nProgram:");
}

TEST_CASE("every program in a prompt parses back") {
  const auto questions = testing::SyntheticQuestions(40, 3, "pool");
  std::vector<InContextExample> pool;
  for (const auto& q : questions) {
    pool.push_back({q.utterance, q.gold_plan->canonical()});
  }
  const std::string prompt = BuildPrompt(
      SelectInContextExamples(pool, "who speaks french", 10), "who speaks french");
  std::istringstream lines(prompt);
  int programs = 0;
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind("Program: ", 0) == 0) {
      CHECK_NOTHROW(ParsePlan(line.substr(9)));
      ++programs;
    }
  }
  CHECK(programs == 10);
}

}  // namespace
}  // namespace kbqa
