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
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kbqa/error.h"
#include "kbqa/evaluation.h"
#include "synthetic.h"

namespace kbqa {
namespace {

using testing::MiniKb;

std::vector<DatasetExample> Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseDataset(in, "test.jsonl");
}

TEST_CASE("dataset loading") {
  const auto examples = Parse(
      R"j({"qid": "a", "utterance": "who knows java", "entities": ["java"], "gold_plan": "(JOIN knows java)"})j"
      "\n"
      R"j({"qid": "b", "utterance": "older than 40", "literals": [{"kind": "integer", "lexical": "40"}], "gold_plan": "(GT age \"40\"^^integer)"})j"
      "\n\n"
      R"j({"qid": "c", "utterance": "no gold here", "entities": ["alice"]})j"
      "\n");
  REQUIRE(examples.size() == 3);
  CHECK(examples[0].qid == "a");
  CHECK(examples[1].qid == "b");
  CHECK(examples[2].qid == "c");
  CHECK(examples[1].literal_proposals.at(0) == Literal::Integer(40));
  CHECK_FALSE(examples[2].gold_plan.has_value());
  CHECK(examples[0].InitialPlans().size() == 1);
}

TEST_CASE("dataset errors name the line") {
  const std::string row =
      R"j({"qid": "a", "utterance": "u", "entities": [], "gold_plan": "(JOIN knows java)"})j";
  try {
    Parse(row + "\n" + row + "\n");
    FAIL("duplicate qid accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("a") != std::string::npos);
  }
  CHECK_THROWS_AS(Parse("{not json}\n"), ParseError);
  CHECK_THROWS_AS(Parse(R"j({"qid": "a", "utterance": "u", "gold_plan": "(JOIN"})j"),
                  ParseError);
  CHECK_THROWS_AS(Parse(R"j({"utterance": "u"})j"), ParseError);
}

TEST_CASE("dataset round trip") {
  const auto original = LoadDataset(testing::DataPath("mini_questions.jsonl"));
  const auto path =
      std::filesystem::temp_directory_path() / "kbqa_dataset_roundtrip.jsonl";
  WriteDataset(path, original);
  const auto again = LoadDataset(path);
  REQUIRE(again.size() == original.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].ToJson() == original[i].ToJson());
  }
  std::filesystem::remove(path);
}

TEST_CASE("exact match") {
  CHECK(ExactMatch(ParsePlan("(AND Emulator (JOIN emulates java))"),
                   ParsePlan("(AND (JOIN emulates java) Emulator)")));
  CHECK_FALSE(ExactMatch(ParsePlan("(JOIN emulates java)"),
                         ParsePlan("(JOIN knows java)")));
  const Plan p = ParsePlan("(COUNT (JOIN knows java))");
  CHECK(ExactMatch(p, p));
}

TEST_CASE("denotation F1 spot values") {
  const Denotation alice = EntitySet{"alice"};
  const Denotation both = EntitySet{"alice", "bob"};
  CHECK(DenotationF1(alice, both) == 2.0 / 3.0);
  CHECK(DenotationF1(EntitySet{}, EntitySet{}) == 1.0);
  CHECK(DenotationF1(EntitySet{}, alice) == 0.0);
  CHECK(DenotationF1(Count{2}, Count{2}) == 1.0);
  CHECK(DenotationF1(Count{2}, Count{3}) == 0.0);
  CHECK(DenotationF1(Count{2}, alice) == 0.0);
  CHECK(DenotationF1(EntitySet{"bob"}, alice) == 0.0);
  CHECK(DenotationF1(LiteralSet{Literal::Integer(3)},
                     LiteralSet{Literal::Integer(3)}) == 1.0);
  CHECK(DenotationF1(LiteralSet{Literal::Integer(3)}, EntitySet{}) == 0.0);
}

// Hand-rolled set F1 over random small sets, as an oracle.
double SetF1(const std::set<std::string>& p, const std::set<std::string>& g) {
  if (p.empty() && g.empty()) return 1;
  if (p.empty() || g.empty()) return 0;
  int both = 0;
  for (const auto& x : p) both += g.count(x);
  if (both == 0) return 0;
  const double precision = double(both) / p.size(), recall = double(both) / g.size();
  return 2 * precision * recall / (precision + recall);
}

TEST_CASE("F1 is symmetric and matches the set definition") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> coin(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    EntitySet a, b;
    for (int i = 0; i < 6; ++i) {
      if (coin(rng) == 0) a.insert("e" + std::to_string(i));
      if (coin(rng) == 0) b.insert("e" + std::to_string(i));
    }
    const double f = DenotationF1(a, b);
    CHECK(f == DenotationF1(b, a));
    CHECK(f == doctest::Approx(SetF1(a, b)).epsilon(1e-15));
    CHECK(f >= 0);
    CHECK(f <= 1);
  }
}

TEST_CASE("relation count") {
  CHECK(RelationCount(ParsePlan("(COUNT (AND Emulator (JOIN emulates java)))")) == 1);
  CHECK(RelationCount(ParsePlan("(JOIN knows~ (JOIN emulates~ emu2))")) == 2);
  CHECK(RelationCount(ParsePlan("(GT age \"40\"^^integer)")) == 1);
  CHECK(RelationCount(ParsePlan("java")) == 0);
}

const KnowledgeBase& SpeakersKb() {
  static const KnowledgeBase kb = [] {
    std::istringstream schema(
        "class Person\nclass Lang\nrelation speaks Person Lang\n"
        "type en Lang\ntype fr Lang\n"
        "type p1 Person\ntype p2 Person\ntype p3 Person\n"
        "type p4 Person\ntype p5 Person\n");
    std::istringstream triples(
        "p1\tspeaks\ten\np2\tspeaks\ten\np3\tspeaks\ten\n"
        "p4\tspeaks\ten\np5\tspeaks\ten\np1\tspeaks\tfr\n");
    return KnowledgeBase::FromStreams(triples, schema);
  }();
  return kb;
}

DatasetExample Example(std::string qid, std::string gold) {
  DatasetExample e;
  e.qid = std::move(qid);
  e.utterance = "u";
  e.gold_plan = ParsePlan(gold);
  return e;
}

TEST_CASE("evaluate aggregates") {
  const std::vector<DatasetExample> data = {
      Example("x", "(JOIN speaks fr)"), Example("y", "(JOIN speaks en)")};
  SUBCASE("one exact and one partial") {
    // {p1} against {p1..p5}: F1 = 2 / 6.
    const EvalReport report = Evaluate(
        SpeakersKb(), data,
        {{"x", ParsePlan("(JOIN speaks fr)")}, {"y", ParsePlan("(JOIN speaks fr)")}});
    CHECK(report.rows[1].f1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(report.mean_f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(report.mean_em == 0.5);
    CHECK(report.count == 2);
    CHECK(report.predicted == 2);
  }
  SUBCASE("all exact") {
    const EvalReport report = Evaluate(
        SpeakersKb(), data,
        {{"x", *data[0].gold_plan}, {"y", *data[1].gold_plan}});
    CHECK(report.mean_em == 1.0);
    CHECK(report.mean_f1 == 1.0);
  }
  SUBCASE("no predictions") {
    const EvalReport report = Evaluate(SpeakersKb(), data, {});
    CHECK(report.mean_em == 0.0);
    CHECK(report.mean_f1 == 0.0);
    CHECK(report.predicted == 0);
    CHECK_FALSE(report.rows[0].predicted.has_value());
  }
  SUBCASE("unknown qid") {
    CHECK_THROWS_AS(
        Evaluate(SpeakersKb(), data, {{"zzz", ParsePlan("(JOIN speaks fr)")}}),
        UnknownQid);
  }
  SUBCASE("a prediction that fails to execute") {
    const EvalReport report =
        Evaluate(SpeakersKb(), data, {{"x", ParsePlan("(JOIN speaks nobody)")}});
    CHECK(report.rows[0].f1 == 0.0);
    CHECK(report.rows[0].error.has_value());
  }
}

TEST_CASE("exact match implies full F1 and reports are order invariant") {
  const KnowledgeBase& kb = testing::SyntheticWorld();
  auto data = testing::SyntheticQuestions(30, 21, "e");
  std::map<std::string, Plan> predictions;
  for (std::size_t i = 0; i < data.size(); ++i) {
    // Every third prediction is someone else's gold.
    predictions.emplace(data[i].qid,
                        *data[i % 3 == 0 ? (i + 1) % data.size() : i].gold_plan);
  }
  const EvalReport report = Evaluate(kb, data, predictions);
  for (const EvalRow& row : report.rows) {
    if (row.exact_match) CHECK(row.f1 == 1.0);
  }
  // Aggregates are a recomputation of the rows.
  double em = 0, f1 = 0;
  for (const EvalRow& row : report.rows) {
    em += row.exact_match;
    f1 += row.f1;
  }
  CHECK(report.mean_em == doctest::Approx(em / report.rows.size()));
  CHECK(report.mean_f1 == doctest::Approx(f1 / report.rows.size()));
  int grouped = 0;
  for (const auto& [length, group] : report.by_length) grouped += group.count;
  CHECK(grouped == report.count);

  std::mt19937_64 rng(4);
  std::shuffle(data.begin(), data.end(), rng);
  const EvalReport shuffled = Evaluate(kb, data, predictions);
  CHECK(shuffled.mean_em == doctest::Approx(report.mean_em).epsilon(1e-15));
  CHECK(shuffled.mean_f1 == doctest::Approx(report.mean_f1).epsilon(1e-15));
  CHECK(shuffled.by_length.size() == report.by_length.size());
  for (const auto& [length, group] : report.by_length) {
    CHECK(shuffled.by_length.at(length).count == group.count);
    CHECK(shuffled.by_length.at(length).mean_f1 ==
          doctest::Approx(group.mean_f1).epsilon(1e-15));
  }
}

TEST_CASE("report serialization") {
  const auto data = LoadDataset(testing::DataPath("mini_questions.jsonl"));
  std::map<std::string, Plan> predictions;
  predictions.emplace("mini-2", ParsePlan("(JOIN knows java)"));
  const EvalReport report = Evaluate(MiniKb(), data, predictions);
  const auto json = nlohmann::json::parse(report.ToJson());
  CHECK(json["per_example"].size() == 5);
  CHECK(json["aggregates"]["count"] == 5);
  CHECK(json["aggregates"]["mean_em"] == doctest::Approx(0.2));
  CHECK(json["aggregates"].contains("by_gold_length"));
  CHECK(json["aggregates"].contains("by_relation_count"));
  const std::string text = report.ToText();
  CHECK(text.find("EM        0.2000") != std::string::npos);
  CHECK(text.find("by gold plan length") != std::string::npos);
}

}  // namespace
}  // namespace kbqa
