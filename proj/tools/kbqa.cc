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

// kbqa: command-line driver.
//
//   kbqa exec --triples T --schema S --plan "(COUNT (JOIN emulates java))"
//   kbqa search --triples T --schema S --dataset D --scorer lexical --out P
//   kbqa train ... ; kbqa eval ... ; kbqa prompt ... ; kbqa mock-scorer ...
//
// Exit status: 0 on success, 1 for bad input or usage, 2 for internal errors.

#include <atomic>
#include <csignal>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kbqa/dataset.h"
#include "kbqa/enumerator.h"
#include "kbqa/error.h"
#include "kbqa/evaluation.h"
#include "kbqa/executor.h"
#include "kbqa/knowledge_base.h"
#include "kbqa/manifest.h"
#include "kbqa/plan.h"
#include "kbqa/remote_scorer.h"
#include "kbqa/retrieval.h"
#include "kbqa/scorer.h"
#include "kbqa/search.h"
#include "kbqa/training.h"

namespace kbqa {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

CLI::Range AtLeastOne() {
  return CLI::Range(1, std::numeric_limits<int>::max(), "at least 1");
}

struct KbArgs {
  std::string triples;
  std::string schema;

  void Register(CLI::App* app) {
    app->add_option("--triples", triples, "Triples file (TSV)")
        ->required()
        ->check(CLI::ExistingFile);
    app->add_option("--schema", schema, "Schema file")
        ->required()
        ->check(CLI::ExistingFile);
  }
  KnowledgeBase Load(RunManifest& manifest) const {
    manifest.AddInput(triples);
    manifest.AddInput(schema);
    KnowledgeBase kb = KnowledgeBase::Load(triples, schema);
    manifest.Mark("load_kb");
    return kb;
  }
};

struct ConstraintArgs {
  std::vector<std::string> denied_relations;
  std::vector<std::string> denied_functions;
  int max_candidates = 0;
  bool allow_count_of_leaf = false;

  void Register(CLI::App* app) {
    app->add_option("--deny-relation", denied_relations,
                    "Never use this relation (repeatable)");
    app->add_option("--deny-function", denied_functions,
                    "Never use this function, e.g. COUNT (repeatable)");
    app->add_option("--max-candidates", max_candidates,
                    "Keep at most this many candidates per step")
        ->check(AtLeastOne());
    app->add_flag("--allow-count-of-leaf", allow_count_of_leaf,
                  "Also propose (COUNT e) for bare entities");
  }
  Constraints Build() const {
    Constraints c;
    c.denied_relations.insert(denied_relations.begin(),
                              denied_relations.end());
    for (const auto& name : denied_functions) {
      auto f = FunctionFromName(name);
      if (!f) throw UnknownFunction("unknown function '" + name + "'");
      c.denied_functions.insert(*f);
    }
    if (max_candidates > 0) c.max_candidates = max_candidates;
    c.allow_count_of_leaf = allow_count_of_leaf;
    return c;
  }
  json ToJson() const {
    return {{"deny_relation", denied_relations},
            {"deny_function", denied_functions},
            {"max_candidates", max_candidates},
            {"allow_count_of_leaf", allow_count_of_leaf}};
  }
};

// Where the run manifest goes: --manifest, else next to the primary
// output, else the working directory.
std::string ManifestPath(const std::string& flag, const std::string& output,
                         const std::string& command) {
  if (!flag.empty()) return flag;
  if (!output.empty()) return output + ".manifest.json";
  return "kbqa-" + command + ".manifest.json";
}

// Writes to the file when a path is given, otherwise to stdout.
class Output {
 public:
  explicit Output(const std::string& path) : path_(path) {
    if (!path_.empty()) {
      file_.open(path_);
      if (!file_) throw Error("cannot write " + path_);
    }
  }
  std::ostream& stream() { return path_.empty() ? std::cout : file_; }
  void Close(RunManifest& manifest) {
    if (path_.empty()) return;
    file_.close();
    manifest.AddOutput(path_);
  }

 private:
  std::string path_;
  std::ofstream file_;
};

// Scorer choice: lexical | linear:<model.json> | remote[:<url>].
using ScorerFactory =
    std::function<std::unique_ptr<Scorer>(const DatasetExample&)>;

ScorerFactory MakeScorerFactory(const std::string& choice,
                                const std::string& pool_path, int k,
                                RunManifest& manifest) {
  if (choice == "lexical") {
    return [](const DatasetExample&) {
      return std::make_unique<LexicalScorer>();
    };
  }
  if (choice.rfind("linear:", 0) == 0) {
    const std::string path = choice.substr(7);
    manifest.AddInput(path);
    auto model = std::make_shared<RankingModel>(RankingModel::Load(path));
    return [model](const DatasetExample&) {
      return std::make_unique<LinearScorer>(*model);
    };
  }
  if (choice == "remote" || choice.rfind("remote:", 0) == 0) {
    const std::string url =
        ResolveScorerUrl(choice == "remote" ? "" : choice.substr(7));
    if (url.empty()) {
      throw Error("remote scorer needs a URL (remote:<url> or KBQA_SCORER_URL)");
    }
    const RemoteOptions options = RemoteOptions::FromEnvironment();
    auto pool = std::make_shared<std::vector<InContextExample>>();
    if (!pool_path.empty()) {
      manifest.AddInput(pool_path);
      for (const auto& example : LoadDataset(pool_path)) {
        if (example.gold_plan) {
          pool->push_back({example.utterance, example.gold_plan->canonical()});
        }
      }
      if (pool->empty()) throw EmptyPool("no gold plans in " + pool_path);
    }
    return [url, options, pool, k](const DatasetExample& example) {
      std::vector<InContextExample> examples;
      if (!pool->empty()) {
        examples = SelectInContextExamples(*pool, example.utterance, k);
      }
      return std::make_unique<RemoteScorer>(url, options, std::move(examples));
    };
  }
  throw Error("unknown scorer '" + choice +
              "' (expected lexical, linear:<path> or remote:<url>)");
}

std::string SafeFileName(const std::string& qid) {
  std::string out;
  for (char c : qid) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
            c == '_' || c == '.')
               ? c
               : '_';
  }
  return out;
}

Prediction SearchOne(const KnowledgeBase& kb, const DatasetExample& example,
                     const ScorerFactory& factory, const SearchConfig& config,
                     const std::string& trace_dir) {
  Prediction prediction;
  prediction.qid = example.qid;
  try {
    const auto scorer = factory(example);
    const std::vector<Plan> initial = example.InitialPlans();
    const SearchTrace trace =
        Search(kb, example.utterance, initial, *scorer, config);
    prediction.steps = trace.termination_step;
    if (trace.best) {
      prediction.plan = trace.best->plan;
      prediction.score = trace.best->score;
    } else {
      prediction.error = "no candidate plans";
    }
    if (!trace_dir.empty()) {
      std::ofstream out(fs::path(trace_dir) / (SafeFileName(example.qid) + ".json"));
      out << trace.ToJson();
    }
  } catch (const Error& e) {
    prediction.error = std::string(ErrorKind(e)) + ": " + e.what();
  }
  return prediction;
}

// Runs fn(i) for i in [0, n) on `jobs` threads.
void ParallelFor(int n, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (int w = 0; w < std::min(jobs, n); ++w) {
    workers.emplace_back([&] {
      for (int i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& worker : workers) worker.join();
  if (failure) std::rethrow_exception(failure);
}

void AddExec(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("exec", "Execute a plan and print its denotation");
  auto kb_args = std::make_shared<KbArgs>();
  auto plan = std::make_shared<std::string>();
  auto manifest_path = std::make_shared<std::string>();
  kb_args->Register(cmd);
  cmd->add_option("--plan", *plan, "Plan S-expression")->required();
  cmd->add_option("--manifest", *manifest_path, "Run manifest path");
  cmd->callback([=, &run] {
    run = [=] {
      RunManifest manifest("exec");
      manifest.SetConfig({{"plan", *plan}});
      const KnowledgeBase kb = kb_args->Load(manifest);
      const Denotation denotation = Execute(kb, ParsePlan(*plan));
      std::cout << DenotationToString(denotation) << "\n";
      manifest.Mark("execute");
      manifest.Write(ManifestPath(*manifest_path, "", "exec"));
      return 0;
    };
  });
}

void AddEnumerate(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand(
      "enumerate", "List the candidate plans one step beyond a beam");
  auto kb_args = std::make_shared<KbArgs>();
  auto constraint_args = std::make_shared<ConstraintArgs>();
  auto beam = std::make_shared<std::vector<std::string>>();
  auto manifest_path = std::make_shared<std::string>();
  kb_args->Register(cmd);
  constraint_args->Register(cmd);
  cmd->add_option("--beam-plan", *beam, "Beam member (repeatable)")
      ->required();
  cmd->add_option("--manifest", *manifest_path, "Run manifest path");
  cmd->callback([=, &run] {
    run = [=] {
      RunManifest manifest("enumerate");
      manifest.SetConfig(
          {{"beam", *beam}, {"constraints", constraint_args->ToJson()}});
      const KnowledgeBase kb = kb_args->Load(manifest);
      std::vector<Plan> plans;
      for (const auto& text : *beam) plans.push_back(ParsePlan(text));
      for (const Plan& candidate :
           CandidatePlans(kb, plans, constraint_args->Build())) {
        std::cout << candidate.canonical() << "\n";
      }
      manifest.Mark("enumerate");
      manifest.Write(ManifestPath(*manifest_path, "", "enumerate"));
      return 0;
    };
  });
}

void AddSearch(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("search", "Beam search every dataset question");
  struct Args {
    KbArgs kb;
    ConstraintArgs constraints;
    std::string dataset;
    std::string scorer = "lexical";
    std::string pool;
    int k = kDefaultInContextExamples;
    int beam = 5;
    int max_steps = 10;
    int jobs = 1;
    std::string trace_dir;
    std::string out;
    std::string manifest;
  };
  auto a = std::make_shared<Args>();
  a->kb.Register(cmd);
  a->constraints.Register(cmd);
  cmd->add_option("--dataset", a->dataset, "Questions (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--scorer", a->scorer,
                  "lexical | linear:<model.json> | remote:<url>")
      ->capture_default_str();
  cmd->add_option("--examples-pool", a->pool,
                  "Dataset whose golds serve as in-context examples (remote)");
  cmd->add_option("--k", a->k, "In-context examples per question")
      ->check(AtLeastOne())
      ->capture_default_str();
  cmd->add_option("--beam", a->beam, "Beam size")
      ->check(AtLeastOne())
      ->capture_default_str();
  cmd->add_option("--max-steps", a->max_steps, "Step limit")
      ->check(AtLeastOne())
      ->capture_default_str();
  cmd->add_option("--jobs", a->jobs, "Worker threads")
      ->check(AtLeastOne())
      ->capture_default_str();
  cmd->add_option("--trace", a->trace_dir, "Directory for per-question traces");
  cmd->add_option("--out", a->out, "Predictions JSONL (default stdout)");
  cmd->add_option("--manifest", a->manifest, "Run manifest path");
  cmd->callback([a, &run] {
    run = [a] {
      RunManifest manifest("search");
      manifest.SetConfig({{"scorer", a->scorer},
                          {"beam", a->beam},
                          {"max_steps", a->max_steps},
                          {"jobs", a->jobs},
                          {"k", a->k},
                          {"constraints", a->constraints.ToJson()}});
      const KnowledgeBase kb = a->kb.Load(manifest);
      manifest.AddInput(a->dataset);
      const std::vector<DatasetExample> dataset = LoadDataset(a->dataset);
      SearchConfig config;
      config.beam_size = a->beam;
      config.max_steps = a->max_steps;
      config.constraints = a->constraints.Build();
      const ScorerFactory factory =
          MakeScorerFactory(a->scorer, a->pool, a->k, manifest);
      if (!a->trace_dir.empty()) fs::create_directories(a->trace_dir);
      manifest.Mark("setup");

      std::vector<Prediction> predictions(dataset.size());
      ParallelFor(static_cast<int>(dataset.size()), a->jobs, [&](int i) {
        predictions[i] =
            SearchOne(kb, dataset[i], factory, config, a->trace_dir);
      });
      manifest.Mark("search");

      Output out(a->out);
      int failures = 0;
      for (const Prediction& p : predictions) {
        out.stream() << p.ToJson() << "\n";
        if (p.error) ++failures;
      }
      out.Close(manifest);
      if (failures > 0) {
        std::cerr << failures << " of " << predictions.size()
                  << " questions produced no plan\n";
      }
      manifest.Write(ManifestPath(a->manifest, a->out, "search"));
      return 0;
    };
  });
}

void AddTrain(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("train", "Fit the linear ranking scorer");
  struct Args {
    KbArgs kb;
    ConstraintArgs constraints;
    std::string dataset;
    TrainConfig config;
    std::string out;
    std::string loss_log;
    std::string skipped_report;
    std::string manifest;
  };
  auto a = std::make_shared<Args>();
  a->kb.Register(cmd);
  a->constraints.Register(cmd);
  cmd->add_option("--dataset", a->dataset, "Training questions with golds")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--lr", a->config.learning_rate, "Learning rate")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--epochs", a->config.epochs, "Passes over the data")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--l2", a->config.l2_penalty, "L2 penalty")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--seed", a->config.rng_seed, "Shuffling seed")
      ->capture_default_str();
  cmd->add_option("--beam", a->config.beam_size, "Teacher-forced beam size")
      ->check(AtLeastOne())
      ->capture_default_str();
  cmd->add_option("--batch-size", a->config.batch_size,
                  "Examples per update, 0 for full batch")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--out", a->out, "Model JSON")->required();
  cmd->add_option("--loss-log", a->loss_log,
                  "Per-epoch loss CSV (default <out>.loss.csv)");
  cmd->add_option("--skipped-report", a->skipped_report,
                  "Skipped examples (default <out>.skipped.tsv)");
  cmd->add_option("--manifest", a->manifest, "Run manifest path");
  cmd->callback([a, &run] {
    run = [a] {
      RunManifest manifest("train");
      TrainConfig config = a->config;
      config.constraints = a->constraints.Build();
      manifest.SetConfig({{"lr", config.learning_rate},
                          {"epochs", config.epochs},
                          {"l2", config.l2_penalty},
                          {"beam", config.beam_size},
                          {"batch_size", config.batch_size},
                          {"constraints", a->constraints.ToJson()}});
      manifest.SetSeed(config.rng_seed);
      const KnowledgeBase kb = a->kb.Load(manifest);
      manifest.AddInput(a->dataset);
      const std::vector<DatasetExample> dataset = LoadDataset(a->dataset);
      for (const auto& example : dataset) {
        if (!example.gold_plan) {
          throw Error("training example " + example.qid + " has no gold plan");
        }
      }
      if (dataset.empty()) throw EmptyPool("training set is empty");
      manifest.Mark("setup");

      const std::string skipped_path =
          a->skipped_report.empty() ? a->out + ".skipped.tsv"
                                    : a->skipped_report;
      TrainResult result;
      try {
        result = Train(kb, dataset, config);
      } catch (const EmptyPool&) {
        result.skipped.clear();
      }
      // Train() only throws EmptyPool when everything was skipped; rerun the
      // reachability pass for the report in that case.
      if (result.epoch_losses.empty() && config.epochs > 0) {
        for (const auto& example : dataset) {
          try {
            TeacherForcedPools(kb, example, RankingModel(), config);
          } catch (const Error& e) {
            result.skipped.push_back({example.qid, e.what()});
          }
        }
      }
      {
        std::ofstream report(skipped_path);
        for (const auto& s : result.skipped) {
          report << s.qid << "\t" << s.reason << "\n";
        }
      }
      manifest.AddOutput(skipped_path);
      if (!result.skipped.empty()) {
        std::cerr << result.skipped.size() << " of " << dataset.size()
                  << " examples skipped, see " << skipped_path << "\n";
      }
      if (2 * result.skipped.size() > dataset.size()) {
        manifest.Write(ManifestPath(a->manifest, a->out, "train"));
        throw GoldNotReproducible("more than half of the examples were skipped");
      }
      manifest.Mark("train");

      result.model.Save(a->out);
      manifest.AddOutput(a->out);
      const std::string log_path =
          a->loss_log.empty() ? a->out + ".loss.csv" : a->loss_log;
      {
        std::ofstream log(log_path);
        log << "epoch,mean_loss\n";
        char line[64];
        for (std::size_t e = 0; e < result.epoch_losses.size(); ++e) {
          std::snprintf(line, sizeof line, "%zu,%.17g\n", e + 1,
                        result.epoch_losses[e]);
          log << line;
        }
      }
      manifest.AddOutput(log_path);
      manifest.Write(ManifestPath(a->manifest, a->out, "train"));
      return 0;
    };
  });
}

void AddEval(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand("eval", "Score predictions against golds");
  struct Args {
    KbArgs kb;
    std::string dataset;
    std::string predictions;
    std::string json_out;
    std::string text_out;
    std::string manifest;
  };
  auto a = std::make_shared<Args>();
  a->kb.Register(cmd);
  cmd->add_option("--dataset", a->dataset, "Questions with golds")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--predictions", a->predictions, "Predictions JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--report-json", a->json_out, "JSON report path");
  cmd->add_option("--report-text", a->text_out, "Text report path");
  cmd->add_option("--manifest", a->manifest, "Run manifest path");
  cmd->callback([a, &run] {
    run = [a] {
      RunManifest manifest("eval");
      const KnowledgeBase kb = a->kb.Load(manifest);
      manifest.AddInput(a->dataset);
      manifest.AddInput(a->predictions);
      const std::vector<DatasetExample> dataset = LoadDataset(a->dataset);
      std::map<std::string, Plan> predicted;
      for (const Prediction& p : LoadPredictions(a->predictions)) {
        if (p.plan) predicted.emplace(p.qid, *p.plan);
      }
      const EvalReport report = Evaluate(kb, dataset, predicted);
      manifest.Mark("evaluate");
      std::cout << report.ToText();
      if (!a->json_out.empty()) {
        Output out(a->json_out);
        out.stream() << report.ToJson();
        out.Close(manifest);
      }
      if (!a->text_out.empty()) {
        Output out(a->text_out);
        out.stream() << report.ToText();
        out.Close(manifest);
      }
      const std::string primary =
          !a->json_out.empty() ? a->json_out : a->text_out;
      manifest.Write(ManifestPath(a->manifest, primary, "eval"));
      return 0;
    };
  });
}

void AddPrompt(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand(
      "prompt", "Print a few-shot prompt built from BM25-retrieved examples");
  struct Args {
    std::string pool;
    std::string query;
    int k = kDefaultInContextExamples;
    std::string manifest;
  };
  auto a = std::make_shared<Args>();
  cmd->add_option("--pool", a->pool, "Dataset whose golds form the pool")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--query", a->query, "Question to prompt for")->required();
  cmd->add_option("--k", a->k, "Examples to retrieve")
      ->check(AtLeastOne())
      ->capture_default_str();
  cmd->add_option("--manifest", a->manifest, "Run manifest path");
  cmd->callback([a, &run] {
    run = [a] {
      RunManifest manifest("prompt");
      manifest.SetConfig({{"query", a->query}, {"k", a->k}});
      manifest.AddInput(a->pool);
      std::vector<InContextExample> pool;
      for (const auto& example : LoadDataset(a->pool)) {
        if (example.gold_plan) {
          pool.push_back({example.utterance, example.gold_plan->canonical()});
        }
      }
      const auto examples = SelectInContextExamples(pool, a->query, a->k);
      std::cout << BuildPrompt(examples, a->query) << "\n";
      manifest.Write(ManifestPath(a->manifest, "", "prompt"));
      return 0;
    };
  });
}

volatile std::sig_atomic_t g_stop = 0;

void AddMockScorer(CLI::App& app, std::function<int()>& run) {
  auto* cmd = app.add_subcommand(
      "mock-scorer", "Serve the lexical scorer over the /score protocol");
  auto options = std::make_shared<MockScoringServer::Options>();
  auto manifest_path = std::make_shared<std::string>();
  cmd->add_option("--host", options->host, "Bind address")
      ->capture_default_str();
  cmd->add_option("--port", options->port, "Port, 0 for any free port")
      ->capture_default_str();
  cmd->add_option("--fail-every", options->fail_every,
                  "Drop every n-th connection (0 never)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--manifest", *manifest_path, "Run manifest path");
  cmd->callback([=, &run] {
    run = [=] {
      RunManifest manifest("mock-scorer");
      manifest.SetConfig({{"host", options->host},
                          {"port", options->port},
                          {"fail_every", options->fail_every}});
      MockScoringServer server(*options);
      server.Start();
      std::signal(SIGINT, [](int) { g_stop = 1; });
      std::signal(SIGTERM, [](int) { g_stop = 1; });
      std::cout << "listening on " << server.url() << std::endl;
      manifest.Write(ManifestPath(*manifest_path, "", "mock-scorer"));
      while (!g_stop) {
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
      }
      server.Stop();
      return 0;
    };
  });
}

int Main(int argc, char** argv) {
  CLI::App app{"Grounded question answering over a typed knowledge base"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  std::function<int()> run;
  AddExec(app, run);
  AddEnumerate(app, run);
  AddSearch(app, run);
  AddTrain(app, run);
  AddEval(app, run);
  AddPrompt(app, run);
  AddMockScorer(app, run);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << ErrorKind(e) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace
}  // namespace kbqa

int main(int argc, char** argv) { return kbqa::Main(argc, argv); }
