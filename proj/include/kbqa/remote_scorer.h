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

#ifndef KBQA_REMOTE_SCORER_H_
#define KBQA_REMOTE_SCORER_H_

#include <atomic>
#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "kbqa/retrieval.h"
#include "kbqa/scorer.h"

namespace kbqa {

// Body of POST /score:
//   {"utterance": str, "candidates": [str], "examples": [{"utterance": str,
//    "plan": str}]?}
// Response: {"scores": [number]} with status 200.
struct ScoreRequest {
  std::string utterance;
  std::vector<std::string> candidates;
  std::optional<std::vector<InContextExample>> in_context_examples;

  // Throws ProtocolError for an empty or duplicated candidate list.
  void Validate() const;
  std::string ToJson() const;
  // Throws ProtocolError.
  static ScoreRequest FromJson(std::string_view body);
};

// Throws ProtocolError (malformed, wrong count) or NonFiniteScore.
std::vector<double> ParseScoreResponse(std::string_view body,
                                       std::size_t expected_count);
std::string ScoreResponseJson(const std::vector<double>& scores);

struct RemoteOptions {
  std::chrono::milliseconds timeout{30000};
  int max_retries = 2;
  // Doubles after each failed attempt.
  std::chrono::milliseconds initial_backoff{100};

  // Applies KBQA_SCORER_TIMEOUT (seconds) when set.
  static RemoteOptions FromEnvironment(RemoteOptions base);
  static RemoteOptions FromEnvironment();
};

// KBQA_SCORER_URL when set, otherwise `url`.
std::string ResolveScorerUrl(std::string url);

// POSTs to <endpoint>/score. Transport failures and 5xx replies are retried
// with exponential backoff; afterwards throws TransportError. Other statuses
// and bad bodies throw ProtocolError; non-finite scores NonFiniteScore.
std::vector<double> RemoteScore(const std::string& endpoint,
                                const ScoreRequest& request,
                                const RemoteOptions& options = {});

class RemoteScorer : public Scorer {
 public:
  RemoteScorer(std::string endpoint, RemoteOptions options = {},
               std::vector<InContextExample> examples = {});
  std::vector<double> Score(std::string_view utterance,
                            std::span<const Plan> candidates) const override;

 private:
  std::string endpoint_;
  RemoteOptions options_;
  std::vector<InContextExample> examples_;
};

// Serves LexicalScore over the /score protocol. With fail_every = n > 0,
// every n-th request has its connection dropped mid-response.
class MockScoringServer {
 public:
  struct Options {
    std::string host = "127.0.0.1";
    int port = 0;  // 0 picks a free port
    int fail_every = 0;
  };

  explicit MockScoringServer(Options options);
  ~MockScoringServer();
  MockScoringServer(const MockScoringServer&) = delete;
  MockScoringServer& operator=(const MockScoringServer&) = delete;

  // Binds and serves on a background thread. Throws TransportError when the
  // port cannot be bound.
  void Start();
  // Binds and serves on the calling thread until Stop().
  void Run();
  void Stop();

  int port() const { return port_; }
  std::string url() const;
  int requests() const { return requests_.load(); }
  int dropped() const { return dropped_.load(); }

  // Pure request handling: request JSON in, response JSON out.
  static std::string Handle(std::string_view body);

 private:
  struct Impl;
  void Bind();

  Options options_;
  int port_ = 0;
  std::unique_ptr<Impl> impl_;
  std::thread thread_;
  std::atomic<int> requests_{0};
  std::atomic<int> dropped_{0};
};

}  // namespace kbqa

#endif  // KBQA_REMOTE_SCORER_H_
