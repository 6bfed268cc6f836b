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

#include "kbqa/remote_scorer.h"

#include <cmath>
#include <cstdlib>
#include <set>

#include "httplib.h"
#include "json.hpp"
#include "kbqa/error.h"

namespace kbqa {
namespace {

using nlohmann::json;

struct Endpoint {
  std::string origin;  // scheme://host[:port]
  std::string path;    // request path ending in /score
};

Endpoint ParseEndpoint(const std::string& url) {
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.substr(0, scheme_end) != "http") {
    throw TransportError("scorer endpoint must be an http:// URL, got '" +
                         url + "'");
  }
  auto path_start = url.find('/', scheme_end + 3);
  Endpoint endpoint;
  endpoint.origin = url.substr(0, path_start);
  std::string prefix =
      path_start == std::string::npos ? "" : url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  endpoint.path = prefix + "/score";
  return endpoint;
}

}  // namespace

void ScoreRequest::Validate() const {
  if (candidates.empty()) throw ProtocolError("score request has no candidates");
  std::set<std::string_view> seen;
  for (const auto& candidate : candidates) {
    if (!seen.insert(candidate).second) {
      throw ProtocolError("duplicate candidate '" + candidate + "'");
    }
  }
}

std::string ScoreRequest::ToJson() const {
  json body;
  body["utterance"] = utterance;
  body["candidates"] = candidates;
  if (in_context_examples) {
    body["examples"] = json::array();
    for (const auto& example : *in_context_examples) {
      body["examples"].push_back(
          {{"utterance", example.utterance}, {"plan", example.plan}});
    }
  }
  return body.dump();
}

ScoreRequest ScoreRequest::FromJson(std::string_view body) {
  json in = json::parse(body, nullptr, false);
  if (in.is_discarded() || !in.is_object()) {
    throw ProtocolError("score request is not a JSON object");
  }
  ScoreRequest request;
  if (!in.contains("utterance") || !in["utterance"].is_string() ||
      !in.contains("candidates") || !in["candidates"].is_array()) {
    throw ProtocolError("score request needs 'utterance' and 'candidates'");
  }
  request.utterance = in["utterance"].get<std::string>();
  for (const auto& candidate : in["candidates"]) {
    if (!candidate.is_string()) {
      throw ProtocolError("candidates must be strings");
    }
    request.candidates.push_back(candidate.get<std::string>());
  }
  if (in.contains("examples")) {
    if (!in["examples"].is_array()) {
      throw ProtocolError("'examples' must be an array");
    }
    request.in_context_examples.emplace();
    for (const auto& example : in["examples"]) {
      if (!example.is_object() || !example.contains("utterance") ||
          !example.contains("plan") || !example["utterance"].is_string() ||
          !example["plan"].is_string()) {
        throw ProtocolError("examples need string 'utterance' and 'plan'");
      }
      request.in_context_examples->push_back(
          {example["utterance"].get<std::string>(),
           example["plan"].get<std::string>()});
    }
  }
  return request;
}

std::vector<double> ParseScoreResponse(std::string_view body,
                                       std::size_t expected_count) {
  json in = json::parse(body, nullptr, false);
  if (in.is_discarded() || !in.is_object() || !in.contains("scores") ||
      !in["scores"].is_array()) {
    throw ProtocolError("score response must be {\"scores\": [number]}");
  }
  const auto& raw = in["scores"];
  if (raw.size() != expected_count) {
    throw ProtocolError("score response has " + std::to_string(raw.size()) +
                        " scores for " + std::to_string(expected_count) +
                        " candidates");
  }
  std::vector<double> scores;
  scores.reserve(raw.size());
  for (const auto& value : raw) {
    // nlohmann maps NaN/inf to null on output; accept neither.
    if (!value.is_number()) {
      if (value.is_null()) throw NonFiniteScore("score is null/non-finite");
      throw ProtocolError("score is not a number");
    }
    double score = value.get<double>();
    if (!std::isfinite(score)) throw NonFiniteScore("non-finite score");
    scores.push_back(score);
  }
  return scores;
}

std::string ScoreResponseJson(const std::vector<double>& scores) {
  json out;
  out["scores"] = scores;
  return out.dump();
}

RemoteOptions RemoteOptions::FromEnvironment() {
  return FromEnvironment(RemoteOptions());
}

RemoteOptions RemoteOptions::FromEnvironment(RemoteOptions base) {
  if (const char* timeout = std::getenv("KBQA_SCORER_TIMEOUT")) {
    char* end = nullptr;
    double seconds = std::strtod(timeout, &end);
    if (end != timeout && seconds > 0 && std::isfinite(seconds)) {
      base.timeout = std::chrono::milliseconds(
          static_cast<long long>(seconds * 1000.0));
    }
  }
  return base;
}

std::string ResolveScorerUrl(std::string url) {
  if (const char* env = std::getenv("KBQA_SCORER_URL"); env && *env) {
    return env;
  }
  return url;
}

std::vector<double> RemoteScore(const std::string& endpoint_url,
                                const ScoreRequest& request,
                                const RemoteOptions& options) {
  request.Validate();
  const Endpoint endpoint = ParseEndpoint(endpoint_url);
  const std::string body = request.ToJson();

  httplib::Client client(endpoint.origin);
  client.set_connection_timeout(options.timeout);
  client.set_read_timeout(options.timeout);
  client.set_write_timeout(options.timeout);

  std::string last_failure;
  auto backoff = options.initial_backoff;
  for (int attempt = 0; attempt <= options.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(backoff);
      backoff *= 2;
    }
    auto result = client.Post(endpoint.path, body, "application/json");
    if (!result) {
      last_failure = httplib::to_string(result.error());
      continue;
    }
    if (result->status >= 500) {
      last_failure = "HTTP " + std::to_string(result->status);
      continue;
    }
    if (result->status != 200) {
      throw ProtocolError("scorer replied HTTP " +
                          std::to_string(result->status) + ": " +
                          result->body);
    }
    return ParseScoreResponse(result->body, request.candidates.size());
  }
  throw TransportError("scorer at " + endpoint_url + " failed after " +
                       std::to_string(options.max_retries + 1) +
                       " attempts: " + last_failure);
}

RemoteScorer::RemoteScorer(std::string endpoint, RemoteOptions options,
                           std::vector<InContextExample> examples)
    : endpoint_(std::move(endpoint)),
      options_(options),
      examples_(std::move(examples)) {}

std::vector<double> RemoteScorer::Score(
    std::string_view utterance, std::span<const Plan> candidates) const {
  ScoreRequest request;
  request.utterance = std::string(utterance);
  request.candidates.reserve(candidates.size());
  for (const auto& candidate : candidates) {
    request.candidates.push_back(candidate.canonical());
  }
  if (!examples_.empty()) request.in_context_examples = examples_;
  return RemoteScore(endpoint_, request, options_);
}

struct MockScoringServer::Impl {
  httplib::Server server;
};

MockScoringServer::MockScoringServer(Options options)
    : options_(std::move(options)), impl_(std::make_unique<Impl>()) {
  impl_->server.Post("/score", [this](const httplib::Request& req,
                                      httplib::Response& res) {
    int n = ++requests_;
    if (options_.fail_every > 0 && n % options_.fail_every == 0) {
      ++dropped_;
      // Headers go out, then the body provider aborts the connection.
      res.set_content_provider(
          16, "application/json",
          [](std::size_t, std::size_t, httplib::DataSink&) { return false; });
      return;
    }
    try {
      res.set_content(Handle(req.body), "application/json");
    } catch (const Error& e) {
      res.status = 400;
      res.set_content(json{{"error", e.what()}}.dump(), "application/json");
    }
  });
}

MockScoringServer::~MockScoringServer() { Stop(); }

std::string MockScoringServer::Handle(std::string_view body) {
  ScoreRequest request = ScoreRequest::FromJson(body);
  request.Validate();
  std::vector<double> scores;
  scores.reserve(request.candidates.size());
  for (const auto& candidate : request.candidates) {
    scores.push_back(LexicalScore(request.utterance, ParsePlan(candidate)));
  }
  return ScoreResponseJson(scores);
}

void MockScoringServer::Bind() {
  if (options_.port == 0) {
    port_ = impl_->server.bind_to_any_port(options_.host);
  } else if (impl_->server.bind_to_port(options_.host, options_.port)) {
    port_ = options_.port;
  } else {
    port_ = -1;
  }
  if (port_ <= 0) {
    throw TransportError("cannot bind mock scorer on " + options_.host + ":" +
                         std::to_string(options_.port));
  }
}

void MockScoringServer::Start() {
  Bind();
  thread_ = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
}

void MockScoringServer::Run() {
  Bind();
  impl_->server.listen_after_bind();
}

void MockScoringServer::Stop() {
  impl_->server.stop();
  if (thread_.joinable()) thread_.join();
}

std::string MockScoringServer::url() const {
  return "http://" + options_.host + ":" + std::to_string(port_);
}

}  // namespace kbqa
