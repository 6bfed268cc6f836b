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

#include "kbqa/retrieval.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "kbqa/error.h"
#include "kbqa/features.h"

namespace kbqa {

std::vector<std::string> RetrievalTokens(std::string_view text) {
  std::vector<std::string> tokens = TokenizeUtterance(text);
  for (auto& token : tokens) token = NormalizeToken(token);
  return tokens;
}

std::vector<double> Bm25Scores(std::span<const std::vector<std::string>> docs,
                               std::span<const std::string> query,
                               const Bm25Params& params) {
  const double n_docs = static_cast<double>(docs.size());
  std::map<std::string, int> doc_freq;
  std::vector<std::map<std::string, int>> term_freq(docs.size());
  double total_length = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    total_length += static_cast<double>(docs[i].size());
    for (const auto& token : docs[i]) ++term_freq[i][token];
    for (const auto& [token, count] : term_freq[i]) ++doc_freq[token];
  }
  const double avg_length = docs.empty() ? 0.0 : total_length / n_docs;

  std::vector<double> scores(docs.size(), 0.0);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    const double length_ratio =
        avg_length > 0 ? static_cast<double>(docs[i].size()) / avg_length : 1.0;
    for (const auto& token : query) {
      auto tf = term_freq[i].find(token);
      if (tf == term_freq[i].end()) continue;
      const double n = doc_freq[token];
      const double idf = std::log((n_docs - n + 0.5) / (n + 0.5) + 1.0);
      const double f = tf->second;
      scores[i] += idf * f * (params.k1 + 1.0) /
                   (f + params.k1 * (1.0 - params.b + params.b * length_ratio));
    }
  }
  return scores;
}

std::vector<InContextExample> SelectInContextExamples(
    std::span<const InContextExample> pool, std::string_view query, int k) {
  if (k < 1) throw Error("number of in-context examples must be at least 1");
  if (pool.empty()) throw EmptyPool("in-context example pool is empty");
  std::vector<std::vector<std::string>> docs;
  docs.reserve(pool.size());
  for (const auto& example : pool) {
    docs.push_back(RetrievalTokens(example.utterance));
  }
  const auto query_tokens = RetrievalTokens(query);
  const auto scores = Bm25Scores(docs, query_tokens);

  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return scores[a] > scores[b];
  });
  order.resize(std::min<std::size_t>(order.size(), static_cast<std::size_t>(k)));
  std::vector<InContextExample> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.push_back(pool[i]);
  return out;
}

std::string BuildPrompt(std::span<const InContextExample> examples,
                        std::string_view query) {
  std::string prompt(kPromptInstruction);
  prompt += '\n';
  for (const auto& example : examples) {
    prompt += "Question: " + example.utterance + "\n";
    prompt += "Program: " + example.plan + "\n";
  }
  prompt += "Question: ";
  prompt += query;
  prompt += "\nProgram:";
  return prompt;
}

}  // namespace kbqa
