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

#ifndef KBQA_RETRIEVAL_H_
#define KBQA_RETRIEVAL_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kbqa {

struct InContextExample {
  std::string utterance;
  std::string plan;

  friend bool operator==(const InContextExample&,
                         const InContextExample&) = default;
};

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

inline constexpr int kDefaultInContextExamples = 10;
inline constexpr std::string_view kPromptInstruction =
    "Please translate the following questions to lisp like programs.";

// Tokens used for retrieval: utterance tokens with plural folding.
std::vector<std::string> RetrievalTokens(std::string_view text);

// Okapi BM25 of every document against the query, with
// idf = ln((N - n + 0.5) / (n + 0.5) + 1). Query tokens are summed with
// multiplicity.
std::vector<double> Bm25Scores(std::span<const std::vector<std::string>> docs,
                               std::span<const std::string> query,
                               const Bm25Params& params = {});

// Top-k pool items by BM25 over utterances; ties keep pool order. Throws
// EmptyPool, or Error for k < 1.
std::vector<InContextExample> SelectInContextExamples(
    std::span<const InContextExample> pool, std::string_view query,
    int k = kDefaultInContextExamples);

// Instruction line, one "Question:/Program:" block per example, then the
// open query block ending in "Program:".
std::string BuildPrompt(std::span<const InContextExample> examples,
                        std::string_view query);

}  // namespace kbqa

#endif  // KBQA_RETRIEVAL_H_
