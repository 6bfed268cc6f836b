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

#include "kbqa/features.h"

#include <algorithm>
#include <cctype>

namespace kbqa {
namespace {

bool IsLower(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool IsUpper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool IsAlnum(char c) { return std::isalnum(static_cast<unsigned char>(c)); }

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Cue words standing in for what a language model knows about operators.
std::string_view CueWord(Function function) {
  switch (function) {
    case Function::kArgMax:
      return "largest";
    case Function::kArgMin:
      return "smallest";
    case Function::kGt:
      return "more";
    case Function::kGe:
      return "least";
    case Function::kLt:
      return "less";
    case Function::kLe:
      return "most";
    case Function::kCount:
      return "many";
    default:
      return "";
  }
}

void AddTokens(const std::vector<std::string>& tokens,
               std::set<std::string>* out) {
  for (const auto& token : tokens) {
    if (Stopwords().contains(token)) continue;
    out->insert(NormalizeToken(token));
  }
}

void CollectPlanTokens(const Plan& plan, std::set<std::string>* out) {
  switch (plan.kind()) {
    case PlanKind::kEntity:
    case PlanKind::kClass:
      AddTokens(TokenizeSchema(plan.symbol()), out);
      return;
    case PlanKind::kLiteral:
      AddTokens(TokenizeUtterance(plan.literal().lexical()), out);
      return;
    case PlanKind::kApply:
      break;
  }
  if (!plan.relation().empty()) AddTokens(TokenizeSchema(plan.relation()), out);
  if (auto cue = CueWord(plan.function()); !cue.empty()) {
    out->insert(std::string(cue));
  }
  for (const auto& arg : plan.args()) CollectPlanTokens(arg, out);
}

}  // namespace

const std::set<std::string>& Stopwords() {
  static const std::set<std::string> words = {
      "a",    "an",   "the",   "of",   "in",   "on",   "at",
      "to",   "for",  "by",    "with", "is",   "are",  "was",
      "were", "be",   "what",  "which", "who", "whom", "whose",
      "that", "this", "do",    "does"};
  return words;
}

std::vector<std::string> TokenizeSchema(std::string_view identifier) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(Lower(current));
    current.clear();
  };
  for (std::size_t i = 0; i < identifier.size(); ++i) {
    char c = identifier[i];
    if (c == '.' || c == '_' || c == '~') {
      flush();
      continue;
    }
    if (!current.empty() && IsUpper(c)) {
      char prev = identifier[i - 1];
      bool next_lower = i + 1 < identifier.size() && IsLower(identifier[i + 1]);
      // fooBar -> foo|Bar, HTTPServer -> HTTP|Server
      if (IsLower(prev) || IsDigit(prev) || (IsUpper(prev) && next_lower)) {
        flush();
      }
    }
    current.push_back(c);
  }
  flush();
  return tokens;
}

std::vector<std::string> TokenizeUtterance(std::string_view utterance) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : utterance) {
    if (IsAlnum(c)) {
      current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  std::erase_if(tokens,
                [](const std::string& t) { return Stopwords().contains(t); });
  return tokens;
}

std::string NormalizeToken(std::string_view token) {
  std::string out(token);
  if (out.size() > 3 && out.back() == 's' && out[out.size() - 2] != 's') {
    out.pop_back();
  }
  return out;
}

std::set<std::string> UtteranceTokens(std::string_view utterance) {
  std::set<std::string> out;
  for (const auto& token : TokenizeUtterance(utterance)) {
    out.insert(NormalizeToken(token));
  }
  return out;
}

std::set<std::string> PlanTokens(const Plan& plan) {
  std::set<std::string> out;
  CollectPlanTokens(plan, &out);
  return out;
}

FeatureVector Featurize(std::string_view utterance, const Plan& candidate) {
  return Featurize(UtteranceTokens(utterance), candidate);
}

FeatureVector Featurize(const std::set<std::string>& utterance_tokens,
                        const Plan& candidate) {
  const std::set<std::string> plan_tokens = PlanTokens(candidate);
  std::size_t shared = 0;
  for (const auto& token : plan_tokens) {
    if (utterance_tokens.contains(token)) ++shared;
  }
  const std::size_t united =
      plan_tokens.size() + utterance_tokens.size() - shared;

  FeatureVector features = FeatureVector::Zero();
  if (united > 0) features[kJaccard] = double(shared) / double(united);
  if (!plan_tokens.empty()) {
    features[kPlanRecall] = double(shared) / double(plan_tokens.size());
  }
  if (!utterance_tokens.empty()) {
    features[kUtterancePrecision] =
        double(shared) / double(utterance_tokens.size());
  }
  features[kLengthFeature] = candidate.length() / 10.0;
  if (!candidate.is_leaf()) {
    features[kRootFunction + static_cast<int>(candidate.function())] = 1.0;
  }
  return features;
}

}  // namespace kbqa
