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

#ifndef KBQA_MANIFEST_H_
#define KBQA_MANIFEST_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

namespace kbqa {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Hex SHA-256 of a file's bytes. Throws Error if it cannot be read.
std::string Sha256File(const std::filesystem::path& path);
std::string Sha256(std::string_view bytes);

// What a run was asked to do and what it read, so it can be repeated.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  void SetConfig(nlohmann::json config) { config_ = std::move(config); }
  void SetSeed(std::uint64_t seed) { seed_ = seed; }
  void AddInput(const std::filesystem::path& path);
  void AddOutput(const std::filesystem::path& path);
  // Records the seconds elapsed since the previous mark (or construction).
  void Mark(const std::string& phase);

  nlohmann::json ToJson() const;
  void Write(const std::filesystem::path& path) const;

 private:
  using Clock = std::chrono::steady_clock;

  std::string command_;
  nlohmann::json config_ = nlohmann::json::object();
  std::optional<std::uint64_t> seed_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::string> outputs_;
  std::map<std::string, double> timings_;
  Clock::time_point start_;
  Clock::time_point last_;
};

}  // namespace kbqa

#endif  // KBQA_MANIFEST_H_
