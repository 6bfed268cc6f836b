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

#include "kbqa/manifest.h"

#include <openssl/evp.h>

#include <fstream>
#include <iterator>
#include <memory>

#include "kbqa/error.h"

namespace kbqa {

std::string Sha256(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(
      EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), digest, &size) != 1) {
    throw Error("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  for (unsigned int i = 0; i < size; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 15];
  }
  return hex;
}

std::string Sha256File(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  return Sha256(bytes);
}

RunManifest::RunManifest(std::string command)
    : command_(std::move(command)), start_(Clock::now()), last_(start_) {}

void RunManifest::AddInput(const std::filesystem::path& path) {
  inputs_[path.string()] = Sha256File(path);
}

void RunManifest::AddOutput(const std::filesystem::path& path) {
  outputs_[path.string()] = Sha256File(path);
}

void RunManifest::Mark(const std::string& phase) {
  const auto now = Clock::now();
  timings_[phase] = std::chrono::duration<double>(now - last_).count();
  last_ = now;
}

nlohmann::json RunManifest::ToJson() const {
  nlohmann::json out;
  out["command"] = command_;
  out["tool_version"] = kToolVersion;
  out["config"] = config_;
  out["rng_seed"] = seed_ ? nlohmann::json(*seed_) : nlohmann::json();
  out["inputs"] = inputs_;
  out["outputs"] = outputs_;
  nlohmann::json timings = timings_;
  timings["total"] =
      std::chrono::duration<double>(Clock::now() - start_).count();
  out["timings_seconds"] = timings;
  return out;
}

void RunManifest::Write(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error("cannot write manifest " + path.string());
  out << ToJson().dump(2) << "\n";
}

}  // namespace kbqa
