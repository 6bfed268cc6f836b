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

#ifndef KBQA_LITERAL_H_
#define KBQA_LITERAL_H_

#include <chrono>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace kbqa {

enum class LiteralKind { kInteger, kFloat, kString, kDate };

std::string_view KindName(LiteralKind kind);
std::optional<LiteralKind> KindFromName(std::string_view name);

// Integer and float compare with each other; dates only with dates.
bool IsNumeric(LiteralKind kind);
bool IsOrderable(LiteralKind kind);
bool AreComparable(LiteralKind a, LiteralKind b);

// A typed constant. The lexical form is always canonical, so two literals
// are equal exactly when their kinds and values are.
class Literal {
 public:
  // Throws InvalidLiteral when `lexical` is not a valid `kind` value.
  static Literal Parse(LiteralKind kind, std::string_view lexical);

  static Literal Integer(std::int64_t value);
  // Throws InvalidLiteral for NaN or infinity.
  static Literal Float(double value);
  static Literal String(std::string value);
  static Literal Date(std::chrono::sys_days value);

  LiteralKind kind() const { return kind_; }
  const std::string& lexical() const { return lexical_; }

  std::int64_t integer_value() const { return std::get<std::int64_t>(value_); }
  double float_value() const { return std::get<double>(value_); }
  std::chrono::sys_days date_value() const {
    return std::get<std::chrono::sys_days>(value_);
  }
  // Numeric kinds only.
  long double numeric_value() const;

  // Surface form `"lexical"^^kind`, with `"` and `\` escaped.
  std::string ToString() const;

  friend bool operator==(const Literal& a, const Literal& b);
  // Set order: kind first, then value. Not the comparative order; see
  // CompareValues for that.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);

 private:
  Literal(LiteralKind kind,
          std::variant<std::int64_t, double, std::string, std::chrono::sys_days>
              value,
          std::string lexical)
      : kind_(kind), value_(std::move(value)), lexical_(std::move(lexical)) {}

  LiteralKind kind_;
  std::variant<std::int64_t, double, std::string, std::chrono::sys_days> value_;
  std::string lexical_;
};

// Value order used by comparatives and superlatives. Unordered when the kinds
// are not comparable (strings, or dates against numbers).
std::partial_ordering CompareValues(const Literal& a, const Literal& b);

// Parses the `"lexical"^^kind` surface form starting at text[0]. On success
// returns the literal and sets `consumed` to the number of bytes read.
// Throws InvalidLiteral with a message describing the problem.
Literal ParseLiteralToken(std::string_view text, std::size_t* consumed);

}  // namespace kbqa

#endif  // KBQA_LITERAL_H_
