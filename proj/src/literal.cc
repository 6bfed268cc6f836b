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

#include "kbqa/literal.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "kbqa/error.h"

namespace kbqa {
namespace {

constexpr std::array<std::string_view, 4> kKindNames = {"integer", "float",
                                                        "string", "date"};

std::string FormatDate(std::chrono::sys_days days) {
  std::chrono::year_month_day ymd(days);
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02u",
                static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()));
  return buffer;
}

bool ParseDigits(std::string_view text, int* out) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  auto result = std::from_chars(text.data(), text.data() + text.size(), *out);
  return result.ec == std::errc() && result.ptr == text.data() + text.size();
}

}  // namespace

std::string_view KindName(LiteralKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

std::optional<LiteralKind> KindFromName(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<LiteralKind>(i);
  }
  return std::nullopt;
}

bool IsNumeric(LiteralKind kind) {
  return kind == LiteralKind::kInteger || kind == LiteralKind::kFloat;
}

bool IsOrderable(LiteralKind kind) { return kind != LiteralKind::kString; }

bool AreComparable(LiteralKind a, LiteralKind b) {
  if (IsNumeric(a) && IsNumeric(b)) return true;
  return a == LiteralKind::kDate && b == LiteralKind::kDate;
}

Literal Literal::Parse(LiteralKind kind, std::string_view lexical) {
  switch (kind) {
    case LiteralKind::kInteger: {
      std::int64_t value = 0;
      const char* begin = lexical.data();
      const char* end = begin + lexical.size();
      auto result = std::from_chars(begin, end, value);
      if (lexical.empty() || result.ec != std::errc() || result.ptr != end) {
        throw InvalidLiteral("invalid integer literal '" +
                             std::string(lexical) + "'");
      }
      return Integer(value);
    }
    case LiteralKind::kFloat: {
      double value = 0;
      const char* begin = lexical.data();
      const char* end = begin + lexical.size();
      auto result = std::from_chars(begin, end, value);
      if (lexical.empty() || result.ec != std::errc() || result.ptr != end ||
          !std::isfinite(value)) {
        throw InvalidLiteral("invalid float literal '" + std::string(lexical) +
                             "'");
      }
      return Float(value);
    }
    case LiteralKind::kString:
      return String(std::string(lexical));
    case LiteralKind::kDate: {
      // YYYY-MM-DD
      int year = 0, month = 0, day = 0;
      bool ok = lexical.size() == 10 && lexical[4] == '-' &&
                lexical[7] == '-' && ParseDigits(lexical.substr(0, 4), &year) &&
                ParseDigits(lexical.substr(5, 2), &month) &&
                ParseDigits(lexical.substr(8, 2), &day);
      std::chrono::year_month_day ymd{std::chrono::year(year),
                                      std::chrono::month(month),
                                      std::chrono::day(day)};
      if (!ok || !ymd.ok()) {
        throw InvalidLiteral("invalid date literal '" + std::string(lexical) +
                             "' (expected YYYY-MM-DD)");
      }
      return Date(std::chrono::sys_days(ymd));
    }
  }
  throw InvalidLiteral("unknown literal kind");
}

Literal Literal::Integer(std::int64_t value) {
  return Literal(LiteralKind::kInteger, value, std::to_string(value));
}

Literal Literal::Float(double value) {
  if (!std::isfinite(value)) throw InvalidLiteral("non-finite float literal");
  if (value == 0.0) value = 0.0;  // fold -0
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return Literal(LiteralKind::kFloat, value, std::string(buffer, result.ptr));
}

Literal Literal::String(std::string value) {
  std::string lexical = value;
  return Literal(LiteralKind::kString, std::move(value), std::move(lexical));
}

Literal Literal::Date(std::chrono::sys_days value) {
  return Literal(LiteralKind::kDate, value, FormatDate(value));
}

long double Literal::numeric_value() const {
  if (kind_ == LiteralKind::kInteger) {
    return static_cast<long double>(integer_value());
  }
  return static_cast<long double>(float_value());
}

std::string Literal::ToString() const {
  std::string out = "\"";
  for (char c : lexical_) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out += "\"^^";
  out += KindName(kind_);
  return out;
}

bool operator==(const Literal& a, const Literal& b) {
  return a.kind_ == b.kind_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  switch (a.kind_) {
    case LiteralKind::kInteger:
      return a.integer_value() <=> b.integer_value();
    case LiteralKind::kFloat: {
      // Finite and -0 folded, so the partial order is total here.
      double x = a.float_value(), y = b.float_value();
      if (x < y) return std::strong_ordering::less;
      if (x > y) return std::strong_ordering::greater;
      return std::strong_ordering::equal;
    }
    case LiteralKind::kString:
      return a.lexical_ <=> b.lexical_;
    case LiteralKind::kDate:
      return a.date_value() <=> b.date_value();
  }
  return std::strong_ordering::equal;
}

std::partial_ordering CompareValues(const Literal& a, const Literal& b) {
  if (!AreComparable(a.kind(), b.kind())) {
    return std::partial_ordering::unordered;
  }
  if (a.kind() == LiteralKind::kDate) return a.date_value() <=> b.date_value();
  if (a.kind() == LiteralKind::kInteger && b.kind() == LiteralKind::kInteger) {
    return a.integer_value() <=> b.integer_value();
  }
  return a.numeric_value() <=> b.numeric_value();
}

Literal ParseLiteralToken(std::string_view text, std::size_t* consumed) {
  if (text.empty() || text[0] != '"') {
    throw InvalidLiteral("literal must start with '\"'");
  }
  std::string lexical;
  std::size_t i = 1;
  bool closed = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\\') {
      if (i + 1 >= text.size()) break;
      lexical.push_back(text[++i]);
    } else if (c == '"') {
      closed = true;
      ++i;
      break;
    } else {
      lexical.push_back(c);
    }
  }
  if (!closed) throw InvalidLiteral("unterminated literal");
  if (text.substr(i, 2) != "^^") {
    throw InvalidLiteral("literal missing '^^kind' suffix");
  }
  i += 2;
  std::size_t start = i;
  while (i < text.size() && text[i] >= 'a' && text[i] <= 'z') ++i;
  std::string_view kind_name = text.substr(start, i - start);
  auto kind = KindFromName(kind_name);
  if (!kind) {
    throw InvalidLiteral("unknown literal kind '" + std::string(kind_name) +
                         "'");
  }
  *consumed = i;
  return Literal::Parse(*kind, lexical);
}

}  // namespace kbqa
