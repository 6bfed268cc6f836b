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

#ifndef KBQA_ERROR_H_
#define KBQA_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kbqa {

// Base of every error raised for bad input, bad data or a failed remote.
// Anything else escaping the library is an internal bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class SchemaViolation : public Error {
 public:
  using Error::Error;
};

class DuplicateDeclaration : public Error {
 public:
  using Error::Error;
};

class InvalidLiteral : public Error {
 public:
  using Error::Error;
};

class UnknownIdentifier : public Error {
 public:
  using Error::Error;
};

class UnknownEntity : public UnknownIdentifier {
 public:
  using UnknownIdentifier::UnknownIdentifier;
};

class UnknownRelation : public UnknownIdentifier {
 public:
  using UnknownIdentifier::UnknownIdentifier;
};

// Plan text error at a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class UnknownFunction : public Error {
 public:
  using Error::Error;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

class DegenerateGold : public Error {
 public:
  using Error::Error;
};

class InvalidBeamPlan : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class TransportError : public Error {
 public:
  using Error::Error;
};

class ProtocolError : public Error {
 public:
  using Error::Error;
};

class NonFiniteScore : public Error {
 public:
  using Error::Error;
};

class EmptyPool : public Error {
 public:
  using Error::Error;
};

class EmptyInitialPlans : public Error {
 public:
  using Error::Error;
};

class ScorerFailure : public Error {
 public:
  using Error::Error;
};

class GoldNotReproducible : public Error {
 public:
  using Error::Error;
};

class NonFiniteLoss : public Error {
 public:
  using Error::Error;
};

class UnknownQid : public Error {
 public:
  using Error::Error;
};

// Name of the most derived error class, e.g. "SyntaxError".
std::string_view ErrorKind(const Error& error);

}  // namespace kbqa

#endif  // KBQA_ERROR_H_
