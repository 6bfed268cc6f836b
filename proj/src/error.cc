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

#include "kbqa/error.h"

namespace kbqa {

std::string_view ErrorKind(const Error& error) {
  // Most derived first.
#define KBQA_KIND(name) \
  if (dynamic_cast<const name*>(&error)) return #name;
  KBQA_KIND(UnknownEntity)
  KBQA_KIND(UnknownRelation)
  KBQA_KIND(ParseError)
  KBQA_KIND(SchemaViolation)
  KBQA_KIND(DuplicateDeclaration)
  KBQA_KIND(InvalidLiteral)
  KBQA_KIND(UnknownIdentifier)
  KBQA_KIND(SyntaxError)
  KBQA_KIND(ArityError)
  KBQA_KIND(UnknownFunction)
  KBQA_KIND(TypeError)
  KBQA_KIND(DegenerateGold)
  KBQA_KIND(InvalidBeamPlan)
  KBQA_KIND(DimensionMismatch)
  KBQA_KIND(TransportError)
  KBQA_KIND(ProtocolError)
  KBQA_KIND(NonFiniteScore)
  KBQA_KIND(EmptyPool)
  KBQA_KIND(EmptyInitialPlans)
  KBQA_KIND(ScorerFailure)
  KBQA_KIND(GoldNotReproducible)
  KBQA_KIND(NonFiniteLoss)
  KBQA_KIND(UnknownQid)
#undef KBQA_KIND
  return "Error";
}

}  // namespace kbqa
