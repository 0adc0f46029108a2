#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace provalign {

enum class ErrorCode {
  InvalidTerm,
  UnknownPrefix,
  MissingBase,
  Syntax,
  UnterminatedLiteral,
  UnsupportedFeature,
  MalformedExpression,
  UnsupportedExpression,
  CyclicExpression,
  UnsafeRule,
  UnsupportedAtom,
  NamespaceOverlap,
  UnsupportedPredicate,
  ResourceLimit,
  UnknownFact,
  UnknownProperty,
  FileNotFound,
  Usage,
};

std::string_view to_string(ErrorCode code);

// Base exception for every library failure. The code is stable and is what
// callers branch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace provalign
