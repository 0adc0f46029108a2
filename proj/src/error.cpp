#include "provalign/error.h"

namespace provalign {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTerm: return "invalid-term";
    case ErrorCode::UnknownPrefix: return "unknown-prefix";
    case ErrorCode::MissingBase: return "missing-base";
    case ErrorCode::Syntax: return "syntax";
    case ErrorCode::UnterminatedLiteral: return "unterminated-literal";
    case ErrorCode::UnsupportedFeature: return "unsupported-feature";
    case ErrorCode::MalformedExpression: return "malformed-expression";
    case ErrorCode::UnsupportedExpression: return "unsupported-expression";
    case ErrorCode::CyclicExpression: return "cyclic-expression";
    case ErrorCode::UnsafeRule: return "unsafe-rule";
    case ErrorCode::UnsupportedAtom: return "unsupported-atom";
    case ErrorCode::NamespaceOverlap: return "namespace-overlap";
    case ErrorCode::UnsupportedPredicate: return "unsupported-predicate";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::UnknownFact: return "unknown-fact";
    case ErrorCode::UnknownProperty: return "unknown-property";
    case ErrorCode::FileNotFound: return "file-not-found";
    case ErrorCode::Usage: return "usage";
  }
  return "unknown";
}

}  // namespace provalign
