#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "provalign/error.h"
#include "provalign/graph.h"

namespace provalign::turtle {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based, in bytes
  std::string message;
  Severity severity = Severity::Error;
};

class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::vector<ParseDiagnostic> diagnostics);
  const std::vector<ParseDiagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<ParseDiagnostic> diagnostics_;
};

// Parses a Turtle document. Stops at the first error and throws ParseError;
// non-fatal findings (e.g. a raw line break inside a short string) are
// appended to `warnings` when given.
rdf::Graph parse_turtle(std::string_view input, std::optional<std::string> base = std::nullopt,
                        std::vector<ParseDiagnostic>* warnings = nullptr);

// Reads and parses a file; the base defaults to the file's file:// IRI.
// Throws Error(FileNotFound) when the file cannot be read.
rdf::Graph parse_turtle_file(const std::filesystem::path& path,
                             std::vector<ParseDiagnostic>* warnings = nullptr);

// Deterministic Turtle: prefixes sorted by label, then triples grouped by
// subject and sorted by (subject, predicate, object) renderings. Blank nodes
// are relabelled _:b0, _:b1, ... in a stable order.
std::string serialize_turtle(const rdf::Graph& graph);

}  // namespace provalign::turtle
