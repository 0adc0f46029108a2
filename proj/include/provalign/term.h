#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace provalign::rdf {

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

// An interned RDF term. Terms are handles into a process-wide pool, so
// equality and hashing are integer operations. Blank nodes carry the scope
// of the graph that minted them and never compare equal across scopes.
class Term {
 public:
  Term() = default;

  // Throws Error(InvalidTerm) unless `iri` starts with a scheme and ':'.
  static Term iri(std::string_view iri);
  static Term blank(std::string_view label, std::uint32_t scope);
  // A literal with neither datatype nor language gets xsd:string; a
  // language-tagged literal gets rdf:langString. Supplying both throws.
  static Term literal(std::string_view lexical, std::string_view datatype = {},
                      std::string_view language = {});

  // Allocates a scope id no graph has used yet.
  static std::uint32_t new_scope();

  bool valid() const noexcept { return id_ != 0; }
  std::uint32_t id() const noexcept { return id_; }

  TermKind kind() const;
  bool is_iri() const { return valid() && kind() == TermKind::Iri; }
  bool is_blank() const { return valid() && kind() == TermKind::Blank; }
  bool is_literal() const { return valid() && kind() == TermKind::Literal; }

  // IRI text, blank-node label, or literal lexical form.
  const std::string& value() const;
  const std::string& datatype() const;
  const std::string& language() const;
  std::uint32_t scope() const;

  // N-Triples style rendering: <iri>, _:label, "lex"^^<dt> / "lex"@lang.
  std::string str() const;

  friend bool operator==(Term a, Term b) noexcept { return a.id_ == b.id_; }
  friend bool operator!=(Term a, Term b) noexcept { return a.id_ != b.id_; }
  // Pool order: stable within a process, not lexical. Use lexical_less for
  // anything user-visible.
  friend bool operator<(Term a, Term b) noexcept { return a.id_ < b.id_; }

 private:
  explicit Term(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = 0;
};

// Orders by rendered form; used wherever output must be deterministic.
bool lexical_less(Term a, Term b);

bool is_absolute_iri(std::string_view text);

// Escapes a lexical form for use between double quotes in Turtle/N-Triples.
std::string escape_string(std::string_view text);

}  // namespace provalign::rdf

template <>
struct std::hash<provalign::rdf::Term> {
  std::size_t operator()(provalign::rdf::Term t) const noexcept {
    return std::hash<std::uint32_t>{}(t.id());
  }
};
