#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "provalign/term.h"

namespace provalign::rdf {

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple& a, const Triple& b) = default;
  friend bool operator<(const Triple& a, const Triple& b) {
    if (a.subject != b.subject) return a.subject < b.subject;
    if (a.predicate != b.predicate) return a.predicate < b.predicate;
    return a.object < b.object;
  }
};

struct TripleHash {
  std::size_t operator()(const Triple& t) const noexcept {
    std::size_t h = t.subject.id();
    h = h * 0x9E3779B97F4A7C15ull + t.predicate.id();
    h = h * 0x9E3779B97F4A7C15ull + t.object.id();
    return h;
  }
};

// Prefix label -> namespace IRI. Ordered so serialization is stable.
using PrefixMap = std::map<std::string, std::string, std::less<>>;

// Resolves a prefixed name ("ex:a"), an IRI reference ("<...>") or a bare
// relative reference against `prefixes` and `base`.
// Throws Error(UnknownPrefix) or Error(MissingBase).
Term iri_resolve(const PrefixMap& prefixes, std::string_view name,
                 const std::optional<std::string>& base);

// RFC 3986 reference resolution. `base` must be absolute.
std::string resolve_reference(std::string_view base, std::string_view reference);

// Shortest "prefix:local" form of `iri`, or empty when no prefix applies or
// the local part is not a plain name.
std::string compact_iri(const PrefixMap& prefixes, std::string_view iri);

// A set of triples with a prefix map. Blank nodes minted through blank() and
// fresh_blank() belong to this graph's scope. Triples may also mention blank
// nodes of other scopes (e.g. after merge()); they stay distinct.
class Graph {
 public:
  Graph();

  std::uint32_t scope() const noexcept { return scope_; }
  Term blank(std::string_view label) const;
  // A blank node whose label cannot collide with a Turtle label.
  Term fresh_blank();

  // Returns false if the triple was already present. Throws
  // Error(InvalidTerm) for a literal subject or non-IRI predicate.
  bool insert(const Triple& t);
  bool insert(Term s, Term p, Term o) { return insert(Triple{s, p, o}); }
  void merge(const Graph& other);

  bool contains(const Triple& t) const { return set_.count(t) != 0; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  // Insertion order.
  const std::vector<Triple>& triples() const noexcept { return triples_; }

  std::vector<Term> objects(Term subject, Term predicate) const;
  std::optional<Term> object(Term subject, Term predicate) const;
  std::vector<Term> subjects(Term predicate, Term object) const;
  // Indices into triples() with this subject.
  const std::vector<std::size_t>& about(Term subject) const;
  // Number of triples whose object is `t`.
  std::size_t in_degree(Term t) const;

  PrefixMap& prefixes() noexcept { return prefixes_; }
  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  const std::optional<std::string>& base() const noexcept { return base_; }
  void set_base(std::optional<std::string> base) { base_ = std::move(base); }

 private:
  std::uint32_t scope_;
  std::size_t next_blank_ = 0;
  std::vector<Triple> triples_;
  std::unordered_set<Triple, TripleHash> set_;
  std::unordered_map<Term, std::vector<std::size_t>> by_subject_;
  std::unordered_map<Term, std::size_t> in_degree_;
  PrefixMap prefixes_;
  std::optional<std::string> base_;
};

// True iff some bijection of blank nodes maps the triples of `a` onto those
// of `b`. Throws Error(ResourceLimit) when colour refinement leaves ties and
// the blank-node count exceeds `blank_bound`.
bool graph_isomorphic(const Graph& a, const Graph& b, std::size_t blank_bound = 64);

}  // namespace provalign::rdf
