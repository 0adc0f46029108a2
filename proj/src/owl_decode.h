#pragma once

#include <optional>
#include <vector>

#include "provalign/owl.h"

namespace provalign::owl::detail {

bool is_vocabulary(rdf::Term t);
bool is_datatype(rdf::Term t);

// Decodes OWL/SWRL structure out of a graph, recording which triples it
// consumed. Marks are staged and only committed on success so a failed
// decode leaves nothing half-claimed.
class Decoder {
 public:
  explicit Decoder(const rdf::Graph& g, std::vector<char>* used = nullptr) : g_(g), used_(used) {}

  ClassExpression class_expression(rdf::Term node);
  PropertyExpression property_expression(rdf::Term node);
  std::vector<rdf::Term> list(rdf::Term head);
  SwrlRule rule(rdf::Term imp);

  // Stage every triple with this subject and predicate.
  void claim(rdf::Term subject, std::string_view predicate);
  void claim_index(std::size_t i) { staged_.push_back(i); }
  void commit();
  void rollback() { staged_.clear(); }

  const rdf::Graph& graph() const { return g_; }

 private:
  SwrlAtom atom(rdf::Term node, TermSet& variables);
  rdf::Term single(rdf::Term s, std::string_view p, const char* what);

  const rdf::Graph& g_;
  std::vector<char>* used_;
  std::vector<std::size_t> staged_;
  std::vector<rdf::Term> stack_;
};

}  // namespace provalign::owl::detail
