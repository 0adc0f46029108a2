#include "provalign/graph.h"

#include "provalign/error.h"

namespace provalign::rdf {

Graph::Graph() : scope_(Term::new_scope()) {}

Term Graph::blank(std::string_view label) const { return Term::blank(label, scope_); }

Term Graph::fresh_blank() {
  // '#' never appears in a Turtle blank-node label.
  return Term::blank("#g" + std::to_string(next_blank_++), scope_);
}

bool Graph::insert(const Triple& t) {
  if (!t.subject.valid() || !t.predicate.valid() || !t.object.valid())
    throw Error(ErrorCode::InvalidTerm, "triple with an invalid term");
  if (t.subject.is_literal())
    throw Error(ErrorCode::InvalidTerm, "literal in subject position: " + t.subject.str());
  if (!t.predicate.is_iri())
    throw Error(ErrorCode::InvalidTerm, "predicate must be an IRI: " + t.predicate.str());
  if (!set_.insert(t).second) return false;
  by_subject_[t.subject].push_back(triples_.size());
  ++in_degree_[t.object];
  triples_.push_back(t);
  return true;
}

void Graph::merge(const Graph& other) {
  for (const auto& t : other.triples_) insert(t);
  for (const auto& [label, ns] : other.prefixes_) prefixes_.emplace(label, ns);
}

std::vector<Term> Graph::objects(Term subject, Term predicate) const {
  std::vector<Term> out;
  for (std::size_t i : about(subject))
    if (triples_[i].predicate == predicate) out.push_back(triples_[i].object);
  return out;
}

std::optional<Term> Graph::object(Term subject, Term predicate) const {
  for (std::size_t i : about(subject))
    if (triples_[i].predicate == predicate) return triples_[i].object;
  return std::nullopt;
}

std::vector<Term> Graph::subjects(Term predicate, Term object) const {
  std::vector<Term> out;
  for (const auto& t : triples_)
    if (t.predicate == predicate && t.object == object) out.push_back(t.subject);
  return out;
}

const std::vector<std::size_t>& Graph::about(Term subject) const {
  static const std::vector<std::size_t> kEmpty;
  auto it = by_subject_.find(subject);
  return it == by_subject_.end() ? kEmpty : it->second;
}

std::size_t Graph::in_degree(Term t) const {
  auto it = in_degree_.find(t);
  return it == in_degree_.end() ? 0 : it->second;
}

}  // namespace provalign::rdf
