#include "owl_decode.h"
#include "provalign/vocab.h"

namespace provalign::owl {

bool in_namespaces(rdf::Term t, const std::vector<std::string>& namespaces) {
  if (!t.is_iri()) return false;
  for (const auto& ns : namespaces)
    if (!ns.empty() && t.value().compare(0, ns.size(), ns) == 0) return true;
  return false;
}

Signature compute_signature(const std::vector<Axiom>& axioms, const std::vector<SwrlRule>& rules,
                            const Declarations& decl) {
  Signature sig;
  TermSet classes = decl.classes, props = decl.object_properties, individuals = decl.individuals;
  for (const auto& a : axioms) {
    if (a.kind == AxiomKind::PropertyAssertion && a.terms.size() == 2 && a.terms[1].is_literal()) {
      individuals.insert(a.terms[0]);
      continue;  // literal-valued: a data or annotation property
    }
    a.collect(classes, props, individuals);
  }
  for (const auto& r : rules) r.collect(classes, props, individuals);

  auto keep = [](rdf::Term t) {
    return t.is_iri() && !detail::is_vocabulary(t) &&
           t.value().compare(0, vocab::kSkos.size(), vocab::kSkos) != 0;
  };
  for (rdf::Term t : classes)
    if (keep(t)) sig.classes.insert(t);
  for (rdf::Term t : props)
    if (keep(t) && !decl.data_properties.count(t) && !decl.annotation_properties.count(t))
      sig.object_properties.insert(t);
  for (rdf::Term t : individuals)
    if (keep(t)) sig.individuals.insert(t);
  return sig;
}

OntologyModel::OntologyModel(std::vector<Axiom> axioms, std::vector<SwrlRule> rules,
                             std::vector<rdf::Triple> unmodeled, Declarations declarations,
                             std::string label)
    : axioms_(std::move(axioms)),
      rules_(std::move(rules)),
      unmodeled_(std::move(unmodeled)),
      declarations_(std::move(declarations)),
      label_(std::move(label)) {
  signature_ = compute_signature(axioms_, rules_, declarations_);
}

Signature OntologyModel::signature(const std::vector<std::string>& namespaces) const {
  Signature out;
  for (rdf::Term t : signature_.classes)
    if (in_namespaces(t, namespaces)) out.classes.insert(t);
  for (rdf::Term t : signature_.object_properties)
    if (in_namespaces(t, namespaces)) out.object_properties.insert(t);
  for (rdf::Term t : signature_.individuals)
    if (in_namespaces(t, namespaces)) out.individuals.insert(t);
  return out;
}

}  // namespace provalign::owl
