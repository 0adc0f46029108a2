#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "provalign/graph.h"

namespace provalign::owl {

// Lexical term order; used for every user-visible collection.
struct TermOrder {
  bool operator()(rdf::Term a, rdf::Term b) const { return rdf::lexical_less(a, b); }
};
using TermSet = std::set<rdf::Term, TermOrder>;

// A named object property or the inverse of one. Double inversion
// normalizes away, so nesting never exceeds one level.
struct PropertyExpression {
  rdf::Term iri;
  bool inverse = false;

  PropertyExpression() = default;
  explicit PropertyExpression(rdf::Term p, bool inv = false) : iri(p), inverse(inv) {}
  PropertyExpression inverted() const { return PropertyExpression(iri, !inverse); }

  friend bool operator==(const PropertyExpression&, const PropertyExpression&) = default;
  friend bool operator<(const PropertyExpression& a, const PropertyExpression& b) {
    if (a.iri != b.iri) return rdf::lexical_less(a.iri, b.iri);
    return a.inverse < b.inverse;
  }
};

enum class ExprKind { Named, Intersection, Union, Complement, SomeValuesFrom, DisjointUnion };

// Class expression tree. Complement keeps its operand in operands[0];
// SomeValuesFrom keeps its filler in operands[0] and its property in
// `property`. N-ary kinds keep operands in source order.
struct ClassExpression {
  ExprKind kind = ExprKind::Named;
  rdf::Term iri;
  std::vector<ClassExpression> operands;
  PropertyExpression property;

  static ClassExpression named(rdf::Term iri);
  static ClassExpression intersection(std::vector<ClassExpression> ops);
  static ClassExpression union_of(std::vector<ClassExpression> ops);
  static ClassExpression disjoint_union(std::vector<ClassExpression> ops);
  static ClassExpression complement(ClassExpression op);
  static ClassExpression some(PropertyExpression p, ClassExpression filler);

  bool is_named() const { return kind == ExprKind::Named; }
  bool is_thing() const;
  bool is_nothing() const;
  const ClassExpression& operand() const { return operands.front(); }
  const ClassExpression& filler() const { return operands.front(); }

  // Named classes and properties mentioned anywhere in the tree.
  void collect(TermSet& classes, TermSet& properties) const;

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);
  friend bool operator<(const ClassExpression& a, const ClassExpression& b);
};

// Manchester-style rendering ("A and (not B)", "p some C", "inverse p").
// IRIs are compacted with `prefixes` when possible.
std::string render(const ClassExpression& e, const rdf::PrefixMap& prefixes = {});
std::string render(const PropertyExpression& p, const rdf::PrefixMap& prefixes = {});
std::string render_term(rdf::Term t, const rdf::PrefixMap& prefixes = {});

enum class AxiomKind {
  SubClassOf,            // classes[0] ⊑ classes[1]
  EquivalentClasses,     // classes[0] ≡ classes[1]
  DisjointClasses,       // classes[0], classes[1]
  DisjointUnion,         // classes[0] = disjoint union of classes[1..]
  SubPropertyOf,         // properties[0] ⊑ properties[1]
  EquivalentProperties,  // properties[0] ≡ properties[1]
  InverseProperties,     // properties[0] inverse of properties[1]
  PropertyDomain,        // properties[0], classes[0]
  PropertyRange,         // properties[0], classes[0]
  PropertyChain,         // properties[1..] chained ⊑ properties[0]
  ClassAssertion,        // terms[0] : classes[0]
  PropertyAssertion,     // properties[0](terms[0], terms[1])
  SkosMapping,           // terms[0] relation terms[1]; no logical force
};

std::string_view to_string(AxiomKind kind);

using Annotation = std::pair<rdf::Term, rdf::Term>;  // (predicate, value)

struct Axiom {
  AxiomKind kind = AxiomKind::SubClassOf;
  std::vector<ClassExpression> classes;
  std::vector<PropertyExpression> properties;
  std::vector<rdf::Term> terms;
  rdf::Term relation;  // SKOS predicate for SkosMapping
  std::vector<Annotation> annotations;

  bool is_logical() const { return kind != AxiomKind::SkosMapping; }
  // Named classes, properties and individuals mentioned by the axiom.
  void collect(TermSet& classes, TermSet& properties, TermSet& individuals) const;

  // Equality and order over logical content only; annotations ignored.
  friend bool same_logic(const Axiom& a, const Axiom& b);
  friend bool logic_less(const Axiom& a, const Axiom& b);
  friend bool operator==(const Axiom& a, const Axiom& b) {
    return same_logic(a, b) && a.annotations == b.annotations;
  }
};

std::string render(const Axiom& a, const rdf::PrefixMap& prefixes = {});

struct SwrlAtom {
  enum class Kind { Class, Property } kind = Kind::Class;
  ClassExpression cls;          // Class atoms
  PropertyExpression property;  // Property atoms
  // Each argument is a variable IRI (listed in SwrlRule::variables) or an
  // individual IRI.
  std::vector<rdf::Term> args;

  friend bool operator==(const SwrlAtom&, const SwrlAtom&);
  friend bool operator<(const SwrlAtom&, const SwrlAtom&);
};

struct SwrlRule {
  std::vector<SwrlAtom> body;
  std::vector<SwrlAtom> head;
  TermSet variables;
  std::vector<Annotation> annotations;

  bool is_variable(rdf::Term t) const { return variables.count(t) != 0; }
  void collect(TermSet& classes, TermSet& properties, TermSet& individuals) const;

  friend bool same_logic(const SwrlRule& a, const SwrlRule& b);
  friend bool logic_less(const SwrlRule& a, const SwrlRule& b);
  friend bool operator==(const SwrlRule& a, const SwrlRule& b) {
    return same_logic(a, b) && a.annotations == b.annotations;
  }
};

// "prov:atLocation(?x, ?y) ^ prov:Activity(?x) -> obo:BFO_0000066(?x, ?y)"
std::string render(const SwrlRule& r, const rdf::PrefixMap& prefixes = {});

struct Signature {
  TermSet classes;
  TermSet object_properties;
  TermSet individuals;

  std::size_t size() const {
    return classes.size() + object_properties.size() + individuals.size();
  }
  bool empty() const { return size() == 0; }
};

bool in_namespaces(rdf::Term t, const std::vector<std::string>& namespaces);

struct Declarations {
  TermSet classes;
  TermSet object_properties;
  TermSet data_properties;
  TermSet annotation_properties;
  TermSet individuals;
};

// Immutable result of extraction.
class OntologyModel {
 public:
  OntologyModel() = default;
  OntologyModel(std::vector<Axiom> axioms, std::vector<SwrlRule> rules,
                std::vector<rdf::Triple> unmodeled, Declarations declarations,
                std::string label = {});

  const std::vector<Axiom>& axioms() const noexcept { return axioms_; }
  const std::vector<SwrlRule>& rules() const noexcept { return rules_; }
  // Triples that matched no recognized pattern, in graph order.
  const std::vector<rdf::Triple>& unmodeled() const noexcept { return unmodeled_; }
  const Declarations& declarations() const noexcept { return declarations_; }
  const std::string& label() const noexcept { return label_; }

  // Ontology header: IRI, version IRI, annotations on the ontology node.
  rdf::Term ontology_iri;
  rdf::Term version_iri;
  std::vector<Annotation> ontology_annotations;
  // Human-readable labels (rdfs:label / skos:prefLabel), first one wins.
  std::map<rdf::Term, std::string, TermOrder> labels;
  rdf::PrefixMap prefixes;

  const Signature& signature() const noexcept { return signature_; }
  // Signature restricted to IRIs starting with one of `namespaces`.
  Signature signature(const std::vector<std::string>& namespaces) const;

 private:
  std::vector<Axiom> axioms_;
  std::vector<SwrlRule> rules_;
  std::vector<rdf::Triple> unmodeled_;
  Declarations declarations_;
  std::string label_;
  Signature signature_;
};

// Recomputes a signature from axioms, rules and declarations. Vocabulary
// IRIs, owl:Thing/owl:Nothing, datatype and annotation properties are
// left out.
Signature compute_signature(const std::vector<Axiom>& axioms, const std::vector<SwrlRule>& rules,
                            const Declarations& declarations);

// Decodes the OWL class expression rooted at `node`.
// Throws Error(MalformedExpression), Error(UnsupportedExpression) for OWL
// constructs outside the supported fragment, Error(CyclicExpression).
ClassExpression parse_class_expression(const rdf::Graph& graph, rdf::Term node);
PropertyExpression parse_property_expression(const rdf::Graph& graph, rdf::Term node);

// Reads an rdf:first/rdf:rest chain. Throws Error(MalformedExpression).
std::vector<rdf::Term> read_list(const rdf::Graph& graph, rdf::Term head);

// Decodes every swrl:Imp. Throws Error(UnsafeRule) or Error(UnsupportedAtom).
std::vector<SwrlRule> extract_swrl_rules(const rdf::Graph& graph);

// Full extraction. Rules with unsupported atoms and axioms over unsupported
// expressions are kept in the unmodeled list instead of failing; malformed
// structure and unsafe rules still throw.
OntologyModel extract_axioms(const rdf::Graph& graph, std::string label = {});

// Encoding back to RDF (used by the alignment codec and materialize).
rdf::Term encode_class_expression(rdf::Graph& graph, const ClassExpression& e);
rdf::Term encode_property_expression(rdf::Graph& graph, const PropertyExpression& p);
rdf::Term encode_list(rdf::Graph& graph, const std::vector<rdf::Term>& items);
// The single triple stating `a` (annotations not included). Nested
// expressions and lists are written into `graph`; the returned triple is
// not, so callers can reify it instead.
rdf::Triple axiom_triple(rdf::Graph& graph, const Axiom& a);
// axiom_triple plus inserting the triple itself.
void encode_axiom(rdf::Graph& graph, const Axiom& a);
rdf::Term encode_swrl_rule(rdf::Graph& graph, const SwrlRule& r);

}  // namespace provalign::owl
