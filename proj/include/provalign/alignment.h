#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "provalign/owl.h"

namespace provalign::alignment {

enum class MappingPredicate {
  EquivalentClass,
  EquivalentProperty,
  SubClassOf,
  SubPropertyOf,
  PropertyChain,
  SwrlRule,
  SkosRelated,
};

std::string_view to_string(MappingPredicate p);
// Property chains and SWRL rules.
bool is_complex(MappingPredicate p);
// The four predicates that become SSSOM rows.
bool is_simple(MappingPredicate p);

inline constexpr std::string_view kDefaultJustification = "manual mapping curation";

struct Mapping {
  MappingPredicate predicate = MappingPredicate::EquivalentClass;
  // Logical content without annotations.
  std::variant<owl::Axiom, owl::SwrlRule> payload;
  // Literal terms (language tags survive a round trip); invalid = absent.
  rdf::Term subject_label;
  rdf::Term object_label;
  rdf::Term comment;
  std::string justification{kDefaultJustification};
  // Any other annotations found on the reified axiom or rule.
  std::vector<owl::Annotation> extra;

  const owl::Axiom* axiom() const { return std::get_if<owl::Axiom>(&payload); }
  const owl::SwrlRule* rule() const { return std::get_if<owl::SwrlRule>(&payload); }

  // Display forms of the two sides: CURIEs for named terms, Manchester
  // syntax for expressions, the body/head for rules.
  std::string subject_id(const rdf::PrefixMap& prefixes = {}) const;
  std::string object_id(const rdf::PrefixMap& prefixes = {}) const;

  // Named terms on each side of the mapping. For a property chain the
  // chained properties are the subject side and the super property the
  // object side; for a rule the body is the subject side.
  owl::TermSet subject_terms() const;
  owl::TermSet object_terms() const;
  owl::TermSet terms() const;

  friend bool operator==(const Mapping& a, const Mapping& b);
};

// Logical order of payloads; used to sort and deduplicate.
bool mapping_less(const Mapping& a, const Mapping& b);

struct DerivedFrom {
  std::string label;
  rdf::Term source;
};

struct Alignment {
  std::vector<Mapping> mappings;
  std::vector<std::string> source_ns;
  std::vector<std::string> target_ns;
  std::vector<DerivedFrom> derived_from;
  // Logical axioms of the alignment file that are not mappings (e.g. a
  // disjointness between a source and a target class). They take part in
  // reasoning but not in mapping statistics.
  std::vector<owl::Axiom> auxiliary;
  std::vector<owl::SwrlRule> auxiliary_rules;
  rdf::PrefixMap prefixes;
  rdf::Term ontology_iri;
  rdf::Term version_iri;

  std::size_t count(MappingPredicate p) const;
  std::size_t simple_count() const;
  std::size_t complex_count() const;

  // Logical content (mapping payloads plus auxiliary axioms) as a model the
  // reasoner can consume.
  owl::OntologyModel as_model() const;
};

// Throws Error(NamespaceOverlap) when a source namespace is a prefix of a
// target namespace or vice versa, Error(Usage) when either list is empty.
void validate_namespaces(const std::vector<std::string>& source_ns,
                         const std::vector<std::string>& target_ns);

// Every axiom or rule that mentions terms from both namespace groups
// becomes a mapping; its annotations fill labels, justification, comment.
Alignment extract_mappings(const owl::OntologyModel& model, const std::vector<std::string>& source_ns,
                           const std::vector<std::string>& target_ns);

// Several alignment files into one (mappings deduplicated).
Alignment merge_alignments(const std::vector<Alignment>& parts);

// Reified owl:Axiom (or annotated swrl:Imp) for one mapping.
// Throws Error(UnsupportedPredicate) for SKOS mappings.
rdf::Graph serialize_mapping(const Mapping& mapping);
// Same, written into an existing graph.
void write_mapping(rdf::Graph& graph, const Mapping& mapping);

// Whole alignment as Turtle-ready graph: header, mappings, auxiliary axioms.
rdf::Graph serialize_alignment(const Alignment& alignment);

inline constexpr std::string_view kSssomHeader =
    "subject_id,predicate_id,object_id,subject_label,object_label,mapping_justification,comment";

// SSSOM-style CSV: one row per simple mapping, sorted by subject_id then
// object_id. Complex and SKOS mappings are only counted in trailing
// comment lines.
std::string export_sssom(const Alignment& alignment);

}  // namespace provalign::alignment
