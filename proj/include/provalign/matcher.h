#pragma once

#include <string>
#include <vector>

#include "provalign/alignment.h"
#include "provalign/reasoner.h"

namespace provalign::matcher {

struct DomainRange {
  owl::ClassExpression domain;
  owl::ClassExpression range;
};

// Own declarations first, then those of a declared inverse (swapped), then
// the nearest super property that has one, else owl:Thing. Each side is
// resolved on its own. Several declarations on one property combine into
// an intersection. Throws Error(UnknownProperty) when no model knows `p`
// as an object property.
DomainRange effective_domain_range(rdf::Term p, const reasoner::ModelList& models);

enum class MatchKind { Exact, Inherited };
std::string_view to_string(MatchKind k);

struct SideMatch {
  owl::ClassExpression translated;  // target class standing for the source side
  owl::ClassExpression candidate;   // candidate's effective domain or range
};

struct Candidate {
  rdf::Term property;
  SideMatch domain;
  SideMatch range;
  MatchKind kind = MatchKind::Inherited;
};

struct Suggestion {
  rdf::Term property;
  DomainRange source;
  // Target classes translating the source domain and range. A union
  // contributes one group per operand; every group must be matched, any
  // class of a group suffices.
  std::vector<std::vector<owl::ClassExpression>> domain_translation;
  std::vector<std::vector<owl::ClassExpression>> range_translation;
  std::vector<Candidate> candidates;  // exact first, then inherited, then by IRI
  std::vector<std::string> notes;
  bool unmapped_domain_or_range = false;
};

// Target object properties whose effective domain and range subsume the
// translation of `p`'s domain and range. Inverse target properties are not
// considered.
Suggestion suggest_property_mappings(rdf::Term p, const owl::OntologyModel& source,
                                     const reasoner::ModelList& targets,
                                     const alignment::Alignment& alignment);

}  // namespace provalign::matcher
