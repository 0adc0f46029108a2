#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "provalign/alignment.h"
#include "provalign/reasoner.h"

namespace provalign::checks {

// ---- totality ----------------------------------------------------------------

// Ordered by precedence: a term credited several ways reports the first.
enum class Credit { Direct, ViaChain, ViaRule, ViaSuperterm, ViaInverse };
std::string_view to_string(Credit c);

enum class TermCategory { Class, ObjectProperty };
std::string_view to_string(TermCategory c);

struct CreditRecord {
  rdf::Term term;
  TermCategory category = TermCategory::Class;
  Credit how = Credit::Direct;
  // The mapping text (direct, chain, rule) or the credited term reached
  // (superterm, inverse).
  std::string via;
  bool by_equivalence = false;  // direct credit through an equivalence mapping
};

struct UnmappedTerm {
  rdf::Term term;
  TermCategory category = TermCategory::Class;
};

struct TotalityReport {
  std::size_t source_terms = 0;
  std::vector<UnmappedTerm> unmapped;  // sorted by IRI
  std::vector<CreditRecord> credited;  // sorted by IRI
  std::size_t mapped_count() const { return credited.size(); }
  const CreditRecord* credit(rdf::Term t) const;
};

// Source terms are the classes and object properties of `source` inside
// the alignment's source namespaces (all of them when none are set).
TotalityReport check_totality(const owl::OntologyModel& source,
                              const std::vector<const owl::OntologyModel*>& others,
                              const alignment::Alignment& alignment);

// ---- coherence -------------------------------------------------------------

struct UnsatisfiableClass {
  rdf::Term cls;
  std::vector<reasoner::Clash> clashes;  // from the probe
};

struct CoherenceReport {
  std::size_t probed = 0;
  std::vector<UnsatisfiableClass> unsatisfiable;  // sorted by IRI
  std::vector<std::pair<rdf::Term, std::string>> undetermined;  // class, reason
};

CoherenceReport check_coherence(const reasoner::ModelList& models, reasoner::Options options = {});

// ---- consistency -------------------------------------------------------------

struct ConsistencyReport {
  std::string label;  // usually the instance file
  std::size_t instance_count = 0;
  std::size_t derived_facts = 0;
  bool skolem_budget_exceeded = false;
  std::vector<reasoner::Clash> clashes;
  rdf::PrefixMap prefixes;
  bool consistent() const { return clashes.empty(); }
};

// Named and blank individuals used by the assertions of `data`.
std::size_t count_instances(const owl::OntologyModel& data);

ConsistencyReport check_consistency(const reasoner::ModelList& models, const rdf::Graph& instances,
                                    reasoner::Options options = {}, std::string label = {});

// ---- conservativity ----------------------------------------------------------

struct NewEntailment {
  rdf::Term sub, super;
  bool property = false;
  std::string signature;  // label of the ontology whose signature holds both terms
};

struct ConservativityReport {
  // Root causes: a new pair (A, B) is left out when some C of the same
  // signature, not equivalent to A or B, sits strictly between them and
  // thereby explains it.
  std::vector<NewEntailment> new_subsumptions;
  std::vector<NewEntailment> new_equivalences;  // sub < super lexically
  std::size_t total_new_subsumptions = 0;       // before root-cause reduction
  std::size_t new_disjointness = 0;             // informational only
  bool violated() const { return !new_subsumptions.empty() || !new_equivalences.empty(); }
};

// `o1` is checked against its own taxonomy, every model in `o2` against the
// taxonomy of all of `o2` together. Only terms inside `namespaces_of_o1` /
// `namespaces_of_o2` count (all terms when the list is empty).
ConservativityReport check_conservativity(const owl::OntologyModel& o1,
                                          const std::vector<const owl::OntologyModel*>& o2,
                                          const alignment::Alignment& alignment,
                                          const std::vector<std::string>& namespaces_of_o1 = {},
                                          const std::vector<std::string>& namespaces_of_o2 = {});

// ---- statistics --------------------------------------------------------------

struct AlignmentStats {
  std::map<alignment::MappingPredicate, std::size_t> by_predicate;
  std::size_t simple = 0;
  std::size_t complex = 0;
  std::size_t total = 0;
  std::size_t credited = 0;
  std::size_t credited_by_equivalence = 0;
  double equivalence_coverage = 0.0;  // credited_by_equivalence / credited
};

AlignmentStats alignment_stats(const alignment::Alignment& alignment, const TotalityReport& totality);

// ---- derived mappings ------------------------------------------------------

inline constexpr std::string_view kEntailedJustification = "reasoner entailment";

// The alignment plus every mapping the merged ontologies entail between a
// source term (subject) and its most specific target terms, including
// those that follow from inverse properties. Entailed mappings carry
// kEntailedJustification.
alignment::Alignment entailed_mappings(const reasoner::ModelList& models, const alignment::Alignment& alignment);

// ---- reports -----------------------------------------------------------------

enum class Status { Pass, Fail, Error };
std::string_view to_string(Status s);

struct Finding {
  std::string kind;
  std::string message;
  std::vector<std::string> terms;
  std::map<std::string, std::string> details;
  std::vector<std::string> trace;
};

// Uniform report for text and JSON output.
struct Report {
  std::string check;
  Status status = Status::Pass;
  std::vector<Finding> findings;
  std::map<std::string, double> counts;
  std::vector<std::string> notes;
  std::vector<Report> reports;  // sub-reports (check-all)
};

Report to_report(const TotalityReport& r, const rdf::PrefixMap& prefixes = {});
Report to_report(const CoherenceReport& r, const rdf::PrefixMap& prefixes = {});
Report to_report(const std::vector<ConsistencyReport>& runs, const rdf::PrefixMap& prefixes = {});
Report to_report(const ConservativityReport& r, const rdf::PrefixMap& prefixes = {});
Report to_report(const AlignmentStats& s);
Report combine(std::string check, std::vector<Report> parts);

std::string to_json(const Report& r);  // pretty-printed, trailing newline
std::string to_text(const Report& r);

}  // namespace provalign::checks
