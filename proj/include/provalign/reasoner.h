#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "provalign/owl.h"

namespace provalign::reasoner {

using ModelList = std::vector<const owl::OntologyModel*>;

struct Options {
  int skolem_depth = 3;
  std::size_t fact_cap = 1'000'000;
};

// A membership x : C or a property assertion p(x, y). Property facts are
// always stored over named properties; p⁻(x, y) is p(y, x).
struct Fact {
  enum class Kind { Membership, Property } kind = Kind::Membership;
  rdf::Term subject;
  owl::ClassExpression cls;  // membership
  rdf::Term property;        // property assertion
  rdf::Term object;          // property assertion

  static Fact membership(rdf::Term x, owl::ClassExpression c);
  static Fact edge(rdf::Term p, rdf::Term x, rdf::Term y);

  friend bool operator==(const Fact& a, const Fact& b);
  friend bool operator<(const Fact& a, const Fact& b);
};

std::string render(const Fact& f, const rdf::PrefixMap& prefixes = {});

// Rule names used in traces.
namespace rule {
inline constexpr const char* asserted = "asserted";
inline constexpr const char* subclass = "subclass";
inline constexpr const char* equivalence = "equivalence";
inline constexpr const char* disjoint_union = "disjoint-union";
inline constexpr const char* subproperty = "subproperty";
inline constexpr const char* equivalent_property = "equivalent-property";
inline constexpr const char* inverse = "inverse";
inline constexpr const char* domain = "domain";
inline constexpr const char* range = "range";
inline constexpr const char* intersection_decomposition = "intersection-decomposition";
inline constexpr const char* intersection_composition = "intersection-composition";
inline constexpr const char* existential_witness = "existential-witness";
inline constexpr const char* existential_subclass = "existential-subclass";
inline constexpr const char* property_chain = "property-chain";
inline constexpr const char* swrl = "swrl";
inline constexpr const char* union_introduction = "union-introduction";
inline constexpr const char* union_subsumer = "union-subsumer";
}  // namespace rule

struct TraceNode {
  Fact fact;
  std::string rule;
  std::string axiom;  // the axiom or rule that licensed the step, if any
  std::vector<TraceNode> premises;

  // Every rule name used anywhere in the tree.
  std::set<std::string> rules() const;
  // Every axiom text cited anywhere in the tree.
  std::set<std::string> axioms() const;
};

std::string render(const TraceNode& t, const rdf::PrefixMap& prefixes = {}, int indent = 0);

struct Clash {
  enum class Kind { Disjointness, Complement, Nothing } kind = Kind::Disjointness;
  rdf::Term individual;
  std::vector<owl::ClassExpression> participants;
  std::string axiom;  // the disjointness axiom (empty for the other kinds)
  std::vector<TraceNode> traces;  // one per participant membership
};

std::string_view to_string(Clash::Kind kind);

class Engine;
class TBox;

// Result of materialization: the fixpoint plus derivation records.
class ClosedKB {
 public:
  ClosedKB();
  ~ClosedKB();
  ClosedKB(ClosedKB&&) noexcept;
  ClosedKB& operator=(ClosedKB&&) noexcept;

  bool contains(const Fact& f) const;
  bool has_type(rdf::Term x, const owl::ClassExpression& c) const;
  std::size_t fact_count() const;
  std::size_t derived_count() const;
  std::vector<Fact> facts() const;  // sorted
  // Individuals (named and blank, literals and skolems excluded).
  std::vector<rdf::Term> individuals() const;
  std::vector<rdf::Term> skolems() const;
  bool is_skolem(rdf::Term t) const;
  // True when some existential could not be witnessed within the depth bound.
  bool skolem_budget_exceeded() const;
  std::vector<owl::ClassExpression> types(rdf::Term x) const;
  const rdf::PrefixMap& prefixes() const;

  // Named-class memberships and property assertions between non-skolem
  // individuals, as triples.
  rdf::Graph to_graph() const;

  friend TraceNode explain(const ClosedKB& kb, const Fact& fact);
  friend std::vector<Clash> check_clash(const ClosedKB& kb);
  friend class Reasoner;

 private:
  std::unique_ptr<Engine> engine_;
};

// Throws Error(UnknownFact) when `fact` is not in the closure.
TraceNode explain(const ClosedKB& kb, const Fact& fact);
std::vector<Clash> check_clash(const ClosedKB& kb);

struct Taxonomy {
  using Pair = std::pair<rdf::Term, rdf::Term>;
  struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const {
      if (a.first != b.first) return rdf::lexical_less(a.first, b.first);
      return rdf::lexical_less(a.second, b.second);
    }
  };
  using PairSet = std::set<Pair, PairOrder>;

  PairSet subclass;               // (sub, super), proper, equivalents included both ways
  PairSet equivalent_classes;     // symmetric
  PairSet subproperty;
  PairSet equivalent_properties;  // symmetric

  bool is_subclass(rdf::Term sub, rdf::Term super) const {
    return sub == super || subclass.count({sub, super}) != 0;
  }
  bool is_subproperty(rdf::Term sub, rdf::Term super) const {
    return sub == super || subproperty.count({sub, super}) != 0;
  }
};

// A compiled set of models. Compile once, then materialize many ABoxes or
// probe many classes; the compiled TBox is immutable and shared. The models
// must outlive the reasoner.
class Reasoner {
 public:
  explicit Reasoner(const ModelList& models, Options options = {},
                    const std::vector<owl::ClassExpression>& extra_expressions = {});
  ~Reasoner();
  Reasoner(Reasoner&&) noexcept;

  // Materializes the assertions found in the compiled models plus `abox`.
  ClosedKB materialize(const std::vector<owl::Axiom>& abox = {}) const;
  // Probe: a fresh individual asserted into `c`, without model assertions.
  ClosedKB probe(const owl::ClassExpression& c) const;
  bool satisfiable(const owl::ClassExpression& c) const;
  Taxonomy taxonomy() const;
  // TBox-level subsumption between compiled expressions (pass unfamiliar
  // ones as extra expressions). Throws Error(UnknownFact) otherwise.
  bool subsumes(const owl::ClassExpression& super, const owl::ClassExpression& sub) const;
  // Pairs of named classes that are entailed disjoint at TBox level.
  Taxonomy::PairSet disjoint_classes() const;
  const Options& options() const { return options_; }

 private:
  ModelList models_;
  std::vector<owl::ClassExpression> extra_;
  std::shared_ptr<const TBox> tbox_;
  Options options_;
};

// Convenience wrappers.
ClosedKB materialize(const ModelList& models, const rdf::Graph& abox, Options options = {});
bool class_satisfiable(const ModelList& models, const owl::ClassExpression& c, Options options = {});
Taxonomy entailed_taxonomy(const ModelList& models);

}  // namespace provalign::reasoner
