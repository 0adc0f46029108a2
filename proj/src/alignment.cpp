#include <algorithm>

#include "provalign/alignment.h"
#include "provalign/error.h"
#include "provalign/vocab.h"

namespace provalign::alignment {

namespace v = vocab;
using owl::AxiomKind;

std::string_view to_string(MappingPredicate p) {
  switch (p) {
    case MappingPredicate::EquivalentClass: return "equivalent-class";
    case MappingPredicate::EquivalentProperty: return "equivalent-property";
    case MappingPredicate::SubClassOf: return "sub-class-of";
    case MappingPredicate::SubPropertyOf: return "sub-property-of";
    case MappingPredicate::PropertyChain: return "property-chain";
    case MappingPredicate::SwrlRule: return "swrl-rule";
    case MappingPredicate::SkosRelated: return "skos-related";
  }
  return "?";
}

bool is_complex(MappingPredicate p) {
  return p == MappingPredicate::PropertyChain || p == MappingPredicate::SwrlRule;
}

bool is_simple(MappingPredicate p) { return !is_complex(p) && p != MappingPredicate::SkosRelated; }

namespace {

std::optional<MappingPredicate> predicate_for(AxiomKind k) {
  switch (k) {
    case AxiomKind::SubClassOf: return MappingPredicate::SubClassOf;
    case AxiomKind::EquivalentClasses: return MappingPredicate::EquivalentClass;
    case AxiomKind::SubPropertyOf: return MappingPredicate::SubPropertyOf;
    case AxiomKind::EquivalentProperties: return MappingPredicate::EquivalentProperty;
    case AxiomKind::PropertyChain: return MappingPredicate::PropertyChain;
    case AxiomKind::SkosMapping: return MappingPredicate::SkosRelated;
    default: return std::nullopt;
  }
}

void add_side(const owl::Axiom& a, bool subject, owl::TermSet& out) {
  owl::TermSet props;
  switch (a.kind) {
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses:
      a.classes.at(subject ? 0 : 1).collect(out, props);
      out.insert(props.begin(), props.end());
      break;
    case AxiomKind::SubPropertyOf:
    case AxiomKind::EquivalentProperties:
      out.insert(a.properties.at(subject ? 0 : 1).iri);
      break;
    case AxiomKind::PropertyChain:
      if (subject) {
        for (std::size_t i = 1; i < a.properties.size(); ++i) out.insert(a.properties[i].iri);
      } else {
        out.insert(a.properties.at(0).iri);
      }
      break;
    case AxiomKind::SkosMapping:
      out.insert(a.terms.at(subject ? 0 : 1));
      break;
    default: {
      owl::TermSet c, p, i;
      a.collect(c, p, i);
      out.insert(c.begin(), c.end());
      out.insert(p.begin(), p.end());
    }
  }
}

void add_rule_side(const owl::SwrlRule& r, bool body, owl::TermSet& out) {
  owl::TermSet props, individuals;
  for (const auto& atom : body ? r.body : r.head) {
    if (atom.kind == owl::SwrlAtom::Kind::Class)
      atom.cls.collect(out, props);
    else
      props.insert(atom.property.iri);
  }
  out.insert(props.begin(), props.end());
}

bool any_in(const owl::TermSet& terms, const std::vector<std::string>& ns) {
  return std::any_of(terms.begin(), terms.end(),
                     [&](rdf::Term t) { return owl::in_namespaces(t, ns); });
}

int variant_rank(const Mapping& m) { return m.axiom() ? 0 : 1; }

}  // namespace

std::string Mapping::subject_id(const rdf::PrefixMap& px) const {
  if (const auto* r = rule()) {
    std::string s = owl::render(*r, px);
    return s.substr(0, s.find(" -> "));
  }
  const owl::Axiom& a = *axiom();
  switch (a.kind) {
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses: return owl::render(a.classes.at(0), px);
    case AxiomKind::PropertyChain: {
      std::string out;
      for (std::size_t i = 1; i < a.properties.size(); ++i)
        out += (i > 1 ? " o " : "") + owl::render(a.properties[i], px);
      return out;
    }
    case AxiomKind::SkosMapping: return owl::render_term(a.terms.at(0), px);
    default: return owl::render(a.properties.at(0), px);
  }
}

std::string Mapping::object_id(const rdf::PrefixMap& px) const {
  if (const auto* r = rule()) {
    std::string s = owl::render(*r, px);
    return s.substr(s.find(" -> ") + 4);
  }
  const owl::Axiom& a = *axiom();
  switch (a.kind) {
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses: return owl::render(a.classes.at(1), px);
    case AxiomKind::PropertyChain: return owl::render(a.properties.at(0), px);
    case AxiomKind::SkosMapping: return owl::render_term(a.terms.at(1), px);
    default: return owl::render(a.properties.at(1), px);
  }
}

owl::TermSet Mapping::subject_terms() const {
  owl::TermSet out;
  if (const auto* r = rule())
    add_rule_side(*r, true, out);
  else
    add_side(*axiom(), true, out);
  return out;
}

owl::TermSet Mapping::object_terms() const {
  owl::TermSet out;
  if (const auto* r = rule())
    add_rule_side(*r, false, out);
  else
    add_side(*axiom(), false, out);
  return out;
}

owl::TermSet Mapping::terms() const {
  owl::TermSet out = subject_terms(), o = object_terms();
  out.insert(o.begin(), o.end());
  return out;
}

bool operator==(const Mapping& a, const Mapping& b) {
  if (a.predicate != b.predicate || a.payload.index() != b.payload.index()) return false;
  bool same = a.axiom() ? same_logic(*a.axiom(), *b.axiom()) : same_logic(*a.rule(), *b.rule());
  return same && a.subject_label == b.subject_label && a.object_label == b.object_label &&
         a.comment == b.comment && a.justification == b.justification && a.extra == b.extra;
}

bool mapping_less(const Mapping& a, const Mapping& b) {
  if (variant_rank(a) != variant_rank(b)) return variant_rank(a) < variant_rank(b);
  if (a.axiom()) return logic_less(*a.axiom(), *b.axiom());
  return logic_less(*a.rule(), *b.rule());
}

static bool same_payload(const Mapping& a, const Mapping& b) {
  return !mapping_less(a, b) && !mapping_less(b, a);
}

std::size_t Alignment::count(MappingPredicate p) const {
  return std::count_if(mappings.begin(), mappings.end(),
                       [&](const Mapping& m) { return m.predicate == p; });
}

std::size_t Alignment::simple_count() const {
  return std::count_if(mappings.begin(), mappings.end(),
                       [](const Mapping& m) { return is_simple(m.predicate); });
}

std::size_t Alignment::complex_count() const {
  return std::count_if(mappings.begin(), mappings.end(),
                       [](const Mapping& m) { return is_complex(m.predicate); });
}

owl::OntologyModel Alignment::as_model() const {
  std::vector<owl::Axiom> axioms;
  std::vector<owl::SwrlRule> rules;
  for (const auto& m : mappings) {
    if (const auto* a = m.axiom()) {
      if (a->is_logical()) axioms.push_back(*a);
    } else {
      rules.push_back(*m.rule());
    }
  }
  axioms.insert(axioms.end(), auxiliary.begin(), auxiliary.end());
  rules.insert(rules.end(), auxiliary_rules.begin(), auxiliary_rules.end());
  owl::OntologyModel model(std::move(axioms), std::move(rules), {}, {}, "alignment");
  model.prefixes = prefixes;
  return model;
}

void validate_namespaces(const std::vector<std::string>& source_ns,
                         const std::vector<std::string>& target_ns) {
  if (source_ns.empty() || target_ns.empty())
    throw Error(ErrorCode::Usage, "both source and target namespaces are required");
  for (const auto& s : source_ns)
    for (const auto& t : target_ns) {
      if (s.empty() || t.empty()) throw Error(ErrorCode::Usage, "empty namespace");
      if (s.compare(0, t.size(), t) == 0 || t.compare(0, s.size(), s) == 0)
        throw Error(ErrorCode::NamespaceOverlap,
                    "source namespace " + s + " overlaps target namespace " + t);
    }
}

namespace {

void take_annotations(Mapping& m, const std::vector<owl::Annotation>& notes) {
  for (const auto& [p, o] : notes) {
    const std::string& pred = p.value();
    if (pred == v::sssom::subject_label && !m.subject_label.valid() && o.is_literal()) {
      m.subject_label = o;
    } else if (pred == v::sssom::object_label && !m.object_label.valid() && o.is_literal()) {
      m.object_label = o;
    } else if (pred == v::sssom::mapping_justification &&
               m.justification == kDefaultJustification) {
      m.justification = o.value();
    } else if (pred == v::rdfs::comment && !m.comment.valid() && o.is_literal()) {
      m.comment = o;
    } else {
      m.extra.emplace_back(p, o);
    }
  }
}

std::vector<Mapping> sorted_unique(std::vector<Mapping> in) {
  std::stable_sort(in.begin(), in.end(), mapping_less);
  std::vector<Mapping> out;
  for (auto& m : in)
    if (out.empty() || !same_payload(out.back(), m)) out.push_back(std::move(m));
  return out;
}

}  // namespace

Alignment extract_mappings(const owl::OntologyModel& model, const std::vector<std::string>& source_ns,
                           const std::vector<std::string>& target_ns) {
  validate_namespaces(source_ns, target_ns);
  Alignment al;
  al.source_ns = source_ns;
  al.target_ns = target_ns;
  al.prefixes = model.prefixes;
  al.ontology_iri = model.ontology_iri;
  al.version_iri = model.version_iri;
  for (const auto& [p, o] : model.ontology_annotations)
    if (p.value() == v::prov::wasDerivedFrom) {
      auto it = model.labels.find(o);
      al.derived_from.push_back(
          DerivedFrom{it != model.labels.end() ? it->second : owl::render_term(o, model.prefixes), o});
    }

  std::vector<Mapping> found;
  for (const auto& a : model.axioms()) {
    auto pred = predicate_for(a.kind);
    Mapping m;
    m.payload = a;
    owl::TermSet all = m.terms();
    bool crosses = any_in(all, source_ns) && any_in(all, target_ns);
    if (!pred || !crosses) {
      if (a.is_logical() && a.kind != AxiomKind::ClassAssertion &&
          a.kind != AxiomKind::PropertyAssertion)
        al.auxiliary.push_back(a);
      continue;
    }
    m.predicate = *pred;
    std::get<owl::Axiom>(m.payload).annotations.clear();
    take_annotations(m, a.annotations);
    found.push_back(std::move(m));
  }
  for (const auto& r : model.rules()) {
    Mapping m;
    m.predicate = MappingPredicate::SwrlRule;
    m.payload = r;
    owl::TermSet all = m.terms();
    if (!(any_in(all, source_ns) && any_in(all, target_ns))) {
      al.auxiliary_rules.push_back(r);
      continue;
    }
    std::get<owl::SwrlRule>(m.payload).annotations.clear();
    take_annotations(m, r.annotations);
    found.push_back(std::move(m));
  }
  al.mappings = sorted_unique(std::move(found));
  return al;
}

Alignment merge_alignments(const std::vector<Alignment>& parts) {
  Alignment out;
  std::vector<Mapping> all;
  for (const auto& part : parts) {
    if (out.source_ns.empty()) {
      out.source_ns = part.source_ns;
      out.target_ns = part.target_ns;
      out.ontology_iri = part.ontology_iri;
      out.version_iri = part.version_iri;
    }
    all.insert(all.end(), part.mappings.begin(), part.mappings.end());
    out.derived_from.insert(out.derived_from.end(), part.derived_from.begin(), part.derived_from.end());
    for (const auto& a : part.auxiliary)
      if (std::none_of(out.auxiliary.begin(), out.auxiliary.end(),
                       [&](const owl::Axiom& b) { return same_logic(a, b); }))
        out.auxiliary.push_back(a);
    out.auxiliary_rules.insert(out.auxiliary_rules.end(), part.auxiliary_rules.begin(),
                               part.auxiliary_rules.end());
    for (const auto& [k, ns] : part.prefixes) out.prefixes.emplace(k, ns);
  }
  out.mappings = sorted_unique(std::move(all));
  return out;
}

// ---- codec -----------------------------------------------------------------

namespace {

void annotate(rdf::Graph& g, rdf::Term node, const Mapping& m) {
  if (m.subject_label.valid()) g.insert(node, rdf::Term::iri(v::sssom::subject_label), m.subject_label);
  if (m.object_label.valid()) g.insert(node, rdf::Term::iri(v::sssom::object_label), m.object_label);
  if (m.justification != kDefaultJustification) {
    rdf::Term j = rdf::is_absolute_iri(m.justification) ? rdf::Term::iri(m.justification)
                                                          : rdf::Term::literal(m.justification);
    g.insert(node, rdf::Term::iri(v::sssom::mapping_justification), j);
  }
  if (m.comment.valid()) g.insert(node, rdf::Term::iri(v::rdfs::comment), m.comment);
  for (const auto& [p, o] : m.extra) g.insert(node, p, o);
}

}  // namespace

void write_mapping(rdf::Graph& g, const Mapping& m) {
  if (m.predicate == MappingPredicate::SkosRelated)
    throw Error(ErrorCode::UnsupportedPredicate,
                "SKOS mappings are plain triples and are not reified");
  if (const auto* r = m.rule()) {
    owl::SwrlRule bare = *r;
    bare.annotations.clear();
    rdf::Term imp = owl::encode_swrl_rule(g, bare);
    annotate(g, imp, m);
    return;
  }
  rdf::Triple t = owl::axiom_triple(g, *m.axiom());
  rdf::Term node = g.fresh_blank();
  g.insert(node, rdf::Term::iri(v::rdf::type), rdf::Term::iri(v::owl::Axiom));
  g.insert(node, rdf::Term::iri(v::owl::annotatedSource), t.subject);
  g.insert(node, rdf::Term::iri(v::owl::annotatedProperty), t.predicate);
  g.insert(node, rdf::Term::iri(v::owl::annotatedTarget), t.object);
  annotate(g, node, m);
}

rdf::Graph serialize_mapping(const Mapping& mapping) {
  rdf::Graph g;
  write_mapping(g, mapping);
  return g;
}

rdf::Graph serialize_alignment(const Alignment& al) {
  rdf::Graph g;
  g.prefixes() = al.prefixes;
  rdf::Term type = rdf::Term::iri(v::rdf::type);
  if (al.ontology_iri.valid()) {
    g.insert(al.ontology_iri, type, rdf::Term::iri(v::owl::Ontology));
    if (al.version_iri.valid())
      g.insert(al.ontology_iri, rdf::Term::iri(v::owl::versionIRI), al.version_iri);
    for (const auto& d : al.derived_from)
      g.insert(al.ontology_iri, rdf::Term::iri(v::prov::wasDerivedFrom), d.source);
  }
  for (const auto& m : al.mappings) {
    if (m.predicate == MappingPredicate::SkosRelated) {
      owl::encode_axiom(g, *m.axiom());
      continue;
    }
    write_mapping(g, m);
  }
  for (const auto& a : al.auxiliary) owl::encode_axiom(g, a);
  for (const auto& r : al.auxiliary_rules) owl::encode_swrl_rule(g, r);
  return g;
}

}  // namespace provalign::alignment
