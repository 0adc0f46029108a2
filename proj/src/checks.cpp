#include "provalign/checks.h"

#include <algorithm>
#include <set>

#include "provalign/error.h"

namespace provalign::checks {

using alignment::MappingPredicate;
using owl::AxiomKind;
using owl::TermSet;

std::string_view to_string(Credit c) {
  switch (c) {
    case Credit::Direct: return "direct";
    case Credit::ViaChain: return "via-chain";
    case Credit::ViaRule: return "via-rule";
    case Credit::ViaSuperterm: return "via-superterm";
    case Credit::ViaInverse: return "via-inverse";
  }
  return "?";
}

std::string_view to_string(TermCategory c) {
  return c == TermCategory::Class ? "class" : "object-property";
}

const CreditRecord* TotalityReport::credit(rdf::Term t) const {
  for (const auto& c : credited)
    if (c.term == t) return &c;
  return nullptr;
}

namespace {

owl::Signature scoped_signature(const owl::OntologyModel& m, const std::vector<std::string>& ns) {
  return ns.empty() ? m.signature() : m.signature(ns);
}

// Named terms standing directly on either side of a simple mapping.
std::vector<rdf::Term> mapped_sides(const owl::Axiom& a) {
  std::vector<rdf::Term> out;
  for (const auto& c : a.classes)
    if (c.is_named()) out.push_back(c.iri);
  for (const auto& p : a.properties) out.push_back(p.iri);
  return out;
}

}  // namespace

TotalityReport check_totality(const owl::OntologyModel& source,
                              const std::vector<const owl::OntologyModel*>& others,
                              const alignment::Alignment& alignment) {
  TotalityReport report;
  owl::Signature sig = scoped_signature(source, alignment.source_ns);
  std::map<rdf::Term, TermCategory, owl::TermOrder> terms;
  for (auto t : sig.classes) terms.emplace(t, TermCategory::Class);
  for (auto t : sig.object_properties) terms.emplace(t, TermCategory::ObjectProperty);
  report.source_terms = terms.size();

  std::map<rdf::Term, CreditRecord, owl::TermOrder> credits;
  auto give = [&](rdf::Term t, Credit how, std::string via, bool equivalence = false) {
    auto it = terms.find(t);
    if (it == terms.end()) return false;
    auto existing = credits.find(t);
    if (existing != credits.end()) {
      if (existing->second.how < how) return false;
      if (existing->second.how == how) {
        existing->second.by_equivalence = existing->second.by_equivalence || equivalence;
        return false;
      }
    }
    credits[t] = CreditRecord{t, it->second, how, std::move(via), equivalence};
    return true;
  };

  const auto& px = alignment.prefixes;
  for (const auto& m : alignment.mappings) {
    if (alignment::is_simple(m.predicate)) {
      bool eq = m.predicate == MappingPredicate::EquivalentClass ||
                m.predicate == MappingPredicate::EquivalentProperty;
      for (auto t : mapped_sides(*m.axiom())) give(t, Credit::Direct, owl::render(*m.axiom(), px), eq);
    } else if (m.predicate == MappingPredicate::PropertyChain) {
      for (const auto& p : m.axiom()->properties) give(p.iri, Credit::ViaChain, owl::render(*m.axiom(), px));
    } else if (m.predicate == MappingPredicate::SwrlRule) {
      TermSet classes, props, inds;
      m.rule()->collect(classes, props, inds);
      for (auto t : classes) give(t, Credit::ViaRule, owl::render(*m.rule(), px));
      for (auto t : props) give(t, Credit::ViaRule, owl::render(*m.rule(), px));
    }
  }

  // Superterm closure over the source axioms plus the alignment.
  owl::OntologyModel align_model = alignment.as_model();
  reasoner::Taxonomy tax = reasoner::Reasoner({&source, &align_model}).taxonomy();

  std::vector<std::pair<rdf::Term, rdf::Term>> inverses;
  auto collect_inverses = [&](const owl::OntologyModel& m) {
    for (const auto& a : m.axioms())
      if (a.kind == AxiomKind::InverseProperties && !a.properties[0].inverse && !a.properties[1].inverse) {
        inverses.push_back({a.properties[0].iri, a.properties[1].iri});
        inverses.push_back({a.properties[1].iri, a.properties[0].iri});
      }
  };
  collect_inverses(source);
  collect_inverses(align_model);
  for (const auto* m : others) collect_inverses(*m);

  for (bool changed = true; changed;) {
    changed = false;
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& [t, cat] : terms) {
        if (credits.count(t)) continue;
        for (const auto& [s, rec] : credits) {
          bool above = cat == TermCategory::Class ? tax.subclass.count({t, s}) != 0
                                                  : tax.subproperty.count({t, s}) != 0;
          if (above && rec.category == cat) {
            give(t, Credit::ViaSuperterm, owl::render_term(s, px));
            grew = changed = true;
            break;
          }
        }
      }
    }
    for (const auto& [p, q] : inverses) {
      if (credits.count(p) || !credits.count(q)) continue;
      if (give(p, Credit::ViaInverse, owl::render_term(q, px))) changed = true;
    }
  }

  for (const auto& [t, cat] : terms) {
    auto it = credits.find(t);
    if (it == credits.end())
      report.unmapped.push_back({t, cat});
    else
      report.credited.push_back(it->second);
  }
  return report;
}

CoherenceReport check_coherence(const reasoner::ModelList& models, reasoner::Options options) {
  CoherenceReport report;
  TermSet classes;
  for (const auto* m : models) classes.insert(m->signature().classes.begin(), m->signature().classes.end());
  std::vector<owl::ClassExpression> probes;
  for (auto c : classes) probes.push_back(owl::ClassExpression::named(c));
  reasoner::Reasoner engine(models, options, probes);
  for (const auto& c : probes) {
    ++report.probed;
    try {
      auto clashes = reasoner::check_clash(engine.probe(c));
      if (!clashes.empty()) report.unsatisfiable.push_back({c.iri, std::move(clashes)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResourceLimit) throw;
      report.undetermined.push_back({c.iri, e.what()});
    }
  }
  return report;
}

std::size_t count_instances(const owl::OntologyModel& data) {
  TermSet seen;
  for (const auto& a : data.axioms()) {
    if (a.kind == AxiomKind::ClassAssertion) seen.insert(a.terms[0]);
    if (a.kind == AxiomKind::PropertyAssertion)
      for (auto t : a.terms)
        if (!t.is_literal()) seen.insert(t);
  }
  for (auto t : data.declarations().individuals) seen.insert(t);
  return seen.size();
}

ConsistencyReport check_consistency(const reasoner::ModelList& models, const rdf::Graph& instances,
                                    reasoner::Options options, std::string label) {
  ConsistencyReport report;
  report.label = std::move(label);
  owl::OntologyModel data = owl::extract_axioms(instances, report.label);
  report.instance_count = count_instances(data);
  // Data first so its prefixes win when rendering traces.
  reasoner::ModelList all{&data};
  all.insert(all.end(), models.begin(), models.end());
  reasoner::ClosedKB kb = reasoner::Reasoner(all, options).materialize();
  report.derived_facts = kb.derived_count();
  report.skolem_budget_exceeded = kb.skolem_budget_exceeded();
  report.clashes = reasoner::check_clash(kb);
  report.prefixes = instances.prefixes();
  for (const auto* m : models)
    for (const auto& [k, v] : m->prefixes) report.prefixes.emplace(k, v);
  return report;
}

ConservativityReport check_conservativity(const owl::OntologyModel& o1,
                                          const std::vector<const owl::OntologyModel*>& o2,
                                          const alignment::Alignment& alignment,
                                          const std::vector<std::string>& ns1,
                                          const std::vector<std::string>& ns2) {
  ConservativityReport report;
  owl::OntologyModel align_model = alignment.as_model();
  reasoner::ModelList merged{&o1};
  merged.insert(merged.end(), o2.begin(), o2.end());
  merged.push_back(&align_model);
  reasoner::Reasoner full(merged);
  reasoner::Taxonomy tm = full.taxonomy();
  auto tm_disjoint = full.disjoint_classes();

  struct Group {
    std::string label;
    owl::Signature sig;
    const reasoner::Reasoner* base;
  };
  reasoner::Reasoner r1({&o1});
  reasoner::Reasoner r2(o2);
  std::vector<Group> groups{{o1.label(), scoped_signature(o1, ns1), &r1}};
  for (const auto* m : o2) groups.push_back({m->label(), scoped_signature(*m, ns2), &r2});

  std::set<std::tuple<bool, rdf::Term, rdf::Term>> seen_sub, seen_eq;
  std::set<std::pair<rdf::Term, rdf::Term>> seen_disjoint;
  std::map<const reasoner::Reasoner*, std::pair<reasoner::Taxonomy, reasoner::Taxonomy::PairSet>> bases;

  for (const auto& g : groups) {
    auto& base = bases[g.base];
    if (base.first.subclass.empty() && base.first.subproperty.empty()) {
      base.first = g.base->taxonomy();
      base.second = g.base->disjoint_classes();
    }
    const reasoner::Taxonomy& t0 = base.first;

    for (bool prop : {false, true}) {
      const TermSet& sig = prop ? g.sig.object_properties : g.sig.classes;
      const auto& pairs = prop ? tm.subproperty : tm.subclass;
      auto entailed = [&](rdf::Term a, rdf::Term b) {
        return prop ? tm.is_subproperty(a, b) : tm.is_subclass(a, b);
      };
      auto known = [&](rdf::Term a, rdf::Term b) {
        return prop ? t0.is_subproperty(a, b) : t0.is_subclass(a, b);
      };
      std::vector<std::pair<rdf::Term, rdf::Term>> fresh;
      for (const auto& [a, b] : pairs) {
        if (!sig.count(a) || !sig.count(b) || known(a, b)) continue;
        if (entailed(b, a)) {
          auto [x, y] = rdf::lexical_less(a, b) ? std::pair{a, b} : std::pair{b, a};
          if (seen_eq.insert({prop, x, y}).second) report.new_equivalences.push_back({x, y, prop, g.label});
        } else {
          fresh.push_back({a, b});
        }
      }
      for (const auto& [a, b] : fresh) {
        if (!seen_sub.insert({prop, a, b}).second) continue;
        ++report.total_new_subsumptions;
        bool explained = false;
        for (auto c : sig) {
          if (c == a || c == b) continue;
          if (entailed(c, a) && entailed(a, c)) continue;
          if (entailed(c, b) && entailed(b, c)) continue;
          if (entailed(a, c) && entailed(c, b)) {
            explained = true;
            break;
          }
        }
        if (!explained) report.new_subsumptions.push_back({a, b, prop, g.label});
      }
    }

    for (const auto& [a, b] : tm_disjoint) {
      if (!rdf::lexical_less(a, b) || !g.sig.classes.count(a) || !g.sig.classes.count(b)) continue;
      if (base.second.count({a, b})) continue;
      if (seen_disjoint.insert({a, b}).second) ++report.new_disjointness;
    }
  }

  auto order = [](const NewEntailment& x, const NewEntailment& y) {
    if (x.property != y.property) return x.property < y.property;
    if (x.sub != y.sub) return rdf::lexical_less(x.sub, y.sub);
    return rdf::lexical_less(x.super, y.super);
  };
  std::sort(report.new_subsumptions.begin(), report.new_subsumptions.end(), order);
  std::sort(report.new_equivalences.begin(), report.new_equivalences.end(), order);
  return report;
}

AlignmentStats alignment_stats(const alignment::Alignment& alignment, const TotalityReport& totality) {
  AlignmentStats s;
  for (const auto& m : alignment.mappings) ++s.by_predicate[m.predicate];
  s.simple = alignment.simple_count();
  s.complex = alignment.complex_count();
  s.total = alignment.mappings.size();
  s.credited = totality.mapped_count();
  for (const auto& c : totality.credited)
    if (c.how == Credit::Direct && c.by_equivalence) ++s.credited_by_equivalence;
  s.equivalence_coverage =
      s.credited == 0 ? 0.0 : static_cast<double>(s.credited_by_equivalence) / static_cast<double>(s.credited);
  return s;
}

}  // namespace provalign::checks

namespace provalign::checks {

alignment::Alignment entailed_mappings(const reasoner::ModelList& models, const alignment::Alignment& input) {
  alignment::Alignment out = input;
  owl::OntologyModel align_model = input.as_model();
  reasoner::ModelList merged = models;
  merged.push_back(&align_model);
  reasoner::Taxonomy tax = reasoner::Reasoner(merged).taxonomy();

  TermSet classes, props;
  for (const auto* m : merged) {
    classes.insert(m->signature().classes.begin(), m->signature().classes.end());
    props.insert(m->signature().object_properties.begin(), m->signature().object_properties.end());
  }

  std::vector<alignment::Mapping> derived;
  auto derive = [&](const TermSet& terms, bool property) {
    const auto& pairs = property ? tax.subproperty : tax.subclass;
    for (auto s : terms) {
      if (!owl::in_namespaces(s, input.source_ns)) continue;
      std::vector<rdf::Term> supers;
      for (const auto& [a, b] : pairs)
        if (a == s && owl::in_namespaces(b, input.target_ns)) supers.push_back(b);
      for (auto t : supers) {
        bool equivalent = pairs.count({t, s}) != 0;
        bool redundant = !equivalent && std::any_of(supers.begin(), supers.end(), [&](rdf::Term u) {
          return u != t && pairs.count({u, t}) && !pairs.count({t, u});
        });
        if (redundant) continue;
        alignment::Mapping m;
        owl::Axiom a;
        if (property) {
          a.kind = equivalent ? AxiomKind::EquivalentProperties : AxiomKind::SubPropertyOf;
          a.properties = {owl::PropertyExpression(s), owl::PropertyExpression(t)};
          m.predicate = equivalent ? MappingPredicate::EquivalentProperty : MappingPredicate::SubPropertyOf;
        } else {
          a.kind = equivalent ? AxiomKind::EquivalentClasses : AxiomKind::SubClassOf;
          a.classes = {owl::ClassExpression::named(s), owl::ClassExpression::named(t)};
          m.predicate = equivalent ? MappingPredicate::EquivalentClass : MappingPredicate::SubClassOf;
        }
        m.payload = std::move(a);
        m.justification = std::string(kEntailedJustification);
        derived.push_back(std::move(m));
      }
    }
  };
  derive(classes, false);
  derive(props, true);

  for (auto& m : derived) {
    bool known = std::any_of(out.mappings.begin(), out.mappings.end(), [&](const alignment::Mapping& x) {
      if (!x.axiom() || x.predicate != m.predicate) return false;
      const owl::Axiom& a = *x.axiom();
      if (same_logic(a, *m.axiom())) return true;
      // Equivalences are symmetric.
      owl::Axiom swapped = a;
      std::reverse(swapped.classes.begin(), swapped.classes.end());
      std::reverse(swapped.properties.begin(), swapped.properties.end());
      return (a.kind == AxiomKind::EquivalentClasses || a.kind == AxiomKind::EquivalentProperties) &&
             same_logic(swapped, *m.axiom());
    });
    if (!known) out.mappings.push_back(std::move(m));
  }
  std::stable_sort(out.mappings.begin(), out.mappings.end(), alignment::mapping_less);
  return out;
}

}  // namespace provalign::checks
