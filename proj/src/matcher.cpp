#include "provalign/matcher.h"

#include <algorithm>

#include "provalign/error.h"
#include "provalign/vocab.h"

namespace provalign::matcher {

using owl::AxiomKind;
using owl::ClassExpression;

std::string_view to_string(MatchKind k) { return k == MatchKind::Exact ? "exact" : "inherited"; }

namespace {

ClassExpression thing() { return ClassExpression::named(rdf::Term::iri(vocab::owl::Thing)); }

ClassExpression combine(std::vector<ClassExpression> found) {
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  if (found.empty()) return thing();
  if (found.size() == 1) return found.front();
  return ClassExpression::intersection(std::move(found));
}

class PropertyIndex {
 public:
  explicit PropertyIndex(const reasoner::ModelList& models) {
    for (const auto* m : models) {
      for (auto p : m->signature().object_properties) known_.insert(p);
      for (auto p : m->declarations().object_properties) known_.insert(p);
      for (const auto& a : m->axioms()) {
        switch (a.kind) {
          case AxiomKind::PropertyDomain:
          case AxiomKind::PropertyRange: {
            // domain(inverse p) is range(p) and vice versa.
            bool domain = (a.kind == AxiomKind::PropertyDomain) != a.properties[0].inverse;
            (domain ? domains_ : ranges_)[a.properties[0].iri].push_back(a.classes[0]);
            break;
          }
          case AxiomKind::InverseProperties:
            if (a.properties[0].inverse == a.properties[1].inverse) {
              inverses_[a.properties[0].iri].push_back(a.properties[1].iri);
              inverses_[a.properties[1].iri].push_back(a.properties[0].iri);
            }
            break;
          case AxiomKind::SubPropertyOf:
            if (a.properties[0].inverse == a.properties[1].inverse)
              supers_[a.properties[0].iri].push_back(a.properties[1].iri);
            break;
          case AxiomKind::EquivalentProperties:
            if (a.properties[0].inverse == a.properties[1].inverse) {
              supers_[a.properties[0].iri].push_back(a.properties[1].iri);
              supers_[a.properties[1].iri].push_back(a.properties[0].iri);
            }
            break;
          default:
            break;
        }
      }
    }
  }

  bool known(rdf::Term p) const { return known_.count(p) != 0; }

  ClassExpression resolve(rdf::Term p, bool domain) const {
    std::vector<rdf::Term> level{p};
    owl::TermSet visited{p};
    while (!level.empty()) {
      std::vector<ClassExpression> found;
      for (auto q : level) {
        append(found, (domain ? domains_ : ranges_), q);
        if (!found.empty()) continue;
        for (auto r : list(inverses_, q)) append(found, (domain ? ranges_ : domains_), r);
      }
      if (!found.empty()) return combine(std::move(found));
      std::vector<rdf::Term> next;
      for (auto q : level)
        for (auto s : list(supers_, q))
          if (visited.insert(s).second) next.push_back(s);
      level = std::move(next);
    }
    return thing();
  }

 private:
  using Table = std::map<rdf::Term, std::vector<ClassExpression>, owl::TermOrder>;
  using Links = std::map<rdf::Term, std::vector<rdf::Term>, owl::TermOrder>;

  static void append(std::vector<ClassExpression>& out, const Table& t, rdf::Term p) {
    auto it = t.find(p);
    if (it != t.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  static const std::vector<rdf::Term>& list(const Links& l, rdf::Term p) {
    static const std::vector<rdf::Term> none;
    auto it = l.find(p);
    return it == l.end() ? none : it->second;
  }

  owl::TermSet known_;
  Table domains_, ranges_;
  Links inverses_, supers_;
};

}  // namespace

DomainRange effective_domain_range(rdf::Term p, const reasoner::ModelList& models) {
  PropertyIndex index(models);
  if (!index.known(p))
    throw Error(ErrorCode::UnknownProperty, "not an object property of any loaded ontology: " + p.str());
  return {index.resolve(p, true), index.resolve(p, false)};
}

Suggestion suggest_property_mappings(rdf::Term p, const owl::OntologyModel& source,
                                     const reasoner::ModelList& targets,
                                     const alignment::Alignment& alignment) {
  Suggestion out;
  out.property = p;
  reasoner::ModelList own{&source};
  own.insert(own.end(), targets.begin(), targets.end());
  out.source = effective_domain_range(p, own);

  auto in_target = [&](rdf::Term t, bool cls) {
    if (!alignment.target_ns.empty()) return owl::in_namespaces(t, alignment.target_ns);
    const auto& s = source.signature();
    return cls ? s.classes.count(t) == 0 : s.object_properties.count(t) == 0;
  };
  owl::TermSet target_classes, target_props;
  for (const auto* m : targets) {
    for (auto c : m->signature().classes)
      if (in_target(c, true)) target_classes.insert(c);
    for (auto q : m->signature().object_properties)
      if (in_target(q, false) && q != p) target_props.insert(q);
  }
  std::vector<ClassExpression> target_exprs;
  for (auto c : target_classes) target_exprs.push_back(ClassExpression::named(c));

  // Translation through the source, the targets and the alignment together.
  owl::OntologyModel align_model = alignment.as_model();
  reasoner::ModelList merged = own;
  merged.push_back(&align_model);
  std::vector<ClassExpression> extras = target_exprs;
  extras.push_back(out.source.domain);
  extras.push_back(out.source.range);
  for (const auto* side : {&out.source.domain, &out.source.range})
    if (side->kind == owl::ExprKind::Union || side->kind == owl::ExprKind::DisjointUnion)
      extras.insert(extras.end(), side->operands.begin(), side->operands.end());
  reasoner::Reasoner translation(merged, {}, extras);

  auto translate_one = [&](const ClassExpression& c) {
    std::vector<ClassExpression> found;
    for (const auto& t : target_exprs)
      if (translation.subsumes(t, c)) found.push_back(t);
    std::vector<ClassExpression> minimal;
    for (const auto& t : found) {
      bool strictly_above = std::any_of(found.begin(), found.end(), [&](const ClassExpression& u) {
        return translation.subsumes(t, u) && !translation.subsumes(u, t);
      });
      if (!strictly_above) minimal.push_back(t);
    }
    return minimal;
  };
  auto translate = [&](const ClassExpression& c) {
    std::vector<std::vector<ClassExpression>> groups;
    if (c.is_thing()) return groups;
    if (c.kind == owl::ExprKind::Union || c.kind == owl::ExprKind::DisjointUnion) {
      for (const auto& op : c.operands) {
        groups.push_back(translate_one(op));
      }
    } else {
      groups.push_back(translate_one(c));
    }
    return groups;
  };
  out.domain_translation = translate(out.source.domain);
  out.range_translation = translate(out.source.range);
  auto incomplete = [](const std::vector<std::vector<ClassExpression>>& groups) {
    return groups.empty() || std::any_of(groups.begin(), groups.end(), [](const auto& g) { return g.empty(); });
  };
  out.notes.push_back("inverse target properties are not considered as candidates");
  if (incomplete(out.domain_translation) || incomplete(out.range_translation)) {
    out.unmapped_domain_or_range = true;
    out.notes.push_back("unmapped-domain-or-range: the domain or range of " + p.str() +
                        " is not mapped to a target class");
    return out;
  }

  // Compatibility is judged by the targets' own taxonomy.
  PropertyIndex target_index(targets);
  std::vector<std::pair<rdf::Term, DomainRange>> declared;
  std::vector<ClassExpression> target_extras = target_exprs;
  for (auto q : target_props) {
    DomainRange dr{target_index.resolve(q, true), target_index.resolve(q, false)};
    if (dr.domain.is_thing() || dr.range.is_thing()) continue;
    target_extras.push_back(dr.domain);
    target_extras.push_back(dr.range);
    declared.push_back({q, std::move(dr)});
  }
  reasoner::Reasoner target_reasoner(targets, {}, target_extras);

  auto match = [&](const std::vector<std::vector<ClassExpression>>& groups, const ClassExpression& side,
                   SideMatch& m) {
    bool first = true;
    for (const auto& g : groups) {
      auto it = std::find_if(g.begin(), g.end(),
                             [&](const ClassExpression& t) { return target_reasoner.subsumes(side, t); });
      if (it == g.end()) return false;
      if (first) m = SideMatch{*it, side};
      first = false;
    }
    return true;
  };
  auto exact = [](const std::vector<std::vector<ClassExpression>>& groups, const ClassExpression& side) {
    return groups.size() == 1 && std::find(groups[0].begin(), groups[0].end(), side) != groups[0].end();
  };

  for (const auto& [q, dr] : declared) {
    Candidate c;
    c.property = q;
    if (!match(out.domain_translation, dr.domain, c.domain) || !match(out.range_translation, dr.range, c.range))
      continue;
    if (exact(out.domain_translation, dr.domain) && exact(out.range_translation, dr.range)) {
      c.kind = MatchKind::Exact;
      c.domain.translated = dr.domain;
      c.range.translated = dr.range;
    }
    out.candidates.push_back(std::move(c));
  }
  std::stable_sort(out.candidates.begin(), out.candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return rdf::lexical_less(a.property, b.property);
  });
  return out;
}

}  // namespace provalign::matcher
