#include <algorithm>
#include <unordered_set>

#include "owl_decode.h"
#include "provalign/error.h"
#include "provalign/vocab.h"

namespace provalign::owl {

namespace v = vocab;

namespace detail {

bool is_vocabulary(rdf::Term t) {
  if (!t.is_iri()) return false;
  const std::string& s = t.value();
  for (std::string_view ns : {v::kRdf, v::kRdfs, v::kOwl, v::kSwrl, v::kXsd})
    if (s.compare(0, ns.size(), ns) == 0) return true;
  return s.compare(0, 33, "http://www.w3.org/2003/11/swrlb#") == 0;
}

bool is_datatype(rdf::Term t) {
  if (!t.is_iri()) return false;
  const std::string& s = t.value();
  return s.compare(0, v::kXsd.size(), v::kXsd) == 0 || s == v::rdfs::Literal ||
         s == v::rdf::langString || s == "http://www.w3.org/1999/02/22-rdf-syntax-ns#PlainLiteral";
}

namespace {

constexpr std::string_view kUnsupportedKeys[] = {
    "allValuesFrom", "hasValue", "minCardinality", "maxCardinality", "cardinality",
    "minQualifiedCardinality", "maxQualifiedCardinality", "qualifiedCardinality", "oneOf",
    "hasSelf", "onClass", "onDataRange", "datatypeComplementOf", "withRestrictions",
    "onDatatype", "onProperties"};

bool is_unsupported_key(const std::string& p) {
  if (p.compare(0, v::kOwl.size(), v::kOwl) != 0) return false;
  std::string_view local = std::string_view(p).substr(v::kOwl.size());
  for (auto k : kUnsupportedKeys)
    if (local == k) return true;
  return false;
}

struct StackGuard {
  std::vector<rdf::Term>& stack;
  ~StackGuard() { stack.pop_back(); }
};

}  // namespace

void Decoder::claim(rdf::Term subject, std::string_view predicate) {
  for (std::size_t i : g_.about(subject))
    if (g_.triples()[i].predicate.value() == predicate) staged_.push_back(i);
}

void Decoder::commit() {
  if (used_)
    for (std::size_t i : staged_) (*used_)[i] = 1;
  staged_.clear();
}

rdf::Term Decoder::single(rdf::Term s, std::string_view p, const char* what) {
  auto objs = g_.objects(s, rdf::Term::iri(p));
  if (objs.size() != 1)
    throw Error(ErrorCode::MalformedExpression, std::string(what) + " of " + s.str() +
                                                   (objs.empty() ? " is missing" : " is ambiguous"));
  claim(s, p);
  return objs.front();
}

std::vector<rdf::Term> Decoder::list(rdf::Term head) {
  std::vector<rdf::Term> items;
  std::unordered_set<rdf::Term> seen;
  rdf::Term cur = head;
  while (!(cur.is_iri() && cur.value() == v::rdf::nil)) {
    if (!cur.is_blank())
      throw Error(ErrorCode::MalformedExpression, "list node " + cur.str() + " is not a blank node");
    if (!seen.insert(cur).second)
      throw Error(ErrorCode::MalformedExpression, "list starting at " + head.str() + " is cyclic");
    items.push_back(single(cur, v::rdf::first, "rdf:first"));
    rdf::Term next = single(cur, v::rdf::rest, "rdf:rest");
    for (std::size_t i : g_.about(cur)) {
      const auto& t = g_.triples()[i];
      if (t.predicate.value() == v::rdf::type &&
          (t.object.value() == "http://www.w3.org/1999/02/22-rdf-syntax-ns#List" ||
           t.object.value() == v::swrl::AtomList))
        staged_.push_back(i);
    }
    cur = next;
  }
  return items;
}

PropertyExpression Decoder::property_expression(rdf::Term node) {
  if (node.is_iri()) return PropertyExpression(node);
  if (!node.is_blank())
    throw Error(ErrorCode::MalformedExpression, "property expression cannot be " + node.str());
  if (std::find(stack_.begin(), stack_.end(), node) != stack_.end())
    throw Error(ErrorCode::CyclicExpression, "cyclic property expression at " + node.str());
  stack_.push_back(node);
  StackGuard guard{stack_};
  rdf::Term inner = single(node, v::owl::inverseOf, "owl:inverseOf");
  return property_expression(inner).inverted();
}

ClassExpression Decoder::class_expression(rdf::Term node) {
  if (node.is_iri()) {
    if (is_datatype(node))
      throw Error(ErrorCode::UnsupportedExpression,
                  "datatype " + node.str() + " used where a class was expected");
    return ClassExpression::named(node);
  }
  if (!node.is_blank())
    throw Error(ErrorCode::MalformedExpression, "literal " + node.str() + " is not a class");
  if (std::find(stack_.begin(), stack_.end(), node) != stack_.end())
    throw Error(ErrorCode::CyclicExpression, "cyclic class expression at " + node.str());
  stack_.push_back(node);
  StackGuard guard{stack_};

  int constructors = 0;
  bool unsupported = false, on_property = false;
  std::string_view which;
  for (std::size_t i : g_.about(node)) {
    const std::string& p = g_.triples()[i].predicate.value();
    if (p == v::owl::intersectionOf || p == v::owl::unionOf || p == v::owl::complementOf ||
        p == v::owl::disjointUnionOf || p == v::owl::someValuesFrom) {
      ++constructors;
      which = p;
    } else if (p == v::owl::onProperty) {
      on_property = true;
    } else if (is_unsupported_key(p)) {
      unsupported = true;
    }
  }
  if (unsupported)
    throw Error(ErrorCode::UnsupportedExpression,
                "class expression at " + node.str() + " uses an unsupported OWL construct");
  if (constructors == 0)
    throw Error(ErrorCode::MalformedExpression, node.str() + " is not a class expression");
  if (constructors > 1)
    throw Error(ErrorCode::MalformedExpression,
                "class expression at " + node.str() + " has more than one constructor");

  for (std::size_t i : g_.about(node)) {
    const auto& t = g_.triples()[i];
    if (t.predicate.value() == v::rdf::type &&
        (t.object.value() == v::owl::Class || t.object.value() == v::owl::Restriction))
      staged_.push_back(i);
  }

  auto operands = [&](std::string_view pred) {
    std::vector<ClassExpression> ops;
    for (rdf::Term item : list(single(node, pred, "operand list"))) ops.push_back(class_expression(item));
    return ops;
  };

  if (which == v::owl::someValuesFrom) {
    if (!on_property)
      throw Error(ErrorCode::MalformedExpression,
                  "restriction at " + node.str() + " has no owl:onProperty");
    PropertyExpression p = property_expression(single(node, v::owl::onProperty, "owl:onProperty"));
    ClassExpression filler = class_expression(single(node, v::owl::someValuesFrom, "filler"));
    return ClassExpression::some(p, std::move(filler));
  }
  if (on_property)
    throw Error(ErrorCode::MalformedExpression,
                "owl:onProperty at " + node.str() + " without a supported restriction");
  if (which == v::owl::complementOf)
    return ClassExpression::complement(
        class_expression(single(node, v::owl::complementOf, "owl:complementOf")));

  std::vector<ClassExpression> ops = operands(which);
  if (ops.empty())
    throw Error(ErrorCode::MalformedExpression, "empty operand list at " + node.str());
  if (which == v::owl::intersectionOf) {
    if (ops.size() == 1) return std::move(ops.front());
    return ClassExpression::intersection(std::move(ops));
  }
  if (which == v::owl::unionOf) {
    if (ops.size() == 1) return std::move(ops.front());
    return ClassExpression::union_of(std::move(ops));
  }
  if (ops.size() < 2)
    throw Error(ErrorCode::MalformedExpression, "disjoint union at " + node.str() + " needs 2 operands");
  return ClassExpression::disjoint_union(std::move(ops));
}

}  // namespace detail

using detail::Decoder;

ClassExpression parse_class_expression(const rdf::Graph& graph, rdf::Term node) {
  return Decoder(graph).class_expression(node);
}

PropertyExpression parse_property_expression(const rdf::Graph& graph, rdf::Term node) {
  return Decoder(graph).property_expression(node);
}

std::vector<rdf::Term> read_list(const rdf::Graph& graph, rdf::Term head) {
  return Decoder(graph).list(head);
}

namespace {

bool starts_with(const std::string& s, std::string_view prefix) {
  return s.compare(0, prefix.size(), prefix) == 0;
}

bool is_skos_mapping(const std::string& p) {
  if (!starts_with(p, v::kSkos)) return false;
  std::string_view local = std::string_view(p).substr(v::kSkos.size());
  return local == "exactMatch" || local == "closeMatch" || local == "broadMatch" ||
         local == "narrowMatch" || local == "relatedMatch" || local == "mappingRelation";
}

constexpr std::string_view kCharacteristics[] = {
    "TransitiveProperty", "FunctionalProperty", "InverseFunctionalProperty",
    "SymmetricProperty", "AsymmetricProperty", "ReflexiveProperty", "IrreflexiveProperty"};

class Extractor {
 public:
  Extractor(const rdf::Graph& g) : g_(g), used_(g.size(), 0), dec_(g, &used_) {}

  OntologyModel run(std::string label) {
    header();
    declarations();
    reified_axioms();
    rules();
    all_disjoint();
    // IRI subjects first so that expression nodes they reference are
    // claimed before blank subjects are read as individuals.
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < g_.size(); ++i) {
        const auto& t = g_.triples()[i];
        if (used_[i] || t.subject.is_blank() != (pass == 1)) continue;
        plain_triple(i);
      }

    std::vector<rdf::Triple> unmodeled;
    for (std::size_t i = 0; i < g_.size(); ++i)
      if (!used_[i]) unmodeled.push_back(g_.triples()[i]);

    OntologyModel model(merge_duplicates(), std::move(rules_), std::move(unmodeled),
                        std::move(decl_), std::move(label));
    model.ontology_iri = ontology_iri_;
    model.version_iri = version_iri_;
    model.ontology_annotations = std::move(ontology_annotations_);
    model.labels = std::move(labels_);
    model.prefixes = g_.prefixes();
    return model;
  }

 private:
  bool is_annotation_predicate(rdf::Term p) const {
    const std::string& s = p.value();
    if (s == v::rdfs::label || s == v::rdfs::comment || s == v::rdfs::seeAlso ||
        s == v::rdfs::isDefinedBy || s == v::owl::versionInfo || s == v::owl::deprecated ||
        s == "http://www.w3.org/2002/07/owl#priorVersion" ||
        s == "http://www.w3.org/2002/07/owl#backwardCompatibleWith" ||
        s == "http://www.w3.org/2002/07/owl#incompatibleWith")
      return true;
    if (starts_with(s, v::kDc) || starts_with(s, v::kDcterms) || starts_with(s, v::kSssom))
      return true;
    if (starts_with(s, v::kSkos) && !is_skos_mapping(s)) return true;
    return decl_.annotation_properties.count(p) != 0;
  }

  void header() {
    for (rdf::Term s : g_.subjects(rdf::Term::iri(v::rdf::type), rdf::Term::iri(v::owl::Ontology))) {
      if (!ontology_iri_.valid() && s.is_iri()) ontology_iri_ = s;
      for (std::size_t i : g_.about(s)) {
        const auto& t = g_.triples()[i];
        used_[i] = 1;
        if (t.predicate.value() == v::rdf::type && t.object.value() == v::owl::Ontology) continue;
        if (t.predicate.value() == v::owl::versionIRI && !version_iri_.valid()) version_iri_ = t.object;
        ontology_annotations_.emplace_back(t.predicate, t.object);
      }
    }
  }

  void declarations() {
    for (std::size_t i = 0; i < g_.size(); ++i) {
      const auto& t = g_.triples()[i];
      if (t.predicate.value() != v::rdf::type || !t.object.is_iri()) continue;
      const std::string& o = t.object.value();
      if (o == v::swrl::Variable) {
        used_[i] = 1;
        continue;
      }
      if (!t.subject.is_iri()) continue;
      if (o == v::owl::Class || o == v::rdfs::Class) {
        decl_.classes.insert(t.subject);
      } else if (o == v::owl::ObjectProperty) {
        decl_.object_properties.insert(t.subject);
      } else if (o == v::owl::DatatypeProperty) {
        decl_.data_properties.insert(t.subject);
      } else if (o == v::owl::AnnotationProperty) {
        decl_.annotation_properties.insert(t.subject);
      } else if (o == v::owl::NamedIndividual) {
        decl_.individuals.insert(t.subject);
      } else if (o == v::rdf::Property) {
        // untyped property; category is decided by use
      } else if (starts_with(o, v::kOwl) &&
                 std::find(std::begin(kCharacteristics), std::end(kCharacteristics),
                           std::string_view(o).substr(v::kOwl.size())) != std::end(kCharacteristics)) {
        // Characteristics beyond inverse are outside the modeled fragment;
        // the triple stays unmodeled but the property is still declared.
        decl_.object_properties.insert(t.subject);
        continue;
      } else {
        continue;
      }
      used_[i] = 1;
    }
  }

  void reified_axioms() {
    for (rdf::Term node : g_.subjects(rdf::Term::iri(v::rdf::type), rdf::Term::iri(v::owl::Axiom))) {
      auto src = g_.objects(node, rdf::Term::iri(v::owl::annotatedSource));
      auto prop = g_.objects(node, rdf::Term::iri(v::owl::annotatedProperty));
      auto tgt = g_.objects(node, rdf::Term::iri(v::owl::annotatedTarget));
      if (src.size() != 1 || prop.size() != 1 || tgt.size() != 1 || !prop[0].is_iri()) continue;
      std::vector<Annotation> notes;
      for (std::size_t i : g_.about(node)) {
        const auto& t = g_.triples()[i];
        const std::string& p = t.predicate.value();
        if (p == v::owl::annotatedSource || p == v::owl::annotatedProperty ||
            p == v::owl::annotatedTarget ||
            (p == v::rdf::type && t.object.value() == v::owl::Axiom))
          continue;
        notes.emplace_back(t.predicate, t.object);
      }
      auto produced = decode(src[0], prop[0], tgt[0]);
      if (!produced) {
        dec_.rollback();
        continue;
      }
      for (std::size_t i : g_.about(node)) used_[i] = 1;
      dec_.commit();
      for (auto& a : *produced) {
        a.annotations = notes;
        axioms_.push_back(std::move(a));
      }
    }
  }

  void rules() {
    for (rdf::Term imp : g_.subjects(rdf::Term::iri(v::rdf::type), rdf::Term::iri(v::swrl::Imp))) {
      try {
        rules_.push_back(dec_.rule(imp));
        dec_.commit();
      } catch (const Error& e) {
        dec_.rollback();
        if (e.code() != ErrorCode::UnsupportedAtom && e.code() != ErrorCode::UnsupportedExpression)
          throw;
      }
    }
  }

  void all_disjoint() {
    for (rdf::Term node :
         g_.subjects(rdf::Term::iri(v::rdf::type), rdf::Term::iri(v::owl::AllDisjointClasses))) {
      try {
        std::vector<ClassExpression> members;
        auto lists = g_.objects(node, rdf::Term::iri(v::owl::members));
        if (lists.size() != 1)
          throw Error(ErrorCode::MalformedExpression, "owl:AllDisjointClasses without one member list");
        dec_.claim(node, v::owl::members);
        dec_.claim(node, v::rdf::type);
        for (rdf::Term m : dec_.list(lists[0])) members.push_back(dec_.class_expression(m));
        for (std::size_t a = 0; a < members.size(); ++a)
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            Axiom ax;
            ax.kind = AxiomKind::DisjointClasses;
            ax.classes = {members[a], members[b]};
            axioms_.push_back(std::move(ax));
          }
        dec_.commit();
      } catch (const Error& e) {
        dec_.rollback();
        if (e.code() != ErrorCode::UnsupportedExpression) throw;
      }
    }
  }

  void plain_triple(std::size_t i) {
    const auto& t = g_.triples()[i];
    const std::string& p = t.predicate.value();
    if (is_annotation_predicate(t.predicate) && !t.subject.is_blank()) {
      used_[i] = 1;
      if ((p == v::rdfs::label || p == "http://www.w3.org/2004/02/skos/core#prefLabel") &&
          t.object.is_literal())
        labels_.emplace(t.subject, t.object.value());
      return;
    }
    auto produced = decode(t.subject, t.predicate, t.object);
    if (!produced) {
      dec_.rollback();
      return;
    }
    dec_.claim_index(i);
    dec_.commit();
    for (auto& a : *produced) axioms_.push_back(std::move(a));
  }

  // Decodes one (possibly virtual) triple. Returns nullopt when the triple
  // is not a recognized axiom or uses constructs outside the fragment.
  std::optional<std::vector<Axiom>> decode(rdf::Term s, rdf::Term pred, rdf::Term o) {
    const std::string& p = pred.value();
    Axiom a;
    auto cls = [&](rdf::Term n) { return dec_.class_expression(n); };
    auto prop = [&](rdf::Term n) { return dec_.property_expression(n); };
    try {
      if (p == v::rdfs::subClassOf) {
        a.kind = AxiomKind::SubClassOf;
        a.classes = {cls(s), cls(o)};
      } else if (p == v::owl::equivalentClass) {
        a.kind = AxiomKind::EquivalentClasses;
        a.classes = {cls(s), cls(o)};
      } else if (p == v::owl::disjointWith) {
        a.kind = AxiomKind::DisjointClasses;
        a.classes = {cls(s), cls(o)};
      } else if (p == v::owl::disjointUnionOf) {
        if (!s.is_iri()) return std::nullopt;  // expression node, claimed by its user
        a.kind = AxiomKind::DisjointUnion;
        a.classes.push_back(ClassExpression::named(s));
        for (rdf::Term m : dec_.list(o)) a.classes.push_back(cls(m));
        if (a.classes.size() < 3)
          throw Error(ErrorCode::MalformedExpression, "disjoint union of " + s.str() + " needs 2 operands");
      } else if (p == v::rdfs::subPropertyOf || p == v::owl::equivalentProperty) {
        if (is_data_or_annotation(s) || is_data_or_annotation(o)) return std::nullopt;
        a.kind = p == v::rdfs::subPropertyOf ? AxiomKind::SubPropertyOf
                                               : AxiomKind::EquivalentProperties;
        a.properties = {prop(s), prop(o)};
      } else if (p == v::owl::inverseOf) {
        if (!s.is_iri()) return std::nullopt;  // inverse property expression node
        a.kind = AxiomKind::InverseProperties;
        a.properties = {prop(s), prop(o)};
      } else if (p == v::rdfs::domain || p == v::rdfs::range) {
        if (decl_.annotation_properties.count(s)) return std::nullopt;
        bool data = decl_.data_properties.count(s) != 0;
        // Data property domains constrain individuals and are modeled;
        // data ranges are datatypes and are not.
        if (p == v::rdfs::range && (data || detail::is_datatype(o))) return std::nullopt;
        a.kind = p == v::rdfs::domain ? AxiomKind::PropertyDomain : AxiomKind::PropertyRange;
        a.properties = {prop(s)};
        a.classes = {cls(o)};
      } else if (p == v::owl::propertyChainAxiom) {
        a.kind = AxiomKind::PropertyChain;
        a.properties.push_back(prop(s));
        for (rdf::Term m : dec_.list(o)) a.properties.push_back(prop(m));
        if (a.properties.size() < 2)
          throw Error(ErrorCode::MalformedExpression, "empty property chain on " + s.str());
      } else if (p == v::rdf::type) {
        if (detail::is_vocabulary(o) && !(o.value() == v::owl::Thing || o.value() == v::owl::Nothing))
          return std::nullopt;
        a.kind = AxiomKind::ClassAssertion;
        a.classes = {cls(o)};
        a.terms = {s};
      } else if (is_skos_mapping(p)) {
        a.kind = AxiomKind::SkosMapping;
        a.relation = pred;
        a.terms = {s, o};
      } else if (detail::is_vocabulary(pred) || is_annotation_predicate(pred)) {
        return std::nullopt;
      } else {
        a.kind = AxiomKind::PropertyAssertion;
        a.properties = {PropertyExpression(pred)};
        a.terms = {s, o};
      }
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedExpression) return std::nullopt;
      throw;
    }
    std::vector<Axiom> out;
    out.push_back(std::move(a));
    return out;
  }

  bool is_data_or_annotation(rdf::Term t) const {
    return decl_.data_properties.count(t) || decl_.annotation_properties.count(t);
  }

  // Collapses logically identical axioms, keeping the first position and
  // concatenating annotations (a reified axiom usually repeats a plain one).
  std::vector<Axiom> merge_duplicates() {
    std::vector<Axiom> out;
    std::vector<std::size_t> order(axioms_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return logic_less(axioms_[a], axioms_[b]); });
    std::vector<std::size_t> keep_of(axioms_.size());
    std::vector<char> keep(axioms_.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) {
      std::size_t i = order[k];
      if (k > 0 && same_logic(axioms_[order[k - 1]], axioms_[i])) {
        std::size_t leader = keep_of[order[k - 1]];
        keep_of[i] = leader;
        for (auto& n : axioms_[i].annotations)
          if (std::find(axioms_[leader].annotations.begin(), axioms_[leader].annotations.end(), n) ==
              axioms_[leader].annotations.end())
            axioms_[leader].annotations.push_back(n);
      } else {
        keep_of[i] = i;
        keep[i] = 1;
      }
    }
    for (std::size_t i = 0; i < axioms_.size(); ++i)
      if (keep[i]) out.push_back(std::move(axioms_[i]));
    return out;
  }

  const rdf::Graph& g_;
  std::vector<char> used_;
  Decoder dec_;
  Declarations decl_;
  std::vector<Axiom> axioms_;
  std::vector<SwrlRule> rules_;
  rdf::Term ontology_iri_, version_iri_;
  std::vector<Annotation> ontology_annotations_;
  std::map<rdf::Term, std::string, TermOrder> labels_;
};

}  // namespace

OntologyModel extract_axioms(const rdf::Graph& graph, std::string label) {
  return Extractor(graph).run(std::move(label));
}

// ---- encoding ------------------------------------------------------------

rdf::Term encode_list(rdf::Graph& graph, const std::vector<rdf::Term>& items) {
  rdf::Term nil = rdf::Term::iri(v::rdf::nil);
  if (items.empty()) return nil;
  rdf::Term first = rdf::Term::iri(v::rdf::first), rest = rdf::Term::iri(v::rdf::rest);
  rdf::Term head = graph.fresh_blank(), cell = head;
  for (std::size_t i = 0; i < items.size(); ++i) {
    graph.insert(cell, first, items[i]);
    rdf::Term next = i + 1 < items.size() ? graph.fresh_blank() : nil;
    graph.insert(cell, rest, next);
    cell = next;
  }
  return head;
}

rdf::Term encode_property_expression(rdf::Graph& graph, const PropertyExpression& p) {
  if (!p.inverse) return p.iri;
  rdf::Term node = graph.fresh_blank();
  graph.insert(node, rdf::Term::iri(v::owl::inverseOf), p.iri);
  return node;
}

rdf::Term encode_class_expression(rdf::Graph& graph, const ClassExpression& e) {
  if (e.is_named()) return e.iri;
  rdf::Term node = graph.fresh_blank();
  rdf::Term type = rdf::Term::iri(v::rdf::type);
  auto ops = [&] {
    std::vector<rdf::Term> items;
    for (const auto& op : e.operands) items.push_back(encode_class_expression(graph, op));
    return encode_list(graph, items);
  };
  switch (e.kind) {
    case ExprKind::Intersection:
      graph.insert(node, type, rdf::Term::iri(v::owl::Class));
      graph.insert(node, rdf::Term::iri(v::owl::intersectionOf), ops());
      break;
    case ExprKind::Union:
      graph.insert(node, type, rdf::Term::iri(v::owl::Class));
      graph.insert(node, rdf::Term::iri(v::owl::unionOf), ops());
      break;
    case ExprKind::DisjointUnion:
      graph.insert(node, type, rdf::Term::iri(v::owl::Class));
      graph.insert(node, rdf::Term::iri(v::owl::disjointUnionOf), ops());
      break;
    case ExprKind::Complement:
      graph.insert(node, type, rdf::Term::iri(v::owl::Class));
      graph.insert(node, rdf::Term::iri(v::owl::complementOf),
                   encode_class_expression(graph, e.operand()));
      break;
    case ExprKind::SomeValuesFrom:
      graph.insert(node, type, rdf::Term::iri(v::owl::Restriction));
      graph.insert(node, rdf::Term::iri(v::owl::onProperty),
                   encode_property_expression(graph, e.property));
      graph.insert(node, rdf::Term::iri(v::owl::someValuesFrom),
                   encode_class_expression(graph, e.filler()));
      break;
    case ExprKind::Named:
      break;
  }
  return node;
}

rdf::Triple axiom_triple(rdf::Graph& graph, const Axiom& a) {
  auto cls = [&](std::size_t i) { return encode_class_expression(graph, a.classes.at(i)); };
  auto prop = [&](std::size_t i) { return encode_property_expression(graph, a.properties.at(i)); };
  auto iri = [](std::string_view s) { return rdf::Term::iri(s); };
  switch (a.kind) {
    case AxiomKind::SubClassOf: return {cls(0), iri(v::rdfs::subClassOf), cls(1)};
    case AxiomKind::EquivalentClasses: return {cls(0), iri(v::owl::equivalentClass), cls(1)};
    case AxiomKind::DisjointClasses: return {cls(0), iri(v::owl::disjointWith), cls(1)};
    case AxiomKind::DisjointUnion: {
      std::vector<rdf::Term> items;
      for (std::size_t i = 1; i < a.classes.size(); ++i) items.push_back(cls(i));
      return {a.classes[0].iri, iri(v::owl::disjointUnionOf), encode_list(graph, items)};
    }
    case AxiomKind::SubPropertyOf: return {prop(0), iri(v::rdfs::subPropertyOf), prop(1)};
    case AxiomKind::EquivalentProperties: return {prop(0), iri(v::owl::equivalentProperty), prop(1)};
    case AxiomKind::InverseProperties: return {prop(0), iri(v::owl::inverseOf), prop(1)};
    case AxiomKind::PropertyDomain: return {prop(0), iri(v::rdfs::domain), cls(0)};
    case AxiomKind::PropertyRange: return {prop(0), iri(v::rdfs::range), cls(0)};
    case AxiomKind::PropertyChain: {
      std::vector<rdf::Term> items;
      for (std::size_t i = 1; i < a.properties.size(); ++i) items.push_back(prop(i));
      return {prop(0), iri(v::owl::propertyChainAxiom), encode_list(graph, items)};
    }
    case AxiomKind::ClassAssertion: return {a.terms.at(0), iri(v::rdf::type), cls(0)};
    case AxiomKind::PropertyAssertion:
      if (a.properties.at(0).inverse) return {a.terms.at(1), a.properties[0].iri, a.terms.at(0)};
      return {a.terms.at(0), a.properties[0].iri, a.terms.at(1)};
    case AxiomKind::SkosMapping: return {a.terms.at(0), a.relation, a.terms.at(1)};
  }
  throw Error(ErrorCode::MalformedExpression, "unknown axiom kind");
}

void encode_axiom(rdf::Graph& graph, const Axiom& a) { graph.insert(axiom_triple(graph, a)); }

}  // namespace provalign::owl
