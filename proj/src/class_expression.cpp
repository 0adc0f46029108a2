#include <algorithm>

#include "provalign/error.h"
#include "provalign/owl.h"
#include "provalign/vocab.h"

namespace provalign::owl {

namespace {

int compare_terms(rdf::Term a, rdf::Term b) {
  if (a == b) return 0;
  return rdf::lexical_less(a, b) ? -1 : 1;
}

int compare(const SwrlAtom& a, const SwrlAtom& b);

int compare(const PropertyExpression& a, const PropertyExpression& b) {
  if (int c = compare_terms(a.iri, b.iri)) return c;
  return int(a.inverse) - int(b.inverse);
}

int compare(const ClassExpression& a, const ClassExpression& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = compare_terms(a.iri, b.iri)) return c;
  if (a.kind == ExprKind::SomeValuesFrom)
    if (int c = compare(a.property, b.property)) return c;
  std::size_t n = std::min(a.operands.size(), b.operands.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compare(a.operands[i], b.operands[i])) return c;
  if (a.operands.size() != b.operands.size()) return a.operands.size() < b.operands.size() ? -1 : 1;
  return 0;
}

template <class T>
int compare_seq(const std::vector<T>& a, const std::vector<T>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if constexpr (std::is_same_v<T, rdf::Term>) {
      if (int c = compare_terms(a[i], b[i])) return c;
    } else {
      if (int c = compare(a[i], b[i])) return c;
    }
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

int compare(const SwrlAtom& a, const SwrlAtom& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.kind == SwrlAtom::Kind::Class) {
    if (int c = compare(a.cls, b.cls)) return c;
  } else if (int c = compare(a.property, b.property)) {
    return c;
  }
  return compare_seq(a.args, b.args);
}

int compare(const Axiom& a, const Axiom& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (int c = compare_seq(a.classes, b.classes)) return c;
  if (int c = compare_seq(a.properties, b.properties)) return c;
  if (int c = compare_seq(a.terms, b.terms)) return c;
  return compare_terms(a.relation, b.relation);
}

int compare(const SwrlRule& a, const SwrlRule& b) {
  if (int c = compare_seq(a.body, b.body)) return c;
  return compare_seq(a.head, b.head);
}

std::string wrap(const ClassExpression& e, const rdf::PrefixMap& prefixes) {
  std::string s = render(e, prefixes);
  return e.is_named() ? s : "(" + s + ")";
}

std::string join_ops(const ClassExpression& e, const char* sep, const rdf::PrefixMap& prefixes) {
  std::string out;
  for (std::size_t i = 0; i < e.operands.size(); ++i) {
    if (i) out += sep;
    out += wrap(e.operands[i], prefixes);
  }
  return out;
}

}  // namespace

ClassExpression ClassExpression::named(rdf::Term iri) {
  ClassExpression e;
  e.kind = ExprKind::Named;
  e.iri = iri;
  return e;
}

static ClassExpression nary(ExprKind kind, std::vector<ClassExpression> ops) {
  if (ops.size() < 2)
    throw Error(ErrorCode::MalformedExpression, "n-ary class expression needs at least 2 operands");
  ClassExpression e;
  e.kind = kind;
  e.operands = std::move(ops);
  return e;
}

ClassExpression ClassExpression::intersection(std::vector<ClassExpression> ops) {
  return nary(ExprKind::Intersection, std::move(ops));
}
ClassExpression ClassExpression::union_of(std::vector<ClassExpression> ops) {
  return nary(ExprKind::Union, std::move(ops));
}
ClassExpression ClassExpression::disjoint_union(std::vector<ClassExpression> ops) {
  return nary(ExprKind::DisjointUnion, std::move(ops));
}

ClassExpression ClassExpression::complement(ClassExpression op) {
  ClassExpression e;
  e.kind = ExprKind::Complement;
  e.operands.push_back(std::move(op));
  return e;
}

ClassExpression ClassExpression::some(PropertyExpression p, ClassExpression filler) {
  ClassExpression e;
  e.kind = ExprKind::SomeValuesFrom;
  e.property = p;
  e.operands.push_back(std::move(filler));
  return e;
}

bool ClassExpression::is_thing() const { return is_named() && iri.value() == vocab::owl::Thing; }
bool ClassExpression::is_nothing() const {
  return is_named() && iri.value() == vocab::owl::Nothing;
}

void ClassExpression::collect(TermSet& classes, TermSet& properties) const {
  if (kind == ExprKind::Named) {
    classes.insert(iri);
    return;
  }
  if (kind == ExprKind::SomeValuesFrom) properties.insert(property.iri);
  for (const auto& op : operands) op.collect(classes, properties);
}

bool operator==(const ClassExpression& a, const ClassExpression& b) { return compare(a, b) == 0; }
bool operator<(const ClassExpression& a, const ClassExpression& b) { return compare(a, b) < 0; }
bool operator==(const SwrlAtom& a, const SwrlAtom& b) { return compare(a, b) == 0; }
bool operator<(const SwrlAtom& a, const SwrlAtom& b) { return compare(a, b) < 0; }
bool same_logic(const Axiom& a, const Axiom& b) { return compare(a, b) == 0; }
bool logic_less(const Axiom& a, const Axiom& b) { return compare(a, b) < 0; }
bool same_logic(const SwrlRule& a, const SwrlRule& b) { return compare(a, b) == 0; }
bool logic_less(const SwrlRule& a, const SwrlRule& b) { return compare(a, b) < 0; }

std::string render_term(rdf::Term t, const rdf::PrefixMap& prefixes) {
  if (!t.valid()) return "<invalid>";
  if (t.is_iri()) {
    std::string c = rdf::compact_iri(prefixes, t.value());
    return c.empty() ? "<" + t.value() + ">" : c;
  }
  return t.str();
}

std::string render(const PropertyExpression& p, const rdf::PrefixMap& prefixes) {
  return (p.inverse ? "inverse " : "") + render_term(p.iri, prefixes);
}

std::string render(const ClassExpression& e, const rdf::PrefixMap& prefixes) {
  switch (e.kind) {
    case ExprKind::Named: return render_term(e.iri, prefixes);
    case ExprKind::Intersection: return join_ops(e, " and ", prefixes);
    case ExprKind::Union: return join_ops(e, " or ", prefixes);
    case ExprKind::DisjointUnion: return "DisjointUnion(" + join_ops(e, ", ", prefixes) + ")";
    case ExprKind::Complement: return "not " + wrap(e.operand(), prefixes);
    case ExprKind::SomeValuesFrom: {
      std::string p = render(e.property, prefixes);
      if (e.property.inverse) p = "(" + p + ")";
      return p + " some " + wrap(e.filler(), prefixes);
    }
  }
  return {};
}

std::string_view to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::SubClassOf: return "sub-class-of";
    case AxiomKind::EquivalentClasses: return "equivalent-classes";
    case AxiomKind::DisjointClasses: return "disjoint-classes";
    case AxiomKind::DisjointUnion: return "disjoint-union";
    case AxiomKind::SubPropertyOf: return "sub-property-of";
    case AxiomKind::EquivalentProperties: return "equivalent-properties";
    case AxiomKind::InverseProperties: return "inverse-properties";
    case AxiomKind::PropertyDomain: return "property-domain";
    case AxiomKind::PropertyRange: return "property-range";
    case AxiomKind::PropertyChain: return "property-chain";
    case AxiomKind::ClassAssertion: return "class-assertion";
    case AxiomKind::PropertyAssertion: return "property-assertion";
    case AxiomKind::SkosMapping: return "skos-mapping";
  }
  return "?";
}

void Axiom::collect(TermSet& cls, TermSet& props, TermSet& individuals) const {
  if (kind == AxiomKind::SkosMapping) return;
  for (const auto& c : classes) c.collect(cls, props);
  for (const auto& p : properties) props.insert(p.iri);
  for (rdf::Term t : terms)
    if (!t.is_literal()) individuals.insert(t);
}

std::string render(const Axiom& a, const rdf::PrefixMap& px) {
  auto cls = [&](std::size_t i) { return render(a.classes.at(i), px); };
  auto prop = [&](std::size_t i) { return render(a.properties.at(i), px); };
  switch (a.kind) {
    case AxiomKind::SubClassOf: return cls(0) + " SubClassOf " + cls(1);
    case AxiomKind::EquivalentClasses: return cls(0) + " EquivalentTo " + cls(1);
    case AxiomKind::DisjointClasses: return cls(0) + " DisjointWith " + cls(1);
    case AxiomKind::DisjointUnion: {
      std::string out = cls(0) + " DisjointUnionOf ";
      for (std::size_t i = 1; i < a.classes.size(); ++i) out += (i > 1 ? ", " : "") + cls(i);
      return out;
    }
    case AxiomKind::SubPropertyOf: return prop(0) + " SubPropertyOf " + prop(1);
    case AxiomKind::EquivalentProperties: return prop(0) + " EquivalentTo " + prop(1);
    case AxiomKind::InverseProperties: return prop(0) + " InverseOf " + prop(1);
    case AxiomKind::PropertyDomain: return prop(0) + " Domain " + cls(0);
    case AxiomKind::PropertyRange: return prop(0) + " Range " + cls(0);
    case AxiomKind::PropertyChain: {
      std::string out;
      for (std::size_t i = 1; i < a.properties.size(); ++i) out += (i > 1 ? " o " : "") + prop(i);
      return out + " SubPropertyOf " + prop(0);
    }
    case AxiomKind::ClassAssertion:
      return render_term(a.terms.at(0), px) + " Type " + cls(0);
    case AxiomKind::PropertyAssertion:
      return prop(0) + "(" + render_term(a.terms.at(0), px) + ", " + render_term(a.terms.at(1), px) +
             ")";
    case AxiomKind::SkosMapping:
      return render_term(a.terms.at(0), px) + " " + render_term(a.relation, px) + " " +
             render_term(a.terms.at(1), px);
  }
  return {};
}

}  // namespace provalign::owl
