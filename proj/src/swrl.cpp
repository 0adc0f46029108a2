#include "owl_decode.h"
#include "provalign/error.h"
#include "provalign/vocab.h"

namespace provalign::owl {

namespace v = vocab;

namespace detail {

SwrlAtom Decoder::atom(rdf::Term node, TermSet& variables) {
  if (!node.is_blank() && !node.is_iri())
    throw Error(ErrorCode::MalformedExpression, "SWRL atom cannot be " + node.str());
  auto types = g_.objects(node, rdf::Term::iri(v::rdf::type));
  bool class_atom = false, property_atom = false;
  for (rdf::Term t : types) {
    if (t.value() == v::swrl::ClassAtom) {
      class_atom = true;
    } else if (t.value() == v::swrl::IndividualPropertyAtom) {
      property_atom = true;
    } else if (t.value().compare(0, v::kSwrl.size(), v::kSwrl) == 0) {
      throw Error(ErrorCode::UnsupportedAtom,
                  "SWRL atom type " + t.value().substr(v::kSwrl.size()) + " is not supported");
    }
  }
  if (!class_atom && !property_atom) {
    class_atom = g_.object(node, rdf::Term::iri(v::swrl::classPredicate)).has_value();
    property_atom = g_.object(node, rdf::Term::iri(v::swrl::propertyPredicate)).has_value();
  }
  if (class_atom == property_atom)
    throw Error(ErrorCode::MalformedExpression, "cannot tell the kind of SWRL atom " + node.str());
  claim(node, v::rdf::type);

  auto argument = [&](std::string_view pred) {
    rdf::Term arg = single(node, pred, "SWRL argument");
    if (arg.is_literal())
      throw Error(ErrorCode::UnsupportedAtom, "SWRL atom with data-valued argument " + arg.str());
    if (g_.contains({arg, rdf::Term::iri(v::rdf::type), rdf::Term::iri(v::swrl::Variable)}))
      variables.insert(arg);
    return arg;
  };

  SwrlAtom a;
  if (class_atom) {
    a.kind = SwrlAtom::Kind::Class;
    a.cls = class_expression(single(node, v::swrl::classPredicate, "swrl:classPredicate"));
    a.args = {argument(v::swrl::argument1)};
  } else {
    a.kind = SwrlAtom::Kind::Property;
    a.property = property_expression(single(node, v::swrl::propertyPredicate, "swrl:propertyPredicate"));
    a.args = {argument(v::swrl::argument1), argument(v::swrl::argument2)};
  }
  return a;
}

SwrlRule Decoder::rule(rdf::Term imp) {
  SwrlRule r;
  rdf::Term body = single(imp, v::swrl::body, "swrl:body");
  rdf::Term head = single(imp, v::swrl::head, "swrl:head");
  for (rdf::Term n : list(body)) r.body.push_back(atom(n, r.variables));
  TermSet body_vars = r.variables;
  for (rdf::Term n : list(head)) r.head.push_back(atom(n, r.variables));
  for (const auto& a : r.head)
    for (rdf::Term arg : a.args)
      if (r.variables.count(arg) && !body_vars.count(arg))
        throw Error(ErrorCode::UnsafeRule,
                    "head variable " + arg.str() + " does not occur in the rule body");
  for (std::size_t i : g_.about(imp)) {
    const auto& t = g_.triples()[i];
    const std::string& p = t.predicate.value();
    if (p == v::swrl::body || p == v::swrl::head) continue;
    staged_.push_back(i);
    if (p == v::rdf::type && t.object.value() == v::swrl::Imp) continue;
    r.annotations.emplace_back(t.predicate, t.object);
  }
  return r;
}

}  // namespace detail

std::vector<SwrlRule> extract_swrl_rules(const rdf::Graph& graph) {
  std::vector<SwrlRule> out;
  for (rdf::Term imp : graph.subjects(rdf::Term::iri(v::rdf::type), rdf::Term::iri(v::swrl::Imp)))
    out.push_back(detail::Decoder(graph).rule(imp));
  return out;
}

void SwrlRule::collect(TermSet& classes, TermSet& properties, TermSet& individuals) const {
  for (const auto* atoms : {&body, &head})
    for (const auto& a : *atoms) {
      if (a.kind == SwrlAtom::Kind::Class)
        a.cls.collect(classes, properties);
      else
        properties.insert(a.property.iri);
      for (rdf::Term arg : a.args)
        if (!variables.count(arg)) individuals.insert(arg);
    }
}

std::string render(const SwrlRule& r, const rdf::PrefixMap& prefixes) {
  auto arg = [&](rdf::Term t) {
    if (!r.variables.count(t)) return render_term(t, prefixes);
    const std::string& s = t.value();
    std::size_t cut = s.find_last_of("#/:");
    return "?" + (cut == std::string::npos ? s : s.substr(cut + 1));
  };
  auto atoms = [&](const std::vector<SwrlAtom>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (i) out += " ^ ";
      const auto& a = list[i];
      std::string name = a.kind == SwrlAtom::Kind::Class ? render(a.cls, prefixes)
                                                        : render(a.property, prefixes);
      if (a.kind == SwrlAtom::Kind::Class && !a.cls.is_named()) name = "(" + name + ")";
      out += name + "(";
      for (std::size_t j = 0; j < a.args.size(); ++j) out += (j ? ", " : "") + arg(a.args[j]);
      out += ")";
    }
    return out;
  };
  return atoms(r.body) + " -> " + atoms(r.head);
}

rdf::Term encode_swrl_rule(rdf::Graph& graph, const SwrlRule& r) {
  rdf::Term type = rdf::Term::iri(v::rdf::type);
  for (rdf::Term var : r.variables) graph.insert(var, type, rdf::Term::iri(v::swrl::Variable));
  auto atoms = [&](const std::vector<SwrlAtom>& list) {
    std::vector<rdf::Term> nodes;
    for (const auto& a : list) {
      rdf::Term node = graph.fresh_blank();
      if (a.kind == SwrlAtom::Kind::Class) {
        graph.insert(node, type, rdf::Term::iri(v::swrl::ClassAtom));
        graph.insert(node, rdf::Term::iri(v::swrl::classPredicate),
                     encode_class_expression(graph, a.cls));
        graph.insert(node, rdf::Term::iri(v::swrl::argument1), a.args.at(0));
      } else {
        graph.insert(node, type, rdf::Term::iri(v::swrl::IndividualPropertyAtom));
        graph.insert(node, rdf::Term::iri(v::swrl::propertyPredicate),
                     encode_property_expression(graph, a.property));
        graph.insert(node, rdf::Term::iri(v::swrl::argument1), a.args.at(0));
        graph.insert(node, rdf::Term::iri(v::swrl::argument2), a.args.at(1));
      }
      nodes.push_back(node);
    }
    return encode_list(graph, nodes);
  };
  rdf::Term imp = graph.fresh_blank();
  graph.insert(imp, type, rdf::Term::iri(v::swrl::Imp));
  graph.insert(imp, rdf::Term::iri(v::swrl::body), atoms(r.body));
  graph.insert(imp, rdf::Term::iri(v::swrl::head), atoms(r.head));
  for (const auto& [p, o] : r.annotations) graph.insert(imp, p, o);
  return imp;
}

}  // namespace provalign::owl
