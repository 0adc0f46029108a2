#include <algorithm>

#include "provalign/error.h"
#include "provalign/vocab.h"
#include "tbox.h"

namespace provalign::reasoner {

using owl::AxiomKind;
using owl::ExprKind;

namespace {

std::string key_of(ExprKind kind, rdf::Term iri, const std::vector<std::uint32_t>& ops,
                   std::uint32_t node) {
  std::string k(1, static_cast<char>('A' + static_cast<int>(kind)));
  if (kind == ExprKind::Named) return k + std::to_string(iri.id());
  if (kind == ExprKind::SomeValuesFrom) k += std::to_string(node) + ":";
  for (auto op : ops) k += std::to_string(op) + ",";
  return k;
}

}  // namespace

std::uint32_t TBox::intern(const owl::ClassExpression& e) {
  Expr x;
  x.kind = e.kind;
  x.iri = e.iri;
  for (const auto& op : e.operands) x.ops.push_back(intern(op));
  if (e.kind == ExprKind::SomeValuesFrom) x.node = node(e.property);
  if (e.kind == ExprKind::Intersection || e.kind == ExprKind::Union ||
      e.kind == ExprKind::DisjointUnion) {
    std::sort(x.ops.begin(), x.ops.end());
    x.ops.erase(std::unique(x.ops.begin(), x.ops.end()), x.ops.end());
    if (x.ops.size() == 1 && e.kind != ExprKind::DisjointUnion) return x.ops.front();
  }
  std::string key = key_of(x.kind, x.iri, x.ops, x.node);
  if (auto it = expr_index.find(key); it != expr_index.end()) return it->second;
  auto id = static_cast<std::uint32_t>(exprs.size());
  owl::ClassExpression canonical = e;
  if (x.kind != ExprKind::Named && x.kind != ExprKind::Complement &&
      x.kind != ExprKind::SomeValuesFrom) {
    canonical.operands.clear();
    for (auto op : x.ops) canonical.operands.push_back(expr_value[op]);
  }
  exprs.push_back(std::move(x));
  expr_value.push_back(std::move(canonical));
  expr_index.emplace(std::move(key), id);
  return id;
}

std::uint32_t TBox::find(const owl::ClassExpression& e) const {
  std::vector<std::uint32_t> ops;
  for (const auto& op : e.operands) {
    std::uint32_t id = find(op);
    if (id == npos) return npos;
    ops.push_back(id);
  }
  std::uint32_t nd = 0;
  if (e.kind == ExprKind::SomeValuesFrom) {
    std::uint32_t p = find_prop(e.property.iri);
    if (p == npos) return npos;
    nd = 2 * p + (e.property.inverse ? 1 : 0);
  }
  if (e.kind == ExprKind::Intersection || e.kind == ExprKind::Union ||
      e.kind == ExprKind::DisjointUnion) {
    std::sort(ops.begin(), ops.end());
    ops.erase(std::unique(ops.begin(), ops.end()), ops.end());
    if (ops.size() == 1 && e.kind != ExprKind::DisjointUnion) return ops.front();
  }
  auto it = expr_index.find(key_of(e.kind, e.iri, ops, nd));
  return it == expr_index.end() ? npos : it->second;
}

std::uint32_t TBox::prop_index(rdf::Term p) {
  auto [it, fresh] = prop_ids.emplace(p, static_cast<std::uint32_t>(props.size()));
  if (fresh) props.push_back(p);
  return it->second;
}

std::uint32_t TBox::find_prop(rdf::Term p) const {
  auto it = prop_ids.find(p);
  return it == prop_ids.end() ? npos : it->second;
}

std::uint32_t TBox::add_text(std::string s) {
  axiom_text.push_back(std::move(s));
  return static_cast<std::uint32_t>(axiom_text.size() - 1);
}

TBox::TBox(const ModelList& models, const std::vector<owl::ClassExpression>& extra) {
  thing = intern(owl::ClassExpression::named(rdf::Term::iri(vocab::owl::Thing)));
  nothing = intern(owl::ClassExpression::named(rdf::Term::iri(vocab::owl::Nothing)));
  for (const auto* m : models)
    for (const auto& [k, ns] : m->prefixes) prefixes.emplace(k, ns);
  // Pass 1 interns everything so that tables can be sized once.
  for (const auto* m : models) {
    for (rdf::Term c : m->declarations().classes) intern(owl::ClassExpression::named(c));
    for (rdf::Term p : m->declarations().object_properties) prop_index(p);
  }
  for (const auto& e : extra) intern(e);
  std::vector<std::pair<const owl::Axiom*, std::uint32_t>> pending;
  for (const auto* m : models) {
    for (const auto& a : m->axioms()) {
      if (!a.is_logical()) continue;
      for (const auto& c : a.classes) intern(c);
      for (const auto& p : a.properties) prop_index(p.iri);
    }
    for (const auto& r : m->rules())
      for (const auto* atoms : {&r.body, &r.head})
        for (const auto& at : *atoms) {
          if (at.kind == owl::SwrlAtom::Kind::Class)
            intern(at.cls);
          else
            prop_index(at.property.iri);
        }
  }
  grow();
  for (const auto* m : models) {
    for (const auto& a : m->axioms())
      if (a.is_logical()) add_axiom(a);
    for (const auto& r : m->rules()) add_rule(r);
  }
  finish();
}

void TBox::grow() {
  std::size_t n = exprs.size(), nodes = 2 * props.size();
  class_edges.resize(n);
  union_parents.resize(n);
  compositions.resize(n);
  exists_by_filler.resize(n);
  rule_class_atoms.resize(n);
  prop_edges.resize(nodes);
  domains.resize(nodes);
  chains_by_node.resize(nodes);
  exists_by_node.resize(nodes);
  rule_prop_atoms.resize(props.size());
}

void TBox::add_axiom(const owl::Axiom& a) {
  auto text = [&] { return add_text(owl::render(a, prefixes)); };
  auto edge = [&](std::uint32_t from, std::uint32_t to, const char* rule, std::uint32_t ax) {
    if (from != to) class_edges[from].push_back({to, rule, ax});
  };
  auto pedge = [&](std::uint32_t from, std::uint32_t to, const char* rule, std::uint32_t ax) {
    if (from == to) return;
    prop_edges[from].push_back({to, rule, ax});
    prop_edges[inverse_node(from)].push_back({inverse_node(to), rule, ax});
  };
  switch (a.kind) {
    case AxiomKind::SubClassOf: {
      edge(intern(a.classes[0]), intern(a.classes[1]), rule::subclass, text());
      break;
    }
    case AxiomKind::EquivalentClasses: {
      std::uint32_t x = intern(a.classes[0]), y = intern(a.classes[1]), t = text();
      edge(x, y, rule::equivalence, t);
      edge(y, x, rule::equivalence, t);
      for (std::uint32_t side : {x, y}) {
        std::uint32_t other = side == x ? y : x;
        if (exprs[side].kind == ExprKind::Named && exprs[other].kind == ExprKind::Intersection)
          for (std::uint32_t op : exprs[other].ops) compositions[op].push_back(other);
      }
      break;
    }
    case AxiomKind::DisjointClasses:
      disjoint.push_back({intern(a.classes[0]), intern(a.classes[1]), text()});
      break;
    case AxiomKind::DisjointUnion: {
      std::uint32_t t = text(), c = intern(a.classes[0]);
      std::vector<owl::ClassExpression> ops(a.classes.begin() + 1, a.classes.end());
      std::uint32_t u = intern(owl::ClassExpression::union_of(ops));
      grow();
      edge(c, u, rule::disjoint_union, t);
      edge(u, c, rule::disjoint_union, t);
      for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j)
          disjoint.push_back({intern(ops[i]), intern(ops[j]), t});
      break;
    }
    case AxiomKind::SubPropertyOf:
      pedge(node(a.properties[0]), node(a.properties[1]), rule::subproperty, text());
      break;
    case AxiomKind::EquivalentProperties: {
      std::uint32_t t = text(), x = node(a.properties[0]), y = node(a.properties[1]);
      pedge(x, y, rule::equivalent_property, t);
      pedge(y, x, rule::equivalent_property, t);
      break;
    }
    case AxiomKind::InverseProperties: {
      std::uint32_t t = text(), x = node(a.properties[0]), y = node(a.properties[1]);
      pedge(x, inverse_node(y), rule::inverse, t);
      pedge(y, inverse_node(x), rule::inverse, t);
      break;
    }
    case AxiomKind::PropertyDomain:
      domains[node(a.properties[0])].push_back({intern(a.classes[0]), text()});
      break;
    case AxiomKind::PropertyRange:
      domains[inverse_node(node(a.properties[0]))].push_back({intern(a.classes[0]), text()});
      break;
    case AxiomKind::PropertyChain: {
      Chain c;
      c.super_node = node(a.properties[0]);
      for (std::size_t i = 1; i < a.properties.size(); ++i) c.nodes.push_back(node(a.properties[i]));
      c.axiom = text();
      auto id = static_cast<std::uint32_t>(chains.size());
      for (std::uint32_t i = 0; i < c.nodes.size(); ++i) chains_by_node[c.nodes[i]].push_back({id, i});
      chains.push_back(std::move(c));
      break;
    }
    case AxiomKind::ClassAssertion:
    case AxiomKind::PropertyAssertion: {
      auto found = lookup_assertion(a);
      if (found) {
        found->axiom = text();
        assertions.push_back(*found);
      }
      break;
    }
    case AxiomKind::SkosMapping:
      break;
  }
}

std::optional<TBox::Assertion> TBox::lookup_assertion(const owl::Axiom& a) const {
  Assertion out;
  if (a.kind == AxiomKind::ClassAssertion) {
    out.membership = true;
    out.x = a.terms.at(0);
    out.expr = find(a.classes.at(0));
    if (out.expr == npos) return std::nullopt;
    return out;
  }
  if (a.kind != AxiomKind::PropertyAssertion) return std::nullopt;
  std::uint32_t p = find_prop(a.properties.at(0).iri);
  if (p == npos) return std::nullopt;
  out.membership = false;
  out.node = 2 * p;
  out.x = a.terms.at(0);
  out.y = a.terms.at(1);
  if (a.properties[0].inverse) std::swap(out.x, out.y);
  if (out.x.is_literal()) return std::nullopt;
  return out;
}

void TBox::add_rule(const owl::SwrlRule& r) {
  CompiledRule cr;
  std::unordered_map<rdf::Term, std::uint32_t> vars;
  auto compile = [&](const std::vector<owl::SwrlAtom>& atoms) {
    std::vector<RuleAtom> out;
    for (const auto& at : atoms) {
      RuleAtom ra;
      ra.is_class = at.kind == owl::SwrlAtom::Kind::Class;
      if (ra.is_class)
        ra.expr = intern(at.cls);
      else
        ra.node = node(at.property);
      for (rdf::Term arg : at.args) {
        RuleArg x;
        if (r.is_variable(arg)) {
          x.variable = true;
          auto [it, fresh] = vars.emplace(arg, static_cast<std::uint32_t>(vars.size()));
          x.var = it->second;
        } else {
          x.constant = arg;
        }
        ra.args.push_back(x);
      }
      out.push_back(std::move(ra));
    }
    return out;
  };
  cr.body = compile(r.body);
  cr.head = compile(r.head);
  cr.variables = static_cast<std::uint32_t>(vars.size());
  cr.axiom = add_text(owl::render(r, prefixes));
  auto id = static_cast<std::uint32_t>(rules.size());
  for (std::uint32_t i = 0; i < cr.body.size(); ++i) {
    if (cr.body[i].is_class)
      rule_class_atoms[cr.body[i].expr].push_back({id, i});
    else
      rule_prop_atoms[cr.body[i].node / 2].push_back({id, i});
  }
  rules.push_back(std::move(cr));
}

void TBox::finish() {
  grow();
  std::size_t n = exprs.size();
  for (std::uint32_t e = 0; e < n; ++e) {
    const Expr& x = exprs[e];
    switch (x.kind) {
      case ExprKind::Union:
      case ExprKind::DisjointUnion:
        for (auto op : x.ops) union_parents[op].push_back(e);
        break;
      case ExprKind::SomeValuesFrom:
        exists_by_filler[x.ops[0]].push_back(e);
        exists_by_node[x.node].push_back(e);
        break;
      case ExprKind::Complement:
        complements.push_back(e);
        break;
      default:
        break;
    }
    if (x.kind == ExprKind::DisjointUnion)
      for (std::size_t i = 0; i < x.ops.size(); ++i)
        for (std::size_t j = i + 1; j < x.ops.size(); ++j)
          disjoint.push_back({x.ops[i], x.ops[j], add_text("disjoint union " + owl::render(expr_value[e], prefixes))});
  }
  for (auto& list : compositions) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::size_t nodes = 2 * props.size();
  prop_reach.assign(nodes, Bitset(nodes));
  for (std::uint32_t s = 0; s < nodes; ++s) {
    std::vector<std::uint32_t> stack{s};
    prop_reach[s].set(s);
    while (!stack.empty()) {
      std::uint32_t u = stack.back();
      stack.pop_back();
      for (const auto& e : prop_edges[u])
        if (prop_reach[s].set(e.to)) stack.push_back(e.to);
    }
  }
  saturate();
}

// S(E) for every expression E: a sound approximation of the named and
// complex subsumers of E under told edges, conjunction, union common
// subsumers, existential monotonicity and domains.
void TBox::saturate() {
  std::size_t n = exprs.size();
  subsumers.assign(n, Bitset(n));
  std::vector<std::uint32_t> intersections;
  for (std::uint32_t e = 0; e < n; ++e)
    if (exprs[e].kind == ExprKind::Intersection) intersections.push_back(e);

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t e = 0; e < n; ++e) {
      Bitset& s = subsumers[e];
      std::vector<std::uint32_t> work;
      auto add = [&](std::uint32_t f) {
        if (s.set(f)) {
          work.push_back(f);
          changed = true;
        }
      };
      if (s.set(e)) changed = true;
      s.set(thing);
      s.for_each([&](std::size_t f) { work.push_back(static_cast<std::uint32_t>(f)); });
      bool grew = true;
      while (grew) {
        grew = false;
        while (!work.empty()) {
          std::uint32_t f = work.back();
          work.pop_back();
          const Expr& x = exprs[f];
          for (const auto& edge : class_edges[f]) add(edge.to);
          if (x.kind == ExprKind::Intersection)
            for (auto op : x.ops) add(op);
          for (auto u : union_parents[f]) add(u);
          if (x.kind == ExprKind::Union || x.kind == ExprKind::DisjointUnion) {
            Bitset cs = subsumers[x.ops[0]];
            for (std::size_t i = 1; i < x.ops.size(); ++i) cs.intersect(subsumers[x.ops[i]]);
            cs.for_each([&](std::size_t g) { add(static_cast<std::uint32_t>(g)); });
          }
          if (x.kind == ExprKind::SomeValuesFrom) {
            const Bitset& filler = subsumers[x.ops[0]];
            prop_reach[x.node].for_each([&](std::size_t nd) {
              for (const auto& [cls, ax] : domains[nd]) add(cls);
              for (auto ex : exists_by_node[nd])
                if (filler.test(exprs[ex].ops[0]) || exprs[ex].ops[0] == thing) add(ex);
            });
          }
        }
        for (auto i : intersections) {
          if (s.test(i)) continue;
          bool all = std::all_of(exprs[i].ops.begin(), exprs[i].ops.end(),
                                 [&](std::uint32_t op) { return s.test(op); });
          if (all) {
            add(i);
            grew = true;
          }
        }
      }
    }
  }

  common.assign(n, {});
  for (std::uint32_t e = 0; e < n; ++e) {
    const Expr& x = exprs[e];
    if (x.kind != ExprKind::Union && x.kind != ExprKind::DisjointUnion) continue;
    Bitset cs = subsumers[x.ops[0]];
    for (std::size_t i = 1; i < x.ops.size(); ++i) cs.intersect(subsumers[x.ops[i]]);
    cs.for_each([&](std::size_t g) {
      if (g != e && g != thing) common[e].push_back(static_cast<std::uint32_t>(g));
    });
  }
}

}  // namespace provalign::reasoner
