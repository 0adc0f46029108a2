#include "provalign/error.h"
#include "tbox.h"

namespace provalign::reasoner {

using owl::ExprKind;

namespace {

std::vector<std::uint32_t> named_classes(const TBox& t) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < t.exprs.size(); ++i)
    if (t.exprs[i].kind == ExprKind::Named && i != t.thing && i != t.nothing) out.push_back(i);
  return out;
}

}  // namespace

Taxonomy Reasoner::taxonomy() const {
  const TBox& t = *tbox_;
  Taxonomy out;
  auto named = named_classes(t);
  for (auto a : named)
    for (auto b : named) {
      if (a == b || !t.subsumers[a].test(b)) continue;
      out.subclass.insert({t.exprs[a].iri, t.exprs[b].iri});
      if (t.subsumers[b].test(a)) out.equivalent_classes.insert({t.exprs[a].iri, t.exprs[b].iri});
    }
  for (std::uint32_t p = 0; p < t.props.size(); ++p)
    for (std::uint32_t q = 0; q < t.props.size(); ++q) {
      if (p == q || !t.prop_reach[2 * p].test(2 * q)) continue;
      out.subproperty.insert({t.props[p], t.props[q]});
      if (t.prop_reach[2 * q].test(2 * p)) out.equivalent_properties.insert({t.props[p], t.props[q]});
    }
  return out;
}

Taxonomy::PairSet Reasoner::disjoint_classes() const {
  const TBox& t = *tbox_;
  Taxonomy::PairSet out;
  auto named = named_classes(t);
  for (auto a : named)
    for (auto b : named) {
      if (a == b) continue;
      for (const auto& d : t.disjoint) {
        bool hit = (t.subsumers[a].test(d.a) && t.subsumers[b].test(d.b)) ||
                   (t.subsumers[a].test(d.b) && t.subsumers[b].test(d.a));
        if (hit) {
          out.insert({t.exprs[a].iri, t.exprs[b].iri});
          break;
        }
      }
    }
  return out;
}

bool Reasoner::subsumes(const owl::ClassExpression& super, const owl::ClassExpression& sub) const {
  const TBox& t = *tbox_;
  if (super.is_thing()) return true;
  std::uint32_t a = t.find(sub), b = t.find(super);
  if (a == TBox::npos || b == TBox::npos)
    throw Error(ErrorCode::UnknownFact, "class expression not compiled: " +
                                            owl::render(a == TBox::npos ? sub : super));
  return t.subsumers[a].test(b);
}

Taxonomy entailed_taxonomy(const ModelList& models) { return Reasoner(models).taxonomy(); }

}  // namespace provalign::reasoner
