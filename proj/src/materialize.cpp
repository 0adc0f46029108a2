#include <algorithm>
#include <deque>
#include <functional>

#include "provalign/error.h"
#include "provalign/vocab.h"
#include "tbox.h"

namespace provalign::reasoner {

using owl::ExprKind;

namespace {

struct EdgeKey {
  std::uint32_t p, x, y;
  bool operator==(const EdgeKey&) const = default;
};
struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const noexcept {
    std::size_t h = k.p;
    h = h * 0x9E3779B97F4A7C15ull + k.x;
    h = h * 0x9E3779B97F4A7C15ull + k.y;
    return h;
  }
};

std::uint64_t pack(std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; }

std::uint32_t skolem_scope() {
  static const std::uint32_t scope = rdf::Term::new_scope();
  return scope;
}

}  // namespace

// One derived or asserted fact with the first derivation that produced it.
struct Record {
  bool edge = false;
  std::uint32_t a = 0;  // individual (membership) or property (edge)
  std::uint32_t b = 0;  // expression (membership) or subject (edge)
  std::uint32_t c = 0;  // object (edge)
  const char* rule = rule::asserted;
  std::uint32_t axiom = 0;
  std::vector<std::uint32_t> premises;
};

class Engine {
 public:
  Engine(std::shared_ptr<const TBox> tbox, Options options)
      : tbox_(std::move(tbox)), options_(options) {
    members_of_.resize(tbox_->exprs.size());
    by_prop_.resize(tbox_->props.size());
  }

  const TBox& tbox() const { return *tbox_; }

  void assert_all(const std::vector<TBox::Assertion>& list) {
    for (const auto& a : list) {
      if (a.membership)
        add_membership(individual(a.x), a.expr, rule::asserted, a.axiom, {});
      else
        add_edge(a.node, individual(a.x), individual(a.y), rule::asserted, a.axiom, {});
    }
  }

  void run() {
    while (next_ < records_.size()) {
      std::uint32_t r = static_cast<std::uint32_t>(next_++);
      if (records_[r].edge)
        on_edge(r);
      else
        on_membership(r);
    }
  }

  std::uint32_t individual(rdf::Term t, int depth = 0) {
    auto [it, fresh] = ind_ids_.emplace(t, static_cast<std::uint32_t>(inds_.size()));
    if (fresh) {
      inds_.push_back(t);
      depth_.push_back(depth);
      types_.push_back(Bitset(tbox_->exprs.size()));
      type_list_.emplace_back();
    }
    return it->second;
  }

  // ---- queries -------------------------------------------------------------
  std::uint32_t find_ind(rdf::Term t) const {
    auto it = ind_ids_.find(t);
    return it == ind_ids_.end() ? TBox::npos : it->second;
  }
  bool has_type(std::uint32_t x, std::uint32_t e) const {
    return e == tbox_->thing ? !inds_[x].is_literal() : types_[x].test(e);
  }
  std::uint32_t membership_record(std::uint32_t x, std::uint32_t e) const {
    auto it = member_rec_.find(pack(x, e));
    return it == member_rec_.end() ? TBox::npos : it->second;
  }
  std::uint32_t edge_record(std::uint32_t p, std::uint32_t x, std::uint32_t y) const {
    auto it = edge_rec_.find({p, x, y});
    return it == edge_rec_.end() ? TBox::npos : it->second;
  }
  // Successors of x along a property node (inverse nodes walk backwards).
  const std::vector<std::uint32_t>& step(std::uint32_t node, std::uint32_t x) const {
    static const std::vector<std::uint32_t> none;
    const auto& index = (node & 1) ? in_ : out_;
    auto it = index.find(pack(node / 2, x));
    return it == index.end() ? none : it->second;
  }

  std::vector<Record> records_;
  std::vector<rdf::Term> inds_;
  std::vector<int> depth_;
  std::vector<Bitset> types_;
  std::vector<std::vector<std::uint32_t>> type_list_;
  bool budget_exceeded_ = false;
  std::size_t asserted_ = 0;

 private:
  Fact to_fact(const Record& r) const;

  void check_cap() {
    if (records_.size() >= options_.fact_cap)
      throw Error(ErrorCode::ResourceLimit,
                  "derived-fact cap of " + std::to_string(options_.fact_cap) + " reached");
  }

  bool add_membership(std::uint32_t x, std::uint32_t e, const char* rule, std::uint32_t axiom,
                      std::vector<std::uint32_t> premises) {
    if (inds_[x].is_literal()) return false;
    if (!types_[x].set(e)) return false;
    check_cap();
    auto id = static_cast<std::uint32_t>(records_.size());
    records_.push_back(Record{false, x, e, 0, rule, axiom, std::move(premises)});
    if (rule == rule::asserted) ++asserted_;
    member_rec_.emplace(pack(x, e), id);
    type_list_[x].push_back(e);
    members_of_[e].push_back(x);
    return true;
  }

  bool add_edge(std::uint32_t node, std::uint32_t x, std::uint32_t y, const char* rule,
                std::uint32_t axiom, std::vector<std::uint32_t> premises) {
    if (node & 1) std::swap(x, y);
    std::uint32_t p = node / 2;
    if (inds_[x].is_literal()) return false;
    auto id = static_cast<std::uint32_t>(records_.size());
    if (!edge_rec_.emplace(EdgeKey{p, x, y}, id).second) return false;
    check_cap();
    records_.push_back(Record{true, p, x, y, rule, axiom, std::move(premises)});
    if (rule == rule::asserted) ++asserted_;
    out_[pack(p, x)].push_back(y);
    in_[pack(p, y)].push_back(x);
    by_prop_[p].push_back({x, y});
    return true;
  }

  void on_membership(std::uint32_t r) {
    const TBox& t = *tbox_;
    const std::uint32_t x = records_[r].a, e = records_[r].b;
    const Expr& ex = t.exprs[e];

    for (const auto& edge : t.class_edges[e]) add_membership(x, edge.to, edge.rule, edge.axiom, {r});

    if (ex.kind == ExprKind::Intersection)
      for (auto op : ex.ops) add_membership(x, op, rule::intersection_decomposition, 0, {r});

    if (ex.kind == ExprKind::SomeValuesFrom) witness(r, x, e);

    for (auto u : t.union_parents[e]) add_membership(x, u, rule::union_introduction, 0, {r});
    if (ex.kind == ExprKind::Union || ex.kind == ExprKind::DisjointUnion)
      for (auto g : t.common[e]) add_membership(x, g, rule::union_subsumer, 0, {r});

    for (auto i : t.compositions[e]) {
      if (types_[x].test(i)) continue;
      std::vector<std::uint32_t> premises;
      bool all = true;
      for (auto op : t.exprs[i].ops) {
        if (!has_type(x, op)) {
          all = false;
          break;
        }
        if (op != t.thing) premises.push_back(membership_record(x, op));
      }
      if (all) add_membership(x, i, rule::intersection_composition, 0, std::move(premises));
    }

    // x : D makes every p-predecessor of x a member of ∃p.D.
    for (auto ex_id : t.exists_by_filler[e]) {
      std::uint32_t nd = t.exprs[ex_id].node;
      std::vector<std::uint32_t> preds = step(inverse_node(nd), x);
      for (auto w : preds)
        add_membership(w, ex_id, rule::existential_subclass, 0,
                       {edge_between(nd, w, x), r});
    }

    for (const auto& [rule_id, atom] : t.rule_class_atoms[e]) fire_rule(rule_id, atom, r);
  }

  std::uint32_t edge_between(std::uint32_t node, std::uint32_t x, std::uint32_t y) const {
    return (node & 1) ? edge_record(node / 2, y, x) : edge_record(node / 2, x, y);
  }

  void witness(std::uint32_t r, std::uint32_t x, std::uint32_t e) {
    const TBox& t = *tbox_;
    const Expr& ex = t.exprs[e];
    std::uint32_t filler = ex.ops[0];
    for (auto y : step(ex.node, x))
      if (has_type(y, filler)) return;
    int depth = depth_[x] + 1;
    if (depth > options_.skolem_depth) {
      budget_exceeded_ = true;
      return;
    }
    std::string label = "sk(" + owl::render_term(inds_[x], t.prefixes) + ", " +
                        owl::render(t.expr_value[e], t.prefixes) + ")";
    std::uint32_t y = individual(rdf::Term::blank(label, skolem_scope()), depth);
    add_edge(ex.node, x, y, rule::existential_witness, 0, {r});
    add_membership(y, filler, rule::existential_witness, 0, {r});
  }

  void on_edge(std::uint32_t r) {
    const TBox& t = *tbox_;
    const std::uint32_t p = records_[r].a, x = records_[r].b, y = records_[r].c;
    const bool literal = inds_[y].is_literal();
    for (std::uint32_t dir = 0; dir < 2; ++dir) {
      std::uint32_t nd = 2 * p + dir;
      std::uint32_t s = dir ? y : x, o = dir ? x : y;
      if (dir && literal) break;
      for (const auto& edge : t.prop_edges[nd]) add_edge(edge.to, s, o, edge.rule, edge.axiom, {r});
      for (const auto& [cls, ax] : t.domains[nd])
        add_membership(s, cls, dir ? rule::range : rule::domain, ax, {r});
      if (!inds_[o].is_literal())
        for (auto ex_id : t.exists_by_node[nd]) {
          std::uint32_t filler = t.exprs[ex_id].ops[0];
          if (!has_type(o, filler)) continue;
          std::vector<std::uint32_t> premises{r};
          if (filler != t.thing) premises.push_back(membership_record(o, filler));
          add_membership(s, ex_id, rule::existential_subclass, 0, std::move(premises));
        }
      for (const auto& [chain_id, pos] : t.chains_by_node[nd]) chain(chain_id, pos, s, o, r);
    }
    for (const auto& [rule_id, atom] : t.rule_prop_atoms[p]) fire_rule(rule_id, atom, r);
  }

  // Extends a chain match around the edge at position `pos` in both
  // directions; every complete path yields the super property.
  void chain(std::uint32_t id, std::uint32_t pos, std::uint32_t s, std::uint32_t o, std::uint32_t r) {
    const Chain& c = tbox_->chains[id];
    struct Path {
      std::uint32_t end;
      std::vector<std::uint32_t> premises;
    };
    std::vector<Path> backward{{s, {}}};
    for (std::uint32_t i = pos; i-- > 0;) {
      std::vector<Path> next;
      for (const auto& path : backward)
        for (auto w : step(inverse_node(c.nodes[i]), path.end)) {
          Path q{w, path.premises};
          q.premises.push_back(edge_between(c.nodes[i], w, path.end));
          next.push_back(std::move(q));
        }
      backward = std::move(next);
    }
    std::vector<Path> forward{{o, {}}};
    for (std::uint32_t i = pos + 1; i < c.nodes.size(); ++i) {
      std::vector<Path> next;
      for (const auto& path : forward)
        for (auto z : step(c.nodes[i], path.end)) {
          Path q{z, path.premises};
          q.premises.push_back(edge_between(c.nodes[i], path.end, z));
          next.push_back(std::move(q));
        }
      forward = std::move(next);
    }
    for (const auto& b : backward)
      for (const auto& f : forward) {
        std::vector<std::uint32_t> premises(b.premises.rbegin(), b.premises.rend());
        premises.push_back(r);
        premises.insert(premises.end(), f.premises.begin(), f.premises.end());
        add_edge(c.super_node, b.end, f.end, rule::property_chain, c.axiom, std::move(premises));
      }
  }

  // Seeded join: the triggering record is bound to body atom `seed`, the
  // other atoms are matched against facts already present.
  void fire_rule(std::uint32_t rule_id, std::uint32_t seed, std::uint32_t r) {
    const CompiledRule& cr = tbox_->rules[rule_id];
    std::vector<std::uint32_t> binding(cr.variables, TBox::npos);
    std::vector<std::uint32_t> premises(cr.body.size(), TBox::npos);

    auto bind = [&](const RuleArg& arg, std::uint32_t ind, std::vector<std::uint32_t>& undo) {
      if (!arg.variable) return inds_[ind] == arg.constant;
      if (binding[arg.var] == TBox::npos) {
        binding[arg.var] = ind;
        undo.push_back(arg.var);
        return true;
      }
      return binding[arg.var] == ind;
    };
    auto value = [&](const RuleArg& arg) -> std::uint32_t {
      if (!arg.variable) return find_ind(arg.constant);
      return binding[arg.var];
    };

    // Bind the seed.
    std::vector<std::uint32_t> undo;
    const RuleAtom& sa = cr.body[seed];
    const Record& rec = records_[r];
    if (sa.is_class) {
      if (!bind(sa.args[0], rec.a, undo)) return;
    } else {
      std::uint32_t s = rec.b, o = rec.c;
      if (sa.node & 1) std::swap(s, o);
      if (!bind(sa.args[0], s, undo) || !bind(sa.args[1], o, undo)) return;
    }
    premises[seed] = r;

    std::function<void(std::uint32_t)> match = [&](std::uint32_t i) {
      if (i == cr.body.size()) {
        emit(cr, binding, premises);
        return;
      }
      if (i == seed) {
        match(i + 1);
        return;
      }
      const RuleAtom& at = cr.body[i];
      std::vector<std::uint32_t> local;
      auto release = [&] {
        for (auto v : local) binding[v] = TBox::npos;
        local.clear();
      };
      if (at.is_class) {
        std::uint32_t x = value(at.args[0]);
        if (x != TBox::npos) {
          if (x < inds_.size() && types_[x].test(at.expr)) {
            premises[i] = membership_record(x, at.expr);
            match(i + 1);
          }
          return;
        }
        std::vector<std::uint32_t> candidates = members_of_[at.expr];
        for (auto c : candidates) {
          if (!bind(at.args[0], c, local)) continue;
          premises[i] = membership_record(c, at.expr);
          match(i + 1);
          release();
        }
        return;
      }
      std::uint32_t s = value(at.args[0]), o = value(at.args[1]);
      std::uint32_t p = at.node / 2;
      bool inv = at.node & 1;
      if (s != TBox::npos && s >= inds_.size()) return;
      if (o != TBox::npos && o >= inds_.size()) return;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
      if (s != TBox::npos) {
        for (auto z : step(at.node, s)) pairs.push_back({s, z});
      } else if (o != TBox::npos) {
        for (auto z : step(inverse_node(at.node), o)) pairs.push_back({z, o});
      } else {
        for (auto [a, b] : by_prop_[p]) pairs.push_back(inv ? std::make_pair(b, a) : std::make_pair(a, b));
      }
      for (auto [a, b] : pairs) {
        if (!bind(at.args[0], a, local) || !bind(at.args[1], b, local)) {
          release();
          continue;
        }
        premises[i] = edge_between(at.node, a, b);
        match(i + 1);
        release();
      }
    };
    match(0);
  }

  void emit(const CompiledRule& cr, const std::vector<std::uint32_t>& binding,
            const std::vector<std::uint32_t>& premises) {
    for (const auto& at : cr.head) {
      auto val = [&](const RuleArg& arg) {
        return arg.variable ? binding[arg.var] : individual(arg.constant);
      };
      if (at.is_class)
        add_membership(val(at.args[0]), at.expr, rule::swrl, cr.axiom, premises);
      else
        add_edge(at.node, val(at.args[0]), val(at.args[1]), rule::swrl, cr.axiom, premises);
    }
  }

  std::shared_ptr<const TBox> tbox_;
  Options options_;
  std::size_t next_ = 0;
  std::unordered_map<rdf::Term, std::uint32_t> ind_ids_;
  std::unordered_map<std::uint64_t, std::uint32_t> member_rec_;
  std::unordered_map<EdgeKey, std::uint32_t, EdgeKeyHash> edge_rec_;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> out_, in_;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_prop_;
  std::vector<std::vector<std::uint32_t>> members_of_;

  friend class ClosedKB;
  friend TraceNode explain(const ClosedKB&, const Fact&);
  friend std::vector<Clash> check_clash(const ClosedKB&);
  friend TraceNode trace_of(const Engine& e, std::uint32_t r);
  friend Fact record_fact(const Engine& e, const Record& r);
};

Fact record_fact(const Engine& e, const Record& r) {
  const TBox& t = *e.tbox_;
  if (r.edge) return Fact::edge(t.props[r.a], e.inds_[r.b], e.inds_[r.c]);
  return Fact::membership(e.inds_[r.a], t.expr_value[r.b]);
}

TraceNode trace_of(const Engine& e, std::uint32_t r) {
  const Record& rec = e.records_[r];
  TraceNode node;
  node.fact = record_fact(e, rec);
  node.rule = rec.rule;
  node.axiom = e.tbox_->axiom_text[rec.axiom];
  for (auto p : rec.premises)
    if (p != TBox::npos) node.premises.push_back(trace_of(e, p));
  return node;
}

// ---- Fact ------------------------------------------------------------------

Fact Fact::membership(rdf::Term x, owl::ClassExpression c) {
  Fact f;
  f.kind = Kind::Membership;
  f.subject = x;
  f.cls = std::move(c);
  return f;
}

Fact Fact::edge(rdf::Term p, rdf::Term x, rdf::Term y) {
  Fact f;
  f.kind = Kind::Property;
  f.subject = x;
  f.property = p;
  f.object = y;
  return f;
}

bool operator==(const Fact& a, const Fact& b) {
  if (a.kind != b.kind || a.subject != b.subject) return false;
  if (a.kind == Fact::Kind::Membership) return a.cls == b.cls;
  return a.property == b.property && a.object == b.object;
}

bool operator<(const Fact& a, const Fact& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.subject != b.subject) return rdf::lexical_less(a.subject, b.subject);
  if (a.kind == Fact::Kind::Membership) return a.cls < b.cls;
  if (a.property != b.property) return rdf::lexical_less(a.property, b.property);
  if (a.object != b.object) return rdf::lexical_less(a.object, b.object);
  return false;
}

std::string render(const Fact& f, const rdf::PrefixMap& px) {
  if (f.kind == Fact::Kind::Membership) {
    std::string c = owl::render(f.cls, px);
    if (!f.cls.is_named()) c = "(" + c + ")";
    return owl::render_term(f.subject, px) + " : " + c;
  }
  return owl::render_term(f.property, px) + "(" + owl::render_term(f.subject, px) + ", " +
         owl::render_term(f.object, px) + ")";
}

std::set<std::string> TraceNode::rules() const {
  std::set<std::string> out{rule};
  for (const auto& p : premises) {
    auto sub = p.rules();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::set<std::string> TraceNode::axioms() const {
  std::set<std::string> out;
  if (!axiom.empty()) out.insert(axiom);
  for (const auto& p : premises) {
    auto sub = p.axioms();
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

std::string render(const TraceNode& t, const rdf::PrefixMap& px, int indent) {
  std::string out(static_cast<std::size_t>(indent) * 2, ' ');
  out += render(t.fact, px) + "  [" + t.rule;
  if (!t.axiom.empty()) out += ": " + t.axiom;
  out += "]\n";
  for (const auto& p : t.premises) out += render(p, px, indent + 1);
  return out;
}

std::string_view to_string(Clash::Kind kind) {
  switch (kind) {
    case Clash::Kind::Disjointness: return "disjointness-violation";
    case Clash::Kind::Complement: return "complement-violation";
    case Clash::Kind::Nothing: return "nothing-membership";
  }
  return "?";
}

// ---- ClosedKB --------------------------------------------------------------

ClosedKB::ClosedKB() = default;
ClosedKB::~ClosedKB() = default;
ClosedKB::ClosedKB(ClosedKB&&) noexcept = default;
ClosedKB& ClosedKB::operator=(ClosedKB&&) noexcept = default;

namespace {

std::uint32_t lookup(const Engine& e, const Fact& f) {
  const TBox& t = e.tbox();
  std::uint32_t x = e.find_ind(f.subject);
  if (x == TBox::npos) return TBox::npos;
  if (f.kind == Fact::Kind::Membership) {
    std::uint32_t c = t.find(f.cls);
    return c == TBox::npos ? TBox::npos : e.membership_record(x, c);
  }
  std::uint32_t p = t.find_prop(f.property), y = e.find_ind(f.object);
  if (p == TBox::npos || y == TBox::npos) return TBox::npos;
  return e.edge_record(p, x, y);
}

}  // namespace

bool ClosedKB::contains(const Fact& f) const {
  if (!engine_) return false;
  if (f.kind == Fact::Kind::Membership && f.cls.is_thing())
    return engine_->find_ind(f.subject) != TBox::npos && !f.subject.is_literal();
  return lookup(*engine_, f) != TBox::npos;
}

bool ClosedKB::has_type(rdf::Term x, const owl::ClassExpression& c) const {
  return contains(Fact::membership(x, c));
}

std::size_t ClosedKB::fact_count() const { return engine_ ? engine_->records_.size() : 0; }
std::size_t ClosedKB::derived_count() const {
  return engine_ ? engine_->records_.size() - engine_->asserted_ : 0;
}

std::vector<Fact> ClosedKB::facts() const {
  std::vector<Fact> out;
  if (!engine_) return out;
  for (const auto& r : engine_->records_) out.push_back(record_fact(*engine_, r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<rdf::Term> ClosedKB::individuals() const {
  std::vector<rdf::Term> out;
  if (!engine_) return out;
  for (std::size_t i = 0; i < engine_->inds_.size(); ++i)
    if (engine_->depth_[i] == 0 && !engine_->inds_[i].is_literal()) out.push_back(engine_->inds_[i]);
  std::sort(out.begin(), out.end(), rdf::lexical_less);
  return out;
}

std::vector<rdf::Term> ClosedKB::skolems() const {
  std::vector<rdf::Term> out;
  if (!engine_) return out;
  for (std::size_t i = 0; i < engine_->inds_.size(); ++i)
    if (engine_->depth_[i] > 0) out.push_back(engine_->inds_[i]);
  std::sort(out.begin(), out.end(), rdf::lexical_less);
  return out;
}

bool ClosedKB::is_skolem(rdf::Term t) const {
  if (!engine_) return false;
  std::uint32_t x = engine_->find_ind(t);
  return x != TBox::npos && engine_->depth_[x] > 0;
}

bool ClosedKB::skolem_budget_exceeded() const { return engine_ && engine_->budget_exceeded_; }

std::vector<owl::ClassExpression> ClosedKB::types(rdf::Term t) const {
  std::vector<owl::ClassExpression> out;
  if (!engine_) return out;
  std::uint32_t x = engine_->find_ind(t);
  if (x == TBox::npos) return out;
  for (auto e : engine_->type_list_[x]) out.push_back(engine_->tbox().expr_value[e]);
  std::sort(out.begin(), out.end());
  return out;
}

const rdf::PrefixMap& ClosedKB::prefixes() const {
  static const rdf::PrefixMap none;
  return engine_ ? engine_->tbox().prefixes : none;
}

rdf::Graph ClosedKB::to_graph() const {
  rdf::Graph g;
  if (!engine_) return g;
  g.prefixes() = prefixes();
  const Engine& e = *engine_;
  const TBox& t = e.tbox();
  rdf::Term type = rdf::Term::iri(vocab::rdf::type);
  for (const auto& r : e.records_) {
    if (r.edge) {
      if (e.depth_[r.b] == 0 && e.depth_[r.c] == 0) g.insert(e.inds_[r.b], t.props[r.a], e.inds_[r.c]);
    } else if (e.depth_[r.a] == 0 && t.exprs[r.b].kind == ExprKind::Named) {
      g.insert(e.inds_[r.a], type, t.exprs[r.b].iri);
    }
  }
  return g;
}

TraceNode explain(const ClosedKB& kb, const Fact& fact) {
  if (!kb.engine_) throw Error(ErrorCode::UnknownFact, "empty knowledge base");
  std::uint32_t r = lookup(*kb.engine_, fact);
  if (r == TBox::npos)
    throw Error(ErrorCode::UnknownFact, "fact not in closure: " + render(fact, kb.prefixes()));
  return trace_of(*kb.engine_, r);
}

std::vector<Clash> check_clash(const ClosedKB& kb) {
  std::vector<Clash> out;
  if (!kb.engine_) return out;
  const Engine& e = *kb.engine_;
  const TBox& t = e.tbox();
  for (std::uint32_t x = 0; x < e.inds_.size(); ++x) {
    if (e.inds_[x].is_literal()) continue;
    const Bitset& ty = e.types_[x];
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seen;
    auto participant = [&](std::uint32_t c) { return trace_of(e, e.membership_record(x, c)); };
    for (const auto& d : t.disjoint) {
      if (!e.has_type(x, d.a) || !e.has_type(x, d.b)) continue;
      auto key = std::minmax(d.a, d.b);
      if (std::find(seen.begin(), seen.end(), std::make_pair(key.first, key.second)) != seen.end())
        continue;
      seen.push_back({key.first, key.second});
      Clash c;
      c.kind = Clash::Kind::Disjointness;
      c.individual = e.inds_[x];
      c.participants = {t.expr_value[d.a], t.expr_value[d.b]};
      c.axiom = t.axiom_text[d.axiom];
      for (auto side : {d.a, d.b})
        if (side != t.thing) c.traces.push_back(participant(side));
      out.push_back(std::move(c));
    }
    for (auto comp : t.complements) {
      std::uint32_t inner = t.exprs[comp].ops[0];
      if (!ty.test(comp) || !e.has_type(x, inner)) continue;
      Clash c;
      c.kind = Clash::Kind::Complement;
      c.individual = e.inds_[x];
      c.participants = {t.expr_value[inner], t.expr_value[comp]};
      if (inner != t.thing) c.traces.push_back(participant(inner));
      c.traces.push_back(participant(comp));
      out.push_back(std::move(c));
    }
    if (ty.test(t.nothing)) {
      Clash c;
      c.kind = Clash::Kind::Nothing;
      c.individual = e.inds_[x];
      c.participants = {t.expr_value[t.nothing]};
      c.traces.push_back(participant(t.nothing));
      out.push_back(std::move(c));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Clash& a, const Clash& b) {
    if (a.individual != b.individual) return rdf::lexical_less(a.individual, b.individual);
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.participants < b.participants;
  });
  return out;
}

// ---- Reasoner ----------------------------------------------------------------

Reasoner::Reasoner(const ModelList& models, Options options,
                   const std::vector<owl::ClassExpression>& extra)
    : models_(models), extra_(extra), tbox_(std::make_shared<TBox>(models, extra)), options_(options) {}

Reasoner::~Reasoner() = default;
Reasoner::Reasoner(Reasoner&&) noexcept = default;

ClosedKB Reasoner::materialize(const std::vector<owl::Axiom>& abox) const {
  std::shared_ptr<const TBox> tbox = tbox_;
  std::vector<TBox::Assertion> extra;
  for (const auto& a : abox) {
    auto found = tbox->lookup_assertion(a);
    if (!found) {
      extra.clear();
      break;
    }
    extra.push_back(*found);
  }
  if (extra.size() != abox.size()) {
    // The ABox mentions expressions or properties the compiled TBox has not
    // seen; recompile with the ABox as one more model.
    owl::OntologyModel data(abox, {}, {}, {}, "abox");
    ModelList all = models_;
    all.push_back(&data);
    tbox = std::make_shared<TBox>(all, extra_);
  }
  ClosedKB kb;
  kb.engine_ = std::make_unique<Engine>(tbox, options_);
  kb.engine_->assert_all(tbox->assertions);
  kb.engine_->assert_all(extra);
  kb.engine_->run();
  return kb;
}

ClosedKB Reasoner::probe(const owl::ClassExpression& c) const {
  std::uint32_t e = tbox_->find(c);
  if (e == TBox::npos)
    throw Error(ErrorCode::UnknownFact, "class expression not compiled: " + owl::render(c));
  static const std::uint32_t probe_scope = rdf::Term::new_scope();
  TBox::Assertion probe;
  probe.membership = true;
  probe.x = rdf::Term::blank("probe", probe_scope);
  probe.expr = e;
  ClosedKB kb;
  kb.engine_ = std::make_unique<Engine>(tbox_, options_);
  kb.engine_->assert_all({probe});
  kb.engine_->run();
  return kb;
}

bool Reasoner::satisfiable(const owl::ClassExpression& c) const { return check_clash(probe(c)).empty(); }

ClosedKB materialize(const ModelList& models, const rdf::Graph& abox, Options options) {
  owl::OntologyModel data = owl::extract_axioms(abox, "abox");
  ModelList all = models;
  all.push_back(&data);
  return Reasoner(all, options).materialize();
}

bool class_satisfiable(const ModelList& models, const owl::ClassExpression& c, Options options) {
  return Reasoner(models, options, {c}).satisfiable(c);
}

}  // namespace provalign::reasoner
