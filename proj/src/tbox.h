#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "provalign/reasoner.h"

namespace provalign::reasoner {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool set(std::size_t i) {
    std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (words_[i >> 6] & bit) return false;
    words_[i >> 6] |= bit;
    return true;
  }
  void intersect(const Bitset& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        f(w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits)));
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Property nodes: 2 * property index + (1 if inverse).
inline std::uint32_t inverse_node(std::uint32_t node) { return node ^ 1u; }

struct Expr {
  owl::ExprKind kind = owl::ExprKind::Named;
  rdf::Term iri;
  std::vector<std::uint32_t> ops;  // operand expression ids
  std::uint32_t node = 0;          // property node for SomeValuesFrom
};

struct TBoxEdge {
  std::uint32_t to;
  const char* rule;
  std::uint32_t axiom;  // index into axiom_text
};

struct Disjointness {
  std::uint32_t a, b;
  std::uint32_t axiom;
};

struct Chain {
  std::uint32_t super_node;
  std::vector<std::uint32_t> nodes;
  std::uint32_t axiom;
};

struct RuleArg {
  bool variable = false;
  std::uint32_t var = 0;
  rdf::Term constant;
};

struct RuleAtom {
  bool is_class = true;
  std::uint32_t expr = 0;  // class atoms
  std::uint32_t node = 0;  // property atoms
  std::vector<RuleArg> args;
};

struct CompiledRule {
  std::vector<RuleAtom> body;
  std::vector<RuleAtom> head;
  std::uint32_t variables = 0;
  std::uint32_t axiom = 0;
};

class TBox {
 public:
  TBox(const ModelList& models, const std::vector<owl::ClassExpression>& extra);

  std::uint32_t intern(const owl::ClassExpression& e);
  std::uint32_t find(const owl::ClassExpression& e) const;  // npos if absent
  std::uint32_t prop_index(rdf::Term p);
  std::uint32_t find_prop(rdf::Term p) const;
  std::uint32_t node(const owl::PropertyExpression& p) { return 2 * prop_index(p.iri) + (p.inverse ? 1 : 0); }
  std::uint32_t add_text(std::string s);

  static constexpr std::uint32_t npos = ~std::uint32_t{0};

  // expressions
  std::vector<Expr> exprs;
  std::vector<owl::ClassExpression> expr_value;
  std::unordered_map<std::string, std::uint32_t> expr_index;
  std::uint32_t thing = 0, nothing = 0;

  // properties
  std::vector<rdf::Term> props;
  std::unordered_map<rdf::Term, std::uint32_t> prop_ids;

  std::vector<std::string> axiom_text{""};
  rdf::PrefixMap prefixes;

  std::vector<std::vector<TBoxEdge>> class_edges;  // by expr
  std::vector<std::vector<TBoxEdge>> prop_edges;   // by node
  // by node: classes implied for the subject of that node (domain for a
  // plain node, range for an inverse node)
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> domains;
  std::vector<Chain> chains;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> chains_by_node;  // (chain, pos)
  std::vector<Disjointness> disjoint;
  std::vector<std::uint32_t> complements;

  std::vector<std::vector<std::uint32_t>> union_parents;      // expr -> unions with it as operand
  std::vector<std::vector<std::uint32_t>> compositions;       // conjunct -> defining intersections
  std::vector<std::vector<std::uint32_t>> exists_by_filler;   // filler -> existentials
  std::vector<std::vector<std::uint32_t>> exists_by_node;     // node -> existentials
  std::vector<Bitset> subsumers;                              // saturation
  std::vector<std::vector<std::uint32_t>> common;             // unions -> common subsumers
  std::vector<Bitset> prop_reach;                              // node -> reachable nodes

  std::vector<CompiledRule> rules;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rule_class_atoms;  // expr -> (rule, atom)
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> rule_prop_atoms;   // prop -> (rule, atom)

  struct Assertion {
    bool membership;
    rdf::Term x, y;
    std::uint32_t expr = 0;  // membership
    std::uint32_t node = 0;  // property
    std::uint32_t axiom = 0;
  };
  std::vector<Assertion> assertions;
  // Resolves an assertion against the compiled tables; nullopt when it
  // mentions an expression or property the TBox has never seen.
  std::optional<Assertion> lookup_assertion(const owl::Axiom& a) const;

 private:
  void add_axiom(const owl::Axiom& a);
  void add_rule(const owl::SwrlRule& r);
  void finish();
  void saturate();
  void grow();
};

}  // namespace provalign::reasoner
