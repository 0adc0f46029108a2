#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "provalign/turtle.h"
#include "provalign/vocab.h"
#include "support.h"

using namespace provalign;
using namespace testing_support;

TEST(TaxonomyOracle, TwoHundredRandomTBoxes) {
  std::mt19937 rng(20240129);
  std::size_t mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    auto t = oracles::random_tbox(rng, i);
    std::size_t bad = oracles::taxonomy_mismatches(t);
    EXPECT_EQ(bad, 0u) << "case " << i;
    mismatches += bad;
  }
  EXPECT_EQ(mismatches, 0u);
}

TEST(TaxonomyOracle, MembershipsFollowReachability) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    auto t = oracles::random_tbox(rng, 1000 + i);
    auto r = oracles::reachability(t);
    std::vector<owl::Axiom> abox;
    rdf::Term x = rdf::Term::iri("http://example.org/random/x");
    owl::Axiom a;
    a.kind = owl::AxiomKind::ClassAssertion;
    a.classes = {owl::ClassExpression::named(t.classes[0])};
    a.terms = {x};
    abox.push_back(a);
    auto kb = reasoner::Reasoner({&t.model}).materialize(abox);
    for (std::size_t j = 0; j < t.classes.size(); ++j)
      EXPECT_EQ(kb.has_type(x, owl::ClassExpression::named(t.classes[j])), r[0][j]) << "case " << i;
  }
}

namespace {

rdf::Graph random_graph(std::mt19937& rng) {
  rdf::Graph g;
  g.prefixes()["ex"] = "http://example.org/g/";
  std::uniform_int_distribution<int> small(0, 5), kind(0, 6), size(0, 30);
  auto iri = [&] { return rdf::Term::iri("http://example.org/g/n" + std::to_string(small(rng))); };
  std::vector<rdf::Term> blanks;
  for (int i = 0; i < 4; ++i) blanks.push_back(g.fresh_blank());
  auto node = [&] { return small(rng) < 2 ? blanks[small(rng) % blanks.size()] : iri(); };
  const char* strings[] = {"plain", "with \"quotes\"", "line\nbreak", "tab\there", "unicode \xc3\xa9", ""};
  int n = size(rng);
  for (int i = 0; i < n; ++i) {
    rdf::Term o;
    switch (kind(rng)) {
      case 0: o = rdf::Term::literal(strings[small(rng)]); break;
      case 1: o = rdf::Term::literal(std::to_string(small(rng) - 2), vocab::xsd::integer); break;
      case 2: o = rdf::Term::literal(strings[small(rng)], {}, "en"); break;
      case 3: o = rdf::Term::literal("2012-04-03T00:00:11Z", vocab::xsd::dateTime); break;
      default: o = node(); break;
    }
    g.insert(node(), rdf::Term::iri("http://example.org/g/p" + std::to_string(small(rng) % 3)), o);
  }
  return g;
}

}  // namespace

TEST(TurtleRoundTrip, RandomGraphs) {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    rdf::Graph g = random_graph(rng);
    std::string text = turtle::serialize_turtle(g);
    rdf::Graph back = turtle::parse_turtle(text);
    ASSERT_TRUE(rdf::graph_isomorphic(g, back)) << "case " << i << "\n" << text;
    EXPECT_EQ(turtle::serialize_turtle(back), text) << "case " << i;
  }
}
