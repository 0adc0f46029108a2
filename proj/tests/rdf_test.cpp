#include <gtest/gtest.h>

#include <fstream>
#include <map>
#include <sstream>

#include "provalign/error.h"
#include "provalign/graph.h"
#include "provalign/turtle.h"
#include "provalign/vocab.h"
#include "support.h"

using namespace provalign;
using namespace testing_support;

TEST(Term, InterningGivesValueEquality) {
  EXPECT_EQ(rdf::Term::iri("http://e/a"), rdf::Term::iri("http://e/a"));
  EXPECT_NE(rdf::Term::iri("http://e/a"), rdf::Term::iri("http://e/b"));
  auto plain = rdf::Term::literal("x");
  auto typed = rdf::Term::literal("x", vocab::xsd::string);
  EXPECT_EQ(plain, typed);  // plain literals are xsd:string
  EXPECT_NE(rdf::Term::literal("x", {}, "en"), plain);
  EXPECT_FALSE(rdf::Term().valid());
}

TEST(Term, BlankNodesAreScoped) {
  auto s1 = rdf::Term::new_scope(), s2 = rdf::Term::new_scope();
  EXPECT_EQ(rdf::Term::blank("b", s1), rdf::Term::blank("b", s1));
  EXPECT_NE(rdf::Term::blank("b", s1), rdf::Term::blank("b", s2));
}

TEST(Term, InvalidIriIsRejected) {
  try {
    rdf::Term::iri("not-absolute");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidTerm);
  }
}

TEST(IriResolve, PrefixedNames) {
  rdf::PrefixMap px{{"ex", "http://e/"}};
  EXPECT_EQ(rdf::iri_resolve(px, "ex:a", std::nullopt).value(), "http://e/a");
  rdf::PrefixMap obo{{"obo", kObo}};
  auto t = rdf::iri_resolve(obo, "obo:BFO_0000015", std::nullopt);
  EXPECT_TRUE(t.value().size() >= 11 && t.value().substr(t.value().size() - 11) == "BFO_0000015");
}

TEST(IriResolve, Errors) {
  try {
    rdf::iri_resolve({}, "ex:a", std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPrefix);
  }
  try {
    rdf::iri_resolve({}, "<relative>", std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingBase);
  }
  EXPECT_EQ(rdf::iri_resolve({}, "<b/c>", std::string("http://e/a/")).value(), "http://e/a/b/c");
}

TEST(IriResolve, RelativeReferences) {
  EXPECT_EQ(rdf::resolve_reference("http://a/b/c/d;p?q", "../g"), "http://a/b/g");
  EXPECT_EQ(rdf::resolve_reference("http://a/b/c/d;p?q", "#s"), "http://a/b/c/d;p?q#s");
  EXPECT_EQ(rdf::resolve_reference("http://a/b/c/d;p?q", "/g"), "http://a/g");
  EXPECT_EQ(rdf::resolve_reference("http://a/b/c/d;p?q", "g/./h/../i"), "http://a/b/c/g/i");
}

TEST(Isomorphism, TrivialCases) {
  rdf::Graph a, b;
  EXPECT_TRUE(rdf::graph_isomorphic(a, b));
  auto g = turtle::parse_turtle_file(fixture("prov-mini.ttl"));
  EXPECT_TRUE(rdf::graph_isomorphic(g, g));
}

namespace {

// Oracle: try every bijection between the blank nodes of two small graphs.
bool brute_force_isomorphic(const rdf::Graph& a, const rdf::Graph& b) {
  if (a.size() != b.size()) return false;
  auto blanks = [](const rdf::Graph& g) {
    std::vector<rdf::Term> out;
    for (const auto& t : g.triples())
      for (auto x : {t.subject, t.object})
        if (x.is_blank() && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
  };
  auto ba = blanks(a), bb = blanks(b);
  if (ba.size() != bb.size()) return false;
  do {
    std::map<rdf::Term, rdf::Term> m;
    for (std::size_t i = 0; i < ba.size(); ++i) m[ba[i]] = bb[i];
    auto map = [&](rdf::Term t) { return t.is_blank() ? m[t] : t; };
    bool all = std::all_of(a.triples().begin(), a.triples().end(), [&](const rdf::Triple& t) {
      return b.contains({map(t.subject), t.predicate, map(t.object)});
    });
    if (all) return true;
  } while (std::next_permutation(bb.begin(), bb.end()));
  return false;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Isomorphism, RelabelledBlankNodesAgreeWithBruteForce) {
  std::string text = read_file(fixture("instances/fig9.ttl"));
  rdf::Graph a = turtle::parse_turtle(text);
  // Same data with explicit, differently named blank nodes.
  rdf::Graph b = turtle::parse_turtle(R"(
    @prefix prov: <http://www.w3.org/ns/prov#> .
    @prefix : <http://example.com/> .
    _:u prov:entity :Trypsin ; a prov:Usage ; prov:hadRole :treatmentEnzyme .
    _:d a prov:Derivation ; prov:hadUsage _:u .
    :digestedProteinSample1 a prov:Entity ; prov:wasDerivedFrom :proteinSample ;
      prov:qualifiedDerivation _:d ; prov:entity :proteinSample .
    :proteinSample a prov:Entity .)");
  EXPECT_TRUE(brute_force_isomorphic(a, b));
  EXPECT_TRUE(rdf::graph_isomorphic(a, b));

  // Swap which blank node carries the role: no longer isomorphic.
  rdf::Graph c = turtle::parse_turtle(R"(
    @prefix prov: <http://www.w3.org/ns/prov#> .
    @prefix : <http://example.com/> .
    _:u prov:entity :Trypsin ; a prov:Usage .
    _:d a prov:Derivation ; prov:hadUsage _:u ; prov:hadRole :treatmentEnzyme .
    :digestedProteinSample1 a prov:Entity ; prov:wasDerivedFrom :proteinSample ;
      prov:qualifiedDerivation _:d ; prov:entity :proteinSample .
    :proteinSample a prov:Entity .)");
  EXPECT_EQ(brute_force_isomorphic(a, c), rdf::graph_isomorphic(a, c));
  EXPECT_FALSE(rdf::graph_isomorphic(a, c));
}

TEST(Isomorphism, SymmetricBlankStructures) {
  // A blank-node cycle of length 4 against two cycles of length 2: colour
  // refinement alone cannot tell them apart.
  rdf::Graph ring = turtle::parse_turtle(
      "@prefix : <http://e/> . _:a :p _:b . _:b :p _:c . _:c :p _:d . _:d :p _:a .");
  rdf::Graph pairs = turtle::parse_turtle(
      "@prefix : <http://e/> . _:a :p _:b . _:b :p _:a . _:c :p _:d . _:d :p _:c .");
  rdf::Graph ring2 = turtle::parse_turtle(
      "@prefix : <http://e/> . _:w :p _:x . _:y :p _:w . _:z :p _:y . _:x :p _:z .");
  EXPECT_FALSE(rdf::graph_isomorphic(ring, pairs));
  EXPECT_EQ(brute_force_isomorphic(ring, pairs), false);
  EXPECT_TRUE(rdf::graph_isomorphic(ring, ring2));
  EXPECT_TRUE(brute_force_isomorphic(ring, ring2));
}

TEST(Isomorphism, BlankBoundExceeded) {
  std::string text = "@prefix : <http://e/> .\n";
  for (int i = 0; i < 10; ++i) text += "_:a" + std::to_string(i) + " :p _:b" + std::to_string(i) + " .\n";
  rdf::Graph g = turtle::parse_turtle(text);
  EXPECT_TRUE(rdf::graph_isomorphic(g, g, 64));
  try {
    rdf::graph_isomorphic(g, g, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceLimit);
  }
}
