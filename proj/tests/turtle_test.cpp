#include <gtest/gtest.h>

#include "provalign/turtle.h"
#include "provalign/vocab.h"
#include "support.h"

using namespace provalign;
using namespace testing_support;

namespace {

rdf::Term iri(std::string_view s) { return rdf::Term::iri(s); }

const char* kReifiedBlock = R"(
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix prov: <http://www.w3.org/ns/prov#> .
@prefix obo: <http://purl.obolibrary.org/obo/> .
@prefix sssom: <https://w3id.org/sssom/> .

[ ] rdf:type owl:Axiom ;
    owl:annotatedSource    prov:Activity ;
    owl:annotatedProperty  owl:equivalentClass ;
    owl:annotatedTarget    obo:BFO_0000015 ;
    sssom:object_label      "process" ;

    rdfs:comment "A prov:Activity is equivalent to a process because it happens over time, while not being a temporal region itself."@en .
)";

ErrorCode parse_error(std::string_view text) {
  try {
    turtle::parse_turtle(text);
  } catch (const turtle::ParseError& e) {
    EXPECT_FALSE(e.diagnostics().empty());
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::Usage;
}

}  // namespace

TEST(Parse, ReifiedAxiomBlock) {
  rdf::Graph g = turtle::parse_turtle(kReifiedBlock);
  ASSERT_EQ(g.size(), 6u);
  rdf::Term s = g.triples().front().subject;
  EXPECT_TRUE(s.is_blank());
  for (const auto& t : g.triples()) EXPECT_EQ(t.subject, s);
  EXPECT_TRUE(g.contains({s, iri(vocab::rdf::type), iri(vocab::owl::Axiom)}));
  EXPECT_TRUE(g.contains({s, iri(vocab::owl::annotatedTarget), obo("BFO_0000015")}));
  EXPECT_TRUE(g.contains({s, iri(vocab::sssom::object_label), rdf::Term::literal("process")}));
}

TEST(Parse, EmptyDocument) {
  EXPECT_TRUE(turtle::parse_turtle("").empty());
  EXPECT_TRUE(turtle::parse_turtle("# only a comment\n").empty());
}

TEST(Parse, FigureSevenSnippet) {
  rdf::Graph g = turtle::parse_turtle_file(fixture("instances/fig7.ttl"));
  EXPECT_TRUE(g.contains({ex("illustration"), iri(vocab::rdf::type), prov("InstantaneousEvent")}));
  EXPECT_TRUE(g.contains({ex("illustration"), prov("atTime"),
                          rdf::Term::literal("2012-04-03T00:00:11Z", vocab::xsd::dateTime)}));
}

TEST(Parse, CollectionsExpandToLists) {
  rdf::Graph g = turtle::parse_turtle("@prefix : <http://e/> . :s :p ( :a :b ) .");
  EXPECT_EQ(g.size(), 5u);  // the :p triple plus two first/rest pairs
  std::size_t firsts = 0, rests = 0, nil = 0;
  for (const auto& t : g.triples()) {
    if (t.predicate.value() == vocab::rdf::first) ++firsts;
    if (t.predicate.value() == vocab::rdf::rest) ++rests;
    if (t.object.value() == vocab::rdf::nil) ++nil;
  }
  EXPECT_EQ(firsts, 2u);
  EXPECT_EQ(rests, 2u);
  EXPECT_EQ(nil, 1u);
  EXPECT_EQ(turtle::parse_turtle("@prefix : <http://e/> . :s :p () .").triples().front().object.value(),
            vocab::rdf::nil);
}

TEST(Parse, LiteralForms) {
  rdf::Graph g = turtle::parse_turtle(R"(@prefix : <http://e/> .
    :s :int 42 ; :dec 1.5 ; :dbl 1e3 ; :neg -7 ; :t true ; :f false ;
       :lang "chat"@fr ; :long """two
lines""" ; :single 'x\ty' ; :esc "a\"bé" .)");
  auto value = [&](const char* p) {
    return *g.object(rdf::Term::iri("http://e/s"), rdf::Term::iri(std::string("http://e/") + p));
  };
  EXPECT_EQ(value("int"), rdf::Term::literal("42", vocab::xsd::integer));
  EXPECT_EQ(value("dec"), rdf::Term::literal("1.5", vocab::xsd::decimal));
  EXPECT_EQ(value("dbl"), rdf::Term::literal("1e3", vocab::xsd::double_));
  EXPECT_EQ(value("neg"), rdf::Term::literal("-7", vocab::xsd::integer));
  EXPECT_EQ(value("t"), rdf::Term::literal("true", vocab::xsd::boolean));
  EXPECT_EQ(value("lang").language(), "fr");
  EXPECT_EQ(value("long").value(), "two\nlines");
  EXPECT_EQ(value("single").value(), "x\ty");
  EXPECT_EQ(value("esc").value(), "a\"b\xc3\xa9");
}

TEST(Parse, BaseAndPrefixDirectives) {
  rdf::Graph g = turtle::parse_turtle("@base <http://e/dir/> . PREFIX x: <ns#>\n<a> x:p <../b> .");
  ASSERT_EQ(g.size(), 1u);
  const auto& t = g.triples().front();
  EXPECT_EQ(t.subject.value(), "http://e/dir/a");
  EXPECT_EQ(t.predicate.value(), "http://e/dir/ns#p");
  EXPECT_EQ(t.object.value(), "http://e/b");
  EXPECT_EQ(g.prefixes().at("x"), "http://e/dir/ns#");
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("ex:a ex:b ex:c ."), ErrorCode::UnknownPrefix);
  EXPECT_EQ(parse_error("<a> <b> <c> ."), ErrorCode::MissingBase);
  EXPECT_EQ(parse_error("@prefix : <http://e/> . :a :b \"open"), ErrorCode::UnterminatedLiteral);
  EXPECT_EQ(parse_error("@prefix : <http://e/> . :a :b :c"), ErrorCode::Syntax);
  EXPECT_EQ(parse_error("@prefix : <http://e/> . :a :b << :x :y :z >> ."), ErrorCode::UnsupportedFeature);
  EXPECT_EQ(parse_error("@prefix : <http://e/> . :g { :a :b :c . }"), ErrorCode::UnsupportedFeature);
}

TEST(Parse, DiagnosticPosition) {
  try {
    turtle::parse_turtle("@prefix : <http://e/> .\n:a :b ;; .\n:c :d");
    FAIL();
  } catch (const turtle::ParseError& e) {
    ASSERT_FALSE(e.diagnostics().empty());
    EXPECT_GE(e.diagnostics().front().line, 2u);
  }
}

TEST(Parse, UnclosedFigureNineListingIsRejected) {
  // The listing as printed: the digestedProteinSample1 block never ends.
  const char* text = R"(@prefix prov: <http://www.w3.org/ns/prov#> .
@prefix : <http://example.com/> .
:digestedProteinSample1
  a prov:Entity;
  prov:entity :proteinSample;
:proteinSample a prov:Entity .)";
  EXPECT_THROW(turtle::parse_turtle(text), turtle::ParseError);
}

TEST(Serialize, EmptyGraph) {
  rdf::Graph g;
  EXPECT_TRUE(turtle::parse_turtle(turtle::serialize_turtle(g)).empty());
}

TEST(Serialize, SingleTriple) {
  rdf::Graph g;
  g.insert(rdf::Term::iri("http://e/a"), iri(vocab::rdf::type), rdf::Term::iri("http://e/B"));
  rdf::Graph back = turtle::parse_turtle(turtle::serialize_turtle(g));
  EXPECT_TRUE(rdf::graph_isomorphic(g, back));
}

TEST(Serialize, Deterministic) {
  rdf::Graph a = turtle::parse_turtle_file(fixture("align-paper.ttl"));
  rdf::Graph b = turtle::parse_turtle_file(fixture("align-paper.ttl"));
  EXPECT_EQ(turtle::serialize_turtle(a), turtle::serialize_turtle(b));
}

TEST(Serialize, EscapesAndTypes) {
  rdf::Graph g;
  auto s = rdf::Term::iri("http://e/s");
  g.insert(s, rdf::Term::iri("http://e/p"), rdf::Term::literal("line\n\"quoted\"\\", {}, "en"));
  g.insert(s, rdf::Term::iri("http://e/q"), rdf::Term::literal("5", vocab::xsd::integer));
  g.insert(s, rdf::Term::iri("http://e/r"), g.fresh_blank());
  rdf::Graph back = turtle::parse_turtle(turtle::serialize_turtle(g));
  EXPECT_TRUE(rdf::graph_isomorphic(g, back));
}

// Every bundled fixture survives parse -> serialize -> parse.
TEST(RoundTrip, AllFixtures) {
  auto files = turtle_fixtures();
  ASSERT_GE(files.size(), 14u);
  for (const auto& f : files) {
    SCOPED_TRACE(f.string());
    rdf::Graph g = turtle::parse_turtle_file(f);
    EXPECT_FALSE(g.empty());
    rdf::Graph back = turtle::parse_turtle(turtle::serialize_turtle(g));
    EXPECT_EQ(back.size(), g.size());
    EXPECT_TRUE(rdf::graph_isomorphic(back, g));
  }
}
