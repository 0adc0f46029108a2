#include <gtest/gtest.h>

#include "provalign/error.h"
#include "support.h"

using namespace provalign;
using namespace testing_support;
using owl::ClassExpression;
using reasoner::Fact;

namespace {

const char* kPrefixes = R"(
@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix : <http://e/> .
)";

rdf::Term e(const std::string& local) { return rdf::Term::iri("http://e/" + local); }
owl::OntologyModel inline_model(const std::string& body) { return parse_model(std::string(kPrefixes) + body); }

reasoner::ClosedKB closure(const reasoner::ModelList& models, const std::string& instance_file,
                           reasoner::Options options = {}) {
  return reasoner::materialize(models, turtle::parse_turtle_file(fixture(instance_file)), options);
}

// True when `rule` appears directly on the node for `fact` somewhere in the tree.
const reasoner::TraceNode* find_step(const reasoner::TraceNode& t, const Fact& fact) {
  if (t.fact == fact) return &t;
  for (const auto& p : t.premises)
    if (const auto* hit = find_step(p, fact)) return hit;
  return nullptr;
}

}  // namespace

TEST(Materialize, DomainRuleOnFigureNine) {
  const auto& s = stack();
  auto kb = closure({&s.prov}, "instances/fig9.ttl");
  Fact f = Fact::membership(ex("digestedProteinSample1"), named(prov("EntityInfluence")));
  ASSERT_TRUE(kb.contains(f));
  // EntityInfluence is not a domain itself: it comes from the domain of prov:entity.
  reasoner::TraceNode t = reasoner::explain(kb, f);
  EXPECT_EQ(t.rule, reasoner::rule::domain);
  ASSERT_EQ(t.premises.size(), 1u);
  EXPECT_EQ(t.premises[0].fact, Fact::edge(prov("entity"), ex("digestedProteinSample1"), ex("proteinSample")));
  EXPECT_EQ(t.premises[0].rule, reasoner::rule::asserted);
  EXPECT_TRUE(reasoner::check_clash(kb).empty());  // consistent with PROV alone
}

TEST(Materialize, AtLocationRuleFires) {
  const auto& s = stack();
  rdf::Graph data = turtle::parse_turtle(R"(
    @prefix prov: <http://www.w3.org/ns/prov#> .
    @prefix : <http://example.com/> .
    :a a prov:Activity ; prov:atLocation :lab .
    :agent a prov:Agent ; prov:atLocation :lab .)");
  auto kb = reasoner::materialize(s.full(), data);
  Fact occurs = Fact::edge(obo("BFO_0000066"), ex("a"), ex("lab"));
  ASSERT_TRUE(kb.contains(occurs));
  EXPECT_EQ(reasoner::explain(kb, occurs).rule, reasoner::rule::swrl);
  EXPECT_FALSE(kb.contains(Fact::edge(obo("BFO_0000066"), ex("agent"), ex("lab"))));
  EXPECT_TRUE(kb.contains(Fact::edge(obo("BFO_0000171"), ex("agent"), ex("lab"))));
  EXPECT_TRUE(kb.has_type(ex("lab"), named(obo("BFO_0000029"))));
  EXPECT_TRUE(reasoner::check_clash(kb).empty());
}

TEST(Materialize, InverseAndSubproperty) {
  const auto& s = stack();
  auto kb = closure(s.full(), "instances/fig12.ttl");
  // generated(sortActivity, datasetB) gives wasGeneratedBy(datasetB, sortActivity) and its supers.
  EXPECT_TRUE(kb.contains(Fact::edge(prov("wasGeneratedBy"), ex("datasetB"), ex("sortActivity"))));
  EXPECT_TRUE(kb.contains(Fact::edge(obo("BFO_0000056"), ex("datasetB"), ex("sortActivity"))));
  EXPECT_TRUE(kb.contains(Fact::edge(cco("ont00001986"), ex("datasetB"), ex("sortActivity"))));
  EXPECT_TRUE(kb.has_type(ex("datasetB"), named(obo("BFO_0000002"))));
  EXPECT_TRUE(kb.has_type(ex("sortActivity"), named(obo("BFO_0000015"))));
}

TEST(Materialize, PropertyChain) {
  auto m = inline_model(R"(
    :uncle owl:propertyChainAxiom ( :parent :brother ) .
    :x :parent :y . :y :brother :z .)");
  auto kb = reasoner::Reasoner({&m}).materialize();
  EXPECT_TRUE(kb.contains(Fact::edge(e("uncle"), e("x"), e("z"))));
  EXPECT_EQ(reasoner::explain(kb, Fact::edge(e("uncle"), e("x"), e("z"))).rule, reasoner::rule::property_chain);
}

TEST(Materialize, ExistentialWitnessAndBudget) {
  auto m = inline_model(R"(
    :A rdfs:subClassOf [ a owl:Restriction ; owl:onProperty :p ; owl:someValuesFrom :A ] .
    :a a :A .)");
  reasoner::Options opt;
  opt.skolem_depth = 2;
  auto kb = reasoner::Reasoner({&m}, opt).materialize();
  EXPECT_EQ(kb.skolems().size(), 2u);
  EXPECT_TRUE(kb.skolem_budget_exceeded());
  EXPECT_EQ(kb.individuals(), std::vector<rdf::Term>{e("a")});
}

TEST(Materialize, ExistentialSubclass) {
  auto m = inline_model(R"(
    :Parent owl:equivalentClass [ a owl:Restriction ; owl:onProperty :hasChild ; owl:someValuesFrom :Person ] .
    :x :hasChild :y . :y a :Person .)");
  auto kb = reasoner::Reasoner({&m}).materialize();
  EXPECT_TRUE(kb.has_type(e("x"), named(e("Parent"))));
}

TEST(Materialize, FactCap) {
  auto m = inline_model(R"(
    :A rdfs:subClassOf :B . :B rdfs:subClassOf :C . :C rdfs:subClassOf :D .
    :a a :A . :b a :A . :c a :A .)");
  reasoner::Options opt;
  opt.fact_cap = 5;
  try {
    reasoner::Reasoner({&m}, opt).materialize();
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ResourceLimit);
  }
}

TEST(Materialize, ToGraphHasNoSkolems) {
  const auto& s = stack();
  auto kb = closure(s.full(), "instances/fig7.ttl");
  rdf::Graph g = kb.to_graph();
  EXPECT_FALSE(g.empty());
  for (const auto& t : g.triples()) {
    EXPECT_FALSE(kb.is_skolem(t.subject));
    EXPECT_FALSE(kb.is_skolem(t.object));
  }
}

TEST(Explain, UnknownFact) {
  const auto& s = stack();
  auto kb = closure({&s.prov}, "instances/fig7.ttl");
  try {
    reasoner::explain(kb, Fact::membership(ex("bar_chart"), named(prov("Activity"))));
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::UnknownFact);
  }
}

TEST(Clash, FigureNineWithAlignment) {
  const auto& s = stack();
  auto kb = closure(s.full(), "instances/fig9.ttl");
  auto clashes = reasoner::check_clash(kb);
  ASSERT_EQ(clashes.size(), 1u);
  const auto& c = clashes[0];
  EXPECT_EQ(c.kind, reasoner::Clash::Kind::Disjointness);
  EXPECT_EQ(c.individual, ex("digestedProteinSample1"));
  EXPECT_NE(c.axiom.find("DisjointWith"), std::string::npos);
  ASSERT_EQ(c.traces.size(), 2u);
  std::set<std::string> rules;
  for (const auto& t : c.traces)
    for (const auto& r : t.rules()) rules.insert(r);
  EXPECT_TRUE(rules.count(reasoner::rule::domain));
}

TEST(Clash, FigureElevenTrace) {
  const auto& s = stack();
  auto kb = closure(s.full(), "instances/fig11.ttl");
  auto clashes = reasoner::check_clash(kb);
  ASSERT_EQ(clashes.size(), 1u);
  const auto& c = clashes[0];
  EXPECT_EQ(c.individual, ex("sortActivity"));
  // The process-boundary side: equivalence step on top of the atTime domain step.
  const reasoner::TraceNode* boundary = nullptr;
  for (const auto& t : c.traces)
    if (t.fact == Fact::membership(ex("sortActivity"), named(obo("BFO_0000035")))) boundary = &t;
  ASSERT_NE(boundary, nullptr);
  EXPECT_EQ(boundary->rule, reasoner::rule::equivalence);
  const auto* ie = find_step(*boundary, Fact::membership(ex("sortActivity"), named(prov("InstantaneousEvent"))));
  ASSERT_NE(ie, nullptr);
  EXPECT_EQ(ie->rule, reasoner::rule::domain);
  EXPECT_NE(ie->axiom.find("atTime"), std::string::npos);
}

TEST(Clash, ExampleFourWithoutAlignment) {
  const auto& s = stack();
  auto kb = closure({&s.prov}, "instances/example4.ttl");
  auto clashes = reasoner::check_clash(kb);
  ASSERT_EQ(clashes.size(), 1u);
  EXPECT_EQ(clashes[0].individual, ex("publicationActivity1123"));
}

TEST(Clash, ComplementAndNothing) {
  auto m = inline_model(R"(
    :B owl:equivalentClass [ owl:complementOf :A ] .
    :x a :A , :B .
    :y a owl:Nothing .)");
  auto clashes = reasoner::check_clash(reasoner::Reasoner({&m}).materialize());
  ASSERT_EQ(clashes.size(), 2u);
  EXPECT_EQ(clashes[0].kind, reasoner::Clash::Kind::Complement);
  EXPECT_EQ(clashes[1].kind, reasoner::Clash::Kind::Nothing);
}

TEST(Satisfiable, ContinuantAndOccurrent) {
  const auto& s = stack();
  auto both = ClassExpression::intersection({named(obo("BFO_0000002")), named(obo("BFO_0000003"))});
  EXPECT_FALSE(reasoner::class_satisfiable({&s.bfo}, both));
  EXPECT_TRUE(reasoner::class_satisfiable({&s.bfo}, named(obo("BFO_0000002"))));
}

TEST(Satisfiable, EveryNamedClassOfTheStack) {
  const auto& s = stack();
  auto models = s.full();
  reasoner::Reasoner r(models);
  std::size_t probed = 0;
  for (const auto* m : models)
    for (auto c : m->signature().classes) {
      EXPECT_TRUE(r.satisfiable(named(c))) << c.value();
      ++probed;
    }
  EXPECT_GT(probed, 30u);
}

TEST(Satisfiable, AgentWitnessesStayWithinDepth) {
  const auto& s = stack();
  reasoner::Reasoner r(s.full());
  auto kb = r.probe(named(prov("Agent")));
  EXPECT_FALSE(kb.skolem_budget_exceeded());
  EXPECT_GE(kb.skolems().size(), 3u);  // activity, role, realizing activity
}

TEST(Taxonomy, CounterexampleEntailsAgentUnderEntity) {
  const auto& s = stack();
  auto counter = load_alignment("align-counterexample.ttl").as_model();
  auto tax = reasoner::entailed_taxonomy({&s.prov, &s.bfo, &counter});
  EXPECT_TRUE(tax.is_subclass(prov("Agent"), prov("Entity")));
  EXPECT_TRUE(tax.equivalent_classes.count({prov("Entity"), obo("BFO_0000002")}));
  EXPECT_FALSE(reasoner::entailed_taxonomy({&s.prov}).is_subclass(prov("Agent"), prov("Entity")));
}

TEST(Taxonomy, PaperAlignment) {
  const auto& s = stack();
  auto tax = reasoner::entailed_taxonomy(s.full());
  EXPECT_TRUE(tax.is_subclass(obo("BFO_0000182"), prov("Activity")));  // history
  EXPECT_TRUE(tax.is_subclass(prov("Entity"), obo("BFO_0000002")));    // via the union
  EXPECT_TRUE(tax.is_subclass(prov("Start"), obo("BFO_0000035")));
  EXPECT_TRUE(tax.is_subclass(prov("Influence"), obo("BFO_0000003")));
  EXPECT_TRUE(tax.is_subproperty(prov("wasDerivedFrom"), obo("RO_0002410")));
  EXPECT_FALSE(tax.is_subclass(prov("Entity"), obo("BFO_0000004")));
  EXPECT_FALSE(tax.subclass.count({rdf::Term::iri("http://www.w3.org/2002/07/owl#Thing"), prov("Entity")}));
}

TEST(Taxonomy, DisjointClasses) {
  const auto& s = stack();
  reasoner::Reasoner r(s.full());
  auto d = r.disjoint_classes();
  EXPECT_TRUE(d.count({prov("Agent"), prov("Activity")}));
  EXPECT_TRUE(d.count({prov("Activity"), prov("Agent")}));
  EXPECT_FALSE(d.count({prov("Agent"), prov("Entity")}));
}
