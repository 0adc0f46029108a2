#include <gtest/gtest.h>

#include <sstream>

#include "provalign/error.h"
#include "provalign/vocab.h"
#include "support.h"

using namespace provalign;
using namespace testing_support;
using alignment::MappingPredicate;

namespace {

const char* kActivityBlock = R"(
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
    rdfs:comment "A prov:Activity is equivalent to a process."@en .
)";

alignment::Alignment from_text(const std::string& text) {
  return alignment::extract_mappings(parse_model(text), {kProv}, {kObo});
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Extract, ReifiedEquivalence) {
  auto al = from_text(kActivityBlock);
  ASSERT_EQ(al.mappings.size(), 1u);
  const auto& m = al.mappings[0];
  EXPECT_EQ(m.predicate, MappingPredicate::EquivalentClass);
  ASSERT_NE(m.axiom(), nullptr);
  EXPECT_EQ(m.axiom()->classes[0], named(prov("Activity")));
  EXPECT_EQ(m.axiom()->classes[1], named(obo("BFO_0000015")));
  EXPECT_EQ(m.object_label.value(), "process");
  EXPECT_EQ(m.justification, "manual mapping curation");
  EXPECT_TRUE(m.comment.valid());
}

TEST(Extract, AxiomsWithinOneOntologyAreNotMappings) {
  auto al = from_text(R"(
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix prov: <http://www.w3.org/ns/prov#> .
    @prefix obo: <http://purl.obolibrary.org/obo/> .
    prov:Start rdfs:subClassOf prov:InstantaneousEvent .
    obo:BFO_0000015 rdfs:subClassOf obo:BFO_0000003 .
    prov:Activity rdfs:subClassOf obo:BFO_0000003 .)");
  EXPECT_EQ(al.mappings.size(), 1u);
  EXPECT_EQ(al.auxiliary.size(), 2u);
}

TEST(Extract, OccursInRules) {
  auto al = load_alignment("align-paper.ttl");
  std::size_t occurs_in = 0;
  for (const auto& m : al.mappings)
    if (m.predicate == MappingPredicate::SwrlRule && m.terms().count(obo("BFO_0000066"))) ++occurs_in;
  EXPECT_EQ(occurs_in, 3u);
  EXPECT_EQ(al.count(MappingPredicate::SwrlRule), 5u);
}

TEST(Extract, PaperAlignmentCounts) {
  auto al = load_alignment("align-paper.ttl");
  // Oracle: recount by predicate.
  std::size_t eq = 0, sub = 0;
  for (const auto& m : al.mappings) {
    if (m.predicate == MappingPredicate::EquivalentClass || m.predicate == MappingPredicate::EquivalentProperty)
      ++eq;
    if (m.predicate == MappingPredicate::SubClassOf || m.predicate == MappingPredicate::SubPropertyOf) ++sub;
  }
  EXPECT_EQ(eq + sub, al.simple_count());
  EXPECT_EQ(al.count(MappingPredicate::SkosRelated), 1u);
  EXPECT_EQ(al.simple_count() + al.complex_count() + 1, al.mappings.size());
  ASSERT_EQ(al.derived_from.size(), 4u);
}

TEST(Namespaces, Validation) {
  try {
    alignment::validate_namespaces({"http://e/"}, {"http://e/sub/"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NamespaceOverlap);
  }
  try {
    alignment::validate_namespaces({}, {"http://e/"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Usage);
  }
  EXPECT_NO_THROW(alignment::validate_namespaces({kProv}, {kObo, kCco}));
}

TEST(Serialize, ReifiedShape) {
  auto al = from_text(kActivityBlock);
  rdf::Graph g = alignment::serialize_mapping(al.mappings[0]);
  rdf::Term node;
  for (const auto& t : g.triples())
    if (t.predicate.value() == vocab::owl::annotatedProperty) node = t.subject;
  ASSERT_TRUE(node.is_blank());
  EXPECT_TRUE(g.contains({node, rdf::Term::iri(vocab::owl::annotatedProperty),
                          rdf::Term::iri(vocab::owl::equivalentClass)}));
  EXPECT_GE(g.about(node).size(), 4u);
}

TEST(Serialize, SkosIsRejected) {
  auto al = load_alignment("align-paper.ttl");
  for (const auto& m : al.mappings) {
    if (m.predicate != MappingPredicate::SkosRelated) continue;
    try {
      alignment::serialize_mapping(m);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::UnsupportedPredicate);
    }
  }
}

// extract(serialize(m)) == m for every mapping of every alignment fixture.
TEST(Codec, RoundTripAllFixtureMappings) {
  std::size_t checked = 0;
  for (const char* name : {"align-paper.ttl", "align-incoherent-plan.ttl", "align-counterexample.ttl"}) {
    auto al = load_alignment(name);
    for (const auto& m : al.mappings) {
      if (m.predicate == MappingPredicate::SkosRelated) continue;
      SCOPED_TRACE(m.subject_id() + " -> " + m.object_id());
      rdf::Graph g = alignment::serialize_mapping(m);
      auto back = alignment::extract_mappings(owl::extract_axioms(g), {kProv}, {kObo, kCco});
      ASSERT_EQ(back.mappings.size(), 1u);
      EXPECT_TRUE(back.mappings[0] == m);
      // And through Turtle text.
      rdf::Graph reparsed = turtle::parse_turtle(turtle::serialize_turtle(g));
      auto again = alignment::extract_mappings(owl::extract_axioms(reparsed), {kProv}, {kObo, kCco});
      ASSERT_EQ(again.mappings.size(), 1u);
      EXPECT_TRUE(again.mappings[0] == m);
      ++checked;
    }
  }
  EXPECT_GE(checked, 35u);
}

TEST(Codec, WholeAlignmentRoundTrip) {
  auto al = load_alignment("align-paper.ttl");
  rdf::Graph g = alignment::serialize_alignment(al);
  auto back = alignment::extract_mappings(owl::extract_axioms(g), {kProv}, {kObo, kCco});
  ASSERT_EQ(back.mappings.size(), al.mappings.size());
  for (std::size_t i = 0; i < al.mappings.size(); ++i) EXPECT_TRUE(back.mappings[i] == al.mappings[i]) << i;
}

TEST(Merge, Deduplicates) {
  auto a = load_alignment("align-paper.ttl");
  auto merged = alignment::merge_alignments({a, a});
  EXPECT_EQ(merged.mappings.size(), a.mappings.size());
}

TEST(Sssom, ActivityRow) {
  auto al = from_text(kActivityBlock);
  auto rows = lines(alignment::export_sssom(al));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], alignment::kSssomHeader);
  EXPECT_NE(rows[1].find("manual mapping curation"), std::string::npos);
  EXPECT_EQ(rows[1].rfind("prov:Activity,owl:equivalentClass,obo:BFO_0000015,", 0), 0u);
}

TEST(Sssom, ComplexMappingsAreCountedNotListed) {
  std::string text = R"(
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix swrl: <http://www.w3.org/2003/11/swrl#> .
    @prefix prov: <http://www.w3.org/ns/prov#> .
    @prefix obo: <http://purl.obolibrary.org/obo/> .
    @prefix : <http://e/> .
    prov:Activity owl:equivalentClass obo:BFO_0000015 .
    prov:Location owl:equivalentClass obo:BFO_0000029 .
    :x a swrl:Variable . :y a swrl:Variable .
  )";
  for (const char* cls : {"prov:Activity", "prov:Agent", "prov:InstantaneousEvent"})
    text += std::string("[] a swrl:Imp ; swrl:body ( [ a swrl:IndividualPropertyAtom ; swrl:propertyPredicate "
                        "prov:atLocation ; swrl:argument1 :x ; swrl:argument2 :y ] [ a swrl:ClassAtom ; "
                        "swrl:classPredicate ") + cls + " ; swrl:argument1 :x ] ) ; swrl:head ( [ a "
            "swrl:IndividualPropertyAtom ; swrl:propertyPredicate obo:BFO_0000066 ; swrl:argument1 :x ; "
            "swrl:argument2 :y ] ) .\n";
  auto al = from_text(text);
  ASSERT_EQ(al.simple_count(), 2u);
  ASSERT_EQ(al.complex_count(), 3u);
  std::size_t data = 0, comments = 0;
  for (const auto& l : lines(alignment::export_sssom(al))) {
    if (l.rfind("#", 0) == 0) {
      ++comments;
      EXPECT_NE(l.find('3'), std::string::npos);
    } else if (l != alignment::kSssomHeader) {
      ++data;
    }
  }
  EXPECT_EQ(data, 2u);
  EXPECT_EQ(comments, 1u);
}

TEST(Sssom, PaperAlignment) {
  auto al = load_alignment("align-paper.ttl");
  auto rows = lines(alignment::export_sssom(al));
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], "subject_id,predicate_id,object_id,subject_label,object_label,mapping_justification,comment");
  std::size_t data = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].rfind("#", 0) == 0) continue;
    ++data;
    EXPECT_NE(rows[i].find(",manual mapping curation,"), std::string::npos) << rows[i];
  }
  EXPECT_EQ(data, al.simple_count());
  EXPECT_EQ(alignment::export_sssom(al), alignment::export_sssom(load_alignment("align-paper.ttl")));
}
