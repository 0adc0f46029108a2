#include <gtest/gtest.h>

#include "provalign/error.h"
#include "provalign/matcher.h"
#include "support.h"

using namespace provalign;
using namespace testing_support;

TEST(DomainRange, Declared) {
  const auto& s = stack();
  auto dr = matcher::effective_domain_range(prov("generated"), {&s.prov});
  EXPECT_EQ(dr.domain, named(prov("Activity")));
  EXPECT_EQ(dr.range, named(prov("Entity")));
}

TEST(DomainRange, InheritedThroughSubproperty) {
  const auto& s = stack();
  auto sub = parse_model(R"(
    @prefix owl: <http://www.w3.org/2002/07/owl#> .
    @prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
    @prefix prov: <http://www.w3.org/ns/prov#> .
    prov:generatedDraft a owl:ObjectProperty ; rdfs:subPropertyOf prov:generated .)");
  auto dr = matcher::effective_domain_range(prov("generatedDraft"), {&s.prov, &sub});
  EXPECT_EQ(dr.domain, named(prov("Activity")));
  EXPECT_EQ(dr.range, named(prov("Entity")));
}

TEST(DomainRange, FromInverse) {
  const auto& s = stack();
  auto dr = matcher::effective_domain_range(obo("BFO_0000057"), {&s.bfo});
  EXPECT_EQ(dr.domain, named(obo("BFO_0000015")));
  EXPECT_EQ(dr.range.kind, owl::ExprKind::Union);
}

TEST(DomainRange, UndeclaredIsThing) {
  const auto& s = stack();
  auto dr = matcher::effective_domain_range(cco("ont00001936"), {&s.cco});
  EXPECT_TRUE(dr.domain.is_thing());
  EXPECT_TRUE(dr.range.is_thing());
}

TEST(DomainRange, UnknownProperty) {
  const auto& s = stack();
  try {
    matcher::effective_domain_range(prov("noSuchProperty"), {&s.prov});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownProperty);
  }
}

TEST(Suggest, GeneratedOverCco) {
  const auto& s = stack();
  auto out = matcher::suggest_property_mappings(prov("generated"), s.prov, {&s.bfo, &s.cco}, s.paper);
  EXPECT_FALSE(out.unmapped_domain_or_range);
  std::set<std::string> labels;
  for (const auto& c : out.candidates) {
    EXPECT_EQ(c.kind, matcher::MatchKind::Exact);
    labels.insert(s.cco.labels.at(c.property));
  }
  EXPECT_EQ(labels, (std::set<std::string>{"affects", "has input", "has output"}));
  ASSERT_EQ(out.domain_translation.size(), 1u);
  EXPECT_EQ(out.domain_translation[0], std::vector<owl::ClassExpression>{named(obo("BFO_0000015"))});
  EXPECT_EQ(out.range_translation[0], std::vector<owl::ClassExpression>{named(obo("BFO_0000002"))});
}

TEST(Suggest, InheritedCandidates) {
  const auto& s = stack();
  // RO has participant is declared on (occurrent, continuant): broader than process.
  auto out = matcher::suggest_property_mappings(prov("generated"), s.prov, {&s.bfo, &s.cco, &s.ro}, s.paper);
  std::vector<rdf::Term> exact, inherited;
  for (const auto& c : out.candidates)
    (c.kind == matcher::MatchKind::Exact ? exact : inherited).push_back(c.property);
  EXPECT_EQ(exact.size(), 3u);
  EXPECT_EQ(inherited, std::vector<rdf::Term>{obo("RO_0000057")});
  EXPECT_EQ(out.candidates.back().property, obo("RO_0000057"));  // exact ones first
}

TEST(Suggest, UnmappedDomain) {
  const auto& s = stack();
  alignment::Alignment none;
  none.source_ns = source_ns();
  none.target_ns = target_ns();
  auto out = matcher::suggest_property_mappings(prov("generated"), s.prov, {&s.bfo, &s.cco}, none);
  EXPECT_TRUE(out.unmapped_domain_or_range);
  EXPECT_TRUE(out.candidates.empty());
}
