#pragma once

#include <string_view>

// IRIs of the vocabularies the parser and extractor recognise.
namespace provalign::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kSwrl = "http://www.w3.org/2003/11/swrl#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kSssom = "https://w3id.org/sssom/";
inline constexpr std::string_view kProv = "http://www.w3.org/ns/prov#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";

namespace rdf {
inline constexpr std::string_view type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view first = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view rest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view nil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view langString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view Property = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view subClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view subPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view range = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view comment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr std::string_view seeAlso = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
inline constexpr std::string_view isDefinedBy = "http://www.w3.org/2000/01/rdf-schema#isDefinedBy";
inline constexpr std::string_view Class = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view Datatype = "http://www.w3.org/2000/01/rdf-schema#Datatype";
inline constexpr std::string_view Literal = "http://www.w3.org/2000/01/rdf-schema#Literal";
}  // namespace rdfs

namespace owl {
inline constexpr std::string_view Thing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view Nothing = "http://www.w3.org/2002/07/owl#Nothing";
inline constexpr std::string_view Class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view Restriction = "http://www.w3.org/2002/07/owl#Restriction";
inline constexpr std::string_view Ontology = "http://www.w3.org/2002/07/owl#Ontology";
inline constexpr std::string_view ObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view DatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view AnnotationProperty = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view NamedIndividual = "http://www.w3.org/2002/07/owl#NamedIndividual";
inline constexpr std::string_view Axiom = "http://www.w3.org/2002/07/owl#Axiom";
inline constexpr std::string_view AllDisjointClasses = "http://www.w3.org/2002/07/owl#AllDisjointClasses";
inline constexpr std::string_view members = "http://www.w3.org/2002/07/owl#members";
inline constexpr std::string_view equivalentClass = "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr std::string_view equivalentProperty = "http://www.w3.org/2002/07/owl#equivalentProperty";
inline constexpr std::string_view disjointWith = "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view disjointUnionOf = "http://www.w3.org/2002/07/owl#disjointUnionOf";
inline constexpr std::string_view inverseOf = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view propertyChainAxiom = "http://www.w3.org/2002/07/owl#propertyChainAxiom";
inline constexpr std::string_view intersectionOf = "http://www.w3.org/2002/07/owl#intersectionOf";
inline constexpr std::string_view unionOf = "http://www.w3.org/2002/07/owl#unionOf";
inline constexpr std::string_view complementOf = "http://www.w3.org/2002/07/owl#complementOf";
inline constexpr std::string_view onProperty = "http://www.w3.org/2002/07/owl#onProperty";
inline constexpr std::string_view someValuesFrom = "http://www.w3.org/2002/07/owl#someValuesFrom";
inline constexpr std::string_view annotatedSource = "http://www.w3.org/2002/07/owl#annotatedSource";
inline constexpr std::string_view annotatedProperty = "http://www.w3.org/2002/07/owl#annotatedProperty";
inline constexpr std::string_view annotatedTarget = "http://www.w3.org/2002/07/owl#annotatedTarget";
inline constexpr std::string_view versionIRI = "http://www.w3.org/2002/07/owl#versionIRI";
inline constexpr std::string_view versionInfo = "http://www.w3.org/2002/07/owl#versionInfo";
inline constexpr std::string_view imports = "http://www.w3.org/2002/07/owl#imports";
inline constexpr std::string_view deprecated = "http://www.w3.org/2002/07/owl#deprecated";
}  // namespace owl

namespace xsd {
inline constexpr std::string_view string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view double_ = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view boolean = "http://www.w3.org/2001/XMLSchema#boolean";
inline constexpr std::string_view dateTime = "http://www.w3.org/2001/XMLSchema#dateTime";
}  // namespace xsd

namespace swrl {
inline constexpr std::string_view Imp = "http://www.w3.org/2003/11/swrl#Imp";
inline constexpr std::string_view body = "http://www.w3.org/2003/11/swrl#body";
inline constexpr std::string_view head = "http://www.w3.org/2003/11/swrl#head";
inline constexpr std::string_view Variable = "http://www.w3.org/2003/11/swrl#Variable";
inline constexpr std::string_view AtomList = "http://www.w3.org/2003/11/swrl#AtomList";
inline constexpr std::string_view ClassAtom = "http://www.w3.org/2003/11/swrl#ClassAtom";
inline constexpr std::string_view IndividualPropertyAtom = "http://www.w3.org/2003/11/swrl#IndividualPropertyAtom";
inline constexpr std::string_view classPredicate = "http://www.w3.org/2003/11/swrl#classPredicate";
inline constexpr std::string_view propertyPredicate = "http://www.w3.org/2003/11/swrl#propertyPredicate";
inline constexpr std::string_view argument1 = "http://www.w3.org/2003/11/swrl#argument1";
inline constexpr std::string_view argument2 = "http://www.w3.org/2003/11/swrl#argument2";
}  // namespace swrl

namespace sssom {
inline constexpr std::string_view subject_label = "https://w3id.org/sssom/subject_label";
inline constexpr std::string_view object_label = "https://w3id.org/sssom/object_label";
inline constexpr std::string_view mapping_justification = "https://w3id.org/sssom/mapping_justification";
}  // namespace sssom

namespace prov {
inline constexpr std::string_view wasDerivedFrom = "http://www.w3.org/ns/prov#wasDerivedFrom";
}  // namespace prov

}  // namespace provalign::vocab
