#pragma once

#include <string_view>

// Well-known RDF, RDFS, OWL and XSD IRIs.
namespace kgsaf::vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

namespace rdf {
inline constexpr std::string_view type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view first = "http://www.w3.org/1999/02/22-rdf-syntax-ns#first";
inline constexpr std::string_view rest = "http://www.w3.org/1999/02/22-rdf-syntax-ns#rest";
inline constexpr std::string_view nil = "http://www.w3.org/1999/02/22-rdf-syntax-ns#nil";
inline constexpr std::string_view List = "http://www.w3.org/1999/02/22-rdf-syntax-ns#List";
inline constexpr std::string_view Property = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
inline constexpr std::string_view langString = "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";
inline constexpr std::string_view XMLLiteral = "http://www.w3.org/1999/02/22-rdf-syntax-ns#XMLLiteral";
}  // namespace rdf

namespace rdfs {
inline constexpr std::string_view subClassOf = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view subPropertyOf = "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view range = "http://www.w3.org/2000/01/rdf-schema#range";
inline constexpr std::string_view Class = "http://www.w3.org/2000/01/rdf-schema#Class";
inline constexpr std::string_view Datatype = "http://www.w3.org/2000/01/rdf-schema#Datatype";
inline constexpr std::string_view Literal = "http://www.w3.org/2000/01/rdf-schema#Literal";
inline constexpr std::string_view label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view comment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr std::string_view seeAlso = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
inline constexpr std::string_view isDefinedBy = "http://www.w3.org/2000/01/rdf-schema#isDefinedBy";
}  // namespace rdfs

namespace owl {
inline constexpr std::string_view Thing = "http://www.w3.org/2002/07/owl#Thing";
inline constexpr std::string_view Nothing = "http://www.w3.org/2002/07/owl#Nothing";
inline constexpr std::string_view Class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view Ontology = "http://www.w3.org/2002/07/owl#Ontology";
inline constexpr std::string_view imports = "http://www.w3.org/2002/07/owl#imports";
inline constexpr std::string_view versionIRI = "http://www.w3.org/2002/07/owl#versionIRI";
inline constexpr std::string_view versionInfo = "http://www.w3.org/2002/07/owl#versionInfo";
inline constexpr std::string_view priorVersion = "http://www.w3.org/2002/07/owl#priorVersion";
inline constexpr std::string_view deprecated = "http://www.w3.org/2002/07/owl#deprecated";
inline constexpr std::string_view ObjectProperty = "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view DatatypeProperty = "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view AnnotationProperty = "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view NamedIndividual = "http://www.w3.org/2002/07/owl#NamedIndividual";
inline constexpr std::string_view Restriction = "http://www.w3.org/2002/07/owl#Restriction";
inline constexpr std::string_view AllDisjointClasses = "http://www.w3.org/2002/07/owl#AllDisjointClasses";
inline constexpr std::string_view members = "http://www.w3.org/2002/07/owl#members";
inline constexpr std::string_view equivalentClass = "http://www.w3.org/2002/07/owl#equivalentClass";
inline constexpr std::string_view disjointWith = "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view unionOf = "http://www.w3.org/2002/07/owl#unionOf";
inline constexpr std::string_view intersectionOf = "http://www.w3.org/2002/07/owl#intersectionOf";
inline constexpr std::string_view complementOf = "http://www.w3.org/2002/07/owl#complementOf";
inline constexpr std::string_view onProperty = "http://www.w3.org/2002/07/owl#onProperty";
inline constexpr std::string_view onClass = "http://www.w3.org/2002/07/owl#onClass";
inline constexpr std::string_view someValuesFrom = "http://www.w3.org/2002/07/owl#someValuesFrom";
inline constexpr std::string_view allValuesFrom = "http://www.w3.org/2002/07/owl#allValuesFrom";
inline constexpr std::string_view minCardinality = "http://www.w3.org/2002/07/owl#minCardinality";
inline constexpr std::string_view maxCardinality = "http://www.w3.org/2002/07/owl#maxCardinality";
inline constexpr std::string_view cardinality = "http://www.w3.org/2002/07/owl#cardinality";
inline constexpr std::string_view minQualifiedCardinality = "http://www.w3.org/2002/07/owl#minQualifiedCardinality";
inline constexpr std::string_view maxQualifiedCardinality = "http://www.w3.org/2002/07/owl#maxQualifiedCardinality";
inline constexpr std::string_view qualifiedCardinality = "http://www.w3.org/2002/07/owl#qualifiedCardinality";
inline constexpr std::string_view equivalentProperty = "http://www.w3.org/2002/07/owl#equivalentProperty";
inline constexpr std::string_view inverseOf = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view propertyChainAxiom = "http://www.w3.org/2002/07/owl#propertyChainAxiom";
inline constexpr std::string_view FunctionalProperty = "http://www.w3.org/2002/07/owl#FunctionalProperty";
inline constexpr std::string_view InverseFunctionalProperty =
    "http://www.w3.org/2002/07/owl#InverseFunctionalProperty";
inline constexpr std::string_view TransitiveProperty = "http://www.w3.org/2002/07/owl#TransitiveProperty";
inline constexpr std::string_view SymmetricProperty = "http://www.w3.org/2002/07/owl#SymmetricProperty";
inline constexpr std::string_view AsymmetricProperty = "http://www.w3.org/2002/07/owl#AsymmetricProperty";
inline constexpr std::string_view ReflexiveProperty = "http://www.w3.org/2002/07/owl#ReflexiveProperty";
inline constexpr std::string_view IrreflexiveProperty = "http://www.w3.org/2002/07/owl#IrreflexiveProperty";
}  // namespace owl

namespace xsd {
inline constexpr std::string_view string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view nonNegativeInteger = "http://www.w3.org/2001/XMLSchema#nonNegativeInteger";
inline constexpr std::string_view decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view double_ = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view boolean = "http://www.w3.org/2001/XMLSchema#boolean";
}  // namespace xsd

}  // namespace kgsaf::vocab
