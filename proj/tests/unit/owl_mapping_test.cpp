#include <gtest/gtest.h>

#include <filesystem>

#include "kgsaf/rdf/owl.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"

using namespace kgsaf;
using namespace kgsaf::rdf;

namespace {

const char* kPrefixes =
    "@prefix ex: <http://e/> .\n"
    "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n"
    "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
    "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";

MappedOntology ttl(const std::string& body, MappingOptions opts = {}) {
  return load_ontology_text(std::string(kPrefixes) + body, Format::Turtle, opts);
}

ClassExpression C(const std::string& n) { return ClassExpression::named("http://e/" + n); }
std::string E(const std::string& n) { return "http://e/" + n; }

void expect_accounted(const ParseReport& r) {
  EXPECT_EQ(r.triples_consumed + r.triples_skipped, r.triples_read);
}

}  // namespace

TEST(OwlMapping, UnionListBoundToNamedClass) {
  const char* nt =
      "<http://e/C> <http://www.w3.org/2002/07/owl#unionOf> _:l .\n"
      "_:l <http://www.w3.org/1999/02/22-rdf-syntax-ns#first> <http://e/A> .\n"
      "_:l <http://www.w3.org/1999/02/22-rdf-syntax-ns#rest> _:m .\n"
      "_:m <http://www.w3.org/1999/02/22-rdf-syntax-ns#first> <http://e/B> .\n"
      "_:m <http://www.w3.org/1999/02/22-rdf-syntax-ns#rest> <http://www.w3.org/1999/02/22-rdf-syntax-ns#nil> .\n";
  auto m = load_ontology_text(nt, Format::NTriples);
  ASSERT_EQ(m.ontology.size(), 1u);
  const Axiom& a = *m.ontology.tbox().begin();
  EXPECT_EQ(a, Axiom::equivalent_classes({C("C"), ClassExpression::union_of({C("A"), C("B")})}));
  EXPECT_EQ(m.report.triples_consumed, 5u);
  expect_accounted(m.report);
}

TEST(OwlMapping, Characteristic) {
  auto m = ttl("ex:p a owl:TransitiveProperty .");
  ASSERT_EQ(m.ontology.size(), 1u);
  EXPECT_TRUE(m.ontology.contains(Axiom::characteristic(E("p"), Characteristic::Transitive)));
}

TEST(OwlMapping, PropertyAssertionWithDeclarations) {
  auto m = ttl(
      "ex:i a owl:NamedIndividual . ex:i ex:p ex:j . ex:p a owl:ObjectProperty . "
      "ex:j a owl:NamedIndividual .");
  ASSERT_EQ(m.ontology.abox().size(), 1u);
  EXPECT_TRUE(m.ontology.contains(Axiom::object_property_assertion(E("i"), E("p"), E("j"))));
  expect_accounted(m.report);
  EXPECT_EQ(m.report.triples_skipped, 0u);
}

TEST(OwlMapping, UndeclaredPredicateNeedsInference) {
  auto strict = ttl("ex:i a ex:Person . ex:i ex:knows ex:j .");
  EXPECT_EQ(strict.ontology.abox().size(), 1u);
  EXPECT_EQ(strict.report.skip_reasons.at(SkipReason::UnrecognizedPattern), 1u);
  auto inferred = ttl("ex:i a ex:Person . ex:i ex:knows ex:j .", MappingOptions{true});
  EXPECT_EQ(inferred.ontology.abox().size(), 2u);
  EXPECT_TRUE(inferred.ontology.contains(Axiom::object_property_assertion(E("i"), E("knows"), E("j"))));
}

TEST(OwlMapping, LiteralsAndAnnotationsAreSkipped) {
  auto m = ttl(
      "ex:p a owl:ObjectProperty . ex:age a owl:DatatypeProperty .\n"
      "ex:i ex:p ex:j ; rdfs:label \"eye\" ; ex:age 4 ; ex:note \"n\" .\n"
      "ex:C rdfs:comment \"c\" .");
  EXPECT_EQ(m.ontology.size(), 1u);
  EXPECT_EQ(m.report.skip_reasons.at(SkipReason::Annotation), 2u);
  EXPECT_EQ(m.report.skip_reasons.at(SkipReason::DataProperty), 1u);
  EXPECT_EQ(m.report.skip_reasons.at(SkipReason::LiteralObject), 1u);
  expect_accounted(m.report);
}

TEST(OwlMapping, EveryAxiomVariant) {
  auto m = ttl(R"(
    ex:A rdfs:subClassOf ex:B , [ a owl:Restriction ; owl:onProperty ex:r ; owl:someValuesFrom ex:C ] .
    [ a owl:Restriction ; owl:onProperty ex:r ; owl:allValuesFrom ex:D ] rdfs:subClassOf ex:E .
    ex:F owl:equivalentClass [ a owl:Class ; owl:intersectionOf ( ex:A [ a owl:Class ; owl:complementOf ex:B ] ) ] .
    ex:A owl:disjointWith ex:C .
    [] a owl:AllDisjointClasses ; owl:members ( ex:C ex:D ex:E ) .
    ex:G rdfs:subClassOf [ a owl:Restriction ; owl:onProperty ex:r ; owl:maxQualifiedCardinality "2"^^xsd:nonNegativeInteger ; owl:onClass ex:D ] ,
                         [ a owl:Restriction ; owl:onProperty ex:r ; owl:minCardinality "1"^^xsd:nonNegativeInteger ] ,
                         [ a owl:Restriction ; owl:onProperty ex:s ; owl:cardinality "3"^^xsd:nonNegativeInteger ] .
    ex:r a owl:ObjectProperty ; rdfs:subPropertyOf ex:s ; owl:inverseOf ex:rInv ;
         rdfs:domain ex:A ; rdfs:range [ a owl:Class ; owl:unionOf ( ex:C ex:D ) ] ;
         a owl:FunctionalProperty , owl:AsymmetricProperty .
    ex:s owl:equivalentProperty ex:s2 ; owl:propertyChainAxiom ( ex:r ex:r ) .
    ex:i a ex:A , [ a owl:Restriction ; owl:onProperty ex:r ; owl:someValuesFrom owl:Thing ] ; ex:r ex:j .
  )");
  using CE = ClassExpression;
  const Ontology& o = m.ontology;
  EXPECT_TRUE(o.contains(Axiom::sub_class_of(C("A"), C("B"))));
  EXPECT_TRUE(o.contains(Axiom::sub_class_of(C("A"), CE::some_values_from(E("r"), C("C")))));
  EXPECT_TRUE(o.contains(Axiom::sub_class_of(CE::all_values_from(E("r"), C("D")), C("E"))));
  EXPECT_TRUE(o.contains(Axiom::equivalent_classes(
      {C("F"), CE::intersection_of({C("A"), CE::complement_of(C("B"))})})));
  EXPECT_TRUE(o.contains(Axiom::disjoint_classes({C("A"), C("C")})));
  EXPECT_TRUE(o.contains(Axiom::disjoint_classes({C("C"), C("D"), C("E")})));
  EXPECT_TRUE(o.contains(Axiom::sub_class_of(C("G"), CE::max_cardinality(2, E("r"), C("D")))));
  EXPECT_TRUE(o.contains(Axiom::sub_class_of(C("G"), CE::min_cardinality(1, E("r"), CE::top()))));
  EXPECT_TRUE(o.contains(Axiom::sub_class_of(C("G"), CE::exact_cardinality(3, E("s"), CE::top()))));
  EXPECT_TRUE(o.contains(Axiom::sub_object_property_of(E("r"), E("s"))));
  EXPECT_TRUE(o.contains(Axiom::inverse_object_properties(E("rInv"), E("r"))));
  EXPECT_TRUE(o.contains(Axiom::object_property_domain(E("r"), C("A"))));
  EXPECT_TRUE(o.contains(Axiom::object_property_range(E("r"), CE::union_of({C("C"), C("D")}))));
  EXPECT_TRUE(o.contains(Axiom::characteristic(E("r"), Characteristic::Functional)));
  EXPECT_TRUE(o.contains(Axiom::characteristic(E("r"), Characteristic::Asymmetric)));
  EXPECT_TRUE(o.contains(Axiom::equivalent_object_properties({E("s"), E("s2")})));
  EXPECT_TRUE(o.contains(Axiom::sub_property_chain_of({E("r"), E("r")}, E("s"))));
  EXPECT_TRUE(o.contains(Axiom::class_assertion(E("i"), C("A"))));
  EXPECT_TRUE(o.contains(Axiom::class_assertion(E("i"), CE::some_values_from(E("r"), CE::top()))));
  EXPECT_TRUE(o.contains(Axiom::object_property_assertion(E("i"), E("r"), E("j"))));
  EXPECT_EQ(o.size(), 20u);
  EXPECT_EQ(m.report.triples_skipped, 0u);
  expect_accounted(m.report);

  // Round trip through both writers.
  for (Format f : {Format::Turtle, Format::NTriples}) {
    auto again = load_ontology_text(serialize(o, f), f);
    EXPECT_EQ(again.ontology, o) << to_string(f);
    EXPECT_EQ(again.report.triples_skipped, 0u);
  }
}

TEST(OwlMapping, DanglingListIsAnError) {
  const char* nt =
      "<http://e/C> <http://www.w3.org/2002/07/owl#unionOf> _:l .\n"
      "_:l <http://www.w3.org/1999/02/22-rdf-syntax-ns#first> <http://e/A> .\n";
  EXPECT_THROW(load_ontology_text(nt, Format::NTriples), Error);
}

TEST(OwlMapping, UnusedListCellsReportedMalformed) {
  auto m = load_ontology_text(
      "_:l <http://www.w3.org/1999/02/22-rdf-syntax-ns#first> <http://e/A> .\n", Format::NTriples);
  EXPECT_EQ(m.report.skip_reasons.at(SkipReason::MalformedList), 1u);
}

TEST(Serialize, EmptyOntologyIsHeaderOnly) {
  auto triples = axioms_to_triples(Ontology());
  ASSERT_EQ(triples.size(), 1u);
  EXPECT_EQ(triples[0].object.value, "http://www.w3.org/2002/07/owl#Ontology");
  EXPECT_EQ(triples[0].subject.value, kDefaultOntologyIri);
}

TEST(Serialize, Deterministic) {
  Ontology o("http://e/onto");
  o.add(Axiom::sub_class_of(C("A"), ClassExpression::union_of({C("C"), C("B")})));
  o.add(Axiom::sub_class_of(C("B"), ClassExpression::some_values_from(E("r"), C("D"))));
  const std::string a = serialize(o, Format::Turtle);
  Ontology copy("http://e/onto");
  for (auto ax : o.axioms()) copy.add(ax);
  EXPECT_EQ(a, serialize(copy, Format::Turtle));
  auto back = load_ontology_text(a, Format::Turtle).ontology;
  EXPECT_EQ(back, o);
  EXPECT_EQ(back.iri(), "http://e/onto");
  // Union operand order survives.
  const auto& sub = *back.tbox().begin();
  EXPECT_EQ(sub.super_class().operands()[0], C("C"));
}

TEST(Imports, ClosureWithCycle) {
  const auto dir = std::filesystem::temp_directory_path() / "kgsaf_imports_test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "root.ttl", std::string(kPrefixes) +
                                       "<http://e/root> a owl:Ontology ; owl:imports <http://e/A> .\n"
                                       "ex:X rdfs:subClassOf ex:Y .\n");
  io::write_file(dir / "a.ttl", std::string(kPrefixes) +
                                    "<http://e/A> a owl:Ontology ; owl:imports <http://e/root> .\n"
                                    "ex:X rdfs:subClassOf ex:Y . ex:Y rdfs:subClassOf ex:Z .\n");
  io::write_file(dir / "catalog.tsv", "http://e/root\troot.ttl\nhttp://e/A\ta.ttl\n");
  auto root = load_ontology(dir / "root.ttl").ontology;
  ASSERT_EQ(root.imports().size(), 1u);
  auto merged = merge_import_closure(root, catalog_resolver(dir / "catalog.tsv"));
  EXPECT_EQ(merged.ontology.size(), 2u);
  EXPECT_TRUE(merged.ontology.imports().empty());
  EXPECT_EQ(merged.visited, std::vector<std::string>{"http://e/A"});
}

TEST(Imports, NoImportsIsIdentity) {
  Ontology root("http://e/r");
  root.add(Axiom::sub_class_of(C("A"), C("B")));
  auto merged = merge_import_closure(root, nullptr);
  EXPECT_EQ(merged.ontology, root);
}

TEST(Imports, MissingImportPolicy) {
  Ontology root("http://e/r");
  root.add_import("http://e/missing");
  EXPECT_THROW(merge_import_closure(root, [](const std::string&) { return std::optional<ResolvedDocument>(); }),
               Error);
  ImportOptions lenient;
  lenient.fail_on_missing = false;
  auto merged = merge_import_closure(root, nullptr, lenient);
  EXPECT_EQ(merged.missing, std::vector<std::string>{"http://e/missing"});
}

TEST(Imports, UnionOfAxiomSets) {
  Ontology root("http://e/r");
  root.add(Axiom::sub_class_of(C("A"), C("B")));
  root.add_import("http://e/a");
  auto resolver = [](const std::string&) {
    return std::optional<ResolvedDocument>(ResolvedDocument{
        std::string(kPrefixes) + "ex:A rdfs:subClassOf ex:B . ex:B rdfs:subClassOf ex:C .", Format::Turtle, ""});
  };
  auto merged = merge_import_closure(root, resolver);
  EXPECT_EQ(merged.ontology.size(), 2u);
}
