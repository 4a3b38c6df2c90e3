#include <gtest/gtest.h>

#include "kgsaf/model.hpp"
#include "kgsaf/vocab.hpp"

using namespace kgsaf;

namespace {

ClassExpression C(const std::string& n) { return ClassExpression::named("http://e/" + n); }
std::string P(const std::string& n) { return "http://e/" + n; }
EntityRef cls(const std::string& n) { return {"http://e/" + n, EntityKind::Class}; }
EntityRef prop(const std::string& n) { return {"http://e/" + n, EntityKind::ObjectProperty}; }
EntityRef ind(const std::string& n) { return {"http://e/" + n, EntityKind::NamedIndividual}; }

}  // namespace

TEST(Signature, SubClassOfNamed) {
  EXPECT_EQ(signature_of(Axiom::sub_class_of(C("A"), C("B"))), (Signature{cls("A"), cls("B")}));
}

TEST(Signature, NestedExpression) {
  auto ax = Axiom::sub_class_of(C("A"), ClassExpression::some_values_from(P("r"),
                                                                         ClassExpression::union_of({C("B"), C("C")})));
  EXPECT_EQ(signature_of(ax), (Signature{cls("A"), cls("B"), cls("C"), prop("r")}));
}

TEST(Signature, TopExcluded) {
  EXPECT_EQ(signature_of(Axiom::sub_class_of(C("A"), ClassExpression::top())), (Signature{cls("A")}));
  EXPECT_TRUE(signature_of(Axiom::sub_class_of(ClassExpression::bottom(), ClassExpression::top())).empty());
}

TEST(Signature, AssertionsIncludeIndividuals) {
  EXPECT_EQ(signature_of(Axiom::object_property_assertion(P("a"), P("p"), P("b"))),
            (Signature{ind("a"), prop("p"), ind("b")}));
}

TEST(Signature, KindSeparatesPunnedNames) {
  Signature s{cls("x")};
  EXPECT_FALSE(s.contains(prop("x")));
  EXPECT_FALSE(s.intersects(Signature{prop("x")}));
}

TEST(ClassifyBox, Table) {
  EXPECT_EQ(classify_box(Axiom::object_property_domain(P("p"), C("C"))), Box::RBox);
  EXPECT_EQ(classify_box(Axiom::class_assertion(P("i"), C("C"))), Box::ABox);
  EXPECT_EQ(classify_box(Axiom::disjoint_classes({C("A"), C("B")})), Box::TBox);
  EXPECT_EQ(classify_box(Axiom::sub_property_chain_of({P("p"), P("q")}, P("r"))), Box::RBox);
  EXPECT_EQ(classify_box(Axiom::characteristic(P("p"), Characteristic::Transitive)), Box::RBox);
  EXPECT_EQ(classify_box(Axiom::object_property_assertion(P("a"), P("p"), P("b"))), Box::ABox);
}

TEST(Taxonomic, OnlyNamedSubClassOf) {
  EXPECT_TRUE(is_taxonomic(Axiom::sub_class_of(C("A"), C("B"))));
  EXPECT_FALSE(is_taxonomic(Axiom::sub_class_of(C("A"), ClassExpression::some_values_from(P("r"), C("B")))));
  EXPECT_FALSE(is_taxonomic(Axiom::disjoint_classes({C("A"), C("B")})));
}

TEST(Axiom, EquivalentOperandOrderIgnored) {
  EXPECT_EQ(Axiom::equivalent_classes({C("A"), C("B")}), Axiom::equivalent_classes({C("B"), C("A")}));
  EXPECT_EQ(Axiom::disjoint_classes({C("A"), C("B"), C("C")}), Axiom::disjoint_classes({C("C"), C("A"), C("B")}));
}

TEST(Axiom, ChainOrderMatters) {
  EXPECT_NE(Axiom::sub_property_chain_of({P("p"), P("q")}, P("r")),
            Axiom::sub_property_chain_of({P("q"), P("p")}, P("r")));
}

TEST(Axiom, UnionKeepsSourceOrder) {
  auto u = ClassExpression::union_of({C("B"), C("A")});
  EXPECT_EQ(u.operands()[0], C("B"));
  EXPECT_NE(u, ClassExpression::union_of({C("A"), C("B")}));
}

TEST(Axiom, ProvenanceIgnoredByEquality) {
  auto a = Axiom::sub_class_of(C("A"), C("B"));
  EXPECT_EQ(a, a.with_provenance(Provenance::Inferred));
}

TEST(Axiom, ShortOperandListsRejected) {
  EXPECT_THROW(ClassExpression::union_of({C("A")}), std::invalid_argument);
  EXPECT_THROW(Axiom::equivalent_classes({C("A")}), std::invalid_argument);
}

TEST(Tautology, Detection) {
  EXPECT_TRUE(is_tautology(Axiom::sub_class_of(C("A"), C("A"))));
  EXPECT_TRUE(is_tautology(Axiom::sub_class_of(C("A"), ClassExpression::named(std::string(vocab::owl::Thing)))));
  EXPECT_TRUE(is_tautology(Axiom::class_assertion(P("x"), ClassExpression::top())));
  EXPECT_FALSE(is_tautology(Axiom::sub_class_of(C("A"), C("B"))));
}

TEST(Ontology, DuplicateFreeAndVocabulary) {
  Ontology o;
  EXPECT_TRUE(o.add(Axiom::sub_class_of(C("A"), C("B"))));
  EXPECT_FALSE(o.add(Axiom::sub_class_of(C("A"), C("B")).with_provenance(Provenance::Inferred)));
  o.add(Axiom::object_property_assertion(P("a"), P("p"), P("b")));
  EXPECT_EQ(o.tbox().size(), 1u);
  EXPECT_EQ(o.abox().size(), 1u);
  EXPECT_EQ(o.vocabulary().size(), 5u);
  EXPECT_EQ(o.schema().size(), 1u);
}

TEST(Ontology, PunningConflicts) {
  Ontology o;
  o.add(Axiom::class_assertion(P("x"), C("building")));
  o.add(Axiom::object_property_assertion(P("a"), P("building"), P("b")));
  auto conflicts = punning_conflicts(o.vocabulary());
  ASSERT_EQ(conflicts.size(), 1u);
  EXPECT_EQ(conflicts.begin()->first, P("building"));
}

TEST(Rename, OnlyMatchingKind) {
  Ontology o;
  o.add(Axiom::class_assertion(P("x"), C("building")));
  o.add(Axiom::object_property_assertion(P("a"), P("building"), P("b")));
  auto renamed = rename_entity(o, prop("building"), P("hasBuilding"));
  EXPECT_TRUE(renamed.contains(Axiom::class_assertion(P("x"), C("building"))));
  EXPECT_TRUE(renamed.contains(Axiom::object_property_assertion(P("a"), P("hasBuilding"), P("b"))));
  EXPECT_TRUE(punning_conflicts(renamed.vocabulary()).empty());
}

TEST(Rename, InsideNestedExpressions) {
  auto ax = Axiom::sub_class_of(C("A"), ClassExpression::some_values_from(P("r"), C("B")));
  auto out = rename_entity(ax, cls("B"), P("B2"));
  EXPECT_EQ(out, Axiom::sub_class_of(C("A"), ClassExpression::some_values_from(P("r"), C("B2"))));
}

TEST(FunctionalSyntax, Renders) {
  auto ax = Axiom::sub_class_of(C("A"), ClassExpression::some_values_from(P("r"), C("B")));
  EXPECT_EQ(to_functional_syntax(ax), "SubClassOf(<http://e/A> ObjectSomeValuesFrom(<http://e/r> <http://e/B>))");
}

TEST(Iri, Absolute) {
  EXPECT_TRUE(is_absolute_iri("http://e/a"));
  EXPECT_TRUE(is_absolute_iri("urn:x"));
  EXPECT_FALSE(is_absolute_iri("a"));
  EXPECT_FALSE(is_absolute_iri("/a:b"));
}
