#pragma once

// Core in-memory representation of OWL ontologies: entities, class
// expressions, axioms partitioned into TBox/RBox/ABox, and signatures.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kgsaf {

enum class EntityKind : std::uint8_t { Class, ObjectProperty, DataProperty, NamedIndividual };

std::string_view to_string(EntityKind kind);
std::optional<EntityKind> parse_entity_kind(std::string_view name);

// True when `iri` carries a scheme (RFC 3986 `scheme ":"` prefix).
bool is_absolute_iri(std::string_view iri);

struct EntityRef {
  std::string iri;
  EntityKind kind = EntityKind::Class;

  auto operator<=>(const EntityRef&) const = default;
};

class ClassExpression {
 public:
  enum class Kind : std::uint8_t {
    Named,
    UnionOf,
    IntersectionOf,
    ComplementOf,
    SomeValuesFrom,
    AllValuesFrom,
    MinCardinality,
    MaxCardinality,
    ExactCardinality,
    Top,
    Bottom,
  };

  // owl:Thing and owl:Nothing map to Top and Bottom.
  static ClassExpression named(std::string iri);
  static ClassExpression top();
  static ClassExpression bottom();
  // Throws std::invalid_argument for fewer than two operands.
  static ClassExpression union_of(std::vector<ClassExpression> operands);
  static ClassExpression intersection_of(std::vector<ClassExpression> operands);
  static ClassExpression complement_of(ClassExpression operand);
  static ClassExpression some_values_from(std::string property, ClassExpression filler);
  static ClassExpression all_values_from(std::string property, ClassExpression filler);
  static ClassExpression min_cardinality(std::uint32_t n, std::string property, ClassExpression filler);
  static ClassExpression max_cardinality(std::uint32_t n, std::string property, ClassExpression filler);
  static ClassExpression exact_cardinality(std::uint32_t n, std::string property, ClassExpression filler);

  Kind kind() const { return kind_; }
  bool is_named() const { return kind_ == Kind::Named; }
  bool is_top() const { return kind_ == Kind::Top; }
  bool is_bottom() const { return kind_ == Kind::Bottom; }
  bool is_restriction() const;
  bool is_cardinality() const;

  // Class IRI for Named; owl:Thing / owl:Nothing for Top / Bottom.
  const std::string& iri() const;
  // Restricted property for SomeValuesFrom, AllValuesFrom and cardinalities.
  const std::string& property() const { return iri_; }
  std::uint32_t cardinality() const { return cardinality_; }
  // Operands of UnionOf / IntersectionOf, or the single operand/filler.
  const std::vector<ClassExpression>& operands() const { return operands_; }
  const ClassExpression& filler() const { return operands_.front(); }

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);
  friend std::strong_ordering operator<=>(const ClassExpression& a, const ClassExpression& b);

 private:
  ClassExpression(Kind kind, std::string iri, std::uint32_t n, std::vector<ClassExpression> operands);

  Kind kind_ = Kind::Top;
  std::string iri_;
  std::uint32_t cardinality_ = 0;
  std::vector<ClassExpression> operands_;
};

enum class AxiomKind : std::uint8_t {
  SubClassOf,
  EquivalentClasses,
  DisjointClasses,
  ClassAssertion,
  ObjectPropertyAssertion,
  SubObjectPropertyOf,
  SubPropertyChainOf,
  EquivalentObjectProperties,
  InverseObjectProperties,
  ObjectPropertyDomain,
  ObjectPropertyRange,
  Characteristic,
};

enum class Characteristic : std::uint8_t {
  Functional,
  InverseFunctional,
  Transitive,
  Symmetric,
  Asymmetric,
  Reflexive,
  Irreflexive,
};

inline constexpr Characteristic kAllCharacteristics[] = {
    Characteristic::Functional, Characteristic::InverseFunctional, Characteristic::Transitive,
    Characteristic::Symmetric,  Characteristic::Asymmetric,        Characteristic::Reflexive,
    Characteristic::Irreflexive};

enum class Provenance : std::uint8_t { Asserted, Inferred };
enum class Box : std::uint8_t { TBox, RBox, ABox };

std::string_view to_string(AxiomKind kind);
std::string_view to_string(Characteristic c);
std::string_view to_string(Box box);

class Axiom {
 public:
  static Axiom sub_class_of(ClassExpression sub, ClassExpression sup);
  // Operands are kept in canonical (sorted) order; equality is order-insensitive.
  static Axiom equivalent_classes(std::vector<ClassExpression> operands);
  static Axiom disjoint_classes(std::vector<ClassExpression> operands);
  static Axiom class_assertion(std::string individual, ClassExpression type);
  static Axiom object_property_assertion(std::string subject, std::string property, std::string object);
  static Axiom sub_object_property_of(std::string sub, std::string sup);
  // Chain order is significant.
  static Axiom sub_property_chain_of(std::vector<std::string> chain, std::string sup);
  static Axiom equivalent_object_properties(std::vector<std::string> properties);
  static Axiom inverse_object_properties(std::string first, std::string second);
  static Axiom object_property_domain(std::string property, ClassExpression domain);
  static Axiom object_property_range(std::string property, ClassExpression range);
  static Axiom characteristic(std::string property, Characteristic c);

  AxiomKind kind() const { return kind_; }
  Provenance provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = p; }
  Axiom with_provenance(Provenance p) const;

  const std::vector<ClassExpression>& classes() const { return classes_; }
  const std::vector<std::string>& properties() const { return properties_; }
  const std::vector<std::string>& individuals() const { return individuals_; }
  Characteristic characteristic() const { return characteristic_; }

  // Role accessors; valid only for the matching kinds.
  const ClassExpression& sub_class() const { return classes_[0]; }
  const ClassExpression& super_class() const { return classes_[1]; }
  const ClassExpression& class_expression() const { return classes_[0]; }
  const std::string& individual() const { return individuals_[0]; }
  const std::string& subject() const { return individuals_[0]; }
  const std::string& object() const { return individuals_[1]; }
  const std::string& property() const { return properties_[0]; }
  const std::string& sub_property() const { return properties_[0]; }
  const std::string& super_property() const { return properties_.back(); }
  std::span<const std::string> chain() const {
    return std::span<const std::string>(properties_).first(properties_.size() - 1);
  }

  // Structural comparison; provenance is ignored.
  friend bool operator==(const Axiom& a, const Axiom& b);
  friend std::strong_ordering operator<=>(const Axiom& a, const Axiom& b);

 private:
  Axiom() = default;

  AxiomKind kind_ = AxiomKind::SubClassOf;
  Provenance provenance_ = Provenance::Asserted;
  Characteristic characteristic_ = Characteristic::Functional;
  std::vector<ClassExpression> classes_;
  std::vector<std::string> properties_;
  std::vector<std::string> individuals_;
};

class Signature {
 public:
  Signature() = default;
  Signature(std::initializer_list<EntityRef> entities) : entities_(entities) {}

  bool insert(EntityRef e) { return entities_.insert(std::move(e)).second; }
  void merge(const Signature& other) { entities_.insert(other.entities_.begin(), other.entities_.end()); }
  bool contains(const EntityRef& e) const { return entities_.contains(e); }
  bool intersects(const Signature& other) const;
  bool includes(const Signature& other) const;
  std::size_t size() const { return entities_.size(); }
  bool empty() const { return entities_.empty(); }
  auto begin() const { return entities_.begin(); }
  auto end() const { return entities_.end(); }
  const std::set<EntityRef>& entities() const { return entities_; }

  bool operator==(const Signature&) const = default;

 private:
  std::set<EntityRef> entities_;
};

// Every named entity occurring in the axiom (Top/Bottom excluded).
Signature signature_of(const Axiom& axiom);
void collect_signature(const ClassExpression& expr, Signature& out);

Box classify_box(const Axiom& axiom);
// SubClassOf between two named classes.
bool is_taxonomic(const Axiom& axiom);
// SubClassOf(X, X), SubClassOf(X, Top), SubClassOf(Bottom, X) and owl:Thing typings.
bool is_tautology(const Axiom& axiom);

class Ontology {
 public:
  using AxiomSet = std::set<Axiom>;

  Ontology() = default;
  explicit Ontology(std::string iri) : iri_(std::move(iri)) {}

  const std::string& iri() const { return iri_; }
  void set_iri(std::string iri) { iri_ = std::move(iri); }
  const std::vector<std::string>& imports() const { return imports_; }
  void add_import(std::string iri);
  void clear_imports() { imports_.clear(); }

  // Returns false when a structurally equal axiom is already present.
  bool add(Axiom axiom);
  template <typename Range>
  void add_all(const Range& axioms) {
    for (const auto& a : axioms) add(a);
  }
  bool erase(const Axiom& axiom);
  bool contains(const Axiom& axiom) const;

  const AxiomSet& tbox() const { return tbox_; }
  const AxiomSet& rbox() const { return rbox_; }
  const AxiomSet& abox() const { return abox_; }
  const AxiomSet& box(Box b) const;

  std::vector<Axiom> axioms() const;
  std::size_t size() const { return tbox_.size() + rbox_.size() + abox_.size(); }
  bool empty() const { return size() == 0; }

  // Union of the signatures of all axioms.
  Signature vocabulary() const;
  // Schema part (TBox and RBox) as a separate ontology.
  Ontology schema() const;

  bool operator==(const Ontology& other) const {
    return tbox_ == other.tbox_ && rbox_ == other.rbox_ && abox_ == other.abox_;
  }

 private:
  AxiomSet& box_mut(Box b);

  std::string iri_;
  std::vector<std::string> imports_;
  AxiomSet tbox_;
  AxiomSet rbox_;
  AxiomSet abox_;
};

// IRIs used with more than one entity kind.
std::map<std::string, std::set<EntityKind>> punning_conflicts(const Signature& vocabulary);

// Replaces every occurrence of `from` (same IRI in a position of the same
// kind) with the IRI `to`. Other occurrences of the IRI are left alone, which
// is what separates the two halves of a punned name.
ClassExpression rename_entity(const ClassExpression& expr, const EntityRef& from, const std::string& to);
Axiom rename_entity(const Axiom& axiom, const EntityRef& from, const std::string& to);
Ontology rename_entity(const Ontology& ontology, const EntityRef& from, const std::string& to);

// OWL functional-style rendering with full IRIs, e.g. SubClassOf(<a> <b>).
std::string to_functional_syntax(const ClassExpression& expr);
std::string to_functional_syntax(const Axiom& axiom);

}  // namespace kgsaf
