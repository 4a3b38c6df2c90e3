#include "kgsaf/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "kgsaf/vocab.hpp"

namespace kgsaf {

namespace {

const std::string kThingIri(vocab::owl::Thing);
const std::string kNothingIri(vocab::owl::Nothing);

std::vector<ClassExpression> checked_operands(std::vector<ClassExpression> operands, const char* what) {
  if (operands.size() < 2) {
    throw std::invalid_argument(std::string(what) + " needs at least two operands");
  }
  return operands;
}

}  // namespace

std::string_view to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::Class: return "Class";
    case EntityKind::ObjectProperty: return "ObjectProperty";
    case EntityKind::DataProperty: return "DataProperty";
    case EntityKind::NamedIndividual: return "NamedIndividual";
  }
  return "?";
}

std::optional<EntityKind> parse_entity_kind(std::string_view name) {
  if (name == "Class") return EntityKind::Class;
  if (name == "ObjectProperty") return EntityKind::ObjectProperty;
  if (name == "DataProperty") return EntityKind::DataProperty;
  if (name == "NamedIndividual") return EntityKind::NamedIndividual;
  return std::nullopt;
}

bool is_absolute_iri(std::string_view iri) {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri[0]))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    const char c = iri[i];
    if (c == ':') return true;
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

// ---------------------------------------------------------------------------
// ClassExpression

ClassExpression::ClassExpression(Kind kind, std::string iri, std::uint32_t n,
                                 std::vector<ClassExpression> operands)
    : kind_(kind), iri_(std::move(iri)), cardinality_(n), operands_(std::move(operands)) {}

ClassExpression ClassExpression::named(std::string iri) {
  if (iri == vocab::owl::Thing) return top();
  if (iri == vocab::owl::Nothing) return bottom();
  return ClassExpression(Kind::Named, std::move(iri), 0, {});
}

ClassExpression ClassExpression::top() { return ClassExpression(Kind::Top, {}, 0, {}); }
ClassExpression ClassExpression::bottom() { return ClassExpression(Kind::Bottom, {}, 0, {}); }

ClassExpression ClassExpression::union_of(std::vector<ClassExpression> operands) {
  return ClassExpression(Kind::UnionOf, {}, 0, checked_operands(std::move(operands), "UnionOf"));
}

ClassExpression ClassExpression::intersection_of(std::vector<ClassExpression> operands) {
  return ClassExpression(Kind::IntersectionOf, {}, 0, checked_operands(std::move(operands), "IntersectionOf"));
}

ClassExpression ClassExpression::complement_of(ClassExpression operand) {
  std::vector<ClassExpression> ops;
  ops.push_back(std::move(operand));
  return ClassExpression(Kind::ComplementOf, {}, 0, std::move(ops));
}

#define KGSAF_RESTRICTION(fn, kind)                                                               \
  ClassExpression ClassExpression::fn(std::string property, ClassExpression filler) {            \
    std::vector<ClassExpression> ops;                                                             \
    ops.push_back(std::move(filler));                                                             \
    return ClassExpression(Kind::kind, std::move(property), 0, std::move(ops));                   \
  }
KGSAF_RESTRICTION(some_values_from, SomeValuesFrom)
KGSAF_RESTRICTION(all_values_from, AllValuesFrom)
#undef KGSAF_RESTRICTION

#define KGSAF_CARDINALITY(fn, kind)                                                                \
  ClassExpression ClassExpression::fn(std::uint32_t n, std::string property, ClassExpression filler) { \
    std::vector<ClassExpression> ops;                                                               \
    ops.push_back(std::move(filler));                                                               \
    return ClassExpression(Kind::kind, std::move(property), n, std::move(ops));                     \
  }
KGSAF_CARDINALITY(min_cardinality, MinCardinality)
KGSAF_CARDINALITY(max_cardinality, MaxCardinality)
KGSAF_CARDINALITY(exact_cardinality, ExactCardinality)
#undef KGSAF_CARDINALITY

bool ClassExpression::is_restriction() const {
  return kind_ == Kind::SomeValuesFrom || kind_ == Kind::AllValuesFrom || is_cardinality();
}

bool ClassExpression::is_cardinality() const {
  return kind_ == Kind::MinCardinality || kind_ == Kind::MaxCardinality || kind_ == Kind::ExactCardinality;
}

const std::string& ClassExpression::iri() const {
  if (kind_ == Kind::Top) return kThingIri;
  if (kind_ == Kind::Bottom) return kNothingIri;
  return iri_;
}

// ---------------------------------------------------------------------------
// Axiom

Axiom Axiom::sub_class_of(ClassExpression sub, ClassExpression sup) {
  Axiom a;
  a.kind_ = AxiomKind::SubClassOf;
  a.classes_.push_back(std::move(sub));
  a.classes_.push_back(std::move(sup));
  return a;
}

Axiom Axiom::equivalent_classes(std::vector<ClassExpression> operands) {
  Axiom a;
  a.kind_ = AxiomKind::EquivalentClasses;
  a.classes_ = checked_operands(std::move(operands), "EquivalentClasses");
  std::sort(a.classes_.begin(), a.classes_.end());
  return a;
}

Axiom Axiom::disjoint_classes(std::vector<ClassExpression> operands) {
  Axiom a;
  a.kind_ = AxiomKind::DisjointClasses;
  a.classes_ = checked_operands(std::move(operands), "DisjointClasses");
  std::sort(a.classes_.begin(), a.classes_.end());
  return a;
}

Axiom Axiom::class_assertion(std::string individual, ClassExpression type) {
  Axiom a;
  a.kind_ = AxiomKind::ClassAssertion;
  a.individuals_.push_back(std::move(individual));
  a.classes_.push_back(std::move(type));
  return a;
}

Axiom Axiom::object_property_assertion(std::string subject, std::string property, std::string object) {
  Axiom a;
  a.kind_ = AxiomKind::ObjectPropertyAssertion;
  a.individuals_.push_back(std::move(subject));
  a.individuals_.push_back(std::move(object));
  a.properties_.push_back(std::move(property));
  return a;
}

Axiom Axiom::sub_object_property_of(std::string sub, std::string sup) {
  Axiom a;
  a.kind_ = AxiomKind::SubObjectPropertyOf;
  a.properties_.push_back(std::move(sub));
  a.properties_.push_back(std::move(sup));
  return a;
}

Axiom Axiom::sub_property_chain_of(std::vector<std::string> chain, std::string sup) {
  if (chain.empty()) throw std::invalid_argument("SubPropertyChainOf needs a non-empty chain");
  Axiom a;
  a.kind_ = AxiomKind::SubPropertyChainOf;
  a.properties_ = std::move(chain);
  a.properties_.push_back(std::move(sup));
  return a;
}

Axiom Axiom::equivalent_object_properties(std::vector<std::string> properties) {
  if (properties.size() < 2) {
    throw std::invalid_argument("EquivalentObjectProperties needs at least two operands");
  }
  Axiom a;
  a.kind_ = AxiomKind::EquivalentObjectProperties;
  a.properties_ = std::move(properties);
  std::sort(a.properties_.begin(), a.properties_.end());
  return a;
}

Axiom Axiom::inverse_object_properties(std::string first, std::string second) {
  Axiom a;
  a.kind_ = AxiomKind::InverseObjectProperties;
  if (second < first) std::swap(first, second);
  a.properties_.push_back(std::move(first));
  a.properties_.push_back(std::move(second));
  return a;
}

Axiom Axiom::object_property_domain(std::string property, ClassExpression domain) {
  Axiom a;
  a.kind_ = AxiomKind::ObjectPropertyDomain;
  a.properties_.push_back(std::move(property));
  a.classes_.push_back(std::move(domain));
  return a;
}

Axiom Axiom::object_property_range(std::string property, ClassExpression range) {
  Axiom a;
  a.kind_ = AxiomKind::ObjectPropertyRange;
  a.properties_.push_back(std::move(property));
  a.classes_.push_back(std::move(range));
  return a;
}

Axiom Axiom::characteristic(std::string property, Characteristic c) {
  Axiom a;
  a.kind_ = AxiomKind::Characteristic;
  a.characteristic_ = c;
  a.properties_.push_back(std::move(property));
  return a;
}

Axiom Axiom::with_provenance(Provenance p) const {
  Axiom copy = *this;
  copy.provenance_ = p;
  return copy;
}

bool operator==(const ClassExpression& a, const ClassExpression& b) {
  return a.kind_ == b.kind_ && a.cardinality_ == b.cardinality_ && a.iri_ == b.iri_ && a.operands_ == b.operands_;
}

namespace {

template <typename T>
std::strong_ordering compare_ranges(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end(),
                                                [](const T& x, const T& y) { return x <=> y; });
}

}  // namespace

std::strong_ordering operator<=>(const ClassExpression& a, const ClassExpression& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.iri_ <=> b.iri_; c != 0) return c;
  if (auto c = a.cardinality_ <=> b.cardinality_; c != 0) return c;
  return compare_ranges(a.operands_, b.operands_);
}

bool operator==(const Axiom& a, const Axiom& b) {
  return a.kind_ == b.kind_ && a.characteristic_ == b.characteristic_ && a.properties_ == b.properties_ &&
         a.individuals_ == b.individuals_ && a.classes_ == b.classes_;
}

std::strong_ordering operator<=>(const Axiom& a, const Axiom& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (auto c = a.characteristic_ <=> b.characteristic_; c != 0) return c;
  if (auto c = a.properties_ <=> b.properties_; c != 0) return c;
  if (auto c = a.individuals_ <=> b.individuals_; c != 0) return c;
  return compare_ranges(a.classes_, b.classes_);
}

std::string_view to_string(AxiomKind kind) {
  switch (kind) {
    case AxiomKind::SubClassOf: return "SubClassOf";
    case AxiomKind::EquivalentClasses: return "EquivalentClasses";
    case AxiomKind::DisjointClasses: return "DisjointClasses";
    case AxiomKind::ClassAssertion: return "ClassAssertion";
    case AxiomKind::ObjectPropertyAssertion: return "ObjectPropertyAssertion";
    case AxiomKind::SubObjectPropertyOf: return "SubObjectPropertyOf";
    case AxiomKind::SubPropertyChainOf: return "SubPropertyChainOf";
    case AxiomKind::EquivalentObjectProperties: return "EquivalentObjectProperties";
    case AxiomKind::InverseObjectProperties: return "InverseObjectProperties";
    case AxiomKind::ObjectPropertyDomain: return "ObjectPropertyDomain";
    case AxiomKind::ObjectPropertyRange: return "ObjectPropertyRange";
    case AxiomKind::Characteristic: return "Characteristic";
  }
  return "?";
}

std::string_view to_string(Characteristic c) {
  switch (c) {
    case Characteristic::Functional: return "Functional";
    case Characteristic::InverseFunctional: return "InverseFunctional";
    case Characteristic::Transitive: return "Transitive";
    case Characteristic::Symmetric: return "Symmetric";
    case Characteristic::Asymmetric: return "Asymmetric";
    case Characteristic::Reflexive: return "Reflexive";
    case Characteristic::Irreflexive: return "Irreflexive";
  }
  return "?";
}

std::string_view to_string(Box box) {
  switch (box) {
    case Box::TBox: return "TBox";
    case Box::RBox: return "RBox";
    case Box::ABox: return "ABox";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Signatures and classification

bool Signature::intersects(const Signature& other) const {
  const auto& small = size() <= other.size() ? entities_ : other.entities_;
  const auto& large = size() <= other.size() ? other.entities_ : entities_;
  return std::any_of(small.begin(), small.end(), [&](const EntityRef& e) { return large.contains(e); });
}

bool Signature::includes(const Signature& other) const {
  return std::includes(entities_.begin(), entities_.end(), other.entities_.begin(), other.entities_.end());
}

void collect_signature(const ClassExpression& expr, Signature& out) {
  using K = ClassExpression::Kind;
  switch (expr.kind()) {
    case K::Named: out.insert({expr.iri(), EntityKind::Class}); break;
    case K::Top:
    case K::Bottom: break;
    case K::UnionOf:
    case K::IntersectionOf:
    case K::ComplementOf:
      for (const auto& op : expr.operands()) collect_signature(op, out);
      break;
    default:
      out.insert({expr.property(), EntityKind::ObjectProperty});
      collect_signature(expr.filler(), out);
      break;
  }
}

Signature signature_of(const Axiom& axiom) {
  Signature sig;
  for (const auto& c : axiom.classes()) collect_signature(c, sig);
  for (const auto& p : axiom.properties()) sig.insert({p, EntityKind::ObjectProperty});
  for (const auto& i : axiom.individuals()) sig.insert({i, EntityKind::NamedIndividual});
  return sig;
}

Box classify_box(const Axiom& axiom) {
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf:
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses: return Box::TBox;
    case AxiomKind::ClassAssertion:
    case AxiomKind::ObjectPropertyAssertion: return Box::ABox;
    default: return Box::RBox;
  }
}

bool is_taxonomic(const Axiom& axiom) {
  return axiom.kind() == AxiomKind::SubClassOf && axiom.sub_class().is_named() && axiom.super_class().is_named();
}

bool is_tautology(const Axiom& axiom) {
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf:
      return axiom.sub_class() == axiom.super_class() || axiom.super_class().is_top() ||
             axiom.sub_class().is_bottom();
    case AxiomKind::ClassAssertion: return axiom.class_expression().is_top();
    case AxiomKind::SubObjectPropertyOf: return axiom.sub_property() == axiom.super_property();
    case AxiomKind::ObjectPropertyDomain:
    case AxiomKind::ObjectPropertyRange: return axiom.class_expression().is_top();
    default: return false;
  }
}

// ---------------------------------------------------------------------------
// Ontology

void Ontology::add_import(std::string iri) {
  if (std::find(imports_.begin(), imports_.end(), iri) == imports_.end()) imports_.push_back(std::move(iri));
}

Ontology::AxiomSet& Ontology::box_mut(Box b) {
  switch (b) {
    case Box::TBox: return tbox_;
    case Box::RBox: return rbox_;
    case Box::ABox: return abox_;
  }
  return abox_;
}

const Ontology::AxiomSet& Ontology::box(Box b) const {
  return const_cast<Ontology*>(this)->box_mut(b);
}

bool Ontology::add(Axiom axiom) {
  const Box b = classify_box(axiom);
  return box_mut(b).insert(std::move(axiom)).second;
}

bool Ontology::erase(const Axiom& axiom) { return box_mut(classify_box(axiom)).erase(axiom) > 0; }

bool Ontology::contains(const Axiom& axiom) const { return box(classify_box(axiom)).contains(axiom); }

std::vector<Axiom> Ontology::axioms() const {
  std::vector<Axiom> out;
  out.reserve(size());
  for (const auto* set : {&tbox_, &rbox_, &abox_}) out.insert(out.end(), set->begin(), set->end());
  std::sort(out.begin(), out.end());
  return out;
}

Signature Ontology::vocabulary() const {
  Signature sig;
  for (const auto* set : {&tbox_, &rbox_, &abox_}) {
    for (const auto& a : *set) sig.merge(signature_of(a));
  }
  return sig;
}

Ontology Ontology::schema() const {
  Ontology out(iri_);
  out.tbox_ = tbox_;
  out.rbox_ = rbox_;
  return out;
}

std::map<std::string, std::set<EntityKind>> punning_conflicts(const Signature& vocabulary) {
  std::map<std::string, std::set<EntityKind>> kinds;
  for (const auto& e : vocabulary) kinds[e.iri].insert(e.kind);
  std::erase_if(kinds, [](const auto& entry) { return entry.second.size() < 2; });
  return kinds;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render(const ClassExpression& e, std::string& out) {
  using K = ClassExpression::Kind;
  auto list = [&](std::string_view name) {
    out += name;
    out += '(';
    for (std::size_t i = 0; i < e.operands().size(); ++i) {
      if (i) out += ' ';
      render(e.operands()[i], out);
    }
    out += ')';
  };
  auto restriction = [&](std::string_view name, bool with_n) {
    out += name;
    out += '(';
    if (with_n) {
      out += std::to_string(e.cardinality());
      out += ' ';
    }
    out += '<' + e.property() + "> ";
    render(e.filler(), out);
    out += ')';
  };
  switch (e.kind()) {
    case K::Named:
    case K::Top:
    case K::Bottom: out += '<' + e.iri() + '>'; break;
    case K::UnionOf: list("ObjectUnionOf"); break;
    case K::IntersectionOf: list("ObjectIntersectionOf"); break;
    case K::ComplementOf: list("ObjectComplementOf"); break;
    case K::SomeValuesFrom: restriction("ObjectSomeValuesFrom", false); break;
    case K::AllValuesFrom: restriction("ObjectAllValuesFrom", false); break;
    case K::MinCardinality: restriction("ObjectMinCardinality", true); break;
    case K::MaxCardinality: restriction("ObjectMaxCardinality", true); break;
    case K::ExactCardinality: restriction("ObjectExactCardinality", true); break;
  }
}

std::string_view characteristic_axiom_name(Characteristic c) {
  switch (c) {
    case Characteristic::Functional: return "FunctionalObjectProperty";
    case Characteristic::InverseFunctional: return "InverseFunctionalObjectProperty";
    case Characteristic::Transitive: return "TransitiveObjectProperty";
    case Characteristic::Symmetric: return "SymmetricObjectProperty";
    case Characteristic::Asymmetric: return "AsymmetricObjectProperty";
    case Characteristic::Reflexive: return "ReflexiveObjectProperty";
    case Characteristic::Irreflexive: return "IrreflexiveObjectProperty";
  }
  return "?";
}

}  // namespace

std::string to_functional_syntax(const ClassExpression& expr) {
  std::string out;
  render(expr, out);
  return out;
}

std::string to_functional_syntax(const Axiom& axiom) {
  std::string out;
  auto iri = [&](const std::string& s) { out += '<' + s + '>'; };
  if (axiom.kind() == AxiomKind::Characteristic) {
    out += characteristic_axiom_name(axiom.characteristic());
  } else if (axiom.kind() == AxiomKind::SubPropertyChainOf) {
    out += "SubObjectPropertyOf";
  } else {
    out += to_string(axiom.kind());
  }
  out += '(';
  bool first = true;
  auto sep = [&] {
    if (!first) out += ' ';
    first = false;
  };
  switch (axiom.kind()) {
    case AxiomKind::ClassAssertion:
      sep();
      render(axiom.class_expression(), out);
      sep();
      iri(axiom.individual());
      break;
    case AxiomKind::ObjectPropertyAssertion:
      sep();
      iri(axiom.property());
      sep();
      iri(axiom.subject());
      sep();
      iri(axiom.object());
      break;
    case AxiomKind::SubPropertyChainOf:
      sep();
      out += "ObjectPropertyChain(";
      for (std::size_t i = 0; i < axiom.chain().size(); ++i) {
        if (i) out += ' ';
        iri(axiom.chain()[i]);
      }
      out += ')';
      sep();
      iri(axiom.super_property());
      break;
    default:
      for (const auto& p : axiom.properties()) {
        sep();
        iri(p);
      }
      for (const auto& c : axiom.classes()) {
        sep();
        render(c, out);
      }
      break;
  }
  out += ')';
  return out;
}

// ---------------------------------------------------------------------------
// Renaming

ClassExpression rename_entity(const ClassExpression& e, const EntityRef& from, const std::string& to) {
  using K = ClassExpression::Kind;
  const bool prop_hit = from.kind == EntityKind::ObjectProperty && e.property() == from.iri;
  const std::string prop = prop_hit ? to : e.property();
  auto ops = [&] {
    std::vector<ClassExpression> out;
    for (const auto& op : e.operands()) out.push_back(rename_entity(op, from, to));
    return out;
  };
  switch (e.kind()) {
    case K::Named:
      return from.kind == EntityKind::Class && e.iri() == from.iri ? ClassExpression::named(to) : e;
    case K::Top:
    case K::Bottom: return e;
    case K::UnionOf: return ClassExpression::union_of(ops());
    case K::IntersectionOf: return ClassExpression::intersection_of(ops());
    case K::ComplementOf: return ClassExpression::complement_of(ops().front());
    case K::SomeValuesFrom: return ClassExpression::some_values_from(prop, ops().front());
    case K::AllValuesFrom: return ClassExpression::all_values_from(prop, ops().front());
    case K::MinCardinality: return ClassExpression::min_cardinality(e.cardinality(), prop, ops().front());
    case K::MaxCardinality: return ClassExpression::max_cardinality(e.cardinality(), prop, ops().front());
    case K::ExactCardinality: return ClassExpression::exact_cardinality(e.cardinality(), prop, ops().front());
  }
  return e;
}

Axiom rename_entity(const Axiom& a, const EntityRef& from, const std::string& to) {
  auto cls = [&](const ClassExpression& c) { return rename_entity(c, from, to); };
  auto prop = [&](const std::string& p) {
    return from.kind == EntityKind::ObjectProperty && p == from.iri ? to : p;
  };
  auto ind = [&](const std::string& i) {
    return from.kind == EntityKind::NamedIndividual && i == from.iri ? to : i;
  };
  auto classes = [&] {
    std::vector<ClassExpression> out;
    for (const auto& c : a.classes()) out.push_back(cls(c));
    return out;
  };
  auto props = [&](std::span<const std::string> in) {
    std::vector<std::string> out;
    for (const auto& p : in) out.push_back(prop(p));
    return out;
  };
  Axiom out = a;
  switch (a.kind()) {
    case AxiomKind::SubClassOf: out = Axiom::sub_class_of(cls(a.sub_class()), cls(a.super_class())); break;
    case AxiomKind::EquivalentClasses: out = Axiom::equivalent_classes(classes()); break;
    case AxiomKind::DisjointClasses: out = Axiom::disjoint_classes(classes()); break;
    case AxiomKind::ClassAssertion:
      out = Axiom::class_assertion(ind(a.individual()), cls(a.class_expression()));
      break;
    case AxiomKind::ObjectPropertyAssertion:
      out = Axiom::object_property_assertion(ind(a.subject()), prop(a.property()), ind(a.object()));
      break;
    case AxiomKind::SubObjectPropertyOf:
      out = Axiom::sub_object_property_of(prop(a.sub_property()), prop(a.super_property()));
      break;
    case AxiomKind::SubPropertyChainOf:
      out = Axiom::sub_property_chain_of(props(a.chain()), prop(a.super_property()));
      break;
    case AxiomKind::EquivalentObjectProperties:
      out = Axiom::equivalent_object_properties(props(a.properties()));
      break;
    case AxiomKind::InverseObjectProperties:
      out = Axiom::inverse_object_properties(prop(a.properties()[0]), prop(a.properties()[1]));
      break;
    case AxiomKind::ObjectPropertyDomain:
      out = Axiom::object_property_domain(prop(a.property()), cls(a.class_expression()));
      break;
    case AxiomKind::ObjectPropertyRange:
      out = Axiom::object_property_range(prop(a.property()), cls(a.class_expression()));
      break;
    case AxiomKind::Characteristic: out = Axiom::characteristic(prop(a.property()), a.characteristic()); break;
  }
  out.set_provenance(a.provenance());
  return out;
}

Ontology rename_entity(const Ontology& ontology, const EntityRef& from, const std::string& to) {
  Ontology out(ontology.iri());
  for (const auto& i : ontology.imports()) out.add_import(i);
  for (const auto& a : ontology.axioms()) out.add(rename_entity(a, from, to));
  return out;
}

}  // namespace kgsaf
