#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "kgsaf/rdf/owl.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"
#include "kgsaf/vocab.hpp"

namespace kgsaf::rdf {

namespace {

namespace R = vocab::rdf;
namespace RS = vocab::rdfs;
namespace O = vocab::owl;

bool in_namespace(const std::string& iri, std::string_view ns) { return iri.starts_with(ns); }

bool is_builtin(const std::string& iri) {
  return in_namespace(iri, vocab::kRdf) || in_namespace(iri, vocab::kRdfs) || in_namespace(iri, vocab::kOwl) ||
         in_namespace(iri, vocab::kXsd);
}

bool is_builtin_annotation(const std::string& iri) {
  static const std::set<std::string, std::less<>> kAnnotations{
      std::string(RS::label),       std::string(RS::comment),         std::string(RS::seeAlso),
      std::string(RS::isDefinedBy), std::string(O::versionInfo),      std::string(O::deprecated),
      std::string(O::priorVersion), std::string(O::versionIRI)};
  return kAnnotations.contains(iri);
}

bool is_datatype(const std::string& iri) {
  return in_namespace(iri, vocab::kXsd) || iri == RS::Literal || iri == R::langString || iri == R::XMLLiteral;
}

std::optional<Characteristic> characteristic_for(const std::string& type) {
  if (type == O::FunctionalProperty) return Characteristic::Functional;
  if (type == O::InverseFunctionalProperty) return Characteristic::InverseFunctional;
  if (type == O::TransitiveProperty) return Characteristic::Transitive;
  if (type == O::SymmetricProperty) return Characteristic::Symmetric;
  if (type == O::AsymmetricProperty) return Characteristic::Asymmetric;
  if (type == O::ReflexiveProperty) return Characteristic::Reflexive;
  if (type == O::IrreflexiveProperty) return Characteristic::Irreflexive;
  return std::nullopt;
}

std::string_view characteristic_type(Characteristic c) {
  switch (c) {
    case Characteristic::Functional: return O::FunctionalProperty;
    case Characteristic::InverseFunctional: return O::InverseFunctionalProperty;
    case Characteristic::Transitive: return O::TransitiveProperty;
    case Characteristic::Symmetric: return O::SymmetricProperty;
    case Characteristic::Asymmetric: return O::AsymmetricProperty;
    case Characteristic::Reflexive: return O::ReflexiveProperty;
    case Characteristic::Irreflexive: return O::IrreflexiveProperty;
  }
  return {};
}

std::optional<std::uint32_t> parse_count(const Term& t) {
  if (!t.is_literal()) return std::nullopt;
  std::uint32_t n = 0;
  const auto& s = t.value;
  const auto* first = s.data() + (s.starts_with('+') ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), n);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return n;
}

struct TermHash {
  std::size_t operator()(const Term& t) const {
    return std::hash<std::string>()(t.value) ^ (static_cast<std::size_t>(t.kind) << 1);
  }
};

class Mapper {
 public:
  Mapper(const std::vector<Triple>& triples, const MappingOptions& options)
      : triples_(triples), options_(options), consumed_(triples.size(), false) {
    for (std::size_t i = 0; i < triples_.size(); ++i) by_subject_[triples_[i].subject].push_back(i);
  }

  MappedOntology run() {
    collect_declarations();
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      if (!consumed_[i]) map_triple(i);
    }
    classify_leftovers();
    report_.triples_read = triples_.size();
    report_.triples_consumed = static_cast<std::size_t>(std::count(consumed_.begin(), consumed_.end(), true));
    return MappedOntology{std::move(ontology_), report_};
  }

 private:
  using Used = std::vector<std::size_t>;

  void consume(std::size_t i) { consumed_[i] = true; }
  void commit(const Used& used) {
    for (auto i : used) consume(i);
  }

  void add(Axiom a) {
    ++report_.axioms_read;
    ontology_.add(std::move(a));
  }

  // -------------------------------------------------------------------------
  // Declarations

  void collect_declarations() {
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      const Triple& t = triples_[i];
      if (t.predicate.value != R::type || !t.object.is_iri()) continue;
      const std::string& type = t.object.value;
      if (type == O::Ontology && t.subject.is_iri()) {
        if (ontology_.iri().empty()) ontology_.set_iri(t.subject.value);
        ontology_subjects_.insert(t.subject.value);
        consume(i);
        continue;
      }
      if (!t.subject.is_iri()) continue;
      const std::string& s = t.subject.value;
      if (type == O::Class || type == RS::Class) {
        classes_.insert(s);
      } else if (type == O::ObjectProperty) {
        object_properties_.insert(s);
      } else if (type == O::DatatypeProperty) {
        data_properties_.insert(s);
      } else if (type == O::AnnotationProperty) {
        annotation_properties_.insert(s);
      } else if (type == O::NamedIndividual) {
        individuals_.insert(s);
      } else if (type == R::Property || type == RS::Datatype) {
      } else {
        continue;
      }
      consume(i);
    }
    // Properties used in object-property axioms are object properties even
    // without an explicit declaration.
    for (const auto& t : triples_) {
      const std::string& p = t.predicate.value;
      if (!t.subject.is_iri()) continue;
      if (p == O::inverseOf || p == O::propertyChainAxiom || p == O::equivalentProperty) {
        implicit_property(t.subject.value);
        if (t.object.is_iri()) implicit_property(t.object.value);
      } else if (p == RS::subPropertyOf && t.object.is_iri()) {
        if (!data_properties_.contains(t.object.value) && !annotation_properties_.contains(t.object.value) &&
            !data_properties_.contains(t.subject.value) && !annotation_properties_.contains(t.subject.value)) {
          implicit_property(t.subject.value);
          implicit_property(t.object.value);
        }
      } else if ((p == RS::domain || p == RS::range) && !data_properties_.contains(t.subject.value) &&
                 !annotation_properties_.contains(t.subject.value) &&
                 !(p == RS::range && t.object.is_iri() && is_datatype(t.object.value))) {
        implicit_property(t.subject.value);
      } else if (p == R::type && t.object.is_iri() && characteristic_for(t.object.value) &&
                 !data_properties_.contains(t.subject.value)) {
        implicit_property(t.subject.value);
      }
    }
    if (options_.infer_declarations) {
      for (const auto& t : triples_) {
        const std::string& p = t.predicate.value;
        if (p == R::type && t.subject.is_iri() && t.object.is_iri() && !is_builtin(t.object.value) &&
            !is_schema_entity(t.subject.value)) {
          individuals_.insert(t.subject.value);
        } else if (t.subject.is_iri() && t.object.is_iri() && !is_builtin(p) && !data_properties_.contains(p) &&
                   !annotation_properties_.contains(p) && !ontology_subjects_.contains(t.subject.value)) {
          object_properties_.insert(p);
        }
      }
    }
  }

  void implicit_property(const std::string& p) {
    if (!is_builtin(p)) object_properties_.insert(p);
  }

  bool is_schema_entity(const std::string& iri) const {
    return classes_.contains(iri) || object_properties_.contains(iri) || data_properties_.contains(iri) ||
           annotation_properties_.contains(iri);
  }

  bool is_annotation_predicate(const std::string& p) const {
    return annotation_properties_.contains(p) || is_builtin_annotation(p);
  }

  // -------------------------------------------------------------------------
  // Lists and class expressions

  // Index of the unique unconsumed triple (subject, predicate), if any.
  std::vector<std::size_t> lookup(const Term& subject, std::string_view predicate) const {
    std::vector<std::size_t> out;
    auto it = by_subject_.find(subject);
    if (it == by_subject_.end()) return out;
    for (auto i : it->second) {
      if (triples_[i].predicate.value == predicate) out.push_back(i);
    }
    return out;
  }

  std::optional<std::vector<Term>> parse_list(const Term& head, Used& used) const {
    std::vector<Term> items;
    std::set<Term> seen;
    Term node = head;
    while (!(node.is_iri() && node.value == R::nil)) {
      if (!node.is_blank()) throw Error("rdf:List ends in " + node.value + " instead of rdf:nil");
      if (!seen.insert(node).second) throw Error("cyclic rdf:List at _:" + node.value);
      const auto firsts = lookup(node, R::first);
      const auto rests = lookup(node, R::rest);
      if (rests.empty()) throw Error("dangling rdf:List: _:" + node.value + " has no rdf:rest");
      if (firsts.size() != 1 || rests.size() != 1) return std::nullopt;
      used.push_back(firsts[0]);
      used.push_back(rests[0]);
      for (auto i : lookup(node, R::type)) {
        if (triples_[i].object.value == R::List) used.push_back(i);
      }
      items.push_back(triples_[firsts[0]].object);
      node = triples_[rests[0]].object;
    }
    return items;
  }

  std::optional<std::string> object_property_term(const Term& t) const {
    if (!t.is_iri() || data_properties_.contains(t.value) || annotation_properties_.contains(t.value)) {
      return std::nullopt;
    }
    return t.value;
  }

  std::optional<ClassExpression> parse_class(const Term& t, Used& used, int depth = 0) const {
    if (depth > 256) return std::nullopt;
    if (t.is_literal()) return std::nullopt;
    if (t.is_iri()) {
      if (is_datatype(t.value)) return std::nullopt;
      return ClassExpression::named(t.value);
    }
    Used local;
    for (auto i : lookup(t, R::type)) {
      const auto& type = triples_[i].object.value;
      if (type == O::Class || type == O::Restriction || type == RS::Class) local.push_back(i);
    }
    auto single = [&](std::string_view predicate) -> std::optional<std::size_t> {
      auto hits = lookup(t, predicate);
      if (hits.size() != 1) return std::nullopt;
      return hits[0];
    };

    auto list_operands = [&](std::size_t i) -> std::optional<std::vector<ClassExpression>> {
      auto items = parse_list(triples_[i].object, local);
      if (!items || items->size() < 2) return std::nullopt;
      std::vector<ClassExpression> ops;
      for (const auto& item : *items) {
        auto c = parse_class(item, local, depth + 1);
        if (!c) return std::nullopt;
        ops.push_back(std::move(*c));
      }
      local.push_back(i);
      return ops;
    };

    std::optional<ClassExpression> result;
    if (auto u = single(O::unionOf)) {
      if (auto ops = list_operands(*u)) result = ClassExpression::union_of(std::move(*ops));
    } else if (auto n = single(O::intersectionOf)) {
      if (auto ops = list_operands(*n)) result = ClassExpression::intersection_of(std::move(*ops));
    } else if (auto c = single(O::complementOf)) {
      if (auto op = parse_class(triples_[*c].object, local, depth + 1)) {
        local.push_back(*c);
        result = ClassExpression::complement_of(std::move(*op));
      }
    } else if (auto on = single(O::onProperty)) {
      result = parse_restriction(t, *on, local, depth);
    }
    if (!result) return std::nullopt;
    used.insert(used.end(), local.begin(), local.end());
    return result;
  }

  std::optional<ClassExpression> parse_restriction(const Term& t, std::size_t on, Used& local, int depth) const {
    auto property = object_property_term(triples_[on].object);
    if (!property) return std::nullopt;
    local.push_back(on);
    auto single = [&](std::string_view predicate) -> std::optional<std::size_t> {
      auto hits = lookup(t, predicate);
      if (hits.size() != 1) return std::nullopt;
      return hits[0];
    };
    auto filler_of = [&](std::size_t i) -> std::optional<ClassExpression> {
      auto c = parse_class(triples_[i].object, local, depth + 1);
      if (c) local.push_back(i);
      return c;
    };
    if (auto s = single(O::someValuesFrom)) {
      if (auto f = filler_of(*s)) return ClassExpression::some_values_from(*property, std::move(*f));
      return std::nullopt;
    }
    if (auto a = single(O::allValuesFrom)) {
      if (auto f = filler_of(*a)) return ClassExpression::all_values_from(*property, std::move(*f));
      return std::nullopt;
    }
    struct CardinalityForm {
      std::string_view unqualified, qualified;
      ClassExpression (*make)(std::uint32_t, std::string, ClassExpression);
    };
    static const CardinalityForm kForms[] = {
        {O::minCardinality, O::minQualifiedCardinality, &ClassExpression::min_cardinality},
        {O::maxCardinality, O::maxQualifiedCardinality, &ClassExpression::max_cardinality},
        {O::cardinality, O::qualifiedCardinality, &ClassExpression::exact_cardinality},
    };
    for (const auto& form : kForms) {
      if (auto u = single(form.unqualified)) {
        auto n = parse_count(triples_[*u].object);
        if (!n) return std::nullopt;
        local.push_back(*u);
        return form.make(*n, *property, ClassExpression::top());
      }
      if (auto q = single(form.qualified)) {
        auto n = parse_count(triples_[*q].object);
        auto on_class = single(O::onClass);
        if (!n || !on_class) return std::nullopt;
        local.push_back(*q);
        auto f = filler_of(*on_class);
        if (!f) return std::nullopt;
        return form.make(*n, *property, std::move(*f));
      }
    }
    return std::nullopt;
  }

  // -------------------------------------------------------------------------
  // Axiom triples

  bool both_classes(std::size_t i, Used& used, std::optional<ClassExpression>& a,
                    std::optional<ClassExpression>& b) const {
    a = parse_class(triples_[i].subject, used);
    if (!a) return false;
    b = parse_class(triples_[i].object, used);
    return b.has_value();
  }

  bool is_object_property(const std::string& p) const { return object_properties_.contains(p); }

  void map_triple(std::size_t i) {
    const Triple& t = triples_[i];
    const std::string& p = t.predicate.value;
    Used used{i};
    std::optional<ClassExpression> a, b;

    if (ontology_subjects_.contains(t.subject.value) && t.subject.is_iri()) {
      if (p == O::imports && t.object.is_iri()) {
        ontology_.add_import(t.object.value);
        consume(i);
      }
      return;
    }

    if (p == RS::subClassOf) {
      if (both_classes(i, used, a, b)) {
        commit(used);
        add(Axiom::sub_class_of(std::move(*a), std::move(*b)));
      }
      return;
    }
    if (p == O::equivalentClass) {
      if (both_classes(i, used, a, b)) {
        commit(used);
        add(Axiom::equivalent_classes({std::move(*a), std::move(*b)}));
      }
      return;
    }
    if (p == O::disjointWith) {
      if (both_classes(i, used, a, b)) {
        commit(used);
        add(Axiom::disjoint_classes({std::move(*a), std::move(*b)}));
      }
      return;
    }
    if (t.subject.is_blank()) {
      if (p == R::type && t.object.value == O::AllDisjointClasses) map_all_disjoint(i);
      return;  // other blank-subject triples belong to expressions and lists
    }

    const std::string& s = t.subject.value;
    if ((p == O::unionOf || p == O::intersectionOf || p == O::complementOf) && t.object.is_resource()) {
      // C owl:unionOf (...) names a class expression: EquivalentClasses(C, expr).
      auto op = parse_named_definition(i);
      if (op) {
        commit(used);
        add(Axiom::equivalent_classes({ClassExpression::named(s), std::move(*op)}));
      }
      return;
    }
    if (p == RS::subPropertyOf) {
      if (t.object.is_iri() && is_object_property(s) && is_object_property(t.object.value)) {
        consume(i);
        add(Axiom::sub_object_property_of(s, t.object.value));
      }
      return;
    }
    if (p == O::equivalentProperty) {
      if (t.object.is_iri() && is_object_property(s) && is_object_property(t.object.value)) {
        consume(i);
        add(Axiom::equivalent_object_properties({s, t.object.value}));
      }
      return;
    }
    if (p == O::inverseOf) {
      if (t.object.is_iri()) {
        consume(i);
        add(Axiom::inverse_object_properties(s, t.object.value));
      }
      return;
    }
    if (p == RS::domain || p == RS::range) {
      if (!is_object_property(s)) return;
      if (auto c = parse_class(t.object, used)) {
        commit(used);
        add(p == RS::domain ? Axiom::object_property_domain(s, std::move(*c))
                            : Axiom::object_property_range(s, std::move(*c)));
      }
      return;
    }
    if (p == O::propertyChainAxiom) {
      auto items = parse_list(t.object, used);
      if (!items || items->empty()) return;
      std::vector<std::string> chain;
      for (const auto& item : *items) {
        if (!item.is_iri()) return;
        chain.push_back(item.value);
      }
      commit(used);
      add(Axiom::sub_property_chain_of(std::move(chain), s));
      return;
    }
    if (p == R::type) {
      map_type(i);
      return;
    }
    if (t.object.is_iri() && is_object_property(p)) {
      const std::string& o = t.object.value;
      if (is_schema_entity(s) || is_schema_entity(o) || is_builtin(s) || is_builtin(o)) return;
      consume(i);
      add(Axiom::object_property_assertion(s, p, o));
    }
  }

  std::optional<ClassExpression> parse_named_definition(std::size_t i) {
    const Triple& t = triples_[i];
    const std::string& p = t.predicate.value;
    Used local;
    if (p == O::complementOf) {
      auto op = parse_class(t.object, local);
      if (!op) return std::nullopt;
      commit(local);
      return ClassExpression::complement_of(std::move(*op));
    }
    auto items = parse_list(t.object, local);
    if (!items || items->size() < 2) return std::nullopt;
    std::vector<ClassExpression> ops;
    for (const auto& item : *items) {
      auto c = parse_class(item, local);
      if (!c) return std::nullopt;
      ops.push_back(std::move(*c));
    }
    commit(local);
    return p == O::unionOf ? ClassExpression::union_of(std::move(ops))
                           : ClassExpression::intersection_of(std::move(ops));
  }

  void map_all_disjoint(std::size_t i) {
    const auto members = lookup(triples_[i].subject, O::members);
    if (members.size() != 1) return;
    Used used{i, members[0]};
    auto items = parse_list(triples_[members[0]].object, used);
    if (!items || items->size() < 2) return;
    std::vector<ClassExpression> ops;
    for (const auto& item : *items) {
      auto c = parse_class(item, used);
      if (!c) return;
      ops.push_back(std::move(*c));
    }
    commit(used);
    add(Axiom::disjoint_classes(std::move(ops)));
  }

  void map_type(std::size_t i) {
    const Triple& t = triples_[i];
    const std::string& s = t.subject.value;
    if (t.object.is_iri()) {
      if (auto c = characteristic_for(t.object.value)) {
        if (is_object_property(s)) {
          consume(i);
          add(Axiom::characteristic(s, *c));
        }
        return;
      }
      const auto named = ClassExpression::named(t.object.value);
      if (is_builtin(t.object.value) && named.is_named()) return;
    }
    if (is_schema_entity(s) && !individuals_.contains(s)) return;  // metamodeling
    Used used{i};
    if (auto c = parse_class(t.object, used)) {
      commit(used);
      add(Axiom::class_assertion(s, std::move(*c)));
    }
  }

  // -------------------------------------------------------------------------

  void classify_leftovers() {
    for (std::size_t i = 0; i < triples_.size(); ++i) {
      if (consumed_[i]) continue;
      const Triple& t = triples_[i];
      const std::string& p = t.predicate.value;
      if (is_annotation_predicate(p) || ontology_subjects_.contains(t.subject.value)) {
        report_.skip(SkipReason::Annotation);
      } else if (data_properties_.contains(p) || data_properties_.contains(t.subject.value)) {
        report_.skip(SkipReason::DataProperty);
      } else if (t.object.is_literal() && !(p == R::first)) {
        report_.skip(SkipReason::LiteralObject);
      } else if (p == R::first || p == R::rest) {
        report_.skip(SkipReason::MalformedList);
      } else {
        report_.skip(SkipReason::UnrecognizedPattern);
      }
    }
  }

  const std::vector<Triple>& triples_;
  MappingOptions options_;
  std::vector<bool> consumed_;
  std::unordered_map<Term, std::vector<std::size_t>, TermHash> by_subject_;
  std::unordered_set<std::string> classes_, object_properties_, data_properties_, annotation_properties_,
      individuals_, ontology_subjects_;
  Ontology ontology_;
  ParseReport report_;
};

// ---------------------------------------------------------------------------
// Serialization

class Writer {
 public:
  std::vector<Triple> run(const Ontology& ontology) {
    const Term header = Term::iri(ontology.iri().empty() ? std::string(kDefaultOntologyIri) : ontology.iri());
    emit(header, R::type, iri(O::Ontology));
    for (const auto& imp : ontology.imports()) emit(header, O::imports, Term::iri(imp));
    for (const auto& e : ontology.vocabulary()) {
      std::string_view type;
      switch (e.kind) {
        case EntityKind::Class: type = O::Class; break;
        case EntityKind::ObjectProperty: type = O::ObjectProperty; break;
        case EntityKind::DataProperty: type = O::DatatypeProperty; break;
        case EntityKind::NamedIndividual: type = O::NamedIndividual; break;
      }
      emit(Term::iri(e.iri), R::type, iri(type));
    }
    for (const auto& a : ontology.axioms()) write(a);
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

 private:
  static Term iri(std::string_view v) { return Term::iri(std::string(v)); }

  void emit(Term s, std::string_view p, Term o) { out_.push_back(Triple{std::move(s), iri(p), std::move(o)}); }

  Term fresh() { return Term::blank("b" + std::to_string(next_blank_++)); }

  Term list(const std::vector<Term>& items) {
    if (items.empty()) return iri(R::nil);
    std::vector<Term> nodes;
    for (std::size_t i = 0; i < items.size(); ++i) nodes.push_back(fresh());
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(nodes[i], R::first, items[i]);
      emit(nodes[i], R::rest, i + 1 < items.size() ? nodes[i + 1] : iri(R::nil));
    }
    return nodes.front();
  }

  Term cls(const ClassExpression& e) {
    using K = ClassExpression::Kind;
    switch (e.kind()) {
      case K::Named:
      case K::Top:
      case K::Bottom: return Term::iri(e.iri());
      default: break;
    }
    const Term node = fresh();
    auto operand_terms = [&] {
      std::vector<Term> terms;
      for (const auto& op : e.operands()) terms.push_back(cls(op));
      return terms;
    };
    auto count = [](std::uint32_t n) {
      return Term::literal(std::to_string(n), std::string(vocab::xsd::nonNegativeInteger));
    };
    auto cardinality = [&](std::string_view unqualified, std::string_view qualified) {
      emit(node, R::type, iri(O::Restriction));
      emit(node, O::onProperty, Term::iri(e.property()));
      if (e.filler().is_top()) {
        emit(node, unqualified, count(e.cardinality()));
      } else {
        emit(node, qualified, count(e.cardinality()));
        emit(node, O::onClass, cls(e.filler()));
      }
    };
    switch (e.kind()) {
      case K::UnionOf:
        emit(node, R::type, iri(O::Class));
        emit(node, O::unionOf, list(operand_terms()));
        break;
      case K::IntersectionOf:
        emit(node, R::type, iri(O::Class));
        emit(node, O::intersectionOf, list(operand_terms()));
        break;
      case K::ComplementOf:
        emit(node, R::type, iri(O::Class));
        emit(node, O::complementOf, cls(e.filler()));
        break;
      case K::SomeValuesFrom:
        emit(node, R::type, iri(O::Restriction));
        emit(node, O::onProperty, Term::iri(e.property()));
        emit(node, O::someValuesFrom, cls(e.filler()));
        break;
      case K::AllValuesFrom:
        emit(node, R::type, iri(O::Restriction));
        emit(node, O::onProperty, Term::iri(e.property()));
        emit(node, O::allValuesFrom, cls(e.filler()));
        break;
      case K::MinCardinality: cardinality(O::minCardinality, O::minQualifiedCardinality); break;
      case K::MaxCardinality: cardinality(O::maxCardinality, O::maxQualifiedCardinality); break;
      case K::ExactCardinality: cardinality(O::cardinality, O::qualifiedCardinality); break;
      default: break;
    }
    return node;
  }

  void write(const Axiom& a) {
    const auto& props = a.properties();
    switch (a.kind()) {
      case AxiomKind::SubClassOf: {
        Term sub = cls(a.sub_class());
        emit(std::move(sub), RS::subClassOf, cls(a.super_class()));
        break;
      }
      case AxiomKind::EquivalentClasses: {
        // n-ary axioms become a chain of binary ones.
        const auto& ops = a.classes();
        for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
          Term lhs = cls(ops[i]);
          emit(std::move(lhs), O::equivalentClass, cls(ops[i + 1]));
        }
        break;
      }
      case AxiomKind::DisjointClasses: {
        const auto& ops = a.classes();
        if (ops.size() == 2) {
          Term lhs = cls(ops[0]);
          emit(std::move(lhs), O::disjointWith, cls(ops[1]));
        } else {
          const Term node = fresh();
          std::vector<Term> members;
          for (const auto& op : ops) members.push_back(cls(op));
          emit(node, R::type, iri(O::AllDisjointClasses));
          emit(node, O::members, list(members));
        }
        break;
      }
      case AxiomKind::ClassAssertion:
        emit(Term::iri(a.individual()), R::type, cls(a.class_expression()));
        break;
      case AxiomKind::ObjectPropertyAssertion:
        out_.push_back(Triple{Term::iri(a.subject()), Term::iri(a.property()), Term::iri(a.object())});
        break;
      case AxiomKind::SubObjectPropertyOf:
        emit(Term::iri(a.sub_property()), RS::subPropertyOf, Term::iri(a.super_property()));
        break;
      case AxiomKind::SubPropertyChainOf: {
        std::vector<Term> chain;
        for (const auto& p : a.chain()) chain.push_back(Term::iri(p));
        emit(Term::iri(a.super_property()), O::propertyChainAxiom, list(chain));
        break;
      }
      case AxiomKind::EquivalentObjectProperties:
        for (std::size_t i = 0; i + 1 < props.size(); ++i) {
          emit(Term::iri(props[i]), O::equivalentProperty, Term::iri(props[i + 1]));
        }
        break;
      case AxiomKind::InverseObjectProperties:
        emit(Term::iri(props[0]), O::inverseOf, Term::iri(props[1]));
        break;
      case AxiomKind::ObjectPropertyDomain:
        emit(Term::iri(a.property()), RS::domain, cls(a.class_expression()));
        break;
      case AxiomKind::ObjectPropertyRange:
        emit(Term::iri(a.property()), RS::range, cls(a.class_expression()));
        break;
      case AxiomKind::Characteristic:
        emit(Term::iri(a.property()), R::type, iri(characteristic_type(a.characteristic())));
        break;
    }
  }

  std::vector<Triple> out_;
  std::size_t next_blank_ = 0;
};

}  // namespace

MappedOntology triples_to_axioms(const std::vector<Triple>& triples, const MappingOptions& options) {
  return Mapper(triples, options).run();
}

std::vector<Triple> axioms_to_triples(const Ontology& ontology) { return Writer().run(ontology); }

std::string serialize(const Ontology& ontology, Format format) {
  const auto triples = axioms_to_triples(ontology);
  switch (format) {
    case Format::NTriples: return write_ntriples(triples);
    case Format::Turtle: return write_turtle(triples, standard_prefixes());
    case Format::RdfXml: break;
  }
  throw Error("RDF/XML output is not supported");
}

void write_ontology(const Ontology& ontology, const std::filesystem::path& path, std::optional<Format> format) {
  if (!format) format = format_for_path(path);
  if (!format) throw Error("cannot infer RDF format of " + path.string());
  io::write_file(path, serialize(ontology, *format));
}

MappedOntology load_ontology_text(std::string_view text, Format format, const MappingOptions& options,
                                  const std::string& base_iri) {
  auto doc = parse_document(text, format, base_iri);
  return triples_to_axioms(doc.triples, options);
}

MappedOntology load_ontology(const std::filesystem::path& path, const MappingOptions& options,
                             std::optional<Format> format) {
  auto doc = parse_file(path, format);
  try {
    return triples_to_axioms(doc.triples, options);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

}  // namespace kgsaf::rdf
