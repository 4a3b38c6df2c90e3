#include "kgsaf/ml/owl_json.hpp"

#include <json.hpp>

#include "kgsaf/util/error.hpp"

namespace kgsaf {

namespace {

using Json = nlohmann::ordered_json;

std::string_view expr_type(ClassExpression::Kind k) {
  using K = ClassExpression::Kind;
  switch (k) {
    case K::Named:
    case K::Top:
    case K::Bottom: return "Class";
    case K::UnionOf: return "ObjectUnionOf";
    case K::IntersectionOf: return "ObjectIntersectionOf";
    case K::ComplementOf: return "ObjectComplementOf";
    case K::SomeValuesFrom: return "ObjectSomeValuesFrom";
    case K::AllValuesFrom: return "ObjectAllValuesFrom";
    case K::MinCardinality: return "ObjectMinCardinality";
    case K::MaxCardinality: return "ObjectMaxCardinality";
    case K::ExactCardinality: return "ObjectExactCardinality";
  }
  return "Class";
}

Json to_json(const ClassExpression& e) {
  using K = ClassExpression::Kind;
  Json j;
  j["type"] = expr_type(e.kind());
  switch (e.kind()) {
    case K::Named:
    case K::Top:
    case K::Bottom: j["iri"] = e.iri(); break;
    case K::UnionOf:
    case K::IntersectionOf: {
      Json ops = Json::array();
      for (const auto& o : e.operands()) ops.push_back(to_json(o));
      j["operands"] = std::move(ops);
      break;
    }
    case K::ComplementOf: j["operand"] = to_json(e.filler()); break;
    case K::MinCardinality:
    case K::MaxCardinality:
    case K::ExactCardinality: j["cardinality"] = e.cardinality(); [[fallthrough]];
    case K::SomeValuesFrom:
    case K::AllValuesFrom:
      j["property"] = e.property();
      j["filler"] = to_json(e.filler());
      break;
  }
  return j;
}

std::string characteristic_type(Characteristic c) {
  return std::string(to_string(c)) + "ObjectProperty";
}

Json to_json(const Axiom& a) {
  Json j;
  auto exprs = [&](const std::vector<ClassExpression>& v) {
    Json out = Json::array();
    for (const auto& e : v) out.push_back(to_json(e));
    return out;
  };
  switch (a.kind()) {
    case AxiomKind::SubClassOf:
      j["type"] = "SubClassOf";
      j["sub"] = to_json(a.sub_class());
      j["sup"] = to_json(a.super_class());
      break;
    case AxiomKind::EquivalentClasses:
    case AxiomKind::DisjointClasses:
      j["type"] = to_string(a.kind());
      j["operands"] = exprs(a.classes());
      break;
    case AxiomKind::ClassAssertion:
      j["type"] = "ClassAssertion";
      j["individual"] = a.individual();
      j["class"] = to_json(a.class_expression());
      break;
    case AxiomKind::ObjectPropertyAssertion:
      j["type"] = "ObjectPropertyAssertion";
      j["subject"] = a.subject();
      j["property"] = a.property();
      j["object"] = a.object();
      break;
    case AxiomKind::SubObjectPropertyOf:
      j["type"] = "SubObjectPropertyOf";
      j["sub"] = a.sub_property();
      j["sup"] = a.super_property();
      break;
    case AxiomKind::SubPropertyChainOf:
      j["type"] = "SubObjectPropertyChainOf";
      j["chain"] = std::vector<std::string>(a.chain().begin(), a.chain().end());
      j["sup"] = a.super_property();
      break;
    case AxiomKind::EquivalentObjectProperties:
      j["type"] = "EquivalentObjectProperties";
      j["properties"] = a.properties();
      break;
    case AxiomKind::InverseObjectProperties:
      j["type"] = "InverseObjectProperties";
      j["first"] = a.properties()[0];
      j["second"] = a.properties()[1];
      break;
    case AxiomKind::ObjectPropertyDomain:
      j["type"] = "ObjectPropertyDomain";
      j["property"] = a.property();
      j["domain"] = to_json(a.class_expression());
      break;
    case AxiomKind::ObjectPropertyRange:
      j["type"] = "ObjectPropertyRange";
      j["property"] = a.property();
      j["range"] = to_json(a.class_expression());
      break;
    case AxiomKind::Characteristic:
      j["type"] = characteristic_type(a.characteristic());
      j["property"] = a.property();
      break;
  }
  return j;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("axiom JSON lacks \"") + key + "\"");
  return j[key];
}

std::string str(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) throw Error(std::string("axiom JSON field \"") + key + "\" is not a string");
  return v.get<std::string>();
}

ClassExpression expr_from(const Json& j) {
  const std::string t = str(j, "type");
  auto operands = [&] {
    std::vector<ClassExpression> ops;
    for (const auto& o : field(j, "operands")) ops.push_back(expr_from(o));
    return ops;
  };
  auto card = [&] { return field(j, "cardinality").get<std::uint32_t>(); };
  if (t == "Class") return ClassExpression::named(str(j, "iri"));
  if (t == "ObjectUnionOf") return ClassExpression::union_of(operands());
  if (t == "ObjectIntersectionOf") return ClassExpression::intersection_of(operands());
  if (t == "ObjectComplementOf") return ClassExpression::complement_of(expr_from(field(j, "operand")));
  const std::string p = str(j, "property");
  ClassExpression filler = expr_from(field(j, "filler"));
  if (t == "ObjectSomeValuesFrom") return ClassExpression::some_values_from(p, std::move(filler));
  if (t == "ObjectAllValuesFrom") return ClassExpression::all_values_from(p, std::move(filler));
  if (t == "ObjectMinCardinality") return ClassExpression::min_cardinality(card(), p, std::move(filler));
  if (t == "ObjectMaxCardinality") return ClassExpression::max_cardinality(card(), p, std::move(filler));
  if (t == "ObjectExactCardinality") return ClassExpression::exact_cardinality(card(), p, std::move(filler));
  throw Error("unknown class expression type in JSON: " + t);
}

Axiom axiom_from(const Json& j) {
  const std::string t = str(j, "type");
  auto exprs = [&] {
    std::vector<ClassExpression> out;
    for (const auto& o : field(j, "operands")) out.push_back(expr_from(o));
    return out;
  };
  if (t == "SubClassOf") return Axiom::sub_class_of(expr_from(field(j, "sub")), expr_from(field(j, "sup")));
  if (t == "EquivalentClasses") return Axiom::equivalent_classes(exprs());
  if (t == "DisjointClasses") return Axiom::disjoint_classes(exprs());
  if (t == "ClassAssertion") return Axiom::class_assertion(str(j, "individual"), expr_from(field(j, "class")));
  if (t == "ObjectPropertyAssertion") {
    return Axiom::object_property_assertion(str(j, "subject"), str(j, "property"), str(j, "object"));
  }
  if (t == "SubObjectPropertyOf") return Axiom::sub_object_property_of(str(j, "sub"), str(j, "sup"));
  if (t == "SubObjectPropertyChainOf") {
    return Axiom::sub_property_chain_of(field(j, "chain").get<std::vector<std::string>>(), str(j, "sup"));
  }
  if (t == "EquivalentObjectProperties") {
    return Axiom::equivalent_object_properties(field(j, "properties").get<std::vector<std::string>>());
  }
  if (t == "InverseObjectProperties") return Axiom::inverse_object_properties(str(j, "first"), str(j, "second"));
  if (t == "ObjectPropertyDomain") return Axiom::object_property_domain(str(j, "property"), expr_from(field(j, "domain")));
  if (t == "ObjectPropertyRange") return Axiom::object_property_range(str(j, "property"), expr_from(field(j, "range")));
  for (Characteristic c : kAllCharacteristics) {
    if (t == characteristic_type(c)) return Axiom::characteristic(str(j, "property"), c);
  }
  throw Error("unknown axiom type in JSON: " + t);
}

}  // namespace

std::string owl_to_json(const Ontology::AxiomSet& axioms) {
  if (axioms.empty()) return "[]\n";
  std::string out = "[\n";
  bool first = true;
  for (const auto& a : axioms) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + to_json(a).dump();
  }
  return out + "\n]\n";
}

Ontology::AxiomSet json_to_owl(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed axiom JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error("axiom JSON must be an array");
  Ontology::AxiomSet out;
  try {
    for (const auto& j : doc) out.insert(axiom_from(j));
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed axiom JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(std::string("invalid axiom in JSON: ") + e.what());
  }
  return out;
}

}  // namespace kgsaf
