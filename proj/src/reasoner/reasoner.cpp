#include "kgsaf/reasoner/reasoner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "engine.hpp"
#include "kgsaf/rdf/owl.hpp"
#include "kgsaf/util/error.hpp"

namespace kgsaf {

using detail::Engine;
using detail::EngineOptions;
using detail::FactKey;
using detail::FactKind;
using detail::Id;
using detail::kBottom;
using detail::kNone;
using detail::kTop;

namespace {

using Predicate = std::function<bool(const Engine&)>;

bool replay(const std::vector<Axiom>& axioms, EngineOptions options, const Predicate& holds) {
  Engine engine(options);
  engine.add_all(axioms);
  engine.run();
  return holds(engine);
}

// Greedy deletion: drop each axiom in turn and keep it out if the conclusion survives.
std::vector<Axiom> minimize(std::vector<Axiom> support, EngineOptions options, const Predicate& holds) {
  for (std::size_t i = 0; i < support.size();) {
    std::vector<Axiom> rest = support;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (replay(rest, options, holds)) {
      support = std::move(rest);
    } else {
      ++i;
    }
  }
  return support;
}

std::vector<Axiom> pick(const Engine& engine, const std::vector<std::size_t>& indices) {
  std::vector<Axiom> out;
  for (std::size_t i : indices) out.push_back(engine.axioms()[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Axiom> schema_axioms(const Ontology& ontology) {
  std::vector<Axiom> out(ontology.tbox().begin(), ontology.tbox().end());
  out.insert(out.end(), ontology.rbox().begin(), ontology.rbox().end());
  return out;
}

Engine run_schema(const Ontology& ontology) {
  Engine engine(EngineOptions{.una = true, .abox = false});
  engine.add_all(schema_axioms(ontology));
  engine.run();
  return engine;
}

// Groups of ids that subsume each other, given a mutual-relation test.
std::vector<std::set<std::string>> mutual_groups(const std::vector<std::pair<std::string, std::string>>& mutual) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& x) -> std::string {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    return it->second = find(it->second);
  };
  for (const auto& [a, b] : mutual) {
    parent.try_emplace(a, a);
    parent.try_emplace(b, b);
    const std::string ra = find(a), rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::string, std::set<std::string>> groups;
  for (const auto& [x, _] : parent) groups[find(x)].insert(x);
  std::vector<std::set<std::string>> out;
  for (auto& [_, g] : groups) {
    if (g.size() >= 2) out.push_back(std::move(g));
  }
  return out;
}

bool same_clash(const Engine& engine, const detail::ClashRecord& r, const Clash& target) {
  if (r.kind != target.kind || r.individuals.size() != target.individuals.size()) return false;
  for (std::size_t i = 0; i < r.individuals.size(); ++i) {
    if (engine.individual_iri(r.individuals[i]) != target.individuals[i]) return false;
  }
  const std::string prop = r.property == kNone ? std::string() : engine.property_iri(r.property);
  if (prop != target.property || r.classes.size() != target.classes.size()) return false;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    if (engine.concept_expr(r.classes[i]) != target.classes[i]) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Schema

SchemaMaterialization materialize_schema(const Ontology& ontology) {
  const Engine engine = run_schema(ontology);
  SchemaMaterialization out;
  SchemaClosure& closure = out.closure;

  std::vector<std::pair<std::string, std::string>> mutual_classes;
  for (Id a = 0; a < engine.concept_count(); ++a) {
    const ClassExpression& ea = engine.concept_expr(a);
    if (!ea.is_named() || engine.has(FactKey{FactKind::Sub, a, kBottom})) continue;
    for (Id b : engine.supers(a)) {
      const ClassExpression& eb = engine.concept_expr(b);
      if (b == a || !eb.is_named()) continue;
      closure.subsumptions.emplace(ea.iri(), eb.iri());
      if (engine.has(FactKey{FactKind::Sub, b, a})) mutual_classes.emplace_back(ea.iri(), eb.iri());
    }
  }
  closure.equivalence_classes = mutual_groups(mutual_classes);

  std::vector<std::pair<std::string, std::string>> mutual_props;
  for (Id p = 0; p < engine.property_count(); ++p) {
    const std::string& ip = engine.property_iri(p);
    for (Id q : engine.super_properties(p)) {
      if (q == p) continue;
      closure.property_hierarchy.emplace(ip, engine.property_iri(q));
      if (engine.has(FactKey{FactKind::SubProp, q, p})) mutual_props.emplace_back(ip, engine.property_iri(q));
    }
    for (Id q : engine.inverses(p)) closure.inverse_pairs.emplace(ip, engine.property_iri(q));
    for (Id c : engine.domains(p)) {
      if (c != kTop) closure.entailed_domains[ip].insert(engine.concept_expr(c));
    }
    for (Id c : engine.ranges(p)) {
      if (c != kTop) closure.entailed_ranges[ip].insert(engine.concept_expr(c));
    }
    for (Characteristic ch : kAllCharacteristics) {
      if (engine.has(FactKey{FactKind::Char, p, static_cast<Id>(ch)})) closure.entailed_characteristics[ip].insert(ch);
    }
  }
  closure.equivalent_properties = mutual_groups(mutual_props);

  Ontology::AxiomSet inferred;
  auto offer = [&](Axiom a) {
    if (is_tautology(a) || ontology.contains(a)) return;
    inferred.insert(a.with_provenance(Provenance::Inferred));
  };
  for (const auto& [a, b] : closure.subsumptions) {
    if (closure.subsumptions.contains({b, a})) continue;
    offer(Axiom::sub_class_of(ClassExpression::named(a), ClassExpression::named(b)));
  }
  for (const auto& group : closure.equivalence_classes) {
    std::vector<ClassExpression> ops;
    for (const auto& iri : group) ops.push_back(ClassExpression::named(iri));
    offer(Axiom::equivalent_classes(std::move(ops)));
  }
  for (const auto& [p, q] : closure.property_hierarchy) {
    if (closure.property_hierarchy.contains({q, p})) continue;
    offer(Axiom::sub_object_property_of(p, q));
  }
  for (const auto& group : closure.equivalent_properties) {
    offer(Axiom::equivalent_object_properties({group.begin(), group.end()}));
  }
  for (const auto& [p, q] : closure.inverse_pairs) {
    if (p > q) continue;
    if (ontology.contains(Axiom::inverse_object_properties(q, p))) continue;
    offer(Axiom::inverse_object_properties(p, q));
  }
  for (const auto& [p, classes] : closure.entailed_domains) {
    for (const auto& c : classes) offer(Axiom::object_property_domain(p, c));
  }
  for (const auto& [p, classes] : closure.entailed_ranges) {
    for (const auto& c : classes) offer(Axiom::object_property_range(p, c));
  }
  for (const auto& [p, chars] : closure.entailed_characteristics) {
    for (Characteristic ch : chars) offer(Axiom::characteristic(p, ch));
  }
  out.inferred.assign(inferred.begin(), inferred.end());
  return out;
}

UnsatReport detect_unsatisfiable(const Ontology& ontology) {
  const Engine engine = run_schema(ontology);
  const EngineOptions options{.una = true, .abox = false};
  UnsatReport report;
  for (Id c = 0; c < engine.concept_count(); ++c) {
    const ClassExpression& e = engine.concept_expr(c);
    if (!e.is_named()) continue;
    const Id fact = engine.fact_id(FactKey{FactKind::Sub, c, kBottom});
    if (fact == kNone) continue;
    report.unsatisfiable_classes.insert(e.iri());
    auto holds = [&e](const Engine& replayed) {
      const Id id = replayed.find_concept(e);
      return id != kNone && replayed.has(FactKey{FactKind::Sub, id, kBottom});
    };
    report.justifications[EntityRef{e.iri(), EntityKind::Class}].push_back(
        Justification{minimize(pick(engine, engine.support(fact)), options, holds),
                      "SubClassOf(<" + e.iri() + "> owl:Nothing)"});
  }
  for (Id p = 0; p < engine.property_count(); ++p) {
    const Id fact = engine.fact_id(FactKey{FactKind::UnsatProp, p, 0});
    if (fact == kNone) continue;
    const std::string iri = engine.property_iri(p);
    report.unsatisfiable_properties.insert(iri);
    auto holds = [&iri](const Engine& replayed) {
      const Id id = replayed.find_property(iri);
      return id != kNone && replayed.has(FactKey{FactKind::UnsatProp, id, 0});
    };
    report.justifications[EntityRef{iri, EntityKind::ObjectProperty}].push_back(
        Justification{minimize(pick(engine, engine.support(fact)), options, holds),
                      "SubObjectPropertyOf(<" + iri + "> owl:bottomObjectProperty)"});
  }
  return report;
}

Ontology remove_unsatisfiable(const Ontology& ontology, const UnsatReport& report) {
  Signature flagged;
  for (const auto& c : report.unsatisfiable_classes) flagged.insert({c, EntityKind::Class});
  for (const auto& p : report.unsatisfiable_properties) flagged.insert({p, EntityKind::ObjectProperty});
  Ontology out(ontology.iri());
  for (const auto& imp : ontology.imports()) out.add_import(imp);
  for (const auto& a : ontology.axioms()) {
    if (!signature_of(a).intersects(flagged)) out.add(a);
  }
  return out;
}

SchemaCleaning clean_schema(const Ontology& ontology) {
  SchemaCleaning result{ontology, {}, 0};
  while (true) {
    UnsatReport report = detect_unsatisfiable(result.ontology);
    if (report.empty()) break;
    ++result.rounds;
    result.ontology = remove_unsatisfiable(result.ontology, report);
    result.removed.unsatisfiable_classes.merge(report.unsatisfiable_classes);
    result.removed.unsatisfiable_properties.merge(report.unsatisfiable_properties);
    for (auto& [entity, js] : report.justifications) {
      auto& dst = result.removed.justifications[entity];
      dst.insert(dst.end(), js.begin(), js.end());
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// ABox

std::string_view to_string(ClashKind kind) {
  switch (kind) {
    case ClashKind::DisjointInstance: return "DisjointInstance";
    case ClashKind::ComplementInstance: return "ComplementInstance";
    case ClashKind::IrreflexiveSelfLoop: return "IrreflexiveSelfLoop";
    case ClashKind::AsymmetricPair: return "AsymmetricPair";
    case ClashKind::FunctionalFanOut: return "FunctionalFanOut";
    case ClashKind::InverseFunctionalFanIn: return "InverseFunctionalFanIn";
    case ClashKind::MaxCardinalityViolation: return "MaxCardinalityViolation";
    case ClashKind::BottomInstance: return "BottomInstance";
  }
  return "?";
}

std::vector<Axiom> Clash::abox_support() const {
  std::vector<Axiom> out;
  for (const auto& a : justification.support) {
    if (classify_box(a) == Box::ABox) out.push_back(a);
  }
  return out;
}

std::string Clash::describe() const {
  std::string s(to_string(kind));
  s += "(";
  bool first = true;
  auto sep = [&] {
    if (!first) s += " ";
    first = false;
  };
  for (const auto& x : individuals) {
    sep();
    s += "<" + x + ">";
  }
  if (!property.empty()) {
    sep();
    s += "<" + property + ">";
  }
  for (const auto& c : classes) {
    sep();
    s += to_functional_syntax(c);
  }
  return s + ")";
}

namespace {

Engine run_full(const Ontology& schema, const Ontology::AxiomSet& abox, bool una) {
  Engine engine(EngineOptions{.una = una, .abox = true});
  engine.add_all(schema_axioms(schema));
  for (const auto& a : schema.abox()) engine.add(a);
  for (const auto& a : abox) engine.add(a);
  engine.run();
  return engine;
}

}  // namespace

std::vector<Clash> check_consistency(const Ontology& schema, const Ontology::AxiomSet& abox,
                                     const ReasonerOptions& options) {
  const Engine engine = run_full(schema, abox, options.una);
  const EngineOptions replay_options{.una = options.una, .abox = true};
  std::vector<Clash> out;
  for (const auto& r : engine.clashes()) {
    Clash clash{r.kind, {}, {}, {}, {}};
    for (Id x : r.individuals) clash.individuals.push_back(engine.individual_iri(x));
    if (r.property != kNone) clash.property = engine.property_iri(r.property);
    for (Id c : r.classes) clash.classes.push_back(engine.concept_expr(c));
    std::vector<Axiom> support = pick(engine, engine.support(r.premises));
    if (options.minimize) {
      auto holds = [&clash](const Engine& replayed) {
        for (const auto& rr : replayed.clashes()) {
          if (same_clash(replayed, rr, clash)) return true;
        }
        return false;
      };
      support = minimize(std::move(support), replay_options, holds);
    }
    clash.justification = Justification{std::move(support), clash.describe()};
    out.push_back(std::move(clash));
  }
  return out;
}

std::vector<Axiom> realize(const Ontology& schema, const Ontology::AxiomSet& abox, const ReasonerOptions& options) {
  const Engine engine = run_full(schema, abox, options.una);
  const auto clashes = engine.clashes();
  if (!clashes.empty()) {
    throw Error("cannot realize an inconsistent ABox: " + std::to_string(clashes.size()) + " clash(es)");
  }
  std::set<Axiom> out;
  for (Id x = 0; x < engine.individual_count(); ++x) {
    for (Id c : engine.types_of(x)) {
      const ClassExpression& e = engine.concept_expr(c);
      if (!e.is_named()) continue;
      Axiom a = Axiom::class_assertion(engine.individual_iri(x), e);
      if (abox.contains(a) || schema.contains(a)) continue;
      out.insert(a.with_provenance(Provenance::Inferred));
    }
  }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// External reasoner exchange

void export_for_external_reasoner(const Ontology& schema, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  rdf::write_ontology(schema.schema(), dir / "schema.ttl", rdf::Format::Turtle);
}

std::vector<Axiom> import_external_inferences(const std::filesystem::path& dir) {
  const auto path = dir / "inferred.nt";
  if (!std::filesystem::exists(path)) throw Error("external reasoner output not found: " + path.string());
  const auto mapped = rdf::load_ontology(path, {}, rdf::Format::NTriples);
  std::vector<Axiom> out;
  for (const auto& a : mapped.ontology.axioms()) {
    if (!is_tautology(a)) out.push_back(a.with_provenance(Provenance::Inferred));
  }
  return out;
}

}  // namespace kgsaf
