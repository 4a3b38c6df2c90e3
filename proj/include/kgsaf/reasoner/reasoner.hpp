#pragma once

// Rule-based reasoning: schema closure and materialization, unsatisfiability
// detection, ABox consistency checking with justifications, and realization.
//
// The rule set is sound but incomplete for OWL 2 DL. Under the unique name
// assumption distinct IRIs are distinct individuals.

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kgsaf/model.hpp"

namespace kgsaf {

struct Justification {
  std::vector<Axiom> support;  // asserted axioms, sorted
  std::string conclusion;
};

using NamePair = std::pair<std::string, std::string>;

struct SchemaClosure {
  // Named pairs A ⊑ B with A != B and B != owl:Thing.
  std::set<NamePair> subsumptions;
  // Groups of mutually subsuming named classes (size >= 2).
  std::vector<std::set<std::string>> equivalence_classes;
  std::set<NamePair> property_hierarchy;  // p ⊑ q, p != q
  std::set<NamePair> inverse_pairs;       // both orientations
  std::vector<std::set<std::string>> equivalent_properties;
  std::map<std::string, std::set<ClassExpression>> entailed_domains;
  std::map<std::string, std::set<ClassExpression>> entailed_ranges;
  std::map<std::string, std::set<Characteristic>> entailed_characteristics;
};

struct SchemaMaterialization {
  SchemaClosure closure;
  // Entailed axioms not already asserted, provenance Inferred, no tautologies.
  std::vector<Axiom> inferred;
};

SchemaMaterialization materialize_schema(const Ontology& ontology);

struct UnsatReport {
  std::set<std::string> unsatisfiable_classes;
  std::set<std::string> unsatisfiable_properties;
  std::map<EntityRef, std::vector<Justification>> justifications;

  bool empty() const { return unsatisfiable_classes.empty() && unsatisfiable_properties.empty(); }
};

UnsatReport detect_unsatisfiable(const Ontology& ontology);
// Drops every axiom mentioning a flagged entity; other axioms are untouched.
Ontology remove_unsatisfiable(const Ontology& ontology, const UnsatReport& report);

struct SchemaCleaning {
  Ontology ontology;
  UnsatReport removed;  // union over all rounds
  std::size_t rounds = 0;
};

// detect/remove until detect_unsatisfiable comes back empty.
SchemaCleaning clean_schema(const Ontology& ontology);

enum class ClashKind : std::uint8_t {
  DisjointInstance,
  ComplementInstance,
  IrreflexiveSelfLoop,
  AsymmetricPair,
  FunctionalFanOut,
  InverseFunctionalFanIn,
  MaxCardinalityViolation,
  BottomInstance,
};

std::string_view to_string(ClashKind kind);

struct Clash {
  ClashKind kind;
  std::vector<std::string> individuals;
  std::string property;
  std::vector<ClassExpression> classes;
  Justification justification;

  // ABox assertions in the justification; removing them resolves the clash.
  std::vector<Axiom> abox_support() const;
  std::string describe() const;
};

struct ReasonerOptions {
  bool una = true;
  // Shrink each justification by replaying the engine without each axiom.
  bool minimize = true;
};

std::vector<Clash> check_consistency(const Ontology& schema, const Ontology::AxiomSet& abox,
                                     const ReasonerOptions& options = {});

// Implicit named class assertions; throws Error when the input has clashes.
std::vector<Axiom> realize(const Ontology& schema, const Ontology::AxiomSet& abox,
                           const ReasonerOptions& options = {});

// Exchange with an external reasoner: the schema goes to dir/schema.ttl and
// entailed axioms are read back from dir/inferred.nt.
void export_for_external_reasoner(const Ontology& schema, const std::filesystem::path& dir);
std::vector<Axiom> import_external_inferences(const std::filesystem::path& dir);

}  // namespace kgsaf
