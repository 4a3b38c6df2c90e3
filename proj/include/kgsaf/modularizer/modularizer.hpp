#pragma once

// Signature-based schema modules and the split of a dataset into components.

#include <filesystem>
#include <vector>

#include "kgsaf/model.hpp"

namespace kgsaf {

struct Module {
  Ontology::AxiomSet axioms;
  Signature final_signature;
  std::size_t iterations = 0;  // scans over the schema, including the last one that changed nothing
};

// Classes named in class assertions and properties used in property
// assertions. Individuals are left out; other axioms are ignored.
Signature initial_signature(const Ontology::AxiomSet& assertions);

// Fixpoint of: add every TBox/RBox axiom sharing a symbol with Σ, then grow Σ
// by the signatures of the added axioms. Symbols match on (iri, kind).
Module extract_module(const Ontology& ontology, const Signature& sig0);

struct DatasetComponents {
  Ontology::AxiomSet taxonomy;  // SubClassOf between named classes
  Ontology::AxiomSet tbox_other;
  Ontology::AxiomSet rbox;
  Ontology::AxiomSet abox_types;
  Ontology::AxiomSet abox_relations;

  std::size_t size() const {
    return taxonomy.size() + tbox_other.size() + rbox.size() + abox_types.size() + abox_relations.size();
  }
};

DatasetComponents decompose(const std::vector<Axiom>& axioms);

// taxonomy.ttl, tbox.ttl, rbox.ttl, abox_types.nt and abox_relations.nt.
void write_components(const DatasetComponents& components, const std::filesystem::path& dir,
                      const std::string& ontology_iri);

}  // namespace kgsaf
