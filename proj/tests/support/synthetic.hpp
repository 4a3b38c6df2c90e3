#pragma once

// Consistent synthetic knowledge graphs: a class tree with disjoint siblings,
// typed properties, inverses, subproperties and restrictions, plus an ABox
// whose every subject/object sits under the property's domain/range.

#include <filesystem>
#include <vector>

#include "support/generators.hpp"

namespace kgsaf::gen {

struct SyntheticOptions {
  std::size_t triples = 1000;
  std::size_t schema_axioms = 100;
  std::size_t individuals = 0;  // 0: triples / 5
  // Adds one individual typed with two disjoint classes.
  bool seed_clash = false;
};

struct SyntheticKg {
  Ontology schema;
  Ontology data;
  // The clash assertions when seed_clash is set: the two disjoint typings.
  std::vector<Axiom> clash;
};

SyntheticKg synthetic_kg(Rng& rng, const SyntheticOptions& options);
// schema.ttl and data.nt
void write_kg(const SyntheticKg& kg, const std::filesystem::path& dir);

}  // namespace kgsaf::gen
