#pragma once

// Integer identifiers and sparse index tables for a finished dataset.

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgsaf/ml/split.hpp"
#include "kgsaf/model.hpp"

namespace kgsaf {

// What the ML side consumes: split relations, whole class assertions and the
// module schema.
struct MlDataset {
  Split split;
  Ontology::AxiomSet types;
  Ontology schema;

  std::vector<Axiom> relations() const;
};

// Dense bijection between IRIs and 0..n-1 in lexicographic IRI order.
class IdMap {
 public:
  IdMap() = default;
  explicit IdMap(const std::set<std::string>& iris);

  std::size_t size() const { return iris_.size(); }
  bool contains(const std::string& iri) const { return ids_.contains(iri); }
  // Throws Error for an unmapped IRI.
  std::uint64_t id(const std::string& iri) const;
  const std::string& iri(std::uint64_t id) const { return iris_.at(id); }
  const std::vector<std::string>& iris() const { return iris_; }

 private:
  std::vector<std::string> iris_;
  std::unordered_map<std::string, std::uint64_t> ids_;
};

struct IdMaps {
  IdMap individuals;
  IdMap properties;
  IdMap classes;
  // Added to every id on output; 0 by default, 1 with --one-based.
  std::uint64_t base = 0;
};

// Individuals of relations and types; object properties and named classes of
// the whole dataset, schema included. owl:Thing and owl:Nothing are not mapped.
IdMaps build_id_maps(const MlDataset& dataset, bool one_based = false);

// `id<TAB>iri` lines in id order.
std::string id_map_tsv(const IdMap& map, std::uint64_t base = 0);

struct TableInfo {
  std::string file;
  std::size_t rows = 0;
  std::size_t columns = 0;
};

struct CooExport {
  std::vector<TableInfo> tables;
  std::string manifest_json;
};

// Pair tables derived from the schema, rows sorted and unique.
using IndexRows = std::vector<std::vector<std::uint64_t>>;
IndexRows taxonomy_rows(const Ontology& schema, const IdMaps& maps);
IndexRows domain_rows(const Ontology& schema, const IdMaps& maps, bool range = false);
IndexRows subproperty_rows(const Ontology& schema, const IdMaps& maps);

// Writes train/valid/test.tsv and .txt, types.tsv, taxonomy.tsv, domain.tsv,
// range.tsv, subprop.tsv, the three id maps, axioms.json and manifest.json.
// Throws Error when an IRI is missing from the maps.
CooExport export_coo(const MlDataset& dataset, const IdMaps& maps, const std::filesystem::path& dir);

}  // namespace kgsaf
