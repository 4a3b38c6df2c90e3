#pragma once

// OWL 2 mapping between RDF triples and the axiom model, plus import closure.

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kgsaf/model.hpp"
#include "kgsaf/rdf/document.hpp"

namespace kgsaf::rdf {

inline constexpr std::string_view kDefaultOntologyIri = "urn:x-kgsaf:dataset";

struct MappingOptions {
  // Treat every rdf:type subject as an individual and every predicate linking
  // two IRIs as an object property, for dumps that carry no declarations.
  bool infer_declarations = false;
};

struct MappedOntology {
  Ontology ontology;
  ParseReport report;
};

// Throws Error on an rdf:List whose rdf:rest chain does not end in rdf:nil.
MappedOntology triples_to_axioms(const std::vector<Triple>& triples, const MappingOptions& options = {});

// Inverse mapping: ontology header, declarations for the vocabulary, then the
// axioms. Blank nodes are labelled b0, b1, ... in axiom order and the result
// is sorted, so equal ontologies give identical triple lists.
std::vector<Triple> axioms_to_triples(const Ontology& ontology);

// Format::RdfXml is read-only and rejected here.
std::string serialize(const Ontology& ontology, Format format);
void write_ontology(const Ontology& ontology, const std::filesystem::path& path,
                    std::optional<Format> format = std::nullopt);

MappedOntology load_ontology(const std::filesystem::path& path, const MappingOptions& options = {},
                             std::optional<Format> format = std::nullopt);
MappedOntology load_ontology_text(std::string_view text, Format format, const MappingOptions& options = {},
                                  const std::string& base_iri = {});

// ---------------------------------------------------------------------------
// Import closure

struct ResolvedDocument {
  std::string text;
  Format format = Format::Turtle;
  std::string base_iri;
};

using ImportResolver = std::function<std::optional<ResolvedDocument>(const std::string& iri)>;

// Resolver backed by a two-column TSV catalog (ontology IRI, file path).
// Relative paths are taken relative to the catalog's directory. With
// `allow_http`, IRIs missing from the catalog are fetched over plain HTTP.
ImportResolver catalog_resolver(const std::filesystem::path& catalog, bool allow_http = false);
ImportResolver http_resolver();

struct ImportOptions {
  bool fail_on_missing = true;
  MappingOptions mapping;
};

struct ImportResult {
  Ontology ontology;
  ParseReport report;
  std::vector<std::string> visited;
  // Imports that could not be resolved when fail_on_missing is off.
  std::vector<std::string> missing;
};

// Union of the root and every transitively imported ontology; each IRI is
// loaded once, so import cycles terminate. The result has no imports.
ImportResult merge_import_closure(const Ontology& root, const ImportResolver& resolver,
                                  const ImportOptions& options = {});

}  // namespace kgsaf::rdf
