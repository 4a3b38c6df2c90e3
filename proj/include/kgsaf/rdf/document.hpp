#pragma once

// Reading and writing RDF documents as triple streams.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kgsaf/rdf/term.hpp"

namespace kgsaf::rdf {

enum class Format : std::uint8_t { NTriples, Turtle, RdfXml };

std::string_view to_string(Format f);
std::optional<Format> parse_format(std::string_view name);
// By extension: .nt, .ttl, .owl/.rdf/.xml.
std::optional<Format> format_for_path(const std::filesystem::path& path);

enum class SkipReason : std::uint8_t {
  LiteralObject,
  Annotation,
  UnrecognizedPattern,
  MalformedList,
  DataProperty,
};

std::string_view to_string(SkipReason r);

// Accounting of how the triples of a document were used. Every input triple
// is either consumed (mapped into an axiom, a declaration or the ontology
// header) or skipped with a reason.
struct ParseReport {
  std::size_t triples_read = 0;
  std::size_t axioms_read = 0;
  std::size_t triples_consumed = 0;
  std::size_t triples_skipped = 0;
  std::map<SkipReason, std::size_t> skip_reasons;

  void skip(SkipReason reason, std::size_t n = 1) {
    triples_skipped += n;
    skip_reasons[reason] += n;
  }
  void merge(const ParseReport& other);
};

using TripleSink = std::function<void(Triple&&)>;

// Streams triples in document order. Throws ParseError with line/column on
// syntax errors and unknown prefixes. `base_iri` seeds relative-IRI resolution
// for Turtle and RDF/XML.
std::size_t parse_document(std::string_view text, Format format, const TripleSink& sink,
                           const std::string& base_iri = {});

struct ParsedDocument {
  std::vector<Triple> triples;
  ParseReport report;
};

ParsedDocument parse_document(std::string_view text, Format format, const std::string& base_iri = {});
ParsedDocument parse_file(const std::filesystem::path& path, std::optional<Format> format = std::nullopt);

// RFC 3986 reference resolution.
std::string resolve_iri(std::string_view base, std::string_view reference);

// Canonical N-Triples line for one triple (without trailing newline).
std::string to_ntriples(const Triple& t);
std::string write_ntriples(const std::vector<Triple>& triples);

// Turtle with the given prefix map (prefix -> namespace). Triples are
// grouped by subject in the order given.
std::string write_turtle(const std::vector<Triple>& triples,
                         const std::vector<std::pair<std::string, std::string>>& prefixes);

std::vector<std::pair<std::string, std::string>> standard_prefixes();

}  // namespace kgsaf::rdf
