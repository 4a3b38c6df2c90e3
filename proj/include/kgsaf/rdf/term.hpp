#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace kgsaf::rdf {

struct Term {
  enum class Kind : std::uint8_t { Iri, Blank, Literal };

  Kind kind = Kind::Iri;
  // IRI, blank node label (without "_:"), or literal lexical form.
  std::string value;
  // Literals only; empty datatype means xsd:string (or rdf:langString with a language).
  std::string datatype;
  std::string language;

  static Term iri(std::string v) { return Term{Kind::Iri, std::move(v), {}, {}}; }
  static Term blank(std::string label) { return Term{Kind::Blank, std::move(label), {}, {}}; }
  static Term literal(std::string lexical, std::string datatype = {}, std::string language = {}) {
    return Term{Kind::Literal, std::move(lexical), std::move(datatype), std::move(language)};
  }

  bool is_iri() const { return kind == Kind::Iri; }
  bool is_blank() const { return kind == Kind::Blank; }
  bool is_literal() const { return kind == Kind::Literal; }
  bool is_resource() const { return kind != Kind::Literal; }

  auto operator<=>(const Term&) const = default;
};

// TripleRecord: subject is IRI or blank, predicate is always an IRI.
struct Triple {
  Term subject;
  Term predicate;
  Term object;

  auto operator<=>(const Triple&) const = default;
};

}  // namespace kgsaf::rdf
