#include "cursor.hpp"
#include "kgsaf/model.hpp"
#include "kgsaf/rdf/document.hpp"
#include "kgsaf/vocab.hpp"
#include "readers.hpp"

namespace kgsaf::rdf::detail {

namespace {

void skip_inline_ws(Cursor& cur) {
  while (cur.peek() == ' ' || cur.peek() == '\t') cur.get();
}

// Relative IRIs are outside the N-Triples grammar but tolerated: they are
// resolved against the base when one is given and kept verbatim otherwise.
std::string read_iri(Cursor& cur, const std::string& base) {
  std::string iri = read_iriref(cur);
  if (!base.empty() && !is_absolute_iri(iri)) return resolve_iri(base, iri);
  return iri;
}

Term read_subject_or_object(Cursor& cur, bool allow_literal, const std::string& base) {
  const char c = cur.peek();
  if (c == '<') {
    cur.get();
    return Term::iri(read_iri(cur, base));
  }
  if (c == '_' && cur.peek(1) == ':') {
    cur.advance(2);
    return Term::blank(read_blank_label(cur));
  }
  if (c == '"' && allow_literal) {
    cur.get();
    std::string lexical;
    while (true) {
      if (cur.eof() || cur.peek() == '\n' || cur.peek() == '\r') cur.fail("unterminated string literal");
      const char ch = cur.get();
      if (ch == '"') break;
      if (ch == '\\') {
        read_string_escape(cur, lexical);
      } else {
        lexical += ch;
      }
    }
    if (cur.consume('@')) return Term::literal(std::move(lexical), {}, read_langtag(cur));
    if (cur.peek() == '^' && cur.peek(1) == '^') {
      cur.advance(2);
      cur.expect('<', "datatype IRI");
      std::string dt = read_iri(cur, base);
      if (dt == vocab::xsd::string) dt.clear();
      return Term::literal(std::move(lexical), std::move(dt));
    }
    return Term::literal(std::move(lexical));
  }
  cur.fail(allow_literal ? "expected IRI, blank node or literal" : "expected IRI or blank node");
}

}  // namespace

std::size_t read_ntriples(std::string_view text, const TripleSink& sink, const std::string& base) {
  Cursor cur(text);
  std::size_t count = 0;
  while (!cur.eof()) {
    skip_inline_ws(cur);
    if (cur.eof()) break;
    const char c = cur.peek();
    if (c == '\n' || c == '\r') {
      cur.get();
      continue;
    }
    if (c == '#') {
      while (!cur.eof() && cur.peek() != '\n' && cur.peek() != '\r') cur.get();
      continue;
    }
    Triple t;
    t.subject = read_subject_or_object(cur, false, base);
    skip_inline_ws(cur);
    if (cur.peek() != '<') cur.fail("expected predicate IRI");
    cur.get();
    t.predicate = Term::iri(read_iri(cur, base));
    skip_inline_ws(cur);
    t.object = read_subject_or_object(cur, true, base);
    skip_inline_ws(cur);
    cur.expect('.', "'.' at end of triple");
    skip_inline_ws(cur);
    if (cur.peek() == '#') {
      while (!cur.eof() && cur.peek() != '\n' && cur.peek() != '\r') cur.get();
    }
    if (!cur.eof() && cur.peek() != '\n' && cur.peek() != '\r') cur.fail("unexpected content after triple");
    sink(std::move(t));
    ++count;
  }
  return count;
}

}  // namespace kgsaf::rdf::detail
