#include <cctype>
#include <map>

#include "cursor.hpp"
#include "kgsaf/model.hpp"
#include "kgsaf/vocab.hpp"
#include "readers.hpp"

namespace kgsaf::rdf::detail {

namespace {

class TurtleReader {
 public:
  TurtleReader(std::string_view text, const TripleSink& sink, std::string base)
      : cur_(text), sink_(sink), base_(std::move(base)) {}

  std::size_t run() {
    while (true) {
      skip_ws();
      if (cur_.eof()) break;
      statement();
    }
    return count_;
  }

 private:
  void skip_ws() {
    while (!cur_.eof()) {
      const char c = cur_.peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        cur_.get();
      } else if (c == '#') {
        while (!cur_.eof() && cur_.peek() != '\n') cur_.get();
      } else {
        break;
      }
    }
  }

  bool keyword_ci(std::string_view kw) {
    for (std::size_t i = 0; i < kw.size(); ++i) {
      const char c = cur_.peek(i);
      if (std::tolower(static_cast<unsigned char>(c)) != kw[i]) return false;
    }
    const char after = cur_.peek(kw.size());
    return after == ' ' || after == '\t' || after == '\n' || after == '\r' || after == '<';
  }

  void statement() {
    if (cur_.peek() == '@') {
      cur_.get();
      if (cur_.starts_with("prefix")) {
        cur_.advance(6);
        prefix_decl();
        skip_ws();
        cur_.expect('.', "'.' after @prefix");
      } else if (cur_.starts_with("base")) {
        cur_.advance(4);
        base_decl();
        skip_ws();
        cur_.expect('.', "'.' after @base");
      } else {
        cur_.fail("unknown directive");
      }
      return;
    }
    if (keyword_ci("prefix")) {
      cur_.advance(6);
      prefix_decl();
      return;
    }
    if (keyword_ci("base")) {
      cur_.advance(4);
      base_decl();
      return;
    }
    triples();
    skip_ws();
    cur_.expect('.', "'.' at end of statement");
  }

  void prefix_decl() {
    skip_ws();
    std::string prefix;
    while (!cur_.eof() && cur_.peek() != ':') {
      const char c = cur_.peek();
      if (!is_pn_chars(c) && c != '.') cur_.fail("invalid prefix name");
      prefix += cur_.get();
    }
    cur_.expect(':', "':' in prefix declaration");
    skip_ws();
    cur_.expect('<', "namespace IRI");
    prefixes_[prefix] = resolve(read_iriref(cur_));
  }

  void base_decl() {
    skip_ws();
    cur_.expect('<', "base IRI");
    base_ = resolve(read_iriref(cur_));
  }

  std::string resolve(const std::string& iri) const {
    if (base_.empty() || is_absolute_iri(iri)) return iri;
    return resolve_iri(base_, iri);
  }

  Term fresh_blank() { return Term::blank("anon#" + std::to_string(next_blank_++)); }

  void emit(const Term& s, const Term& p, const Term& o) {
    sink_(Triple{s, p, o});
    ++count_;
  }

  void triples() {
    if (cur_.peek() == '[') {
      Term subject = blank_node_property_list();
      skip_ws();
      if (cur_.peek() != '.') predicate_object_list(subject);
      return;
    }
    Term subject = subject_term();
    skip_ws();
    predicate_object_list(subject);
  }

  Term subject_term() {
    const char c = cur_.peek();
    if (c == '(') return collection();
    if (c == '_' && cur_.peek(1) == ':') {
      cur_.advance(2);
      return Term::blank(read_blank_label(cur_));
    }
    return Term::iri(iri());
  }

  void predicate_object_list(const Term& subject) {
    while (true) {
      skip_ws();
      Term predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (!cur_.consume(';')) return;
      // Repeated or trailing semicolons are allowed.
      while (true) {
        skip_ws();
        if (!cur_.consume(';')) break;
      }
      skip_ws();
      const char c = cur_.peek();
      if (c == '.' || c == ']' || cur_.eof()) return;
    }
  }

  Term verb() {
    if (cur_.peek() == 'a') {
      const char after = cur_.peek(1);
      if (after == ' ' || after == '\t' || after == '\n' || after == '\r' || after == '<' || after == '[' ||
          after == '_' || after == '"' || after == '(') {
        cur_.get();
        return Term::iri(std::string(vocab::rdf::type));
      }
    }
    return Term::iri(iri());
  }

  void object_list(const Term& subject, const Term& predicate) {
    while (true) {
      skip_ws();
      Term o = object();
      emit(subject, predicate, o);
      skip_ws();
      if (!cur_.consume(',')) return;
    }
  }

  Term object() {
    const char c = cur_.peek();
    if (c == '[') return blank_node_property_list();
    if (c == '(') return collection();
    if (c == '_' && cur_.peek(1) == ':') {
      cur_.advance(2);
      return Term::blank(read_blank_label(cur_));
    }
    if (c == '"' || c == '\'') return string_literal();
    if (c == '+' || c == '-' || c == '.' || (c >= '0' && c <= '9')) return numeric_literal();
    if (cur_.starts_with("true") && !is_pn_chars(cur_.peek(4)) && cur_.peek(4) != ':') {
      cur_.advance(4);
      return Term::literal("true", std::string(vocab::xsd::boolean));
    }
    if (cur_.starts_with("false") && !is_pn_chars(cur_.peek(5)) && cur_.peek(5) != ':') {
      cur_.advance(5);
      return Term::literal("false", std::string(vocab::xsd::boolean));
    }
    return Term::iri(iri());
  }

  Term blank_node_property_list() {
    cur_.expect('[', "'['");
    Term node = fresh_blank();
    skip_ws();
    if (cur_.consume(']')) return node;
    predicate_object_list(node);
    skip_ws();
    cur_.expect(']', "']'");
    return node;
  }

  Term collection() {
    cur_.expect('(', "'('");
    const Term first(Term::iri(std::string(vocab::rdf::first)));
    const Term rest(Term::iri(std::string(vocab::rdf::rest)));
    std::vector<Term> items;
    while (true) {
      skip_ws();
      if (cur_.consume(')')) break;
      if (cur_.eof()) cur_.fail("unterminated collection");
      items.push_back(object());
    }
    if (items.empty()) return Term::iri(std::string(vocab::rdf::nil));
    std::vector<Term> nodes;
    nodes.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i) nodes.push_back(fresh_blank());
    for (std::size_t i = 0; i < items.size(); ++i) {
      emit(nodes[i], first, items[i]);
      emit(nodes[i], rest, i + 1 < items.size() ? nodes[i + 1] : Term::iri(std::string(vocab::rdf::nil)));
    }
    return nodes.front();
  }

  std::string iri() {
    if (cur_.peek() == '<') {
      cur_.get();
      return resolve(read_iriref(cur_));
    }
    return prefixed_name();
  }

  std::string prefixed_name() {
    const std::size_t line = cur_.line();
    const std::size_t col = cur_.column();
    std::string prefix;
    if (cur_.peek() != ':') {
      if (!is_pn_chars_base(cur_.peek())) cur_.fail("expected IRI or prefixed name");
      while (!cur_.eof() && cur_.peek() != ':') {
        const char c = cur_.peek();
        if (is_pn_chars(c) || (c == '.' && (is_pn_chars(cur_.peek(1)) || cur_.peek(1) == ':'))) {
          prefix += cur_.get();
        } else {
          cur_.fail("invalid prefixed name");
        }
      }
    }
    cur_.expect(':', "':' in prefixed name");
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) throw ParseError("unknown prefix '" + prefix + ":'", line, col);
    return it->second + local_name();
  }

  std::string local_name() {
    std::string out;
    auto local_char = [](char c) { return is_pn_chars(c) || c == ':'; };
    bool first = true;
    while (!cur_.eof()) {
      const char c = cur_.peek();
      if (c == '\\') {
        cur_.get();
        const char e = cur_.get();
        if (std::string_view("_~.-!$&'()*+,;=/?#@%").find(e) == std::string_view::npos) {
          cur_.fail("invalid local name escape");
        }
        out += e;
      } else if (c == '%') {
        if (hex_value(cur_.peek(1)) < 0 || hex_value(cur_.peek(2)) < 0) cur_.fail("invalid percent escape");
        out += cur_.get();
        out += cur_.get();
        out += cur_.get();
      } else if (local_char(c) || (first && c >= '0' && c <= '9')) {
        out += cur_.get();
      } else if (c == '.' && !first) {
        // A dot may not end a local name.
        const char next = cur_.peek(1);
        if (local_char(next) || next == '%' || next == '\\' || next == '.') {
          out += cur_.get();
        } else {
          break;
        }
      } else {
        break;
      }
      first = false;
    }
    return out;
  }

  Term string_literal() {
    const char q = cur_.get();
    const bool long_form = cur_.peek() == q && cur_.peek(1) == q;
    std::string lexical;
    if (long_form) {
      cur_.advance(2);
      while (true) {
        if (cur_.eof()) cur_.fail("unterminated long string");
        if (cur_.peek() == q && cur_.peek(1) == q && cur_.peek(2) == q) {
          cur_.advance(3);
          break;
        }
        const char c = cur_.get();
        if (c == '\\') {
          read_string_escape(cur_, lexical);
        } else {
          lexical += c;
        }
      }
    } else {
      while (true) {
        if (cur_.eof() || cur_.peek() == '\n' || cur_.peek() == '\r') cur_.fail("unterminated string");
        const char c = cur_.get();
        if (c == q) break;
        if (c == '\\') {
          read_string_escape(cur_, lexical);
        } else {
          lexical += c;
        }
      }
    }
    if (cur_.consume('@')) return Term::literal(std::move(lexical), {}, read_langtag(cur_));
    if (cur_.peek() == '^' && cur_.peek(1) == '^') {
      cur_.advance(2);
      std::string dt = iri();
      if (dt == vocab::xsd::string) dt.clear();
      return Term::literal(std::move(lexical), std::move(dt));
    }
    return Term::literal(std::move(lexical));
  }

  Term numeric_literal() {
    std::string lex;
    if (cur_.peek() == '+' || cur_.peek() == '-') lex += cur_.get();
    auto digits = [&] {
      std::size_t n = 0;
      while (cur_.peek() >= '0' && cur_.peek() <= '9') {
        lex += cur_.get();
        ++n;
      }
      return n;
    };
    std::size_t int_digits = digits();
    bool decimal = false;
    std::size_t frac_digits = 0;
    if (cur_.peek() == '.' && cur_.peek(1) >= '0' && cur_.peek(1) <= '9') {
      decimal = true;
      lex += cur_.get();
      frac_digits = digits();
    }
    if (int_digits == 0 && frac_digits == 0) cur_.fail("invalid numeric literal");
    if (cur_.peek() == 'e' || cur_.peek() == 'E') {
      lex += cur_.get();
      if (cur_.peek() == '+' || cur_.peek() == '-') lex += cur_.get();
      if (digits() == 0) cur_.fail("invalid exponent");
      return Term::literal(std::move(lex), std::string(vocab::xsd::double_));
    }
    return Term::literal(std::move(lex), std::string(decimal ? vocab::xsd::decimal : vocab::xsd::integer));
  }

  Cursor cur_;
  const TripleSink& sink_;
  std::string base_;
  std::map<std::string, std::string> prefixes_;
  std::size_t next_blank_ = 0;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t read_turtle(std::string_view text, const TripleSink& sink, const std::string& base) {
  return TurtleReader(text, sink, base).run();
}

}  // namespace kgsaf::rdf::detail
