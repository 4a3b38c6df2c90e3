// RDF/XML reader on top of expat. Covers node and property elements,
// rdf:about/ID/nodeID/resource, property attributes, rdf:datatype, xml:lang,
// xml:base and parseType Resource/Collection/Literal. Reification via rdf:ID
// on property elements is not supported.

#include <expat.h>

#include <memory>
#include <optional>
#include <vector>

#include "kgsaf/model.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/vocab.hpp"
#include "readers.hpp"

namespace kgsaf::rdf::detail {

namespace {

constexpr char kNsSep = '\x01';
constexpr std::string_view kXmlNs = "http://www.w3.org/XML/1998/namespace";

std::string expand_name(const char* raw) {
  std::string name(raw);
  std::erase(name, kNsSep);
  return name;
}

bool is_rdf(const std::string& name, std::string_view local) {
  return name.size() == vocab::kRdf.size() + local.size() && name.starts_with(vocab::kRdf) &&
         std::string_view(name).substr(vocab::kRdf.size()) == local;
}

enum class FrameKind { Node, Property };
enum class ParseType { Default, Resource, Collection, Literal };

struct Frame {
  FrameKind kind = FrameKind::Node;
  std::string base;
  std::string lang;
  // Node frames: the described resource.
  Term subject;
  int li_counter = 1;
  // Property frames.
  Term predicate;
  ParseType parse_type = ParseType::Default;
  std::string datatype;
  std::string text;
  std::optional<Term> object;
  std::vector<Term> collection;
  int literal_depth = 0;
};

class RdfXmlReader {
 public:
  RdfXmlReader(const TripleSink& sink, std::string base) : sink_(sink), document_base_(std::move(base)) {}

  std::size_t run(std::string_view text) {
    std::unique_ptr<XML_ParserStruct, decltype(&XML_ParserFree)> parser(XML_ParserCreateNS(nullptr, kNsSep),
                                                                        &XML_ParserFree);
    parser_ = parser.get();
    XML_SetUserData(parser_, this);
    XML_SetElementHandler(parser_, &RdfXmlReader::on_start, &RdfXmlReader::on_end);
    XML_SetCharacterDataHandler(parser_, &RdfXmlReader::on_text);
    if (XML_Parse(parser_, text.data(), static_cast<int>(text.size()), XML_TRUE) == XML_STATUS_ERROR) {
      if (error_) std::rethrow_exception(error_);
      throw ParseError(XML_ErrorString(XML_GetErrorCode(parser_)), XML_GetCurrentLineNumber(parser_),
                       XML_GetCurrentColumnNumber(parser_) + 1);
    }
    if (error_) std::rethrow_exception(error_);
    return count_;
  }

 private:
  static void on_start(void* self, const XML_Char* name, const XML_Char** attrs) {
    auto* r = static_cast<RdfXmlReader*>(self);
    try {
      r->start(expand_name(name), attrs);
    } catch (...) {
      r->abort(std::current_exception());
    }
  }
  static void on_end(void* self, const XML_Char* name) {
    auto* r = static_cast<RdfXmlReader*>(self);
    try {
      r->end(expand_name(name));
    } catch (...) {
      r->abort(std::current_exception());
    }
  }
  static void on_text(void* self, const XML_Char* s, int len) {
    auto* r = static_cast<RdfXmlReader*>(self);
    if (!r->stack_.empty() && r->stack_.back().kind == FrameKind::Property) {
      r->stack_.back().text.append(s, static_cast<std::size_t>(len));
    }
  }

  void abort(std::exception_ptr e) {
    if (!error_) error_ = e;
    XML_StopParser(parser_, XML_FALSE);
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, XML_GetCurrentLineNumber(parser_), XML_GetCurrentColumnNumber(parser_) + 1);
  }

  void emit(const Term& s, const Term& p, const Term& o) {
    sink_(Triple{s, p, o});
    ++count_;
  }

  Term fresh_blank() { return Term::blank("anon#" + std::to_string(next_blank_++)); }

  std::string current_base() const { return stack_.empty() ? document_base_ : stack_.back().base; }
  std::string current_lang() const { return stack_.empty() ? std::string() : stack_.back().lang; }

  std::string resolve(const std::string& base, const std::string& ref) const {
    if (is_absolute_iri(ref) || base.empty()) return ref;
    return resolve_iri(base, ref);
  }

  void start(const std::string& name, const XML_Char** attrs) {
    Frame frame;
    frame.base = current_base();
    frame.lang = current_lang();
    std::vector<std::pair<std::string, std::string>> rest;
    for (std::size_t i = 0; attrs[i]; i += 2) {
      std::string key = expand_name(attrs[i]);
      std::string value = attrs[i + 1];
      if (key.starts_with(kXmlNs)) {
        const auto local = std::string_view(key).substr(kXmlNs.size());
        if (local == "base") frame.base = resolve(frame.base, value);
        if (local == "lang") frame.lang = value;
        continue;
      }
      if (!is_absolute_iri(key)) continue;  // unqualified attributes carry no RDF meaning
      rest.emplace_back(std::move(key), std::move(value));
    }

    if (!stack_.empty() && stack_.back().kind == FrameKind::Property &&
        stack_.back().parse_type == ParseType::Literal) {
      ++stack_.back().literal_depth;
      return;
    }

    const bool expect_node = stack_.empty() || stack_.back().kind == FrameKind::Property;
    if (expect_node) {
      if (stack_.empty() && is_rdf(name, "RDF")) {
        frame.kind = FrameKind::Node;
        frame.subject = Term::iri("");  // sentinel: rdf:RDF wrapper
        rdf_wrapper_depth_ = 1;
        stack_.push_back(std::move(frame));
        return;
      }
      start_node(name, std::move(frame), rest);
    } else {
      if (rdf_wrapper_depth_ == 1 && stack_.size() == 1) {
        // Child of rdf:RDF: a top-level node element.
        start_node(name, std::move(frame), rest);
        return;
      }
      start_property(name, std::move(frame), rest);
    }
  }

  void start_node(const std::string& name, Frame frame,
                  const std::vector<std::pair<std::string, std::string>>& attrs) {
    frame.kind = FrameKind::Node;
    std::optional<Term> subject;
    for (const auto& [key, value] : attrs) {
      if (is_rdf(key, "about")) subject = Term::iri(resolve(frame.base, value));
      else if (is_rdf(key, "ID")) subject = Term::iri(resolve(frame.base, "#" + value));
      else if (is_rdf(key, "nodeID")) subject = Term::blank(value);
    }
    frame.subject = subject ? *subject : fresh_blank();
    if (!is_rdf(name, "Description")) emit(frame.subject, Term::iri(std::string(vocab::rdf::type)), Term::iri(name));
    for (const auto& [key, value] : attrs) {
      if (is_rdf(key, "about") || is_rdf(key, "ID") || is_rdf(key, "nodeID")) continue;
      if (is_rdf(key, "type")) {
        emit(frame.subject, Term::iri(std::string(vocab::rdf::type)), Term::iri(resolve(frame.base, value)));
      } else {
        emit(frame.subject, Term::iri(key), Term::literal(value, {}, frame.lang));
      }
    }
    // Attach as the object of an enclosing property element.
    if (!stack_.empty() && stack_.back().kind == FrameKind::Property) {
      Frame& prop = stack_.back();
      if (prop.parse_type == ParseType::Collection) {
        prop.collection.push_back(frame.subject);
      } else {
        if (prop.object) fail("property element has more than one node element");
        prop.object = frame.subject;
      }
    }
    stack_.push_back(std::move(frame));
  }

  void start_property(const std::string& name, Frame frame,
                      const std::vector<std::pair<std::string, std::string>>& attrs) {
    Frame& parent = stack_.back();
    frame.kind = FrameKind::Property;
    frame.subject = parent.subject;
    if (is_rdf(name, "li")) {
      frame.predicate = Term::iri(std::string(vocab::kRdf) + "_" + std::to_string(parent.li_counter++));
    } else {
      frame.predicate = Term::iri(name);
    }
    std::optional<Term> resource;
    std::vector<std::pair<std::string, std::string>> property_attrs;
    for (const auto& [key, value] : attrs) {
      if (is_rdf(key, "resource")) {
        resource = Term::iri(resolve(frame.base, value));
      } else if (is_rdf(key, "nodeID")) {
        resource = Term::blank(value);
      } else if (is_rdf(key, "datatype")) {
        frame.datatype = resolve(frame.base, value);
        if (frame.datatype == vocab::xsd::string) frame.datatype.clear();
      } else if (is_rdf(key, "parseType")) {
        if (value == "Resource") frame.parse_type = ParseType::Resource;
        else if (value == "Collection") frame.parse_type = ParseType::Collection;
        else frame.parse_type = ParseType::Literal;
      } else if (is_rdf(key, "ID")) {
        // Statement reification is not materialized.
      } else {
        property_attrs.emplace_back(key, value);
      }
    }
    if (resource || !property_attrs.empty()) {
      Term object = resource ? *resource : fresh_blank();
      for (const auto& [key, value] : property_attrs) {
        if (is_rdf(key, "type")) {
          emit(object, Term::iri(std::string(vocab::rdf::type)), Term::iri(resolve(frame.base, value)));
        } else {
          emit(object, Term::iri(key), Term::literal(value, {}, frame.lang));
        }
      }
      frame.object = object;
    }
    if (frame.parse_type == ParseType::Resource) {
      Term node = fresh_blank();
      frame.object = node;
      stack_.push_back(std::move(frame));
      Frame node_frame;
      node_frame.kind = FrameKind::Node;
      node_frame.base = stack_.back().base;
      node_frame.lang = stack_.back().lang;
      node_frame.subject = node;
      node_frame.literal_depth = -1;  // marks an implicit node closed with its property
      stack_.push_back(std::move(node_frame));
      return;
    }
    stack_.push_back(std::move(frame));
  }

  void end(const std::string& /*name*/) {
    if (stack_.empty()) return;
    Frame& top = stack_.back();
    if (top.kind == FrameKind::Property && top.parse_type == ParseType::Literal && top.literal_depth > 0) {
      --top.literal_depth;
      return;
    }
    if (top.kind == FrameKind::Node) {
      const bool implicit = top.literal_depth == -1;
      stack_.pop_back();
      if (implicit) finish_property();
      return;
    }
    finish_property();
  }

  void finish_property() {
    Frame prop = std::move(stack_.back());
    stack_.pop_back();
    if (prop.parse_type == ParseType::Collection) {
      const Term first(Term::iri(std::string(vocab::rdf::first)));
      const Term rest(Term::iri(std::string(vocab::rdf::rest)));
      if (prop.collection.empty()) {
        emit(prop.subject, prop.predicate, Term::iri(std::string(vocab::rdf::nil)));
        return;
      }
      std::vector<Term> nodes;
      for (std::size_t i = 0; i < prop.collection.size(); ++i) nodes.push_back(fresh_blank());
      emit(prop.subject, prop.predicate, nodes.front());
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        emit(nodes[i], first, prop.collection[i]);
        emit(nodes[i], rest, i + 1 < nodes.size() ? nodes[i + 1] : Term::iri(std::string(vocab::rdf::nil)));
      }
      return;
    }
    if (prop.object) {
      emit(prop.subject, prop.predicate, *prop.object);
      return;
    }
    if (prop.parse_type == ParseType::Literal) {
      emit(prop.subject, prop.predicate, Term::literal(prop.text, std::string(vocab::rdf::XMLLiteral)));
      return;
    }
    emit(prop.subject, prop.predicate,
         Term::literal(prop.text, prop.datatype, prop.datatype.empty() ? prop.lang : std::string()));
  }

  const TripleSink& sink_;
  std::string document_base_;
  XML_Parser parser_ = nullptr;
  std::vector<Frame> stack_;
  int rdf_wrapper_depth_ = 0;
  std::exception_ptr error_;
  std::size_t next_blank_ = 0;
  std::size_t count_ = 0;
};

}  // namespace

std::size_t read_rdfxml(std::string_view text, const TripleSink& sink, const std::string& base) {
  return RdfXmlReader(sink, base).run(text);
}

}  // namespace kgsaf::rdf::detail
