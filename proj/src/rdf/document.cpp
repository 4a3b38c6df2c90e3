#include "kgsaf/rdf/document.hpp"

#include <algorithm>

#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"
#include "kgsaf/vocab.hpp"
#include "readers.hpp"

namespace kgsaf::rdf {

std::string_view to_string(Format f) {
  switch (f) {
    case Format::NTriples: return "ntriples";
    case Format::Turtle: return "turtle";
    case Format::RdfXml: return "rdfxml";
  }
  return "?";
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "ntriples" || name == "nt" || name == "n-triples") return Format::NTriples;
  if (name == "turtle" || name == "ttl") return Format::Turtle;
  if (name == "rdfxml" || name == "rdf/xml" || name == "xml" || name == "owl") return Format::RdfXml;
  return std::nullopt;
}

std::optional<Format> format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".nt") return Format::NTriples;
  if (ext == ".ttl") return Format::Turtle;
  if (ext == ".owl" || ext == ".rdf" || ext == ".xml") return Format::RdfXml;
  return std::nullopt;
}

std::string_view to_string(SkipReason r) {
  switch (r) {
    case SkipReason::LiteralObject: return "literal-object";
    case SkipReason::Annotation: return "annotation";
    case SkipReason::UnrecognizedPattern: return "unrecognized-pattern";
    case SkipReason::MalformedList: return "malformed-list";
    case SkipReason::DataProperty: return "data-property";
  }
  return "?";
}

void ParseReport::merge(const ParseReport& other) {
  triples_read += other.triples_read;
  axioms_read += other.axioms_read;
  triples_consumed += other.triples_consumed;
  triples_skipped += other.triples_skipped;
  for (const auto& [reason, n] : other.skip_reasons) skip_reasons[reason] += n;
}

std::size_t parse_document(std::string_view text, Format format, const TripleSink& sink,
                           const std::string& base_iri) {
  switch (format) {
    case Format::NTriples: return detail::read_ntriples(text, sink, base_iri);
    case Format::Turtle: return detail::read_turtle(text, sink, base_iri);
    case Format::RdfXml: return detail::read_rdfxml(text, sink, base_iri);
  }
  return 0;
}

ParsedDocument parse_document(std::string_view text, Format format, const std::string& base_iri) {
  ParsedDocument doc;
  parse_document(text, format, [&](Triple&& t) { doc.triples.push_back(std::move(t)); }, base_iri);
  doc.report.triples_read = doc.triples.size();
  return doc;
}

ParsedDocument parse_file(const std::filesystem::path& path, std::optional<Format> format) {
  if (!format) format = format_for_path(path);
  if (!format) throw Error("cannot infer RDF format of " + path.string());
  const std::string text = io::read_file(path);
  try {
    return parse_document(text, *format, "file://" + std::filesystem::absolute(path).string());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), 0, 0);
  }
}

// ---------------------------------------------------------------------------
// RFC 3986 section 5.2

namespace {

struct IriParts {
  std::optional<std::string> scheme, authority, query, fragment;
  std::string path;
};

IriParts split_iri(std::string_view s) {
  IriParts p;
  if (auto colon = s.find(':'); colon != std::string_view::npos) {
    const auto slash = s.find_first_of("/?#");
    if (slash == std::string_view::npos || colon < slash) {
      p.scheme = std::string(s.substr(0, colon));
      s.remove_prefix(colon + 1);
    }
  }
  if (s.starts_with("//")) {
    s.remove_prefix(2);
    const auto end = s.find_first_of("/?#");
    p.authority = std::string(s.substr(0, end));
    s.remove_prefix(end == std::string_view::npos ? s.size() : end);
  }
  if (auto hash = s.find('#'); hash != std::string_view::npos) {
    p.fragment = std::string(s.substr(hash + 1));
    s = s.substr(0, hash);
  }
  if (auto q = s.find('?'); q != std::string_view::npos) {
    p.query = std::string(s.substr(q + 1));
    s = s.substr(0, q);
  }
  p.path = std::string(s);
  return p;
}

std::string remove_dot_segments(std::string input) {
  std::string output;
  while (!input.empty()) {
    if (input.starts_with("../")) {
      input.erase(0, 3);
    } else if (input.starts_with("./")) {
      input.erase(0, 2);
    } else if (input.starts_with("/./")) {
      input.erase(0, 2);
    } else if (input == "/.") {
      input = "/";
    } else if (input.starts_with("/../") || input == "/..") {
      input = input == "/.." ? "/" : input.substr(3);
      const auto last = output.rfind('/');
      output.erase(last == std::string::npos ? 0 : last);
    } else if (input == "." || input == "..") {
      input.clear();
    } else {
      const auto next = input.find('/', input[0] == '/' ? 1 : 0);
      output += input.substr(0, next);
      input.erase(0, next == std::string::npos ? input.size() : next);
    }
  }
  return output;
}

std::string merge_paths(const IriParts& base, const std::string& ref_path) {
  if (base.authority && base.path.empty()) return "/" + ref_path;
  const auto last = base.path.rfind('/');
  if (last == std::string::npos) return ref_path;
  return base.path.substr(0, last + 1) + ref_path;
}

}  // namespace

std::string resolve_iri(std::string_view base_iri, std::string_view reference) {
  const IriParts ref = split_iri(reference);
  const IriParts base = split_iri(base_iri);
  IriParts t;
  if (ref.scheme) {
    t = ref;
    t.path = remove_dot_segments(ref.path);
  } else {
    if (ref.authority) {
      t.authority = ref.authority;
      t.path = remove_dot_segments(ref.path);
      t.query = ref.query;
    } else {
      if (ref.path.empty()) {
        t.path = base.path;
        t.query = ref.query ? ref.query : base.query;
      } else {
        t.path = ref.path.front() == '/' ? remove_dot_segments(ref.path)
                                         : remove_dot_segments(merge_paths(base, ref.path));
        t.query = ref.query;
      }
      t.authority = base.authority;
    }
    t.scheme = base.scheme;
  }
  t.fragment = ref.fragment;
  std::string out;
  if (t.scheme) out += *t.scheme + ":";
  if (t.authority) out += "//" + *t.authority;
  out += t.path;
  if (t.query) out += "?" + *t.query;
  if (t.fragment) out += "#" + *t.fragment;
  return out;
}

// ---------------------------------------------------------------------------
// Writers

namespace {

void append_hex_escape(std::string& out, unsigned cp) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  out += "\\u";
  for (int shift = 12; shift >= 0; shift -= 4) out += kDigits[(cp >> shift) & 0xF];
}

void write_iri(std::string& out, const std::string& iri) {
  out += '<';
  for (const char c : iri) {
    const auto uc = static_cast<unsigned char>(c);
    if (uc <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
        c == '`' || c == '\\') {
      append_hex_escape(out, uc);
    } else {
      out += c;
    }
  }
  out += '>';
}

void write_string(std::string& out, const std::string& s) {
  out += '"';
  for (const char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
}

std::string blank_label(const std::string& label) {
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    const char c = label[i];
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
                    (i > 0 && c == '-');
    out += ok ? c : '_';
  }
  return out.empty() ? "b" : out;
}

void write_term_nt(std::string& out, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Iri: write_iri(out, t.value); break;
    case Term::Kind::Blank: out += "_:" + blank_label(t.value); break;
    case Term::Kind::Literal:
      write_string(out, t.value);
      if (!t.language.empty()) {
        out += '@' + t.language;
      } else if (!t.datatype.empty()) {
        out += "^^";
        write_iri(out, t.datatype);
      }
      break;
  }
}

bool simple_local_name(std::string_view s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    const bool alpha = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    const bool digit = c >= '0' && c <= '9';
    if (!(alpha || digit || (i > 0 && c == '-'))) return false;
  }
  return true;
}

class TurtleTermWriter {
 public:
  explicit TurtleTermWriter(const std::vector<std::pair<std::string, std::string>>& prefixes)
      : prefixes_(prefixes) {
    // Longest namespace first so nested namespaces pick the most specific prefix.
    std::sort(prefixes_.begin(), prefixes_.end(),
              [](const auto& a, const auto& b) { return a.second.size() > b.second.size(); });
  }

  void iri(std::string& out, const std::string& value) const {
    for (const auto& [prefix, ns] : prefixes_) {
      if (value.size() > ns.size() && value.starts_with(ns) &&
          simple_local_name(std::string_view(value).substr(ns.size()))) {
        out += prefix + ":" + value.substr(ns.size());
        return;
      }
    }
    write_iri(out, value);
  }

  void term(std::string& out, const Term& t) const {
    if (t.is_iri()) {
      iri(out, t.value);
    } else if (t.is_blank()) {
      out += "_:" + blank_label(t.value);
    } else {
      write_string(out, t.value);
      if (!t.language.empty()) {
        out += '@' + t.language;
      } else if (!t.datatype.empty()) {
        out += "^^";
        iri(out, t.datatype);
      }
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> prefixes_;
};

}  // namespace

std::string to_ntriples(const Triple& t) {
  std::string out;
  write_term_nt(out, t.subject);
  out += ' ';
  write_term_nt(out, t.predicate);
  out += ' ';
  write_term_nt(out, t.object);
  out += " .";
  return out;
}

std::string write_ntriples(const std::vector<Triple>& triples) {
  std::string out;
  for (const auto& t : triples) {
    out += to_ntriples(t);
    out += '\n';
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> standard_prefixes() {
  return {{"owl", std::string(vocab::kOwl)},
          {"rdf", std::string(vocab::kRdf)},
          {"rdfs", std::string(vocab::kRdfs)},
          {"xsd", std::string(vocab::kXsd)}};
}

std::string write_turtle(const std::vector<Triple>& triples,
                         const std::vector<std::pair<std::string, std::string>>& prefixes) {
  std::string out;
  for (const auto& [prefix, ns] : prefixes) {
    out += "@prefix " + prefix + ": ";
    write_iri(out, ns);
    out += " .\n";
  }
  const TurtleTermWriter w(prefixes);
  const std::string rdf_type(vocab::rdf::type);
  for (std::size_t i = 0; i < triples.size();) {
    out += '\n';
    const Term& subject = triples[i].subject;
    w.term(out, subject);
    bool first_predicate = true;
    while (i < triples.size() && triples[i].subject == subject) {
      const Term& predicate = triples[i].predicate;
      out += first_predicate ? " " : " ;\n    ";
      first_predicate = false;
      if (predicate.value == rdf_type) {
        out += 'a';
      } else {
        w.term(out, predicate);
      }
      bool first_object = true;
      while (i < triples.size() && triples[i].subject == subject && triples[i].predicate == predicate) {
        out += first_object ? " " : ", ";
        first_object = false;
        w.term(out, triples[i].object);
        ++i;
      }
    }
    out += " .\n";
  }
  return out;
}

}  // namespace kgsaf::rdf
