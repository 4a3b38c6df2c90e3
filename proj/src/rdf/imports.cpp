#include <deque>
#include <set>
#include <sstream>

#include <httplib.h>

#include "kgsaf/rdf/owl.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"

namespace kgsaf::rdf {

namespace {

Format format_for_content(const std::string& content_type, const std::string& iri) {
  if (content_type.find("turtle") != std::string::npos) return Format::Turtle;
  if (content_type.find("n-triples") != std::string::npos) return Format::NTriples;
  if (content_type.find("xml") != std::string::npos) return Format::RdfXml;
  if (auto f = format_for_path(std::filesystem::path(iri))) return *f;
  return Format::RdfXml;
}

std::optional<ResolvedDocument> fetch_http(const std::string& iri) {
  if (!iri.starts_with("http://") && !iri.starts_with("https://")) return std::nullopt;
  const auto slash = iri.find('/', iri.find("://") + 3);
  const std::string origin = iri.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : iri.substr(slash);
  if (auto hash = path.find('#'); hash != std::string::npos) path.erase(hash);
  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(10);
  client.set_read_timeout(60);
  httplib::Headers headers{{"Accept", "text/turtle, application/n-triples;q=0.9, application/rdf+xml;q=0.8"}};
  auto res = client.Get(path, headers);
  if (!res || res->status != 200) return std::nullopt;
  return ResolvedDocument{res->body, format_for_content(res->get_header_value("Content-Type"), iri), iri};
}

}  // namespace

ImportResolver http_resolver() { return fetch_http; }

ImportResolver catalog_resolver(const std::filesystem::path& catalog, bool allow_http) {
  std::map<std::string, std::filesystem::path> entries;
  std::istringstream in(io::read_file(catalog));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(catalog.string() + ":" + std::to_string(line_no) + ": expected <iri>TAB<path>");
    }
    std::filesystem::path file = line.substr(tab + 1);
    if (file.is_relative()) file = catalog.parent_path() / file;
    entries[line.substr(0, tab)] = file;
  }
  return [entries = std::move(entries), allow_http](const std::string& iri) -> std::optional<ResolvedDocument> {
    auto it = entries.find(iri);
    if (it == entries.end()) {
      if (allow_http) return fetch_http(iri);
      return std::nullopt;
    }
    const auto format = format_for_path(it->second);
    if (!format) throw Error("cannot infer RDF format of " + it->second.string());
    return ResolvedDocument{io::read_file(it->second), *format, iri};
  };
}

ImportResult merge_import_closure(const Ontology& root, const ImportResolver& resolver,
                                  const ImportOptions& options) {
  ImportResult result;
  result.ontology = Ontology(root.iri());
  result.ontology.add_all(root.axioms());
  std::set<std::string> seen;
  if (!root.iri().empty()) seen.insert(root.iri());
  std::deque<std::string> queue(root.imports().begin(), root.imports().end());
  while (!queue.empty()) {
    const std::string iri = queue.front();
    queue.pop_front();
    if (!seen.insert(iri).second) continue;
    auto doc = resolver ? resolver(iri) : std::nullopt;
    if (!doc) {
      if (options.fail_on_missing) throw Error("cannot resolve import " + iri);
      result.missing.push_back(iri);
      continue;
    }
    MappedOntology mapped;
    try {
      mapped = load_ontology_text(doc->text, doc->format, options.mapping, doc->base_iri);
    } catch (const Error& e) {
      throw Error("import " + iri + ": " + e.what());
    }
    result.visited.push_back(iri);
    result.report.merge(mapped.report);
    if (!mapped.ontology.iri().empty()) seen.insert(mapped.ontology.iri());
    result.ontology.add_all(mapped.ontology.axioms());
    for (const auto& next : mapped.ontology.imports()) queue.push_back(next);
  }
  return result;
}

}  // namespace kgsaf::rdf
