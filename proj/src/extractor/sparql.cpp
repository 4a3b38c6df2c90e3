#include <ctime>
#include <thread>

#include <httplib.h>

#include <json.hpp>

#include "kgsaf/extractor/extractor.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"

namespace kgsaf {

namespace {

const char* kPrefixes =
    "PREFIX owl: <http://www.w3.org/2002/07/owl#>\n"
    "PREFIX rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n";

std::string literal(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

// (STR(?a) > x) || (STR(?a) = x && (...)) over the cursor variables.
std::string cursor_filter(const std::vector<std::string>& vars, const std::vector<std::string>& after, std::size_t i) {
  const std::string term = "STR(?" + vars[i] + ")";
  const std::string gt = term + " > " + literal(after[i]);
  if (i + 1 == vars.size()) return gt;
  return "(" + gt + " || (" + term + " = " + literal(after[i]) + " && " + cursor_filter(vars, after, i + 1) + "))";
}

std::string now_utc() {
  const std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

struct Url {
  std::string origin;
  std::string path;
};

Url split_url(const std::string& url) {
  const auto scheme = url.find("://");
  if (scheme == std::string::npos) throw Error("endpoint is not an absolute http(s) URL: " + url);
  const auto slash = url.find('/', scheme + 3);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

const std::string kTypeFilter = "FILTER(isIRI(?c) && ?c != owl:NamedIndividual && ?c != owl:Thing)";

}  // namespace

SparqlSource::SparqlSource(std::string endpoint, SparqlOptions options)
    : endpoint_(std::move(endpoint)), options_(std::move(options)) {
  if (options_.page_size == 0 || options_.values_batch == 0) throw Error("page and batch sizes must be positive");
  manifest_.endpoint = endpoint_;
  manifest_.started_at = now_utc();
}

std::string SparqlSource::paged_query(const std::string& pattern, const std::vector<std::string>& vars,
                                      const std::vector<std::string>& after) const {
  std::string q = kPrefixes;
  q += "SELECT";
  for (const auto& v : vars) q += " ?" + v;
  q += "\n";
  if (!options_.graph.empty()) q += "FROM <" + options_.graph + ">\n";
  q += "WHERE {\n" + pattern;
  if (!after.empty()) q += "  FILTER(" + cursor_filter(vars, after, 0) + ")\n";
  q += "}\nORDER BY";
  for (const auto& v : vars) q += " STR(?" + v + ")";
  q += "\nLIMIT " + std::to_string(options_.page_size) + "\n";
  return q;
}

std::string SparqlSource::property_pattern() const {
  std::string pattern = "  ?s ?p ?o .\n";
  if (options_.require_declarations) {
    pattern +=
        "  ?p a owl:ObjectProperty .\n"
        "  ?s a owl:NamedIndividual .\n"
        "  ?o a owl:NamedIndividual .\n";
  } else {
    pattern += "  FILTER(!STRSTARTS(STR(?p), \"http://www.w3.org/\"))\n";
  }
  return pattern + "  FILTER(isIRI(?s) && isIRI(?o))\n";
}

std::string SparqlSource::property_query(const std::vector<std::string>& after) const {
  return paged_query(property_pattern(), {"s", "p", "o"}, after);
}

std::vector<SparqlSource::Binding> SparqlSource::select(const std::string& query,
                                                        const std::vector<std::string>& vars) {
  const Url url = split_url(endpoint_);
  httplib::Client client(url.origin);
  client.set_connection_timeout(options_.timeout);
  client.set_read_timeout(options_.timeout);
  client.set_follow_location(true);
  const httplib::Headers headers{{"Accept", "application/sparql-results+json"}};
  const httplib::Params params{{"query", query}};

  std::string failure;
  auto delay = options_.initial_backoff;
  for (int attempt = 0; attempt <= options_.max_retries; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(delay);
      delay *= 2;
    }
    auto res = client.Post(url.path, headers, params);
    if (!res) {
      failure = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 429 || res->status >= 500) {
      failure = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status != 200) {
      throw Error("SPARQL endpoint " + endpoint_ + " rejected query: HTTP " + std::to_string(res->status));
    }
    std::vector<Binding> rows;
    try {
      const auto doc = nlohmann::json::parse(res->body);
      for (const auto& b : doc.at("results").at("bindings")) {
        Binding row;
        bool ok = true;
        for (const auto& v : vars) {
          if (!b.contains(v) || b[v].at("type") != "uri") {
            ok = false;
            break;
          }
          row.values.push_back(b[v].at("value").get<std::string>());
        }
        // Rows with blank nodes or literals still advance the cursor.
        if (!ok) row.values.clear();
        rows.push_back(std::move(row));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error("malformed SPARQL results from " + endpoint_ + ": " + e.what());
    }
    manifest_.pages.push_back(PageRecord{query, rows.size(), io::sha256_hex(res->body)});
    return rows;
  }
  throw Error("SPARQL endpoint " + endpoint_ + " unreachable after " + std::to_string(options_.max_retries + 1) +
              " attempts: " + failure);
}

void SparqlSource::paged(const std::string& pattern, const std::vector<std::string>& vars,
                         const std::function<void(const std::vector<std::string>&)>& row) {
  std::vector<std::string> after;
  while (true) {
    const auto rows = select(paged_query(pattern, vars, after), vars);
    std::vector<std::string> last;
    for (const auto& r : rows) {
      if (r.values.empty()) continue;
      row(r.values);
      last = r.values;
    }
    if (rows.size() < options_.page_size) return;
    // A full page of unusable rows cannot be cursored past; stop rather than loop.
    if (last.empty() || last == after) {
      throw Error("SPARQL pagination stalled at " + endpoint_ + ": full page without IRI rows");
    }
    after = std::move(last);
  }
}

void SparqlSource::for_each_property_assertion(const std::function<void(const Axiom&)>& fn) {
  paged(property_pattern(), {"s", "p", "o"}, [&](const std::vector<std::string>& r) {
    fn(Axiom::object_property_assertion(r[0], r[1], r[2]));
  });
}

void SparqlSource::for_each_class_assertion(const std::function<void(const Axiom&)>& fn) {
  std::string pattern = "  ?s a ?c .\n";
  if (options_.require_declarations) pattern += "  ?s a owl:NamedIndividual .\n";
  pattern += "  " + kTypeFilter + "\n";
  paged(pattern, {"s", "c"}, [&](const std::vector<std::string>& r) {
    fn(Axiom::class_assertion(r[0], ClassExpression::named(r[1])));
  });
}

std::vector<Axiom> SparqlSource::class_assertions_of(const std::set<std::string>& individuals) {
  std::vector<Axiom> out;
  std::vector<std::string> batch;
  auto flush = [&] {
    if (batch.empty()) return;
    std::string pattern = "  VALUES ?s {";
    for (const auto& x : batch) pattern += " <" + x + ">";
    pattern += " }\n  ?s a ?c .\n  " + kTypeFilter + "\n";
    paged(pattern, {"s", "c"}, [&](const std::vector<std::string>& r) {
      out.push_back(Axiom::class_assertion(r[0], ClassExpression::named(r[1])));
    });
    batch.clear();
  };
  for (const auto& x : individuals) {
    batch.push_back(x);
    if (batch.size() == options_.values_batch) flush();
  }
  flush();
  return out;
}

std::string SparqlSource::manifest_json() const {
  nlohmann::ordered_json j;
  j["endpoint"] = manifest_.endpoint;
  j["started_at"] = manifest_.started_at;
  j["page_size"] = options_.page_size;
  auto pages = nlohmann::ordered_json::array();
  for (const auto& p : manifest_.pages) {
    pages.push_back({{"query", p.query}, {"rows", p.rows}, {"sha256", p.sha256}});
  }
  j["pages"] = std::move(pages);
  return j.dump(2) + "\n";
}

}  // namespace kgsaf
