#include <gtest/gtest.h>

#include <atomic>
#include <map>
#include <regex>
#include <thread>

#include <httplib.h>

#include <json.hpp>

#include "kgsaf/extractor/extractor.hpp"
#include "kgsaf/util/error.hpp"
#include "support/generators.hpp"

using namespace kgsaf;

namespace {

std::string E(const std::string& n) { return "http://e/" + n; }
Axiom rel(const std::string& x, const std::string& p, const std::string& y) {
  return Axiom::object_property_assertion(E(x), E(p), E(y));
}
Axiom type(const std::string& x, const std::string& c) {
  return Axiom::class_assertion(E(x), ClassExpression::named(E(c)));
}

Ontology abox(std::initializer_list<Axiom> axioms) {
  Ontology o;
  for (const auto& a : axioms) o.add(a);
  return o;
}

// Independent filter: degrees recounted with an ordered map, then one scan.
std::set<Axiom> brute_force(const std::vector<Axiom>& edges, std::size_t k) {
  std::map<std::string, std::size_t> deg;
  for (const auto& a : edges) {
    deg[a.subject()] += 1;
    deg[a.object()] += 1;
  }
  std::set<Axiom> out;
  for (const auto& a : edges) {
    if (deg[a.subject()] >= k && deg[a.object()] >= k) out.insert(a);
  }
  return out;
}

}  // namespace

TEST(Degrees, CountsSubjectAndObject) {
  const auto d = compute_degrees({rel("a", "p", "b"), rel("b", "q", "c")});
  EXPECT_EQ(d.of(E("a")), 1u);
  EXPECT_EQ(d.of(E("b")), 2u);
  EXPECT_EQ(d.of(E("c")), 1u);
  EXPECT_EQ(d.of(E("z")), 0u);
}

TEST(Degrees, SelfLoopCountsTwice) { EXPECT_EQ(compute_degrees({rel("a", "p", "a")}).of(E("a")), 2u); }

TEST(Degrees, TypesOnlyWhenRequested) {
  const std::vector<Axiom> in{rel("a", "p", "b"), type("a", "A")};
  EXPECT_EQ(compute_degrees(in).of(E("a")), 1u);
  EXPECT_EQ(compute_degrees(in, true).of(E("a")), 2u);
}

TEST(Degrees, MatchesNaiveRecount) {
  gen::Rng rng(3);
  const auto edges = gen::random_assertions(rng, 10000, 800, 20);
  const auto d = compute_degrees(edges);
  std::size_t total = 0;
  for (std::size_t i = 0; i < 800; ++i) {
    std::size_t n = 0;
    for (const auto& a : edges) n += (a.subject() == gen::ind(i)) + (a.object() == gen::ind(i));
    EXPECT_EQ(d.of(gen::ind(i)), n);
    total += n;
  }
  EXPECT_EQ(total, 2 * edges.size());
}

TEST(Extract, ChainWithThresholdTwo) {
  LocalSource src(abox({rel("a", "p", "b"), rel("b", "p", "c"), rel("c", "p", "d")}));
  const auto s = extract_subset(src, {.k = 2});
  EXPECT_EQ(s.property_assertions, Ontology::AxiomSet{rel("b", "p", "c")});
  EXPECT_EQ(s.individuals, (std::set<std::string>{E("b"), E("c")}));
  EXPECT_EQ(s.properties, std::set<std::string>{E("p")});
  EXPECT_EQ(s.extraction_k, 2u);
}

TEST(Extract, ThresholdOneKeepsEverything) {
  const auto o = abox({rel("a", "p", "b"), rel("b", "q", "c"), type("a", "A")});
  LocalSource src(o);
  EXPECT_EQ(extract_subset(src, {.k = 1}).property_assertions.size(), 2u);
}

TEST(Extract, UnsatisfiablePropertyDropped) {
  LocalSource src(abox({rel("a", "r", "b"), rel("a", "p", "b"), rel("b", "r", "a")}));
  UnsatReport unsat;
  unsat.unsatisfiable_properties.insert(E("r"));
  const auto s = extract_subset(src, {.k = 2}, unsat);
  // Degrees still count the dropped r assertions.
  EXPECT_EQ(s.property_assertions, Ontology::AxiomSet{rel("a", "p", "b")});
}

TEST(Extract, RejectsZeroThreshold) {
  LocalSource src(abox({rel("a", "p", "b")}));
  EXPECT_THROW(extract_subset(src, {.k = 0}), Error);
}

TEST(Extract, FixpointIsOptIn) {
  // Star hub h with leaves; leaves of degree 1 vanish, then h's degree drops.
  LocalSource src(abox({rel("h", "p", "a"), rel("h", "p", "b"), rel("a", "p", "b"), rel("b", "p", "c")}));
  const auto once = extract_subset(src, {.k = 2});
  EXPECT_EQ(once.property_assertions.size(), 3u);
  const auto fixed = extract_subset(src, {.k = 2, .fixpoint = true});
  EXPECT_EQ(fixed.property_assertions.size(), 3u);
  LocalSource path(abox({rel("a", "p", "b"), rel("b", "p", "c"), rel("c", "p", "d"), rel("d", "p", "e")}));
  EXPECT_EQ(extract_subset(path, {.k = 2}).property_assertions.size(), 2u);
  EXPECT_EQ(extract_subset(path, {.k = 2, .fixpoint = true}).property_assertions.size(), 0u);
}

TEST(Extract, DegreeIncludesTypesFlag) {
  LocalSource src(abox({rel("a", "p", "b"), type("a", "A"), type("b", "B")}));
  EXPECT_TRUE(extract_subset(src, {.k = 2}).property_assertions.empty());
  EXPECT_EQ(extract_subset(src, {.k = 2, .degree_includes_types = true}).property_assertions.size(), 1u);
}

TEST(Extract, RandomGraphsMatchBruteForceAndAreMonotone) {
  gen::Rng rng(11);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10000)(rng);
    auto edges = gen::random_assertions(rng, n, 50 + n / 8, 12);
    Ontology o;
    o.add_all(edges);
    LocalSource src(o);
    std::set<Axiom> previous;
    bool first = true;
    for (std::size_t k : {1, 2, 5, 20}) {
      const auto s = extract_subset(src, {.k = k});
      const std::set<Axiom> got(s.property_assertions.begin(), s.property_assertions.end());
      ASSERT_EQ(got, brute_force(edges, k)) << "round " << round << " k " << k;
      if (!first) {
        ASSERT_TRUE(std::includes(previous.begin(), previous.end(), got.begin(), got.end()));
      }
      previous = got;
      first = false;
    }
    // Input order does not matter.
    std::shuffle(edges.begin(), edges.end(), rng);
    struct Shuffled : AssertionSource {
      std::vector<Axiom> edges;
      void for_each_property_assertion(const std::function<void(const Axiom&)>& fn) override {
        for (const auto& a : edges) fn(a);
      }
      void for_each_class_assertion(const std::function<void(const Axiom&)>&) override {}
      std::vector<Axiom> class_assertions_of(const std::set<std::string>&) override { return {}; }
    } shuffled;
    shuffled.edges = edges;
    ASSERT_EQ(extract_subset(shuffled, {.k = 5}).property_assertions, extract_subset(src, {.k = 5}).property_assertions);
  }
}

TEST(ClassAssertions, UnsatAndThingFiltered) {
  Ontology o = abox({type("x", "A"), type("x", "UnsatC"), rel("x", "p", "y")});
  o.add(Axiom::class_assertion(E("x"), ClassExpression::top()));
  LocalSource src(o);
  UnsatReport unsat;
  unsat.unsatisfiable_classes.insert(E("UnsatC"));
  EXPECT_EQ(fetch_class_assertions(src, {E("x"), E("y")}, unsat), Ontology::AxiomSet{type("x", "A")});
}

TEST(ClassAssertions, ExactEnumeration) {
  LocalSource src(abox({type("a", "A"), type("a", "B"), type("b", "A"), type("c", "C"), type("c", "D"),
                        type("z", "A"), rel("a", "p", "b"), rel("b", "p", "c")}));
  const auto s = extract_abox(src, {.k = 1});
  EXPECT_EQ(s.class_assertions, (Ontology::AxiomSet{type("a", "A"), type("a", "B"), type("b", "A"), type("c", "C"),
                                                    type("c", "D")}));
  // No orphan typings.
  for (const auto& a : s.class_assertions) EXPECT_TRUE(s.individuals.contains(a.individual()));
}

// ---------------------------------------------------------------------------
// SPARQL endpoint

namespace {

// Minimal endpoint that understands exactly the query shapes the client emits.
class FakeEndpoint {
 public:
  FakeEndpoint(std::vector<Axiom> relations, std::vector<Axiom> types) {
    for (const auto& a : relations) relations_.push_back({a.subject(), a.property(), a.object()});
    for (const auto& a : types) types_.push_back({a.individual(), a.class_expression().iri()});
    std::sort(relations_.begin(), relations_.end());
    std::sort(types_.begin(), types_.end());
    server_.Post("/sparql", [this](const httplib::Request& req, httplib::Response& res) { handle(req, res); });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeEndpoint() {
    server_.stop();
    thread_.join();
  }

  std::string url() const { return "http://127.0.0.1:" + std::to_string(port_) + "/sparql"; }
  std::atomic<int> fail_next{0};
  std::atomic<int> requests{0};
  std::vector<std::string> queries;

 private:
  using Row = std::vector<std::string>;

  void handle(const httplib::Request& req, httplib::Response& res) {
    ++requests;
    if (fail_next > 0) {
      --fail_next;
      res.status = 503;
      return;
    }
    const std::string q = req.get_param_value("query");
    queries.push_back(q);
    const bool props = q.find("?s ?p ?o") != std::string::npos;
    const std::vector<std::string> vars = props ? std::vector<std::string>{"s", "p", "o"} : std::vector<std::string>{"s", "c"};
    std::vector<Row> rows = props ? relations_ : types_;

    std::set<std::string> values;
    const std::regex values_re(R"(VALUES \?s \{([^}]*)\})");
    std::smatch m;
    if (std::regex_search(q, m, values_re)) {
      const std::string body = m[1];
      const std::regex iri_re("<([^>]*)>");
      for (auto it = std::sregex_iterator(body.begin(), body.end(), iri_re); it != std::sregex_iterator(); ++it) {
        values.insert((*it)[1]);
      }
      std::erase_if(rows, [&](const Row& r) { return !values.contains(r[0]); });
    }
    Row after;
    const std::regex cursor_re(R"|(STR\(\?\w+\) > "([^"]*)")|");
    for (auto it = std::sregex_iterator(q.begin(), q.end(), cursor_re); it != std::sregex_iterator(); ++it) {
      after.push_back((*it)[1]);
    }
    std::smatch lim;
    std::regex_search(q, lim, std::regex(R"(LIMIT (\d+))"));
    const std::size_t limit = std::stoul(lim[1]);

    nlohmann::json bindings = nlohmann::json::array();
    for (const auto& r : rows) {
      if (!after.empty() && !(r > after)) continue;
      if (bindings.size() == limit) break;
      nlohmann::json b;
      for (std::size_t i = 0; i < vars.size(); ++i) b[vars[i]] = {{"type", "uri"}, {"value", r[i]}};
      bindings.push_back(b);
    }
    nlohmann::json doc{{"head", {{"vars", vars}}}, {"results", {{"bindings", bindings}}}};
    res.set_content(doc.dump(), "application/sparql-results+json");
  }

  std::vector<Row> relations_, types_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

SparqlOptions fast(std::size_t page) {
  SparqlOptions o;
  o.page_size = page;
  o.values_batch = 2;
  o.initial_backoff = std::chrono::milliseconds(1);
  o.max_retries = 3;
  return o;
}

}  // namespace

TEST(Sparql, QueryUsesKeysetCursorNotOffset) {
  SparqlSource src("http://127.0.0.1:1/sparql", fast(10));
  const std::string first = src.property_query({});
  EXPECT_EQ(first.find("OFFSET"), std::string::npos);
  EXPECT_NE(first.find("ORDER BY STR(?s) STR(?p) STR(?o)"), std::string::npos);
  EXPECT_NE(first.find("LIMIT 10"), std::string::npos);
  const std::string next = src.property_query({E("a"), E("p"), "http://e/\"q"});
  EXPECT_NE(next.find(R"(STR(?s) > "http://e/a")"), std::string::npos);
  EXPECT_NE(next.find(R"(STR(?o) > "http://e/\"q")"), std::string::npos);
}

TEST(Sparql, PagedExtractionMatchesLocal) {
  gen::Rng rng(5);
  const auto edges = gen::random_assertions(rng, 60, 25, 4);
  std::vector<Axiom> types;
  for (std::size_t i = 0; i < 25; i += 2) types.push_back(Axiom::class_assertion(gen::ind(i), gen::cls(i % 3)));
  FakeEndpoint endpoint(edges, types);
  SparqlSource remote(endpoint.url(), fast(7));
  Ontology o;
  o.add_all(edges);
  o.add_all(types);
  LocalSource local(o);
  for (std::size_t k : {1, 3, 6}) {
    const auto a = extract_abox(remote, {.k = k});
    const auto b = extract_abox(local, {.k = k});
    EXPECT_EQ(a.property_assertions, b.property_assertions);
    EXPECT_EQ(a.class_assertions, b.class_assertions);
  }
  // Every page is recorded with a checksum of its body.
  ASSERT_FALSE(remote.manifest().pages.empty());
  for (const auto& p : remote.manifest().pages) {
    EXPECT_EQ(p.sha256.size(), 64u);
    EXPECT_LE(p.rows, 7u);
  }
  const auto manifest = nlohmann::json::parse(remote.manifest_json());
  EXPECT_EQ(manifest["endpoint"], endpoint.url());
  EXPECT_EQ(manifest["pages"].size(), remote.manifest().pages.size());
}

TEST(Sparql, RetriesTransientFailures) {
  FakeEndpoint endpoint({rel("a", "p", "b")}, {});
  endpoint.fail_next = 2;
  SparqlSource src(endpoint.url(), fast(100));
  std::vector<Axiom> got;
  src.for_each_property_assertion([&](const Axiom& a) { got.push_back(a); });
  EXPECT_EQ(got, std::vector<Axiom>{rel("a", "p", "b")});
  EXPECT_EQ(endpoint.requests, 3);
}

TEST(Sparql, GivesUpAfterRetries) {
  FakeEndpoint endpoint({rel("a", "p", "b")}, {});
  endpoint.fail_next = 100;
  SparqlSource src(endpoint.url(), fast(100));
  EXPECT_THROW(src.for_each_property_assertion([](const Axiom&) {}), Error);
  EXPECT_EQ(endpoint.requests, 4);
}

TEST(Sparql, UnreachableEndpoint) {
  SparqlSource src("http://127.0.0.1:1/sparql", fast(100));
  EXPECT_THROW(extract_subset(src, {.k = 1}), Error);
}
