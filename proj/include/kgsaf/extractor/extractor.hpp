#pragma once

// Degree-filtered ABox extraction from a local graph or a SPARQL endpoint.

#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgsaf/model.hpp"
#include "kgsaf/reasoner/reasoner.hpp"

namespace kgsaf {

struct DegreeIndex {
  std::unordered_map<std::string, std::uint64_t> degree;

  std::uint64_t of(const std::string& individual) const {
    auto it = degree.find(individual);
    return it == degree.end() ? 0 : it->second;
  }
};

// Counts subject and object occurrences in object property assertions; a
// self-loop counts twice. Class assertions add one to their individual when
// `include_types` is set. Other axioms are ignored.
DegreeIndex compute_degrees(const std::vector<Axiom>& assertions, bool include_types = false);

// Where assertions come from. Implementations must be re-enumerable.
class AssertionSource {
 public:
  virtual ~AssertionSource() = default;
  virtual void for_each_property_assertion(const std::function<void(const Axiom&)>& fn) = 0;
  // Class assertions of every individual, used when degrees include typings.
  virtual void for_each_class_assertion(const std::function<void(const Axiom&)>& fn) = 0;
  // Asserted types of the given individuals.
  virtual std::vector<Axiom> class_assertions_of(const std::set<std::string>& individuals) = 0;
};

// In-memory source over the ABox of an ontology.
class LocalSource : public AssertionSource {
 public:
  explicit LocalSource(const Ontology& ontology);
  void for_each_property_assertion(const std::function<void(const Axiom&)>& fn) override;
  void for_each_class_assertion(const std::function<void(const Axiom&)>& fn) override;
  std::vector<Axiom> class_assertions_of(const std::set<std::string>& individuals) override;

 private:
  std::vector<Axiom> relations_;
  std::unordered_map<std::string, std::vector<Axiom>> types_;
};

struct SparqlOptions {
  std::size_t page_size = 10000;
  std::size_t values_batch = 200;  // individuals per class-assertion query
  int max_retries = 5;
  std::chrono::milliseconds initial_backoff{500};
  std::chrono::seconds timeout{120};
  // Require owl:NamedIndividual / owl:ObjectProperty typings, as in the
  // published extraction pattern. Off for dumps without declarations.
  bool require_declarations = true;
  // Restricts triples to this named graph when non-empty.
  std::string graph;
};

struct PageRecord {
  std::string query;
  std::size_t rows = 0;
  std::string sha256;  // of the raw response body
};

struct SparqlManifest {
  std::string endpoint;
  std::string started_at;  // UTC, ISO 8601
  std::vector<PageRecord> pages;
};

// SPARQL 1.1 protocol client. Pages are cursored on the full (s, p, o) key
// with ORDER BY and a FILTER on the last row seen, so no OFFSET is used.
class SparqlSource : public AssertionSource {
 public:
  SparqlSource(std::string endpoint, SparqlOptions options = {});
  void for_each_property_assertion(const std::function<void(const Axiom&)>& fn) override;
  void for_each_class_assertion(const std::function<void(const Axiom&)>& fn) override;
  std::vector<Axiom> class_assertions_of(const std::set<std::string>& individuals) override;

  const SparqlManifest& manifest() const { return manifest_; }
  std::string manifest_json() const;

  // Query text for the first page of property assertions; exposed for tests.
  std::string property_query(const std::vector<std::string>& after) const;

 private:
  struct Binding {
    std::vector<std::string> values;
  };
  std::string property_pattern() const;
  std::vector<Binding> select(const std::string& query, const std::vector<std::string>& vars);
  void paged(const std::string& pattern, const std::vector<std::string>& vars,
             const std::function<void(const std::vector<std::string>&)>& row);
  std::string paged_query(const std::string& pattern, const std::vector<std::string>& vars,
                          const std::vector<std::string>& after) const;

  std::string endpoint_;
  SparqlOptions options_;
  SparqlManifest manifest_;
};

struct ExtractOptions {
  std::size_t k = 1;
  // Re-filter on the kept assertions until nothing changes.
  bool fixpoint = false;
  bool degree_includes_types = false;
};

struct ABoxSubset {
  Ontology::AxiomSet property_assertions;
  Ontology::AxiomSet class_assertions;
  std::set<std::string> individuals;
  std::set<std::string> properties;
  std::size_t extraction_k = 0;
};

// Keeps p(s, o) iff degree(s) >= k, degree(o) >= k and p is not unsatisfiable,
// with degrees taken once over every property assertion of the source.
// Class assertions are not fetched here. Throws Error for k < 1.
ABoxSubset extract_subset(AssertionSource& source, const ExtractOptions& options, const UnsatReport& unsat = {});

// Asserted types of the individuals, minus owl:Thing and any assertion
// mentioning an unsatisfiable class.
Ontology::AxiomSet fetch_class_assertions(AssertionSource& source, const std::set<std::string>& individuals,
                                          const UnsatReport& unsat = {});

// extract_subset followed by fetch_class_assertions on its individuals.
ABoxSubset extract_abox(AssertionSource& source, const ExtractOptions& options, const UnsatReport& unsat = {});

}  // namespace kgsaf
