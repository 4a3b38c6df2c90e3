// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "kgsaf/extractor/extractor.hpp"
#include "kgsaf/ml/split.hpp"
#include "kgsaf/ml/stats.hpp"
#include "kgsaf/modularizer/modularizer.hpp"
#include "kgsaf/pipeline/pipeline.hpp"
#include "kgsaf/rdf/owl.hpp"
#include "kgsaf/reasoner/reasoner.hpp"
#include "kgsaf/util/io.hpp"
#include "support/generators.hpp"
#include "support/roundtrip.hpp"
#include "support/synthetic.hpp"

namespace fs = std::filesystem;
using namespace kgsaf;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS " : "FAIL ") << name << " [" << secs << " s] " << o.detail;
  std::cout << line.str() << std::endl;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("kgsaf-acceptance-" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::map<std::string, std::string> dir_contents(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.is_regular_file()) out[fs::relative(e.path(), dir).string()] = io::read_file(e.path());
  }
  return out;
}

std::string fmt(double x) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << x;
  return s.str();
}

// ---------------------------------------------------------------------------

std::vector<Axiom> relations_over(std::size_t triples, std::size_t properties) {
  std::vector<Axiom> out;
  out.reserve(triples);
  for (std::size_t i = 0; i < triples; ++i) {
    out.push_back(Axiom::object_property_assertion(gen::ind(i), gen::prop(i % properties), gen::ind(i + 1)));
  }
  return out;
}

Outcome stats_fidelity() {
  struct Row {
    std::size_t triples, properties;
    double expected;
  };
  const Row rows[] = {{28525, 275, 103.73}, {1080398, 34, 31776.41}};
  std::string detail;
  bool ok = true;
  double compute_time = 0;
  for (const auto& r : rows) {
    const auto rel = relations_over(r.triples, r.properties);
    const auto t0 = Clock::now();
    const auto st = compute_stats(rel, {}, Ontology{});
    compute_time += seconds_since(t0);
    const double got = st.abox.avg_triples_per_property;
    const bool row_ok = st.abox.triples == r.triples && st.abox.properties == r.properties &&
                        std::abs(got - r.expected) <= 0.005;
    ok = ok && row_ok;
    detail += "(" + std::to_string(r.triples) + ";" + std::to_string(r.properties) + ")->" + fmt(got) + " ";
  }
  ok = ok && compute_time < 1.0;
  return {ok, detail + "compute " + fmt(compute_time) + " s, limit 1 s, tol 0.005"};
}

Outcome closure_oracle() {
  gen::Rng rng(20240601);
  const auto t0 = Clock::now();
  for (int round = 0; round < 200; ++round) {
    const auto dag = gen::random_dag(rng, 200, 600);
    const std::size_t n = dag.nodes;
    std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : dag.edges) r[a][b] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (r[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (r[k][j]) r[i][j] = 1;
    std::set<NamePair> expected;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j && r[i][j]) expected.emplace(gen::cls(i).iri(), gen::cls(j).iri());

    const Ontology o = gen::dag_ontology(dag);
    const auto m = materialize_schema(o);
    std::set<NamePair> got;
    for (const auto& a : o.tbox()) {
      if (!is_tautology(a)) got.emplace(a.sub_class().iri(), a.super_class().iri());
    }
    for (const auto& a : m.inferred) {
      if (a.kind() != AxiomKind::SubClassOf || is_tautology(a)) return {false, "unexpected inferred axiom"};
      got.emplace(a.sub_class().iri(), a.super_class().iri());
    }
    if (got != expected || m.closure.subsumptions != expected)
      return {false, "mismatch in DAG " + std::to_string(round)};
  }
  const double t = seconds_since(t0);
  return {t < 10.0, "200 DAGs equal Warshall closure, limit 10 s"};
}

Module naive_module(const Ontology& o, const Signature& seed) {
  Module m;
  m.final_signature = seed;
  const auto schema = o.schema().axioms();
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& a : schema) {
      if (m.axioms.contains(a)) continue;
      const Signature s = signature_of(a);
      if (std::none_of(s.begin(), s.end(), [&](const EntityRef& e) { return m.final_signature.contains(e); }))
        continue;
      m.axioms.insert(a);
      m.final_signature.merge(s);
      changed = true;
    }
  }
  return m;
}

Outcome module_oracle() {
  gen::Rng rng(77);
  const auto t0 = Clock::now();
  for (int round = 0; round < 100; ++round) {
    const Ontology o = gen::random_schema(rng, 500, 150);
    Signature seed;
    std::bernoulli_distribution pick(0.04);
    for (const auto& e : o.vocabulary())
      if (pick(rng)) seed.insert(e);
    const Module m = extract_module(o, seed);
    const Module n = naive_module(o, seed);
    if (m.axioms != n.axioms || m.final_signature != n.final_signature)
      return {false, "mismatch in ontology " + std::to_string(round)};
  }
  const double t = seconds_since(t0);
  return {t < 5.0, "100 ontologies equal naive fixpoint, limit 5 s"};
}

Outcome degree_oracle() {
  gen::Rng rng(5150);
  const auto t0 = Clock::now();
  std::size_t total = 0;
  for (int round = 0; round < 50; ++round) {
    const std::size_t edges = std::uniform_int_distribution<std::size_t>(10, 10000)(rng);
    const auto rel = gen::random_assertions(rng, edges, 40 + edges / 6, 15);
    total += rel.size();
    std::map<std::string, std::size_t> deg;
    for (const auto& a : rel) {
      ++deg[a.subject()];
      ++deg[a.object()];
    }
    Ontology o;
    o.add_all(rel);
    LocalSource src(o);
    Ontology::AxiomSet previous;
    for (std::size_t k : {1, 2, 5, 20}) {
      Ontology::AxiomSet expected;
      for (const auto& a : rel)
        if (deg[a.subject()] >= k && deg[a.object()] >= k) expected.insert(a);
      const auto got = extract_subset(src, {.k = k}).property_assertions;
      if (got != expected) return {false, "mismatch graph " + std::to_string(round) + " k=" + std::to_string(k)};
      if (k > 1 && !std::includes(previous.begin(), previous.end(), got.begin(), got.end()))
        return {false, "not monotone in k, graph " + std::to_string(round)};
      previous = got;
    }
  }
  const double t = seconds_since(t0);
  return {t < 10.0, "50 graphs (" + std::to_string(total) + " edges), k in {1,2,5,20}, limit 10 s"};
}

// One seeded clash per kind, embedded in a consistent synthetic background.
struct Seed {
  ClashKind kind;
  std::vector<Axiom> schema;
  std::vector<Axiom> abox;
};

std::string X(const std::string& n) { return "http://clash.example/" + n; }
ClassExpression XC(const std::string& n) { return ClassExpression::named(X(n)); }
Axiom xrel(const std::string& s, const std::string& p, const std::string& o) {
  return Axiom::object_property_assertion(X(s), X(p), X(o));
}
Axiom xtype(const std::string& s, const ClassExpression& c) { return Axiom::class_assertion(X(s), c); }

std::vector<Seed> clash_seeds() {
  using CE = ClassExpression;
  return {
      {ClashKind::DisjointInstance, {Axiom::disjoint_classes({XC("A"), XC("B")})}, {xtype("a", XC("A")), xtype("a", XC("B"))}},
      {ClashKind::ComplementInstance,
       {Axiom::sub_class_of(XC("C"), CE::complement_of(XC("D")))},
       {xtype("b", XC("C")), xtype("b", XC("D"))}},
      {ClashKind::IrreflexiveSelfLoop, {Axiom::characteristic(X("irr"), Characteristic::Irreflexive)}, {xrel("c", "irr", "c")}},
      {ClashKind::AsymmetricPair,
       {Axiom::characteristic(X("asym"), Characteristic::Asymmetric)},
       {xrel("d", "asym", "e"), xrel("e", "asym", "d")}},
      {ClashKind::FunctionalFanOut,
       {Axiom::characteristic(X("fun"), Characteristic::Functional)},
       {xrel("f", "fun", "g"), xrel("f", "fun", "h")}},
      {ClashKind::InverseFunctionalFanIn,
       {Axiom::characteristic(X("ifun"), Characteristic::InverseFunctional)},
       {xrel("i", "ifun", "j"), xrel("k", "ifun", "j")}},
      {ClashKind::MaxCardinalityViolation,
       {Axiom::sub_class_of(XC("E"), CE::max_cardinality(1, X("card"), CE::top()))},
       {xtype("l", XC("E")), xrel("l", "card", "m"), xrel("l", "card", "n")}},
      {ClashKind::BottomInstance,
       {Axiom::sub_class_of(XC("F"), CE::all_values_from(X("none"), CE::bottom()))},
       {xtype("o", XC("F")), xrel("o", "none", "q")}},
  };
}

Outcome consistency_detection() {
  gen::Rng rng(8);
  const auto bg = gen::synthetic_kg(rng, {3000, 200, 0, false});
  if (!check_consistency(bg.schema.schema(), bg.data.abox()).empty()) return {false, "background not consistent"};
  std::size_t n = 0;
  for (const auto& seed : clash_seeds()) {
    Ontology schema = bg.schema.schema();
    schema.add_all(seed.schema);
    Ontology::AxiomSet abox = bg.data.abox();
    abox.insert(seed.abox.begin(), seed.abox.end());
    const auto clashes = check_consistency(schema, abox);
    const std::string kind(to_string(seed.kind));
    if (clashes.size() != 1 || clashes[0].kind != seed.kind) {
      return {false, kind + ": expected exactly the seeded clash, got " + std::to_string(clashes.size())};
    }
    const auto support = clashes[0].abox_support();
    const Ontology::AxiomSet seeded(seed.abox.begin(), seed.abox.end());
    for (const auto& a : support)
      if (!seeded.contains(a)) return {false, kind + ": justification reaches outside the seed"};
    Ontology::AxiomSet repaired = abox;
    for (const auto& a : support) repaired.erase(a);
    if (!check_consistency(schema, repaired).empty()) return {false, kind + ": removal leaves a clash"};
    ++n;
  }
  return {n >= 8, std::to_string(n) + " fixtures, one per clash kind, each repaired by its justification"};
}

std::string nt_of(const Ontology::AxiomSet& s) {
  Ontology o;
  o.add_all(s);
  return rdf::serialize(o, rdf::Format::NTriples);
}

Outcome split_properties() {
  gen::Rng rng(99);
  const auto t0 = Clock::now();
  std::size_t eval_checked = 0;
  for (int round = 0; round < 100; ++round) {
    const std::size_t edges = std::uniform_int_distribution<std::size_t>(20, 5000)(rng);
    const std::size_t props = 4 + round % 10;
    const auto rel = gen::random_assertions(rng, edges, 30 + edges / 4, props);
    std::set<NamePair> inverses;
    for (std::size_t p = 0; p + 1 < props; p += 3) {
      inverses.emplace(gen::prop(p), gen::prop(p + 1));
      inverses.emplace(gen::prop(p + 1), gen::prop(p));
    }
    const std::uint64_t seed = 1000 + round;
    const Split s = filter_inversion_leakage(split_assertions(rel, {}, seed), inverses);

    std::unordered_set<std::string> train_names;
    std::map<std::pair<std::string, std::string>, std::set<std::string>> train_edges;
    for (const auto& a : s.train) {
      train_names.insert(a.subject());
      train_names.insert(a.object());
      train_names.insert("#" + a.property());
      train_edges[{a.subject(), a.object()}].insert(a.property());
    }
    for (const auto* eval : {&s.valid, &s.test}) {
      for (const auto& a : *eval) {
        ++eval_checked;
        if (!train_names.contains(a.subject()) || !train_names.contains(a.object()) ||
            !train_names.contains("#" + a.property()))
          return {false, "coverage violated in set " + std::to_string(round)};
        auto it = train_edges.find({a.object(), a.subject()});
        if (it == train_edges.end()) continue;
        for (const auto& q : it->second) {
          if (q == a.property() || inverses.contains({a.property(), q}))
            return {false, "reverse pair left in set " + std::to_string(round)};
        }
      }
    }
    if (s.size() != std::set<Axiom>(rel.begin(), rel.end()).size()) return {false, "triples lost"};

    // Same seed from a shuffled input gives the same bytes.
    auto shuffled = rel;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Split again = filter_inversion_leakage(split_assertions(shuffled, {}, seed), inverses);
    if (nt_of(s.train) != nt_of(again.train) || nt_of(s.valid) != nt_of(again.valid) ||
        nt_of(s.test) != nt_of(again.test))
      return {false, "split files differ for seed " + std::to_string(seed)};
  }
  const double t = seconds_since(t0);
  return {t < 10.0, "100 sets, " + std::to_string(eval_checked) + " eval triples covered, 0 reverse pairs, limit 10 s"};
}

Outcome round_trip() {
  const auto docs = gen::corpus_documents(fs::path(KGSAF_FIXTURES) / "corpus");
  std::set<AxiomKind> kinds;
  for (const auto& d : docs) {
    const auto r = gen::round_trip(d);
    if (!r.ok()) return {false, d.filename().string() + (r.error.empty() ? "" : ": " + r.error)};
    for (const auto& a : rdf::load_ontology(d).ontology.axioms()) kinds.insert(a.kind());
  }
  const bool all_kinds = kinds.size() == static_cast<std::size_t>(AxiomKind::Characteristic) + 1;
  return {docs.size() >= 30 && all_kinds,
          std::to_string(docs.size()) + " documents, " + std::to_string(kinds.size()) + " axiom kinds"};
}

bool has_tautology(const LoadedBundle& b) {
  for (const auto& a : b.schema.axioms())
    if (is_tautology(a)) return true;
  for (const auto& a : b.types)
    if (is_tautology(a)) return true;
  return false;
}

Outcome variant_contract() {
  gen::Rng rng(4242);
  const auto kg = gen::synthetic_kg(rng, {8000, 300, 0, false});
  const fs::path dir = scratch("variants");
  gen::write_kg(kg, dir);
  PipelineConfig c;
  c.name = "syn";
  c.schema = {dir / "schema.ttl"};
  c.data = {dir / "data.nt"};
  c.output = dir / "out";
  if (run(c).status != RunStatus::Completed) return {false, "run did not complete"};
  const fs::path base = c.output / bundle_name(c, false), mat = c.output / bundle_name(c, true);
  const auto b = load_bundle(base), m = load_bundle(mat);
  auto all = [](const LoadedBundle& x) {
    std::set<Axiom> s;
    for (const auto& a : x.schema.axioms()) s.insert(a);
    s.insert(x.types.begin(), x.types.end());
    s.insert(x.relations.begin(), x.relations.end());
    return s;
  };
  const auto sb = all(b), sm = all(m);
  if (!std::includes(sm.begin(), sm.end(), sb.begin(), sb.end())) return {false, "BASE not a subset of MATERIALIZE"};
  for (const auto* f : {"train.txt", "valid.txt", "test.txt", "train.tsv", "valid.tsv", "test.tsv"}) {
    if (!fs::exists(base / f) || !fs::exists(mat / f)) return {false, std::string(f) + " missing"};
    if (io::read_file(base / f) != io::read_file(mat / f)) return {false, std::string(f) + " differs"};
  }
  if (has_tautology(b) || has_tautology(m)) return {false, "tautology in output"};
  const std::size_t extra = sm.size() - sb.size();
  fs::remove_all(dir);
  return {true, "BASE " + std::to_string(sb.size()) + " axioms, MATERIALIZE +" + std::to_string(extra)};
}

Outcome end_to_end() {
  gen::Rng rng(100000);
  const auto kg = gen::synthetic_kg(rng, {100000, 1000, 0, false});
  const fs::path dir = scratch("e2e");
  gen::write_kg(kg, dir);
  PipelineConfig c;
  c.name = "syn";
  c.schema = {dir / "schema.ttl"};
  c.data = {dir / "data.nt"};
  c.output = dir / "a";
  const auto t0 = Clock::now();
  if (run(c).status != RunStatus::Completed) return {false, "run did not complete"};
  const double t = seconds_since(t0);
  c.output = dir / "b";
  if (run(c).status != RunStatus::Completed) return {false, "second run did not complete"};
  for (bool mat : {false, true}) {
    const auto name = bundle_name(c, mat);
    if (dir_contents(dir / "a" / name) != dir_contents(dir / "b" / name)) return {false, name + " differs across runs"};
  }
  std::size_t triples = kg.data.abox().size(), axioms = kg.schema.schema().size();
  fs::remove_all(dir);
  return {t < 60.0, std::to_string(triples) + " assertions, " + std::to_string(axioms) +
                        " schema axioms, run " + fmt(t) + " s, limit 60 s, two runs identical"};
}

// Optional check against the published DB-50K-C files, laid out as a bundle.
void published_db50k() {
  const char* dir = std::getenv("KGSAF_DB50K_DIR");
  if (dir == nullptr || *dir == '\0') {
    std::cout << "SKIP published DB-50K-C counts (KGSAF_DB50K_DIR not set)" << std::endl;
    return;
  }
  report("published DB-50K-C counts", [&]() -> Outcome {
    const auto b = load_bundle(dir);
    const std::vector<Axiom> rel(b.relations.begin(), b.relations.end());
    const auto st = compute_stats(rel, b.types, b.schema).abox;
    const bool ok = st.triples == 28525 && st.individuals == 22268 && st.properties == 275 && st.classes == 169 &&
                    st.class_assertions == 12419;
    return {ok, std::to_string(st.triples) + " triples, " + std::to_string(st.individuals) + " individuals, " +
                    std::to_string(st.properties) + " properties, " + std::to_string(st.classes) + " classes, " +
                    std::to_string(st.class_assertions) + " class assertions"};
  });
}

}  // namespace

int main() {
  report("stats fidelity", stats_fidelity);
  report("closure oracle", closure_oracle);
  report("modularization oracle", module_oracle);
  report("degree-filter oracle", degree_oracle);
  report("consistency detection", consistency_detection);
  report("split properties", split_properties);
  report("round-trip", round_trip);
  report("variant contract", variant_contract);
  report("end-to-end runtime", end_to_end);
  published_db50k();
  return failures == 0 ? 0 : 1;
}
