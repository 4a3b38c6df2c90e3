#include "kgsaf/pipeline/pipeline.hpp"

#include <json.hpp>

#include "kgsaf/ml/export.hpp"
#include "kgsaf/ml/stats.hpp"
#include "kgsaf/modularizer/modularizer.hpp"
#include "kgsaf/rdf/owl.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"
#include "kgsaf/version.hpp"

namespace kgsaf {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

Ontology::AxiomSet abox_of(const fs::path& file) { return rdf::load_ontology(file).ontology.abox(); }

}  // namespace

std::string bundle_name(const PipelineConfig& config, bool materialized) {
  return config.name + "-" + std::to_string(config.k) + (materialized ? "-MATERIALIZE" : "-BASE");
}

LoadedBundle load_bundle(const fs::path& dir) {
  LoadedBundle b;
  for (const auto* f : {"taxonomy.ttl", "tbox.ttl", "rbox.ttl"}) {
    b.schema.add_all(rdf::load_ontology(dir / f).ontology.axioms());
  }
  b.types = abox_of(dir / "abox_types.nt");
  b.relations = abox_of(dir / "abox_relations.nt");
  return b;
}

namespace {

// A phase artifact is reused when a key file next to it records the same
// digest of the phase inputs.
class Checkpoints {
 public:
  Checkpoints(fs::path dir, const Logger& log) : dir_(std::move(dir)), log_(log) { fs::create_directories(dir_); }

  fs::path path(const std::string& name) const { return dir_ / name; }

  bool fresh(const std::string& name, const std::string& key) const {
    const fs::path k = key_path(name);
    const bool ok = fs::exists(path(name)) && fs::exists(k) && io::read_file(k) == key;
    if (ok) say("reusing " + name);
    return ok;
  }
  void commit(const std::string& name, const std::string& key) const { io::write_file(key_path(name), key); }
  std::string digest(const std::string& name) const { return io::sha256_file(path(name)); }

  void say(const std::string& msg) const {
    if (log_) log_(msg);
  }

 private:
  fs::path key_path(const std::string& name) const { return dir_ / (name + ".key"); }

  fs::path dir_;
  const Logger& log_;
};

std::string key_of(std::initializer_list<std::string> parts) {
  std::string joined;
  for (const auto& p : parts) joined += p + '\x1f';
  return io::sha256_hex(joined) + "\n";
}

std::string files_digest(const std::vector<fs::path>& files) {
  std::string out;
  for (const auto& f : files) out += f.string() + "=" + io::sha256_file(f) + ";";
  return out;
}

Ontology of(const Ontology::AxiomSet& axioms) {
  Ontology o{std::string(rdf::kDefaultOntologyIri)};
  o.add_all(axioms);
  return o;
}

Ontology::AxiomSet without_tautologies(const Ontology::AxiomSet& in) {
  Ontology::AxiomSet out;
  for (const auto& a : in) {
    if (!is_tautology(a)) out.insert(a);
  }
  return out;
}

rdf::ImportResolver make_resolver(const PipelineConfig& c) {
  if (!c.catalog.empty()) return rdf::catalog_resolver(c.catalog, c.allow_http_imports);
  if (c.allow_http_imports) return rdf::http_resolver();
  return [](const std::string&) { return std::optional<rdf::ResolvedDocument>{}; };
}

std::string unsat_json(const SchemaCleaning& cleaning) {
  Json j;
  j["rounds"] = cleaning.rounds;
  j["classes"] = cleaning.removed.unsatisfiable_classes;
  j["properties"] = cleaning.removed.unsatisfiable_properties;
  Json just = Json::array();
  for (const auto& [entity, list] : cleaning.removed.justifications) {
    for (const auto& js : list) {
      Json support = Json::array();
      for (const auto& a : js.support) support.push_back(to_functional_syntax(a));
      just.push_back({{"entity", entity.iri}, {"conclusion", js.conclusion}, {"support", std::move(support)}});
    }
  }
  j["justifications"] = std::move(just);
  return j.dump(2) + "\n";
}

UnsatReport unsat_from_json(const std::string& text) {
  const auto j = Json::parse(text);
  UnsatReport r;
  r.unsatisfiable_classes = j.at("classes").get<std::set<std::string>>();
  r.unsatisfiable_properties = j.at("properties").get<std::set<std::string>>();
  return r;
}

std::string split_json(const Split& s) {
  Json j;
  j["seed"] = s.seed;
  j["ratios"] = {s.ratios.train, s.ratios.valid, s.ratios.test};
  j["train"] = s.train.size();
  j["valid"] = s.valid.size();
  j["test"] = s.test.size();
  j["moved_for_coverage"] = s.moved_for_coverage;
  j["moved_for_leakage"] = s.moved_for_leakage;
  return j.dump(2) + "\n";
}

Split load_split(const Checkpoints& cp) {
  const auto j = Json::parse(io::read_file(cp.path("split.json")));
  Split s;
  s.seed = j.at("seed").get<std::uint64_t>();
  const auto r = j.at("ratios").get<std::vector<double>>();
  s.ratios = {r.at(0), r.at(1), r.at(2)};
  s.moved_for_coverage = j.at("moved_for_coverage").get<std::size_t>();
  s.moved_for_leakage = j.at("moved_for_leakage").get<std::size_t>();
  s.train = abox_of(cp.path("train.nt"));
  s.valid = abox_of(cp.path("valid.nt"));
  s.test = abox_of(cp.path("test.nt"));
  return s;
}

Json build_bundle(const PipelineConfig& c, bool materialized, const Ontology& schema, const Ontology::AxiomSet& types,
                  const Split& split, const fs::path& dir) {
  Ontology::AxiomSet abox = types;
  for (const auto* part : {&split.train, &split.valid, &split.test}) abox.insert(part->begin(), part->end());

  const Module module = extract_module(schema, initial_signature(abox));
  std::vector<Axiom> all;
  for (const auto& a : module.axioms) {
    if (!is_tautology(a)) all.push_back(a);
  }
  for (const auto& a : abox) {
    if (!is_tautology(a)) all.push_back(a);
  }

  fs::remove_all(dir);
  fs::create_directories(dir);
  const DatasetComponents components = decompose(all);
  write_components(components, dir, "urn:kgsaf:" + bundle_name(c, materialized));

  MlDataset ml;
  ml.split = split;
  ml.types = components.abox_types;
  Ontology::AxiomSet schema_part = components.taxonomy;
  schema_part.insert(components.tbox_other.begin(), components.tbox_other.end());
  schema_part.insert(components.rbox.begin(), components.rbox.end());
  ml.schema = of(schema_part);
  export_coo(ml, build_id_maps(ml, c.one_based), dir);

  const StatsReport stats = compute_stats(ml.relations(), ml.types, ml.schema);
  io::write_file(dir / "stats.json", stats_json(stats, bundle_name(c, materialized)));
  io::write_file(dir / "stats.md", stats_markdown(stats, bundle_name(c, materialized)));

  Json files = Json::object();
  std::vector<fs::path> entries;
  for (const auto& e : fs::directory_iterator(dir)) entries.push_back(e.path());
  std::sort(entries.begin(), entries.end());
  for (const auto& p : entries) files[p.filename().string()] = io::sha256_file(p);
  Json j;
  j["module_iterations"] = module.iterations;
  j["axioms"] = components.size();
  j["files"] = std::move(files);
  return j;
}

}  // namespace

RunResult run(const PipelineConfig& config, const Logger& log) {
  validate(config);
  const fs::path out = config.output;
  const Checkpoints cp(out / "work", log);
  const DecisionFile decisions = load_decisions(config.decisions);
  const std::string renames_key = decisions_to_json({{}, decisions.renames, false});
  rdf::MappingOptions mapping;
  mapping.infer_declarations = config.infer_declarations;

  // Merge the import closure of every schema document.
  const std::string merge_key = key_of({"merge", files_digest(config.schema),
                                        config.catalog.empty() ? "" : files_digest({config.catalog}),
                                        std::to_string(config.allow_http_imports),
                                        std::to_string(config.fail_on_missing_imports),
                                        std::to_string(config.infer_declarations)});
  if (!cp.fresh("merged.ttl", merge_key)) {
    cp.say("merging schema imports");
    rdf::ImportOptions opts;
    opts.fail_on_missing = config.fail_on_missing_imports;
    opts.mapping = mapping;
    const auto resolver = make_resolver(config);
    Ontology merged{std::string(rdf::kDefaultOntologyIri)};
    for (const auto& f : config.schema) {
      const auto loaded = rdf::load_ontology(f, mapping);
      merged.add_all(rdf::merge_import_closure(loaded.ontology, resolver, opts).ontology.axioms());
    }
    rdf::write_ontology(merged, cp.path("merged.ttl"));
    cp.commit("merged.ttl", merge_key);
  }
  const Ontology merged = rdf::load_ontology(cp.path("merged.ttl")).ontology;

  // Renames, tautology stripping and unsatisfiable-entity removal.
  const std::string schema_key = key_of({"schema", cp.digest("merged.ttl"), renames_key});
  if (!cp.fresh("clean.ttl", schema_key) || !fs::exists(cp.path("unsat.json"))) {
    cp.say("checking schema satisfiability");
    Ontology::AxiomSet schema_axioms = merged.tbox();
    schema_axioms.insert(merged.rbox().begin(), merged.rbox().end());
    const SchemaCleaning cleaning = clean_schema(of(without_tautologies(apply_renames(schema_axioms, decisions.renames))));
    io::write_file(cp.path("unsat.json"), unsat_json(cleaning));
    rdf::write_ontology(cleaning.ontology, cp.path("clean.ttl"));
    cp.commit("clean.ttl", schema_key);
  }
  const Ontology clean = rdf::load_ontology(cp.path("clean.ttl")).ontology;
  const UnsatReport unsat = unsat_from_json(io::read_file(cp.path("unsat.json")));

  Ontology inferred;
  if (config.materialize) {
    const std::string key = key_of({"materialize", cp.digest("clean.ttl"), config.reasoner});
    if (!cp.fresh("inferred.ttl", key)) {
      cp.say("materializing schema");
      std::vector<Axiom> axioms;
      if (config.reasoner == "external") {
        const fs::path ext = cp.path("external");
        export_for_external_reasoner(clean, ext);
        axioms = import_external_inferences(ext);
      } else {
        axioms = materialize_schema(clean).inferred;
      }
      Ontology o{std::string(rdf::kDefaultOntologyIri)};
      for (const auto& a : axioms) {
        if (!clean.contains(a) && !is_tautology(a)) o.add(a);
      }
      rdf::write_ontology(o, cp.path("inferred.ttl"));
      cp.commit("inferred.ttl", key);
    }
    inferred = rdf::load_ontology(cp.path("inferred.ttl")).ontology;
  }

  // Degree-filtered extraction and class assertions.
  const std::string source_key =
      config.endpoint.empty() ? files_digest(config.data) : config.endpoint + "|" + config_to_json(config);
  const std::string extract_key =
      key_of({"extract", source_key, cp.digest("merged.ttl"), io::sha256_file(cp.path("unsat.json")),
              std::to_string(config.k), std::to_string(config.fixpoint), std::to_string(config.degree_includes_types),
              std::to_string(config.infer_declarations), renames_key});
  if (!cp.fresh("abox.nt", extract_key)) {
    cp.say("extracting ABox subset, k = " + std::to_string(config.k));
    ExtractOptions opts{config.k, config.fixpoint, config.degree_includes_types};
    ABoxSubset subset;
    if (config.endpoint.empty()) {
      Ontology data;
      data.add_all(merged.abox());
      for (const auto& f : config.data) data.add_all(rdf::load_ontology(f, mapping).ontology.abox());
      LocalSource source(data);
      subset = extract_abox(source, opts, unsat);
    } else {
      SparqlSource source(config.endpoint, config.sparql);
      subset = extract_abox(source, opts, unsat);
      io::write_file(cp.path("sparql-manifest.json"), source.manifest_json());
    }
    Ontology::AxiomSet abox = subset.property_assertions;
    abox.insert(subset.class_assertions.begin(), subset.class_assertions.end());
    rdf::write_ontology(of(without_tautologies(apply_renames(abox, decisions.renames))), cp.path("abox.nt"));
    cp.commit("abox.nt", extract_key);
  }
  const Ontology::AxiomSet abox = abox_of(cp.path("abox.nt"));

  // Consistency curation, against the inferred schema too when there is one,
  // since an external reasoner may know more than the built-in rules.
  const ReasonerOptions ropts{config.una, true};
  Ontology full_schema = clean;
  full_schema.add_all(inferred.axioms());
  const std::string curate_key =
      key_of({"curate", cp.digest("clean.ttl"), config.materialize ? cp.digest("inferred.ttl") : "",
              cp.digest("abox.nt"), decisions_to_json(decisions), std::to_string(config.una)});
  if (!cp.fresh("curated.nt", curate_key)) {
    cp.say("checking consistency of " + std::to_string(abox.size()) + " assertions");
    const Curation cur = curate(full_schema, abox, decisions, ropts);
    io::write_file(out / "curation-report.json", curation_report_json(cur.report));
    if (cur.report.unresolved > 0) {
      DecisionFile suggested;
      for (const auto& c : cur.report.clashes) {
        suggested.removals.insert(suggested.removals.end(), c.suggested_removals.begin(), c.suggested_removals.end());
      }
      std::sort(suggested.removals.begin(), suggested.removals.end());
      suggested.removals.erase(std::unique(suggested.removals.begin(), suggested.removals.end()),
                               suggested.removals.end());
      io::write_file(out / "decisions-suggested.json", decisions_to_json(suggested));
      cp.say(std::to_string(cur.report.unresolved) + " clashes need curation; see " +
             (out / "curation-report.json").string());
      RunResult r;
      r.status = RunStatus::CurationNeeded;
      r.curation_report = out / "curation-report.json";
      r.unresolved = cur.report.unresolved;
      return r;
    }
    fs::remove(out / "decisions-suggested.json");
    rdf::write_ontology(of(cur.abox), cp.path("curated.nt"));
    cp.commit("curated.nt", curate_key);
  }
  const Ontology::AxiomSet curated = abox_of(cp.path("curated.nt"));

  // One split shared by both variants.
  const std::string split_key =
      key_of({"split", cp.digest("curated.nt"), cp.digest("clean.ttl"), std::to_string(config.ratios.train),
              std::to_string(config.ratios.valid), std::to_string(config.ratios.test), std::to_string(config.seed)});
  if (!cp.fresh("split.json", split_key)) {
    cp.say("splitting");
    const auto inverses = materialize_schema(clean).closure.inverse_pairs;
    const Split s = filter_inversion_leakage(
        split_assertions(std::vector<Axiom>(curated.begin(), curated.end()), config.ratios, config.seed), inverses);
    rdf::write_ontology(of(s.train), cp.path("train.nt"));
    rdf::write_ontology(of(s.valid), cp.path("valid.nt"));
    rdf::write_ontology(of(s.test), cp.path("test.nt"));
    io::write_file(cp.path("split.json"), split_json(s));
    cp.commit("split.json", split_key);
  }
  const Split split = load_split(cp);

  Ontology::AxiomSet types;
  for (const auto& a : curated) {
    if (a.kind() == AxiomKind::ClassAssertion) types.insert(a);
  }

  RunResult result;
  Json bundles = Json::object();
  if (config.base) {
    cp.say("building " + bundle_name(config, false));
    const fs::path dir = out / bundle_name(config, false);
    bundles[bundle_name(config, false)] = build_bundle(config, false, clean, types, split, dir);
    result.bundles.push_back(dir);
  }
  if (config.materialize) {
    const Ontology& schema = full_schema;
    const std::string key = key_of({"realize", cp.digest("clean.ttl"), cp.digest("inferred.ttl"),
                                    cp.digest("curated.nt"), std::to_string(config.una)});
    if (!cp.fresh("realized.nt", key)) {
      cp.say("realizing");
      Ontology::AxiomSet realized;
      for (const auto& a : realize(schema, curated, ropts)) realized.insert(a);
      rdf::write_ontology(of(without_tautologies(realized)), cp.path("realized.nt"));
      cp.commit("realized.nt", key);
    }
    Ontology::AxiomSet mtypes = types;
    for (const auto& a : abox_of(cp.path("realized.nt"))) mtypes.insert(a);
    cp.say("building " + bundle_name(config, true));
    const fs::path dir = out / bundle_name(config, true);
    bundles[bundle_name(config, true)] = build_bundle(config, true, schema, mtypes, split, dir);
    result.bundles.push_back(dir);
  }

  Json manifest;
  manifest["tool"] = "kgsaf";
  manifest["version"] = kVersion;
  manifest["config"] = Json::parse(config_to_json(config));
  Json checkpoints = Json::object();
  for (const auto* name : {"merged.ttl", "clean.ttl", "unsat.json", "inferred.ttl", "abox.nt", "curated.nt",
                           "train.nt", "valid.nt", "test.nt", "split.json", "realized.nt"}) {
    if (fs::exists(cp.path(name))) checkpoints[name] = cp.digest(name);
  }
  manifest["checkpoints"] = std::move(checkpoints);
  manifest["bundles"] = std::move(bundles);
  io::write_file(out / "run-manifest.json", manifest.dump(2) + "\n");
  return result;
}

}  // namespace kgsaf
