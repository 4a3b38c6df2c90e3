// kgsaf: command-line front end for the dataset pipeline and its phases.

#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include <json.hpp>

#include "kgsaf/extractor/extractor.hpp"
#include "kgsaf/ml/export.hpp"
#include "kgsaf/ml/stats.hpp"
#include "kgsaf/modularizer/modularizer.hpp"
#include "kgsaf/pipeline/pipeline.hpp"
#include "kgsaf/rdf/owl.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"
#include "kgsaf/version.hpp"

using namespace kgsaf;
namespace fs = std::filesystem;

namespace {

constexpr int kCurationNeeded = 2;

void info(const std::string& msg) { std::cerr << "kgsaf: " << msg << "\n"; }

Ontology load_all(const std::vector<fs::path>& files, bool infer = false) {
  rdf::MappingOptions opts;
  opts.infer_declarations = infer;
  Ontology out{std::string(rdf::kDefaultOntologyIri)};
  for (const auto& f : files) out.add_all(rdf::load_ontology(f, opts).ontology.axioms());
  return out;
}

Ontology::AxiomSet abox_of(const Ontology& o) { return o.abox(); }

Ontology schema_of(const Ontology& o) {
  Ontology s = o.schema();
  s.set_iri(std::string(rdf::kDefaultOntologyIri));
  return s;
}

Ontology of(const Ontology::AxiomSet& axioms) {
  Ontology o{std::string(rdf::kDefaultOntologyIri)};
  o.add_all(axioms);
  return o;
}

template <typename T>
void apply(const std::optional<T>& v, T& target) {
  if (v) target = *v;
}

// Every PipelineConfig key as an optional flag.
struct Overrides {
  std::optional<std::string> name, endpoint, catalog, output, reasoner, graph;
  std::vector<fs::path> schema, data, decisions;
  std::optional<bool> allow_http_imports, fail_on_missing_imports, infer_declarations, fixpoint,
      degree_includes_types, base, materialize, one_based, una, require_declarations;
  std::optional<std::size_t> k, page_size, values_batch;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_retries;
  std::optional<long> backoff_ms, timeout_s;
  std::vector<double> ratios;

  void add_to(CLI::App* app) {
    app->add_option("--name", name, "Dataset name");
    app->add_option("--schema", schema, "Ontology documents");
    app->add_option("--data", data, "Assertion dumps");
    app->add_option("--endpoint", endpoint, "SPARQL endpoint URL");
    app->add_option("--catalog", catalog, "Import catalog (TSV: IRI, path)");
    app->add_option("--allow-http-imports", allow_http_imports);
    app->add_option("--fail-on-missing-imports", fail_on_missing_imports);
    app->add_option("--infer-declarations", infer_declarations);
    app->add_option("--k", k, "Extraction degree threshold");
    app->add_option("--fixpoint", fixpoint);
    app->add_option("--degree-includes-types", degree_includes_types);
    app->add_option("--base", base, "Build the BASE variant");
    app->add_option("--materialize", materialize, "Build the MATERIALIZE variant");
    app->add_option("--ratios", ratios, "train valid test")->expected(3);
    app->add_option("--seed", seed);
    app->add_option("--one-based", one_based);
    app->add_option("--decisions", decisions, "Decision files");
    app->add_option("--output", output, "Output directory");
    app->add_option("--reasoner", reasoner, "builtin or external")->check(CLI::IsMember({"builtin", "external"}));
    app->add_option("--una", una, "Unique name assumption");
    app->add_option("--page-size", page_size);
    app->add_option("--values-batch", values_batch);
    app->add_option("--max-retries", max_retries);
    app->add_option("--backoff-ms", backoff_ms);
    app->add_option("--timeout-s", timeout_s);
    app->add_option("--require-declarations", require_declarations);
    app->add_option("--graph", graph);
  }

  void apply_to(PipelineConfig& c) const {
    apply(name, c.name);
    apply(endpoint, c.endpoint);
    if (catalog) c.catalog = *catalog;
    if (output) c.output = *output;
    apply(reasoner, c.reasoner);
    if (!schema.empty()) c.schema = schema;
    if (!data.empty()) c.data = data;
    if (!decisions.empty()) c.decisions = decisions;
    apply(allow_http_imports, c.allow_http_imports);
    apply(fail_on_missing_imports, c.fail_on_missing_imports);
    apply(infer_declarations, c.infer_declarations);
    apply(fixpoint, c.fixpoint);
    apply(degree_includes_types, c.degree_includes_types);
    apply(base, c.base);
    apply(materialize, c.materialize);
    apply(one_based, c.one_based);
    apply(una, c.una);
    apply(k, c.k);
    apply(seed, c.seed);
    if (ratios.size() == 3) c.ratios = {ratios[0], ratios[1], ratios[2]};
    apply(page_size, c.sparql.page_size);
    apply(values_batch, c.sparql.values_batch);
    apply(max_retries, c.sparql.max_retries);
    if (backoff_ms) c.sparql.initial_backoff = std::chrono::milliseconds(*backoff_ms);
    if (timeout_s) c.sparql.timeout = std::chrono::seconds(*timeout_s);
    apply(require_declarations, c.sparql.require_declarations);
    apply(graph, c.sparql.graph);
  }
};

// Paths in a config file are relative to the file.
void anchor(PipelineConfig& c, const fs::path& base) {
  auto fix = [&](fs::path& p) {
    if (!p.empty() && p.is_relative()) p = base / p;
  };
  for (auto* list : {&c.schema, &c.data, &c.decisions}) {
    for (auto& p : *list) fix(p);
  }
  fix(c.catalog);
  fix(c.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distill RDF/OWL knowledge graphs into consistent, schema-complete ML datasets"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // merge
  std::vector<fs::path> m_schema;
  fs::path m_catalog, m_out;
  bool m_http = false, m_lenient = false;
  auto* merge = app.add_subcommand("merge", "Merge the import closure of ontology documents");
  merge->add_option("--schema", m_schema, "Ontology documents")->required();
  merge->add_option("--catalog", m_catalog, "Import catalog (TSV: IRI, path)");
  merge->add_flag("--allow-http", m_http, "Fetch imports missing from the catalog");
  merge->add_flag("--skip-missing", m_lenient, "Ignore unresolvable imports");
  merge->add_option("-o,--output", m_out)->required();

  // check-schema
  fs::path cs_in, cs_out, cs_report;
  auto* check_schema = app.add_subcommand("check-schema", "Remove unsatisfiable classes and properties");
  check_schema->add_option("-i,--input", cs_in)->required();
  check_schema->add_option("-o,--output", cs_out)->required();
  check_schema->add_option("--report", cs_report, "Write unsatisfiable entities and justifications as JSON");

  // materialize
  fs::path mat_in, mat_out;
  bool mat_with_asserted = false;
  auto* materialize = app.add_subcommand("materialize", "Write entailed schema axioms");
  materialize->add_option("-i,--input", mat_in)->required();
  materialize->add_option("-o,--output", mat_out)->required();
  materialize->add_flag("--with-asserted", mat_with_asserted, "Include the asserted schema in the output");

  // extract
  std::vector<fs::path> ex_data;
  std::string ex_endpoint;
  std::vector<std::string> ex_sources;
  fs::path ex_schema, ex_out, ex_manifest;
  std::size_t ex_k = 1;
  bool ex_fixpoint = false, ex_types = false, ex_infer = false;
  SparqlOptions ex_sparql;
  auto* extract = app.add_subcommand("extract", "Degree-filtered ABox extraction");
  extract->add_option("--data", ex_data, "Assertion dumps");
  extract->add_option("--endpoint", ex_endpoint, "SPARQL endpoint URL");
  extract->add_option("--source", ex_sources, "Endpoint URL (http/https) or dump file");
  extract->add_option("--schema", ex_schema, "Cleaned schema; unsatisfiable properties are skipped");
  extract->add_option("--k,--min-degree", ex_k)->check(CLI::PositiveNumber);
  extract->add_flag("--fixpoint", ex_fixpoint);
  extract->add_flag("--degree-includes-types", ex_types);
  extract->add_flag("--infer-declarations", ex_infer);
  extract->add_option("--page-size", ex_sparql.page_size);
  extract->add_option("--graph", ex_sparql.graph);
  extract->add_option("--manifest", ex_manifest, "SPARQL page manifest output");
  extract->add_option("-o,--output", ex_out)->required();

  // check-consistency
  fs::path cc_schema, cc_abox, cc_report;
  bool cc_no_una = false;
  auto* check_consistency_cmd = app.add_subcommand("check-consistency", "Find ABox clashes with justifications");
  check_consistency_cmd->add_option("--schema", cc_schema)->required();
  check_consistency_cmd->add_option("--abox", cc_abox)->required();
  check_consistency_cmd->add_option("--report", cc_report, "Curation report output (JSON)");
  check_consistency_cmd->add_flag("--no-una", cc_no_una, "Drop the unique name assumption");

  // realize
  fs::path re_schema, re_abox, re_out;
  auto* realize_cmd = app.add_subcommand("realize", "Write implicit class assertions");
  realize_cmd->add_option("--schema", re_schema)->required();
  realize_cmd->add_option("--abox", re_abox)->required();
  realize_cmd->add_option("-o,--output", re_out)->required();

  // modularize
  fs::path mo_schema, mo_abox, mo_out;
  auto* modularize = app.add_subcommand("modularize", "Extract the schema module of an ABox and split components");
  modularize->add_option("--schema", mo_schema)->required();
  modularize->add_option("--abox", mo_abox)->required();
  modularize->add_option("-o,--output", mo_out, "Component directory")->required();

  // postprocess
  fs::path pp_bundle, pp_out;
  std::vector<double> pp_ratios{0.8, 0.1, 0.1};
  std::uint64_t pp_seed = 42;
  bool pp_one_based = false;
  auto* postprocess = app.add_subcommand("postprocess", "Split, filter leakage and export index tables");
  postprocess->add_option("--bundle", pp_bundle, "Directory written by modularize")->required();
  postprocess->add_option("--ratios", pp_ratios)->expected(3);
  postprocess->add_option("--seed", pp_seed);
  postprocess->add_flag("--one-based", pp_one_based);
  postprocess->add_option("-o,--output", pp_out, "Defaults to the bundle directory");

  // run
  fs::path run_config;
  Overrides overrides;
  auto* run_cmd = app.add_subcommand("run", "Full pipeline; exit code 2 when curation is needed");
  run_cmd->add_option("--config", run_config, "JSON config; flags override its keys");
  overrides.add_to(run_cmd);

  // stats
  fs::path st_bundle, st_out;
  std::string st_name;
  auto* stats_cmd = app.add_subcommand("stats", "Dataset statistics for a bundle");
  stats_cmd->add_option("--bundle", st_bundle)->required();
  stats_cmd->add_option("--name", st_name);
  stats_cmd->add_option("-o,--output", st_out, "Defaults to the bundle directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*merge) {
      rdf::ImportOptions opts;
      opts.fail_on_missing = !m_lenient;
      rdf::ImportResolver resolver = [](const std::string&) { return std::optional<rdf::ResolvedDocument>{}; };
      if (!m_catalog.empty()) {
        resolver = rdf::catalog_resolver(m_catalog, m_http);
      } else if (m_http) {
        resolver = rdf::http_resolver();
      }
      Ontology merged{std::string(rdf::kDefaultOntologyIri)};
      for (const auto& f : m_schema) {
        const auto r = rdf::merge_import_closure(rdf::load_ontology(f).ontology, resolver, opts);
        merged.add_all(r.ontology.axioms());
        for (const auto& miss : r.missing) info("unresolved import " + miss);
      }
      rdf::write_ontology(merged, m_out);
      info("merged " + std::to_string(merged.size()) + " axioms");
    } else if (*check_schema) {
      const Ontology in = load_all({cs_in});
      Ontology schema{std::string(rdf::kDefaultOntologyIri)};
      for (const auto& a : schema_of(in).axioms()) {
        if (!is_tautology(a)) schema.add(a);
      }
      const SchemaCleaning c = clean_schema(schema);
      rdf::write_ontology(c.ontology, cs_out);
      if (!cs_report.empty()) {
        nlohmann::ordered_json j;
        j["classes"] = c.removed.unsatisfiable_classes;
        j["properties"] = c.removed.unsatisfiable_properties;
        auto just = nlohmann::ordered_json::array();
        for (const auto& [entity, list] : c.removed.justifications) {
          for (const auto& js : list) {
            auto support = nlohmann::ordered_json::array();
            for (const auto& a : js.support) support.push_back(to_functional_syntax(a));
            just.push_back({{"entity", entity.iri}, {"conclusion", js.conclusion}, {"support", support}});
          }
        }
        j["justifications"] = just;
        io::write_file(cs_report, j.dump(2) + "\n");
      }
      info(std::to_string(c.removed.unsatisfiable_classes.size()) + " unsatisfiable classes, " +
           std::to_string(c.removed.unsatisfiable_properties.size()) + " unsatisfiable properties, " +
           std::to_string(c.rounds) + " rounds");
    } else if (*materialize) {
      const Ontology schema = schema_of(load_all({mat_in}));
      Ontology out = mat_with_asserted ? schema : Ontology{std::string(rdf::kDefaultOntologyIri)};
      out.add_all(materialize_schema(schema).inferred);
      rdf::write_ontology(out, mat_out);
      info("wrote " + std::to_string(out.size()) + " axioms");
    } else if (*extract) {
      for (const auto& src : ex_sources) {
        if (src.starts_with("http://") || src.starts_with("https://")) {
          if (!ex_endpoint.empty()) throw Error("only one endpoint can be given");
          ex_endpoint = src;
        } else {
          ex_data.emplace_back(src);
        }
      }
      if (ex_data.empty() == ex_endpoint.empty()) throw Error("give either dump files or one endpoint");
      UnsatReport unsat;
      if (!ex_schema.empty()) unsat = detect_unsatisfiable(schema_of(load_all({ex_schema})));
      const ExtractOptions opts{ex_k, ex_fixpoint, ex_types};
      ABoxSubset subset;
      if (ex_endpoint.empty()) {
        const Ontology data = load_all(ex_data, ex_infer);
        LocalSource source(data);
        subset = extract_abox(source, opts, unsat);
      } else {
        SparqlSource source(ex_endpoint, ex_sparql);
        subset = extract_abox(source, opts, unsat);
        if (!ex_manifest.empty()) io::write_file(ex_manifest, source.manifest_json());
      }
      Ontology::AxiomSet abox = subset.property_assertions;
      abox.insert(subset.class_assertions.begin(), subset.class_assertions.end());
      rdf::write_ontology(of(abox), ex_out);
      info("kept " + std::to_string(subset.property_assertions.size()) + " property and " +
           std::to_string(subset.class_assertions.size()) + " class assertions over " +
           std::to_string(subset.individuals.size()) + " individuals");
    } else if (*check_consistency_cmd) {
      const Ontology schema = schema_of(load_all({cc_schema}));
      const Curation cur = curate(schema, abox_of(load_all({cc_abox})), {}, {!cc_no_una, true});
      if (!cc_report.empty()) io::write_file(cc_report, curation_report_json(cur.report));
      for (const auto& c : cur.report.clashes) std::cout << c.clash.describe() << "\n";
      info(std::to_string(cur.report.unresolved) + " clashes");
      return cur.report.unresolved ? kCurationNeeded : 0;
    } else if (*realize_cmd) {
      const auto realized = realize(schema_of(load_all({re_schema})), abox_of(load_all({re_abox})));
      rdf::write_ontology(of(Ontology::AxiomSet(realized.begin(), realized.end())), re_out);
      info("realized " + std::to_string(realized.size()) + " class assertions");
    } else if (*modularize) {
      const Ontology schema = schema_of(load_all({mo_schema}));
      const Ontology::AxiomSet abox = abox_of(load_all({mo_abox}));
      const Module m = extract_module(schema, initial_signature(abox));
      std::vector<Axiom> all(m.axioms.begin(), m.axioms.end());
      all.insert(all.end(), abox.begin(), abox.end());
      write_components(decompose(all), mo_out, std::string(rdf::kDefaultOntologyIri));
      info("module of " + std::to_string(m.axioms.size()) + " axioms after " + std::to_string(m.iterations) +
           " iterations");
    } else if (*postprocess) {
      const LoadedBundle b = load_bundle(pp_bundle);
      MlDataset ml;
      ml.split = filter_inversion_leakage(
          split_assertions(std::vector<Axiom>(b.relations.begin(), b.relations.end()),
                           {pp_ratios[0], pp_ratios[1], pp_ratios[2]}, pp_seed),
          materialize_schema(b.schema).closure.inverse_pairs);
      ml.types = b.types;
      ml.schema = b.schema;
      const fs::path out = pp_out.empty() ? pp_bundle : pp_out;
      export_coo(ml, build_id_maps(ml, pp_one_based), out);
      info("split " + std::to_string(ml.split.train.size()) + "/" + std::to_string(ml.split.valid.size()) + "/" +
           std::to_string(ml.split.test.size()) + ", moved " + std::to_string(ml.split.moved_for_coverage) +
           " for coverage and " + std::to_string(ml.split.moved_for_leakage) + " for leakage");
    } else if (*run_cmd) {
      PipelineConfig config;
      if (!run_config.empty()) {
        config = config_from_json(io::read_file(run_config));
        anchor(config, fs::absolute(run_config).parent_path());
      }
      overrides.apply_to(config);
      const RunResult r = run(config, info);
      if (r.status == RunStatus::CurationNeeded) {
        info("curation needed: " + std::to_string(r.unresolved) + " unresolved clashes, report at " +
             r.curation_report.string());
        return kCurationNeeded;
      }
      for (const auto& b : r.bundles) std::cout << b.string() << "\n";
    } else if (*stats_cmd) {
      const LoadedBundle b = load_bundle(st_bundle);
      const std::string name = st_name.empty() ? fs::absolute(st_bundle).filename().string() : st_name;
      const StatsReport r =
          compute_stats(std::vector<Axiom>(b.relations.begin(), b.relations.end()), b.types, b.schema);
      const fs::path out = st_out.empty() ? st_bundle : st_out;
      fs::create_directories(out);
      io::write_file(out / "stats.json", stats_json(r, name));
      io::write_file(out / "stats.md", stats_markdown(r, name));
      std::cout << stats_markdown(r, name);
    }
  } catch (const std::exception& e) {
    info(std::string("error: ") + e.what());
    return 1;
  }
  return 0;
}
