#pragma once

// End-to-end dataset build: schema cleaning, extraction, curation, variants.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgsaf/extractor/extractor.hpp"
#include "kgsaf/ml/split.hpp"
#include "kgsaf/model.hpp"
#include "kgsaf/reasoner/reasoner.hpp"

namespace kgsaf {

struct PipelineConfig {
  std::string name = "dataset";
  // Ontology documents; their import closure is merged.
  std::vector<std::filesystem::path> schema;
  // Assertion dumps, used when `endpoint` is empty.
  std::vector<std::filesystem::path> data;
  std::string endpoint;
  std::filesystem::path catalog;  // import catalog TSV, optional
  bool allow_http_imports = false;
  bool fail_on_missing_imports = true;
  bool infer_declarations = false;

  std::size_t k = 1;
  bool fixpoint = false;
  bool degree_includes_types = false;

  bool base = true;
  bool materialize = true;
  SplitRatios ratios;
  std::uint64_t seed = 42;
  bool one_based = false;

  std::vector<std::filesystem::path> decisions;
  std::filesystem::path output = "out";
  // "builtin", or "external" to exchange files with another reasoner under
  // output/work/external.
  std::string reasoner = "builtin";
  bool una = true;

  SparqlOptions sparql;
};

// Throws Error for invalid settings.
void validate(const PipelineConfig& config);
// Missing keys keep their defaults; unknown keys are an error.
PipelineConfig config_from_json(std::string_view json, const PipelineConfig& defaults = {});
std::string config_to_json(const PipelineConfig& config);

struct Rename {
  EntityRef from;
  std::string to;
};

struct DecisionFile {
  std::vector<Axiom> removals;  // ABox assertions
  std::vector<Rename> renames;
  bool accept_all_suggestions = false;
};

// Removals are {"s","p","o"} objects; p = rdf:type makes a class assertion.
DecisionFile decisions_from_json(std::string_view json);
std::string decisions_to_json(const DecisionFile& decisions);
DecisionFile load_decisions(const std::vector<std::filesystem::path>& paths);

struct CuratedClash {
  Clash clash;
  std::vector<Axiom> suggested_removals;
};

struct CurationReport {
  std::vector<CuratedClash> clashes;
  std::map<std::string, std::set<EntityKind>> punning;
  std::vector<Axiom> applied_removals;
  // Clashes left after decisions were applied.
  std::size_t unresolved = 0;
};

std::string curation_report_json(const CurationReport& report);

struct Curation {
  Ontology::AxiomSet abox;
  CurationReport report;
};

// Applies the removals (each must be in `abox`), then checks consistency.
// With accept_all_suggestions the justification assertions of every clash are
// removed and the check repeated until clean or nothing is left to remove.
Curation curate(const Ontology& schema, Ontology::AxiomSet abox, const DecisionFile& decisions,
                const ReasonerOptions& options = {});

Ontology::AxiomSet apply_renames(const Ontology::AxiomSet& axioms, const std::vector<Rename>& renames);

enum class RunStatus { Completed, CurationNeeded };

struct RunResult {
  RunStatus status = RunStatus::Completed;
  std::vector<std::filesystem::path> bundles;
  std::filesystem::path curation_report;
  std::size_t unresolved = 0;
};

using Logger = std::function<void(const std::string&)>;

// Phase artifacts go to output/work and are reused when their inputs are
// unchanged; bundles go to output/{name}-{k}-BASE and -MATERIALIZE.
RunResult run(const PipelineConfig& config, const Logger& log = {});

std::string bundle_name(const PipelineConfig& config, bool materialized);

// Reads the taxonomy/tbox/rbox/abox files written by write_components.
struct LoadedBundle {
  Ontology schema;
  Ontology::AxiomSet types;
  Ontology::AxiomSet relations;
};
LoadedBundle load_bundle(const std::filesystem::path& dir);

}  // namespace kgsaf
