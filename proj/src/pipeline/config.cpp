#include <cmath>

#include <json.hpp>

#include "kgsaf/pipeline/pipeline.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"
#include "kgsaf/vocab.hpp"

namespace kgsaf {

namespace {

using Json = nlohmann::ordered_json;

std::vector<std::filesystem::path> paths(const Json& j) {
  std::vector<std::filesystem::path> out;
  for (const auto& p : j) out.emplace_back(p.get<std::string>());
  return out;
}

Json path_list(const std::vector<std::filesystem::path>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.string());
  return out;
}

void read_sparql(const Json& j, SparqlOptions& s) {
  for (const auto& [key, v] : j.items()) {
    if (key == "page_size") s.page_size = v.get<std::size_t>();
    else if (key == "values_batch") s.values_batch = v.get<std::size_t>();
    else if (key == "max_retries") s.max_retries = v.get<int>();
    else if (key == "initial_backoff_ms") s.initial_backoff = std::chrono::milliseconds(v.get<long>());
    else if (key == "timeout_s") s.timeout = std::chrono::seconds(v.get<long>());
    else if (key == "require_declarations") s.require_declarations = v.get<bool>();
    else if (key == "graph") s.graph = v.get<std::string>();
    else throw Error("unknown sparql config key: " + key);
  }
}

}  // namespace

void validate(const PipelineConfig& c) {
  if (c.name.empty()) throw Error("config: name must not be empty");
  if (c.k < 1) throw Error("config: k must be at least 1");
  if (!c.base && !c.materialize) throw Error("config: at least one of base/materialize must be enabled");
  if (c.schema.empty()) throw Error("config: no schema documents given");
  if (c.endpoint.empty() && c.data.empty()) throw Error("config: give data dumps or a SPARQL endpoint");
  if (c.reasoner != "builtin" && c.reasoner != "external") throw Error("config: reasoner must be builtin or external");
  validate(c.ratios);
}

PipelineConfig config_from_json(std::string_view text, const PipelineConfig& defaults) {
  PipelineConfig c = defaults;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) throw Error("config must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "name") c.name = v.get<std::string>();
      else if (key == "schema") c.schema = paths(v);
      else if (key == "data") c.data = paths(v);
      else if (key == "endpoint") c.endpoint = v.get<std::string>();
      else if (key == "catalog") c.catalog = v.get<std::string>();
      else if (key == "allow_http_imports") c.allow_http_imports = v.get<bool>();
      else if (key == "fail_on_missing_imports") c.fail_on_missing_imports = v.get<bool>();
      else if (key == "infer_declarations") c.infer_declarations = v.get<bool>();
      else if (key == "k") c.k = v.get<std::size_t>();
      else if (key == "fixpoint") c.fixpoint = v.get<bool>();
      else if (key == "degree_includes_types") c.degree_includes_types = v.get<bool>();
      else if (key == "base") c.base = v.get<bool>();
      else if (key == "materialize") c.materialize = v.get<bool>();
      else if (key == "ratios") {
        const auto r = v.get<std::vector<double>>();
        if (r.size() != 3) throw Error("config: ratios needs three numbers");
        c.ratios = {r[0], r[1], r[2]};
      } else if (key == "seed") c.seed = v.get<std::uint64_t>();
      else if (key == "one_based") c.one_based = v.get<bool>();
      else if (key == "decisions") c.decisions = paths(v);
      else if (key == "output") c.output = v.get<std::string>();
      else if (key == "reasoner") c.reasoner = v.get<std::string>();
      else if (key == "una") c.una = v.get<bool>();
      else if (key == "sparql") read_sparql(v, c.sparql);
      else throw Error("unknown config key: " + key);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad config value: ") + e.what());
  }
  return c;
}

std::string config_to_json(const PipelineConfig& c) {
  Json j;
  j["name"] = c.name;
  j["schema"] = path_list(c.schema);
  j["data"] = path_list(c.data);
  j["endpoint"] = c.endpoint;
  j["catalog"] = c.catalog.string();
  j["allow_http_imports"] = c.allow_http_imports;
  j["fail_on_missing_imports"] = c.fail_on_missing_imports;
  j["infer_declarations"] = c.infer_declarations;
  j["k"] = c.k;
  j["fixpoint"] = c.fixpoint;
  j["degree_includes_types"] = c.degree_includes_types;
  j["base"] = c.base;
  j["materialize"] = c.materialize;
  j["ratios"] = {c.ratios.train, c.ratios.valid, c.ratios.test};
  j["seed"] = c.seed;
  j["one_based"] = c.one_based;
  j["decisions"] = path_list(c.decisions);
  j["output"] = c.output.string();
  j["reasoner"] = c.reasoner;
  j["una"] = c.una;
  j["sparql"] = {{"page_size", c.sparql.page_size},
                 {"values_batch", c.sparql.values_batch},
                 {"max_retries", c.sparql.max_retries},
                 {"initial_backoff_ms", c.sparql.initial_backoff.count()},
                 {"timeout_s", c.sparql.timeout.count()},
                 {"require_declarations", c.sparql.require_declarations},
                 {"graph", c.sparql.graph}};
  return j.dump(2) + "\n";
}

namespace {

Json triple_json(const Axiom& a) {
  if (a.kind() == AxiomKind::ObjectPropertyAssertion) {
    return {{"s", a.subject()}, {"p", a.property()}, {"o", a.object()}};
  }
  if (a.kind() == AxiomKind::ClassAssertion && a.class_expression().is_named()) {
    return {{"s", a.individual()}, {"p", std::string(vocab::rdf::type)}, {"o", a.class_expression().iri()}};
  }
  return {{"axiom", to_functional_syntax(a)}};
}

}  // namespace

DecisionFile decisions_from_json(std::string_view text) {
  DecisionFile d;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed decision file: ") + e.what());
  }
  if (!j.is_object()) throw Error("decision file must be a JSON object");
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "removals") {
        for (const auto& r : v) {
          const auto s = r.at("s").get<std::string>();
          const auto p = r.at("p").get<std::string>();
          const auto o = r.at("o").get<std::string>();
          d.removals.push_back(p == vocab::rdf::type ? Axiom::class_assertion(s, ClassExpression::named(o))
                                                     : Axiom::object_property_assertion(s, p, o));
        }
      } else if (key == "renames") {
        for (const auto& r : v) {
          const auto kind = parse_entity_kind(r.at("kind").get<std::string>());
          if (!kind) throw Error("decision file: unknown entity kind " + r.at("kind").get<std::string>());
          d.renames.push_back({{r.at("from").get<std::string>(), *kind}, r.at("to").get<std::string>()});
        }
      } else if (key == "accept_all_suggestions") {
        d.accept_all_suggestions = v.get<bool>();
      } else {
        throw Error("unknown decision file key: " + key);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("bad decision file entry: ") + e.what());
  }
  return d;
}

std::string decisions_to_json(const DecisionFile& d) {
  Json j;
  Json removals = Json::array();
  for (const auto& a : d.removals) removals.push_back(triple_json(a));
  j["removals"] = std::move(removals);
  Json renames = Json::array();
  for (const auto& r : d.renames) {
    renames.push_back({{"from", r.from.iri}, {"kind", std::string(to_string(r.from.kind))}, {"to", r.to}});
  }
  j["renames"] = std::move(renames);
  j["accept_all_suggestions"] = d.accept_all_suggestions;
  return j.dump(2) + "\n";
}

DecisionFile load_decisions(const std::vector<std::filesystem::path>& files) {
  DecisionFile all;
  for (const auto& f : files) {
    DecisionFile d = decisions_from_json(io::read_file(f));
    all.removals.insert(all.removals.end(), d.removals.begin(), d.removals.end());
    all.renames.insert(all.renames.end(), d.renames.begin(), d.renames.end());
    all.accept_all_suggestions = all.accept_all_suggestions || d.accept_all_suggestions;
  }
  return all;
}

std::string curation_report_json(const CurationReport& r) {
  Json j;
  Json clashes = Json::array();
  for (const auto& c : r.clashes) {
    Json just = Json::array();
    for (const auto& a : c.clash.justification.support) just.push_back(to_functional_syntax(a));
    Json removals = Json::array();
    for (const auto& a : c.suggested_removals) removals.push_back(triple_json(a));
    clashes.push_back({{"kind", std::string(to_string(c.clash.kind))},
                       {"description", c.clash.describe()},
                       {"justification", std::move(just)},
                       {"suggested_removals", std::move(removals)}});
  }
  j["clashes"] = std::move(clashes);
  Json punning = Json::array();
  for (const auto& [iri, kinds] : r.punning) {
    Json ks = Json::array();
    for (auto k : kinds) ks.push_back(std::string(to_string(k)));
    punning.push_back({{"iri", iri}, {"kinds", std::move(ks)}});
  }
  j["punning"] = std::move(punning);
  Json applied = Json::array();
  for (const auto& a : r.applied_removals) applied.push_back(triple_json(a));
  j["applied_removals"] = std::move(applied);
  j["unresolved"] = r.unresolved;
  return j.dump(2) + "\n";
}

}  // namespace kgsaf
