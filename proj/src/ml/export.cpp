#include "kgsaf/ml/export.hpp"

#include <algorithm>

#include <json.hpp>

#include "kgsaf/ml/owl_json.hpp"
#include "kgsaf/util/error.hpp"
#include "kgsaf/util/io.hpp"

namespace kgsaf {

std::vector<Axiom> MlDataset::relations() const {
  std::vector<Axiom> out(split.train.begin(), split.train.end());
  out.insert(out.end(), split.valid.begin(), split.valid.end());
  out.insert(out.end(), split.test.begin(), split.test.end());
  return out;
}

IdMap::IdMap(const std::set<std::string>& iris) : iris_(iris.begin(), iris.end()) {
  for (std::uint64_t i = 0; i < iris_.size(); ++i) ids_.emplace(iris_[i], i);
}

std::uint64_t IdMap::id(const std::string& iri) const {
  auto it = ids_.find(iri);
  if (it == ids_.end()) throw Error("no identifier for " + iri);
  return it->second;
}

IdMaps build_id_maps(const MlDataset& dataset, bool one_based) {
  std::set<std::string> individuals, properties, classes;
  Signature sig = dataset.schema.vocabulary();
  for (const auto& a : dataset.relations()) {
    individuals.insert(a.subject());
    individuals.insert(a.object());
    properties.insert(a.property());
  }
  for (const auto& a : dataset.types) {
    individuals.insert(a.individual());
    collect_signature(a.class_expression(), sig);
  }
  for (const auto& e : sig) {
    if (e.kind == EntityKind::Class) classes.insert(e.iri);
    if (e.kind == EntityKind::ObjectProperty) properties.insert(e.iri);
  }
  IdMaps maps{IdMap(individuals), IdMap(properties), IdMap(classes), one_based ? 1u : 0u};
  return maps;
}

std::string id_map_tsv(const IdMap& map, std::uint64_t base) {
  std::string out;
  for (std::uint64_t i = 0; i < map.size(); ++i) out += std::to_string(i + base) + "\t" + map.iri(i) + "\n";
  return out;
}

namespace {

void sort_unique(IndexRows& rows) {
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
}

std::string tsv(const IndexRows& rows, std::uint64_t base) {
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) out += '\t';
      out += std::to_string(r[i] + base);
    }
    out += '\n';
  }
  return out;
}

// Named classes of a domain/range: the class itself, or each named disjunct of
// a union. Other expressions have no row.
std::vector<std::string> atomic_classes(const ClassExpression& e) {
  if (e.is_named()) return {e.iri()};
  std::vector<std::string> out;
  if (e.kind() == ClassExpression::Kind::UnionOf) {
    for (const auto& o : e.operands()) {
      if (o.is_named()) out.push_back(o.iri());
    }
  }
  return out;
}

}  // namespace

IndexRows taxonomy_rows(const Ontology& schema, const IdMaps& maps) {
  IndexRows rows;
  for (const auto& a : schema.tbox()) {
    if (is_taxonomic(a) && !is_tautology(a)) {
      rows.push_back({maps.classes.id(a.sub_class().iri()), maps.classes.id(a.super_class().iri())});
    } else if (a.kind() == AxiomKind::EquivalentClasses) {
      for (const auto& x : a.classes()) {
        for (const auto& y : a.classes()) {
          if (x.is_named() && y.is_named() && x != y) rows.push_back({maps.classes.id(x.iri()), maps.classes.id(y.iri())});
        }
      }
    }
  }
  sort_unique(rows);
  return rows;
}

IndexRows domain_rows(const Ontology& schema, const IdMaps& maps, bool range) {
  const AxiomKind kind = range ? AxiomKind::ObjectPropertyRange : AxiomKind::ObjectPropertyDomain;
  IndexRows rows;
  for (const auto& a : schema.rbox()) {
    if (a.kind() != kind) continue;
    for (const auto& c : atomic_classes(a.class_expression())) {
      rows.push_back({maps.properties.id(a.property()), maps.classes.id(c)});
    }
  }
  sort_unique(rows);
  return rows;
}

IndexRows subproperty_rows(const Ontology& schema, const IdMaps& maps) {
  IndexRows rows;
  for (const auto& a : schema.rbox()) {
    if (a.kind() == AxiomKind::SubObjectPropertyOf && a.sub_property() != a.super_property()) {
      rows.push_back({maps.properties.id(a.sub_property()), maps.properties.id(a.super_property())});
    } else if (a.kind() == AxiomKind::EquivalentObjectProperties) {
      for (const auto& p : a.properties()) {
        for (const auto& q : a.properties()) {
          if (p != q) rows.push_back({maps.properties.id(p), maps.properties.id(q)});
        }
      }
    }
  }
  sort_unique(rows);
  return rows;
}

CooExport export_coo(const MlDataset& dataset, const IdMaps& maps, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  CooExport out;
  nlohmann::ordered_json files = nlohmann::ordered_json::object();
  auto emit = [&](const std::string& name, const std::string& contents) {
    io::write_file(dir / name, contents);
    files[name] = io::sha256_hex(contents);
  };
  auto table = [&](const std::string& name, const IndexRows& rows, std::size_t columns) {
    emit(name, tsv(rows, maps.base));
    out.tables.push_back({name, rows.size(), columns});
  };

  const std::pair<const char*, const Ontology::AxiomSet*> parts[] = {
      {"train", &dataset.split.train}, {"valid", &dataset.split.valid}, {"test", &dataset.split.test}};
  for (const auto& [name, axioms] : parts) {
    IndexRows rows;
    std::string text;
    for (const auto& a : *axioms) {
      rows.push_back({maps.individuals.id(a.subject()), maps.properties.id(a.property()), maps.individuals.id(a.object())});
      text += a.subject() + "\t" + a.property() + "\t" + a.object() + "\n";
    }
    table(std::string(name) + ".tsv", rows, 3);
    emit(std::string(name) + ".txt", text);
  }

  IndexRows types;
  for (const auto& a : dataset.types) {
    if (a.class_expression().is_named()) {
      types.push_back({maps.individuals.id(a.individual()), maps.classes.id(a.class_expression().iri())});
    }
  }
  sort_unique(types);
  table("types.tsv", types, 2);
  table("taxonomy.tsv", taxonomy_rows(dataset.schema, maps), 2);
  table("domain.tsv", domain_rows(dataset.schema, maps, false), 2);
  table("range.tsv", domain_rows(dataset.schema, maps, true), 2);
  table("subprop.tsv", subproperty_rows(dataset.schema, maps), 2);

  emit("entity_ids.tsv", id_map_tsv(maps.individuals, maps.base));
  emit("relation_ids.tsv", id_map_tsv(maps.properties, maps.base));
  emit("class_ids.tsv", id_map_tsv(maps.classes, maps.base));

  Ontology::AxiomSet all = dataset.types;
  for (const auto* box : {&dataset.schema.tbox(), &dataset.schema.rbox()}) all.insert(box->begin(), box->end());
  for (const auto& a : dataset.relations()) all.insert(a);
  emit("axioms.json", owl_to_json(all));

  nlohmann::ordered_json m;
  m["index_base"] = maps.base;
  m["counts"] = {{"individuals", maps.individuals.size()},
                 {"properties", maps.properties.size()},
                 {"classes", maps.classes.size()}};
  auto tables = nlohmann::ordered_json::object();
  for (const auto& t : out.tables) {
    tables[t.file] = {{"rows", t.rows}, {"columns", t.columns}, {"shape", {t.columns, t.rows}}};
  }
  m["tables"] = std::move(tables);
  m["split"] = {{"seed", dataset.split.seed},
                {"ratios", {dataset.split.ratios.train, dataset.split.ratios.valid, dataset.split.ratios.test}},
                {"moved_for_coverage", dataset.split.moved_for_coverage},
                {"moved_for_leakage", dataset.split.moved_for_leakage}};
  m["files"] = files;
  out.manifest_json = m.dump(2) + "\n";
  io::write_file(dir / "manifest.json", out.manifest_json);
  return out;
}

}  // namespace kgsaf
