#include "kgsaf/modularizer/modularizer.hpp"

#include <map>

#include "kgsaf/rdf/owl.hpp"

namespace kgsaf {

Signature initial_signature(const Ontology::AxiomSet& assertions) {
  Signature sig;
  for (const auto& a : assertions) {
    if (a.kind() == AxiomKind::ClassAssertion) {
      collect_signature(a.class_expression(), sig);
    } else if (a.kind() == AxiomKind::ObjectPropertyAssertion) {
      sig.insert({a.property(), EntityKind::ObjectProperty});
    }
  }
  return sig;
}

Module extract_module(const Ontology& ontology, const Signature& sig0) {
  std::vector<const Axiom*> schema;
  std::vector<Signature> sigs;
  std::map<EntityRef, std::vector<std::size_t>> by_symbol;
  for (const auto* box : {&ontology.tbox(), &ontology.rbox()}) {
    for (const auto& a : *box) {
      const std::size_t i = schema.size();
      schema.push_back(&a);
      sigs.push_back(signature_of(a));
      for (const auto& e : sigs.back()) by_symbol[e].push_back(i);
    }
  }

  Module m;
  m.final_signature = sig0;
  std::vector<bool> taken(schema.size(), false);
  // Each pass only needs the symbols that entered Σ in the previous pass.
  std::vector<EntityRef> frontier(sig0.begin(), sig0.end());
  while (true) {
    ++m.iterations;
    std::vector<EntityRef> next;
    for (const auto& e : frontier) {
      auto it = by_symbol.find(e);
      if (it == by_symbol.end()) continue;
      for (std::size_t i : it->second) {
        if (taken[i]) continue;
        taken[i] = true;
        m.axioms.insert(*schema[i]);
        for (const auto& s : sigs[i]) {
          if (m.final_signature.insert(s)) next.push_back(s);
        }
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return m;
}

DatasetComponents decompose(const std::vector<Axiom>& axioms) {
  DatasetComponents c;
  for (const auto& a : axioms) {
    switch (classify_box(a)) {
      case Box::TBox: (is_taxonomic(a) ? c.taxonomy : c.tbox_other).insert(a); break;
      case Box::RBox: c.rbox.insert(a); break;
      case Box::ABox:
        (a.kind() == AxiomKind::ClassAssertion ? c.abox_types : c.abox_relations).insert(a);
        break;
    }
  }
  return c;
}

void write_components(const DatasetComponents& components, const std::filesystem::path& dir,
                      const std::string& ontology_iri) {
  std::filesystem::create_directories(dir);
  auto write = [&](const Ontology::AxiomSet& axioms, const char* name, rdf::Format format) {
    Ontology o(ontology_iri);
    o.add_all(axioms);
    rdf::write_ontology(o, dir / name, format);
  };
  write(components.taxonomy, "taxonomy.ttl", rdf::Format::Turtle);
  write(components.tbox_other, "tbox.ttl", rdf::Format::Turtle);
  write(components.rbox, "rbox.ttl", rdf::Format::Turtle);
  write(components.abox_types, "abox_types.nt", rdf::Format::NTriples);
  write(components.abox_relations, "abox_relations.nt", rdf::Format::NTriples);
}

}  // namespace kgsaf
