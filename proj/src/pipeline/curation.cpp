#include "kgsaf/pipeline/pipeline.hpp"
#include "kgsaf/util/error.hpp"

namespace kgsaf {

Ontology::AxiomSet apply_renames(const Ontology::AxiomSet& axioms, const std::vector<Rename>& renames) {
  if (renames.empty()) return axioms;
  Ontology::AxiomSet out;
  for (Axiom a : axioms) {
    for (const auto& r : renames) a = rename_entity(a, r.from, r.to);
    out.insert(std::move(a));
  }
  return out;
}

Curation curate(const Ontology& schema, Ontology::AxiomSet abox, const DecisionFile& decisions,
                const ReasonerOptions& options) {
  Curation out;
  for (const auto& r : decisions.removals) {
    if (!abox.erase(r)) throw Error("decision file removes an assertion not in the ABox: " + to_functional_syntax(r));
    out.report.applied_removals.push_back(r);
  }

  Signature vocabulary = schema.vocabulary();
  for (const auto& a : abox) vocabulary.merge(signature_of(a));
  out.report.punning = punning_conflicts(vocabulary);

  while (true) {
    const auto clashes = check_consistency(schema, abox, options);
    if (clashes.empty()) break;
    bool removed = false;
    for (const auto& c : clashes) {
      CuratedClash cc{c, c.abox_support()};
      if (decisions.accept_all_suggestions) {
        for (const auto& a : cc.suggested_removals) {
          if (abox.erase(a)) {
            out.report.applied_removals.push_back(a);
            removed = true;
          }
        }
      }
      out.report.clashes.push_back(std::move(cc));
    }
    if (!removed) {
      out.report.unresolved = clashes.size();
      break;
    }
  }
  out.abox = std::move(abox);
  return out;
}

}  // namespace kgsaf
