#include "kgsaf/extractor/extractor.hpp"

#include <algorithm>

#include "kgsaf/util/error.hpp"

namespace kgsaf {

DegreeIndex compute_degrees(const std::vector<Axiom>& assertions, bool include_types) {
  DegreeIndex index;
  for (const auto& a : assertions) {
    if (a.kind() == AxiomKind::ObjectPropertyAssertion) {
      ++index.degree[a.subject()];
      ++index.degree[a.object()];
    } else if (include_types && a.kind() == AxiomKind::ClassAssertion) {
      ++index.degree[a.individual()];
    }
  }
  return index;
}

LocalSource::LocalSource(const Ontology& ontology) {
  for (const auto& a : ontology.abox()) {
    if (a.kind() == AxiomKind::ObjectPropertyAssertion) {
      relations_.push_back(a);
    } else if (a.kind() == AxiomKind::ClassAssertion) {
      types_[a.individual()].push_back(a);
    }
  }
}

void LocalSource::for_each_property_assertion(const std::function<void(const Axiom&)>& fn) {
  for (const auto& a : relations_) fn(a);
}

void LocalSource::for_each_class_assertion(const std::function<void(const Axiom&)>& fn) {
  for (const auto& [_, axioms] : types_) {
    for (const auto& a : axioms) fn(a);
  }
}

std::vector<Axiom> LocalSource::class_assertions_of(const std::set<std::string>& individuals) {
  std::vector<Axiom> out;
  for (const auto& x : individuals) {
    auto it = types_.find(x);
    if (it != types_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

namespace {

bool mentions(const Axiom& a, const Signature& flagged) {
  return !flagged.empty() && signature_of(a).intersects(flagged);
}

Signature unsat_signature(const UnsatReport& unsat) {
  Signature s;
  for (const auto& c : unsat.unsatisfiable_classes) s.insert({c, EntityKind::Class});
  for (const auto& p : unsat.unsatisfiable_properties) s.insert({p, EntityKind::ObjectProperty});
  return s;
}

}  // namespace

ABoxSubset extract_subset(AssertionSource& source, const ExtractOptions& options, const UnsatReport& unsat) {
  if (options.k < 1) throw Error("extraction threshold k must be at least 1");
  std::vector<Axiom> all;
  source.for_each_property_assertion([&](const Axiom& a) { all.push_back(a); });
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  DegreeIndex degrees = compute_degrees(all);
  if (options.degree_includes_types) {
    std::set<Axiom> types;
    source.for_each_class_assertion([&](const Axiom& a) { types.insert(a); });
    for (const auto& a : types) ++degrees.degree[a.individual()];
  }

  // Indices into the sorted `all`, so the result set can be filled in order.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Axiom& a = all[i];
    if (unsat.unsatisfiable_properties.contains(a.property())) continue;
    if (degrees.of(a.subject()) >= options.k && degrees.of(a.object()) >= options.k) kept.push_back(i);
  }
  if (options.fixpoint) {
    while (true) {
      DegreeIndex current;
      for (std::size_t i : kept) {
        ++current.degree[all[i].subject()];
        ++current.degree[all[i].object()];
      }
      std::vector<std::size_t> next;
      for (std::size_t i : kept) {
        if (current.of(all[i].subject()) >= options.k && current.of(all[i].object()) >= options.k) next.push_back(i);
      }
      if (next.size() == kept.size()) break;
      kept = std::move(next);
    }
  }

  ABoxSubset out;
  out.extraction_k = options.k;
  for (std::size_t i : kept) {
    out.individuals.insert(all[i].subject());
    out.individuals.insert(all[i].object());
    out.properties.insert(all[i].property());
    out.property_assertions.insert(out.property_assertions.end(), std::move(all[i]));
  }
  return out;
}

Ontology::AxiomSet fetch_class_assertions(AssertionSource& source, const std::set<std::string>& individuals,
                                          const UnsatReport& unsat) {
  const Signature flagged = unsat_signature(unsat);
  Ontology::AxiomSet out;
  for (const auto& a : source.class_assertions_of(individuals)) {
    if (a.kind() != AxiomKind::ClassAssertion || !individuals.contains(a.individual())) continue;
    if (a.class_expression().is_top() || mentions(a, flagged)) continue;
    out.insert(a);
  }
  return out;
}

ABoxSubset extract_abox(AssertionSource& source, const ExtractOptions& options, const UnsatReport& unsat) {
  ABoxSubset out = extract_subset(source, options, unsat);
  out.class_assertions = fetch_class_assertions(source, out.individuals, unsat);
  return out;
}

}  // namespace kgsaf
