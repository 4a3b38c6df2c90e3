#pragma once

// Random instance generators shared by unit and acceptance tests.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "kgsaf/model.hpp"

namespace kgsaf::gen {

using Rng = std::mt19937_64;

std::string iri(const std::string& prefix, std::size_t i);
ClassExpression cls(std::size_t i);
std::string prop(std::size_t i);
std::string ind(std::size_t i);

struct Dag {
  std::size_t nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (sub, sup)
};

// Random DAG with at most max_nodes nodes and max_edges distinct edges. Node
// labels are shuffled so the topological order is not the label order.
Dag random_dag(Rng& rng, std::size_t max_nodes, std::size_t max_edges);
Ontology dag_ontology(const Dag& dag);

// Schema axioms of mixed kinds over at most max_symbols classes and properties.
Ontology random_schema(Rng& rng, std::size_t max_axioms, std::size_t max_symbols);

// Object property assertions over n individuals and m properties; duplicates removed.
std::vector<Axiom> random_assertions(Rng& rng, std::size_t edges, std::size_t individuals, std::size_t properties);

}  // namespace kgsaf::gen
