#pragma once

// JSON rendering of axioms: one array of objects, class expressions nested,
// lists as arrays. Keys appear in a fixed order, "type" first.

#include <string>
#include <string_view>
#include <vector>

#include "kgsaf/model.hpp"

namespace kgsaf {

// Axioms are emitted in sorted order, one per line.
std::string owl_to_json(const Ontology::AxiomSet& axioms);
// Throws Error on malformed input or unknown "type" values.
Ontology::AxiomSet json_to_owl(std::string_view json);

}  // namespace kgsaf
