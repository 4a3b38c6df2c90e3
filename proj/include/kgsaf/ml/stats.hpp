#pragma once

// Dataset statistics in the shape of the published ABox and schema tables.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "kgsaf/model.hpp"

namespace kgsaf {

enum class PropertyCategory : std::uint8_t { OneToOne, OneToMany, ManyToOne, ManyToMany };

// hpt = mean distinct heads per tail, tpt = mean distinct tails per head,
// each compared against 1.5.
PropertyCategory categorize(double heads_per_tail, double tails_per_head);

struct AboxStats {
  std::size_t triples = 0;
  std::size_t individuals = 0;
  std::size_t properties = 0;
  std::size_t classes = 0;  // named classes used in class assertions
  std::size_t class_assertions = 0;
  std::array<std::size_t, 4> category_counts{};
  // Two decimals, largest-remainder rounded so they sum to exactly 1 (all 0 without properties).
  std::array<double, 4> fractions{};
  double avg_triples_per_property = 0;  // two decimals
};

struct SchemaStats {
  std::size_t classes = 0;
  std::size_t disjoints = 0;
  std::size_t subclasses = 0;
  std::size_t existentials = 0;  // C ⊑ ∃R.D
  std::size_t universals = 0;    // C ⊑ ∀R.D
  std::size_t properties = 0;
  std::size_t with_domain = 0;  // non-owl:Thing domain
  std::size_t with_range = 0;
  std::size_t with_both = 0;
  std::size_t functional = 0;
};

struct StatsReport {
  AboxStats abox;
  SchemaStats schema;
  // Axiom type name and whether the dataset has at least one.
  std::vector<std::pair<std::string, bool>> checklist;
};

double round2(double x);
// Nearest hundredths summing to 1, by largest remainder.
std::array<double, 4> rounded_fractions(const std::array<std::size_t, 4>& counts);

StatsReport compute_stats(const std::vector<Axiom>& relations, const Ontology::AxiomSet& types, const Ontology& schema);

std::string stats_json(const StatsReport& report, const std::string& dataset_name);
std::string stats_markdown(const StatsReport& report, const std::string& dataset_name);

}  // namespace kgsaf
