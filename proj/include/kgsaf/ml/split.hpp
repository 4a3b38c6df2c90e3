#pragma once

// Train/valid/test partition of object property assertions with training
// coverage, and removal of inverse-pair leakage from the evaluation sets.

#include <cstdint>
#include <vector>

#include "kgsaf/model.hpp"
#include "kgsaf/reasoner/reasoner.hpp"

namespace kgsaf {

struct SplitRatios {
  double train = 0.8;
  double valid = 0.1;
  double test = 0.1;
};

// Throws Error unless all three are positive and sum to 1 within 1e-9.
void validate(const SplitRatios& ratios);

struct Split {
  Ontology::AxiomSet train;
  Ontology::AxiomSet valid;
  Ontology::AxiomSet test;
  std::uint64_t seed = 0;
  SplitRatios ratios;
  std::size_t moved_for_coverage = 0;
  std::size_t moved_for_leakage = 0;

  std::size_t size() const { return train.size() + valid.size() + test.size(); }
};

// Shuffles the sorted input with a seeded mt19937_64 and cuts it into
// round(n * valid) validation and round(n * test) test triples, the rest
// going to train. Evaluation triples whose subject, object or property is
// missing from train are then moved there. Non-assertion axioms are ignored.
Split split_assertions(const std::vector<Axiom>& assertions, const SplitRatios& ratios, std::uint64_t seed);

// Moves ⟨s,p,o⟩ from valid/test to train while train holds ⟨o,p,s⟩ or ⟨o,q,s⟩
// for an inverse pair (p,q). Pairs are used in both orientations. Repeats
// until no evaluation triple has a reverse in train.
Split filter_inversion_leakage(Split split, const std::set<NamePair>& inverses);

// Evaluation triples whose entities or property are absent from train.
std::vector<Axiom> coverage_violations(const Split& split);
// Evaluation triples with a reverse in train.
std::vector<Axiom> leakage_violations(const Split& split, const std::set<NamePair>& inverses);

}  // namespace kgsaf
