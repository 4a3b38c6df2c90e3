#include "kgsaf/ml/split.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_set>

#include "kgsaf/util/error.hpp"

namespace kgsaf {

namespace {

// Fisher-Yates driven directly by the engine's output, so the permutation
// does not depend on the standard library's distribution implementation.
template <typename T>
void portable_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::uint64_t bound = i;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t r;
    do r = rng();
    while (r >= limit);
    std::swap(v[i - 1], v[r % bound]);
  }
}

struct Coverage {
  std::unordered_set<std::string> individuals;
  std::unordered_set<std::string> properties;

  void add(const Axiom& a) {
    individuals.insert(a.subject());
    individuals.insert(a.object());
    properties.insert(a.property());
  }
  bool covers(const Axiom& a) const {
    return individuals.contains(a.subject()) && individuals.contains(a.object()) &&
           properties.contains(a.property());
  }
};

using Reverses = std::map<std::string, std::set<std::string>>;

Reverses reverse_properties(const std::set<NamePair>& inverses) {
  Reverses out;
  for (const auto& [p, q] : inverses) {
    out[p].insert(q);
    out[q].insert(p);
  }
  return out;
}

bool has_reverse(const Axiom& a, const Ontology::AxiomSet& train, const Reverses& reverses) {
  if (train.contains(Axiom::object_property_assertion(a.object(), a.property(), a.subject()))) return true;
  auto it = reverses.find(a.property());
  if (it == reverses.end()) return false;
  for (const auto& q : it->second) {
    if (train.contains(Axiom::object_property_assertion(a.object(), q, a.subject()))) return true;
  }
  return false;
}

}  // namespace

void validate(const SplitRatios& r) {
  if (!(r.train > 0 && r.valid > 0 && r.test > 0)) throw Error("split ratios must be positive");
  if (std::abs(r.train + r.valid + r.test - 1.0) > 1e-9) throw Error("split ratios must sum to 1");
}

Split split_assertions(const std::vector<Axiom>& assertions, const SplitRatios& ratios, std::uint64_t seed) {
  validate(ratios);
  std::vector<Axiom> all;
  for (const auto& a : assertions) {
    if (a.kind() == AxiomKind::ObjectPropertyAssertion) all.push_back(a.with_provenance(Provenance::Asserted));
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::mt19937_64 rng(seed);
  portable_shuffle(all, rng);

  const std::size_t n = all.size();
  const auto n_valid = static_cast<std::size_t>(std::llround(static_cast<double>(n) * ratios.valid));
  const auto n_test = std::min(n - std::min(n, n_valid),
                               static_cast<std::size_t>(std::llround(static_cast<double>(n) * ratios.test)));
  const std::size_t n_train = n - std::min(n, n_valid) - n_test;

  Split s;
  s.seed = seed;
  s.ratios = ratios;
  Coverage cov;
  for (std::size_t i = 0; i < n_train; ++i) {
    cov.add(all[i]);
    s.train.insert(all[i]);
  }
  // One pass suffices: train only grows, so a triple found covered stays covered.
  for (std::size_t i = n_train; i < n; ++i) {
    const Axiom& a = all[i];
    if (!cov.covers(a)) {
      cov.add(a);
      s.train.insert(a);
      ++s.moved_for_coverage;
    } else if (i < n_train + n_valid) {
      s.valid.insert(a);
    } else {
      s.test.insert(a);
    }
  }
  return s;
}

Split filter_inversion_leakage(Split split, const std::set<NamePair>& inverses) {
  const Reverses reverses = reverse_properties(inverses);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto* eval : {&split.valid, &split.test}) {
      for (auto it = eval->begin(); it != eval->end();) {
        if (has_reverse(*it, split.train, reverses)) {
          split.train.insert(*it);
          it = eval->erase(it);
          ++split.moved_for_leakage;
          changed = true;
        } else {
          ++it;
        }
      }
    }
  }
  return split;
}

std::vector<Axiom> coverage_violations(const Split& split) {
  Coverage cov;
  for (const auto& a : split.train) cov.add(a);
  std::vector<Axiom> out;
  for (const auto* eval : {&split.valid, &split.test}) {
    for (const auto& a : *eval) {
      if (!cov.covers(a)) out.push_back(a);
    }
  }
  return out;
}

std::vector<Axiom> leakage_violations(const Split& split, const std::set<NamePair>& inverses) {
  const Reverses reverses = reverse_properties(inverses);
  std::vector<Axiom> out;
  for (const auto* eval : {&split.valid, &split.test}) {
    for (const auto& a : *eval) {
      if (has_reverse(a, split.train, reverses)) out.push_back(a);
    }
  }
  return out;
}

}  // namespace kgsaf
