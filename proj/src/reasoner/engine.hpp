#pragma once

// Forward-chaining rule engine over interned ids. Every fact remembers the
// rule and premises of its first derivation, so supporting axioms can be read
// off the derivation DAG.

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "kgsaf/model.hpp"
#include "kgsaf/reasoner/reasoner.hpp"

namespace kgsaf::detail {

using Id = std::uint32_t;
inline constexpr Id kNone = 0xFFFFFFFFu;
inline constexpr Id kTop = 0;
inline constexpr Id kBottom = 1;

enum class FactKind : std::uint8_t {
  Sub,        // a ⊑ b (concept ids)
  Disj,       // a, b disjoint; c = 1 when a is the complement of b or vice versa
  SubProp,    // a ⊑ b (property ids)
  Inv,        // a inverse of b
  Dom,        // domain(a) = b
  Rng,        // range(a) = b
  Char,       // characteristic b of property a
  Type,       // individual a has type b
  Rel,        // a b c (individual, property, individual)
  UnsatProp,  // property a is unsatisfiable
  Chain,      // chain axiom number a
};

struct FactKey {
  FactKind kind;
  Id a = 0, b = 0, c = 0;
  bool operator==(const FactKey&) const = default;
};

struct FactKeyHash {
  std::size_t operator()(const FactKey& k) const {
    std::uint64_t h = (static_cast<std::uint64_t>(k.a) << 32) ^ k.b;
    h ^= (static_cast<std::uint64_t>(k.c) << 8) ^ static_cast<std::uint64_t>(k.kind) * 0x9E3779B97F4A7C15ull;
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
};

struct Concept {
  ClassExpression::Kind kind;
  Id property = kNone;
  std::uint32_t n = 0;
  std::vector<Id> operands;
};

struct ClashRecord {
  ClashKind kind;
  std::vector<Id> individuals;
  Id property = kNone;
  std::vector<Id> classes;
  std::vector<Id> premises;  // fact ids
};

struct EngineOptions {
  bool una = true;
  // ABox rules and clash detection; off for schema-only reasoning.
  bool abox = true;
};

class Engine {
 public:
  explicit Engine(EngineOptions options = {});

  // Axioms are referenced by position in the order added.
  void add(const Axiom& axiom);
  void add_all(const std::vector<Axiom>& axioms) {
    for (const auto& a : axioms) add(a);
  }
  void run();
  std::vector<ClashRecord> clashes() const;

  const std::vector<Axiom>& axioms() const { return axioms_; }

  // Lookups.
  Id find_concept(const ClassExpression& e) const;
  Id find_property(const std::string& iri) const;
  Id find_individual(const std::string& iri) const;
  bool has(const FactKey& k) const { return index_.contains(k); }
  Id fact_id(const FactKey& k) const {
    auto it = index_.find(k);
    return it == index_.end() ? kNone : it->second;
  }
  const FactKey& fact(Id id) const { return records_[id].key; }
  std::size_t fact_count() const { return records_.size(); }

  const ClassExpression& concept_expr(Id c) const { return concept_exprs_[c]; }
  const Concept& concept_info(Id c) const { return concepts_[c]; }
  std::size_t concept_count() const { return concepts_.size(); }
  const std::string& property_iri(Id p) const { return properties_[p]; }
  std::size_t property_count() const { return properties_.size(); }
  const std::string& individual_iri(Id x) const { return individuals_[x]; }
  std::size_t individual_count() const { return individuals_.size(); }

  const std::vector<Id>& supers(Id c) const { return sub_out_[c]; }
  const std::vector<Id>& types_of(Id x) const { return type_of_[x]; }
  const std::vector<Id>& super_properties(Id p) const { return subprop_out_[p]; }
  const std::vector<Id>& inverses(Id p) const { return inv_[p]; }
  const std::vector<Id>& domains(Id p) const { return dom_[p]; }
  const std::vector<Id>& ranges(Id p) const { return rng_[p]; }

  // Indices (into axioms()) of the asserted axioms the fact was derived from.
  std::vector<std::size_t> support(Id fact) const;
  std::vector<std::size_t> support(const std::vector<Id>& facts) const;

 private:
  enum class Rule : std::uint8_t { Asserted, Static, Derived };

  struct Record {
    FactKey key;
    Rule rule;
    std::uint32_t axiom = 0;
    std::uint32_t premise_offset = 0;
    std::uint32_t premise_count = 0;
  };

  Id intern_concept(const ClassExpression& e);
  Id intern_property(const std::string& iri);
  Id intern_individual(const std::string& iri);

  void assert_fact(FactKey k, std::size_t axiom);
  void static_fact(FactKey k);
  void derive(FactKey k, std::initializer_list<Id> premises);
  void derive(FactKey k, const std::vector<Id>& premises);
  Id insert(FactKey k, Rule rule, std::size_t axiom, const Id* premises, std::size_t count);
  void index(Id id);

  Id get(FactKind kind, Id a, Id b, Id c = 0) const { return fact_id(FactKey{kind, a, b, c}); }

  void process(Id id);
  void on_sub(Id f, Id a, Id b);
  void on_disj(Id f, Id a, Id b);
  void on_subprop(Id f, Id p, Id q);
  void on_inv(Id f, Id p, Id q);
  void on_dom(Id f, Id p, Id c);
  void on_rng(Id f, Id p, Id c);
  void on_char(Id f, Id p, Characteristic k);
  void on_unsat_prop(Id f, Id p);
  void on_type(Id f, Id x, Id c);
  void on_rel(Id f, Id x, Id p, Id y);
  void extend_chains(Id f, Id x, Id p, Id y);
  void check_intersections_sub(Id a, Id changed);
  void check_unions(Id changed_disjunct, Id b);
  void check_intersections_type(Id x, Id changed);

  bool existential(Id c) const;
  static std::uint64_t pair_key(Id a, Id b) { return (static_cast<std::uint64_t>(a) << 32) | b; }
  const std::vector<Id>& rel_out(Id x, Id p) const;
  const std::vector<Id>& rel_in(Id y, Id p) const;

  EngineOptions options_;
  std::vector<Axiom> axioms_;

  std::vector<Concept> concepts_;
  std::vector<ClassExpression> concept_exprs_;
  std::map<ClassExpression, Id> concept_ids_;
  std::vector<std::string> properties_;
  std::unordered_map<std::string, Id> property_ids_;
  std::vector<std::string> individuals_;
  std::unordered_map<std::string, Id> individual_ids_;

  struct ChainInfo {
    std::vector<Id> props;
    Id sup;
  };
  std::vector<ChainInfo> chains_;

  std::vector<Record> records_;
  std::vector<Id> premise_pool_;
  std::unordered_map<FactKey, Id, FactKeyHash> index_;
  std::vector<Id> worklist_;
  std::size_t head_ = 0;

  // Concept-indexed.
  std::vector<std::vector<Id>> sub_out_, sub_in_;
  std::vector<std::vector<std::pair<Id, Id>>> disj_;  // (other, fact id)
  std::vector<std::vector<Id>> conj_of_, disj_of_;    // intersections / unions containing
  std::vector<std::vector<Id>> exists_by_filler_;     // Some concepts by filler
  std::vector<std::vector<Id>> type_by_class_;
  std::vector<std::vector<Id>> dom_by_class_, rng_by_class_;
  // Property-indexed.
  std::vector<std::vector<Id>> subprop_out_, subprop_in_, inv_, dom_, rng_;
  std::vector<std::vector<Id>> some_by_prop_, all_by_prop_, existential_by_prop_;
  std::vector<std::vector<std::pair<Id, std::uint32_t>>> chains_by_prop_;
  std::vector<std::vector<std::pair<Id, Id>>> rel_by_prop_;
  // Individual-indexed.
  std::vector<std::vector<Id>> type_of_;
  std::unordered_map<std::uint64_t, std::vector<Id>> rel_out_, rel_in_;
};

}  // namespace kgsaf::detail
