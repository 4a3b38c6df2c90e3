#include "engine.hpp"

#include <algorithm>
#include <set>

namespace kgsaf::detail {

namespace {

using K = ClassExpression::Kind;

const std::vector<Id> kEmpty;

template <typename T>
void ensure(std::vector<std::vector<T>>& v, std::size_t n) {
  if (v.size() < n) v.resize(n);
}

}  // namespace

Engine::Engine(EngineOptions options) : options_(options) {
  intern_concept(ClassExpression::top());
  intern_concept(ClassExpression::bottom());
}

// ---------------------------------------------------------------------------
// Interning

Id Engine::intern_concept(const ClassExpression& e) {
  if (auto it = concept_ids_.find(e); it != concept_ids_.end()) return it->second;
  Concept c{e.kind(), kNone, e.cardinality(), {}};
  if (e.is_restriction()) c.property = intern_property(e.property());
  if (!e.is_named() && !e.is_top() && !e.is_bottom()) {
    for (const auto& op : e.operands()) c.operands.push_back(intern_concept(op));
  }
  const Id id = static_cast<Id>(concepts_.size());
  concepts_.push_back(c);
  concept_exprs_.push_back(e);
  concept_ids_.emplace(e, id);
  const std::size_t n = concepts_.size();
  for (auto* v : {&sub_out_, &sub_in_, &conj_of_, &disj_of_, &exists_by_filler_, &type_by_class_, &dom_by_class_,
                  &rng_by_class_}) {
    ensure(*v, n);
  }
  ensure(disj_, n);

  const Concept& info = concepts_[id];
  switch (info.kind) {
    case K::IntersectionOf:
      for (Id op : info.operands) conj_of_[op].push_back(id);
      break;
    case K::UnionOf:
      for (Id op : info.operands) disj_of_[op].push_back(id);
      break;
    case K::SomeValuesFrom:
      exists_by_filler_[info.operands[0]].push_back(id);
      some_by_prop_[info.property].push_back(id);
      break;
    case K::AllValuesFrom: all_by_prop_[info.property].push_back(id); break;
    default: break;
  }
  if (existential(id)) existential_by_prop_[info.property].push_back(id);

  static_fact({FactKind::Sub, id, id});
  if (id != kTop) static_fact({FactKind::Sub, id, kTop});
  switch (info.kind) {
    case K::IntersectionOf:
      for (Id op : info.operands) static_fact({FactKind::Sub, id, op});
      break;
    case K::UnionOf:
      for (Id op : info.operands) static_fact({FactKind::Sub, op, id});
      break;
    case K::ComplementOf:
      static_fact({FactKind::Disj, id, info.operands[0], 1});
      static_fact({FactKind::Disj, info.operands[0], id, 1});
      break;
    default: break;
  }
  return id;
}

Id Engine::intern_property(const std::string& iri) {
  if (auto it = property_ids_.find(iri); it != property_ids_.end()) return it->second;
  const Id id = static_cast<Id>(properties_.size());
  properties_.push_back(iri);
  property_ids_.emplace(iri, id);
  const std::size_t n = properties_.size();
  for (auto* v : {&subprop_out_, &subprop_in_, &inv_, &dom_, &rng_, &some_by_prop_, &all_by_prop_,
                  &existential_by_prop_}) {
    ensure(*v, n);
  }
  ensure(chains_by_prop_, n);
  ensure(rel_by_prop_, n);
  static_fact({FactKind::SubProp, id, id});
  return id;
}

Id Engine::intern_individual(const std::string& iri) {
  if (auto it = individual_ids_.find(iri); it != individual_ids_.end()) return it->second;
  const Id id = static_cast<Id>(individuals_.size());
  individuals_.push_back(iri);
  individual_ids_.emplace(iri, id);
  ensure(type_of_, individuals_.size());
  static_fact({FactKind::Type, id, kTop});
  return id;
}

Id Engine::find_concept(const ClassExpression& e) const {
  auto it = concept_ids_.find(e);
  return it == concept_ids_.end() ? kNone : it->second;
}

Id Engine::find_property(const std::string& iri) const {
  auto it = property_ids_.find(iri);
  return it == property_ids_.end() ? kNone : it->second;
}

Id Engine::find_individual(const std::string& iri) const {
  auto it = individual_ids_.find(iri);
  return it == individual_ids_.end() ? kNone : it->second;
}

bool Engine::existential(Id c) const {
  const Concept& info = concepts_[c];
  if (info.kind == K::SomeValuesFrom) return true;
  return (info.kind == K::MinCardinality || info.kind == K::ExactCardinality) && info.n >= 1;
}

// ---------------------------------------------------------------------------
// Axioms

void Engine::add(const Axiom& axiom) {
  const std::size_t ax = axioms_.size();
  axioms_.push_back(axiom);
  const auto& cls = axiom.classes();
  const auto& props = axiom.properties();
  switch (axiom.kind()) {
    case AxiomKind::SubClassOf:
      assert_fact({FactKind::Sub, intern_concept(cls[0]), intern_concept(cls[1])}, ax);
      break;
    case AxiomKind::EquivalentClasses: {
      std::vector<Id> ids;
      for (const auto& c : cls) ids.push_back(intern_concept(c));
      for (Id a : ids) {
        for (Id b : ids) {
          if (a != b) assert_fact({FactKind::Sub, a, b}, ax);
        }
      }
      break;
    }
    case AxiomKind::DisjointClasses: {
      std::vector<Id> ids;
      for (const auto& c : cls) ids.push_back(intern_concept(c));
      for (Id a : ids) {
        for (Id b : ids) {
          if (a != b) assert_fact({FactKind::Disj, a, b, 0}, ax);
        }
      }
      break;
    }
    case AxiomKind::ClassAssertion: {
      const Id x = intern_individual(axiom.individual());
      assert_fact({FactKind::Type, x, intern_concept(cls[0])}, ax);
      break;
    }
    case AxiomKind::ObjectPropertyAssertion: {
      const Id x = intern_individual(axiom.subject());
      const Id y = intern_individual(axiom.object());
      assert_fact({FactKind::Rel, x, intern_property(axiom.property()), y}, ax);
      break;
    }
    case AxiomKind::SubObjectPropertyOf:
      assert_fact({FactKind::SubProp, intern_property(props[0]), intern_property(props[1])}, ax);
      break;
    case AxiomKind::EquivalentObjectProperties: {
      std::vector<Id> ids;
      for (const auto& p : props) ids.push_back(intern_property(p));
      for (Id a : ids) {
        for (Id b : ids) {
          if (a != b) assert_fact({FactKind::SubProp, a, b}, ax);
        }
      }
      break;
    }
    case AxiomKind::InverseObjectProperties: {
      const Id p = intern_property(props[0]);
      const Id q = intern_property(props[1]);
      assert_fact({FactKind::Inv, p, q}, ax);
      assert_fact({FactKind::Inv, q, p}, ax);
      break;
    }
    case AxiomKind::ObjectPropertyDomain:
      assert_fact({FactKind::Dom, intern_property(props[0]), intern_concept(cls[0])}, ax);
      break;
    case AxiomKind::ObjectPropertyRange:
      assert_fact({FactKind::Rng, intern_property(props[0]), intern_concept(cls[0])}, ax);
      break;
    case AxiomKind::Characteristic:
      assert_fact({FactKind::Char, intern_property(props[0]), static_cast<Id>(axiom.characteristic())}, ax);
      break;
    case AxiomKind::SubPropertyChainOf: {
      ChainInfo chain;
      for (const auto& p : axiom.chain()) chain.props.push_back(intern_property(p));
      chain.sup = intern_property(axiom.super_property());
      const Id n = static_cast<Id>(chains_.size());
      for (std::uint32_t i = 0; i < chain.props.size(); ++i) chains_by_prop_[chain.props[i]].push_back({n, i});
      chains_.push_back(std::move(chain));
      assert_fact({FactKind::Chain, n, 0}, ax);
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Fact store

Id Engine::insert(FactKey k, Rule rule, std::size_t axiom, const Id* premises, std::size_t count) {
  auto [it, inserted] = index_.try_emplace(k, static_cast<Id>(records_.size()));
  if (!inserted) return kNone;
  Record r{k, rule, static_cast<std::uint32_t>(axiom), static_cast<std::uint32_t>(premise_pool_.size()),
           static_cast<std::uint32_t>(count)};
  premise_pool_.insert(premise_pool_.end(), premises, premises + count);
  records_.push_back(r);
  index(it->second);
  worklist_.push_back(it->second);
  return it->second;
}

void Engine::assert_fact(FactKey k, std::size_t axiom) { insert(k, Rule::Asserted, axiom, nullptr, 0); }
void Engine::static_fact(FactKey k) { insert(k, Rule::Static, 0, nullptr, 0); }
void Engine::derive(FactKey k, std::initializer_list<Id> premises) {
  if (index_.contains(k)) return;
  insert(k, Rule::Derived, 0, premises.begin(), premises.size());
}
void Engine::derive(FactKey k, const std::vector<Id>& premises) {
  if (index_.contains(k)) return;
  insert(k, Rule::Derived, 0, premises.data(), premises.size());
}

void Engine::index(Id id) {
  const FactKey& k = records_[id].key;
  switch (k.kind) {
    case FactKind::Sub:
      sub_out_[k.a].push_back(k.b);
      sub_in_[k.b].push_back(k.a);
      break;
    case FactKind::Disj: disj_[k.a].push_back({k.b, id}); break;
    case FactKind::SubProp:
      subprop_out_[k.a].push_back(k.b);
      subprop_in_[k.b].push_back(k.a);
      break;
    case FactKind::Inv: inv_[k.a].push_back(k.b); break;
    case FactKind::Dom:
      dom_[k.a].push_back(k.b);
      dom_by_class_[k.b].push_back(k.a);
      break;
    case FactKind::Rng:
      rng_[k.a].push_back(k.b);
      rng_by_class_[k.b].push_back(k.a);
      break;
    case FactKind::Type:
      type_of_[k.a].push_back(k.b);
      type_by_class_[k.b].push_back(k.a);
      break;
    case FactKind::Rel:
      rel_out_[pair_key(k.a, k.b)].push_back(k.c);
      rel_in_[pair_key(k.c, k.b)].push_back(k.a);
      rel_by_prop_[k.b].push_back({k.a, k.c});
      break;
    default: break;
  }
}

const std::vector<Id>& Engine::rel_out(Id x, Id p) const {
  auto it = rel_out_.find(pair_key(x, p));
  return it == rel_out_.end() ? kEmpty : it->second;
}

const std::vector<Id>& Engine::rel_in(Id y, Id p) const {
  auto it = rel_in_.find(pair_key(y, p));
  return it == rel_in_.end() ? kEmpty : it->second;
}

// ---------------------------------------------------------------------------
// Rules

void Engine::run() {
  while (head_ < worklist_.size()) process(worklist_[head_++]);
}

void Engine::process(Id f) {
  const FactKey k = records_[f].key;
  switch (k.kind) {
    case FactKind::Sub: on_sub(f, k.a, k.b); break;
    case FactKind::Disj: on_disj(f, k.a, k.b); break;
    case FactKind::SubProp: on_subprop(f, k.a, k.b); break;
    case FactKind::Inv: on_inv(f, k.a, k.b); break;
    case FactKind::Dom: on_dom(f, k.a, k.b); break;
    case FactKind::Rng: on_rng(f, k.a, k.b); break;
    case FactKind::Char: on_char(f, k.a, static_cast<Characteristic>(k.b)); break;
    case FactKind::UnsatProp: on_unsat_prop(f, k.a); break;
    case FactKind::Type:
      if (options_.abox) on_type(f, k.a, k.b);
      break;
    case FactKind::Rel:
      if (options_.abox) on_rel(f, k.a, k.b, k.c);
      break;
    case FactKind::Chain: break;
  }
}

void Engine::on_sub(Id f, Id a, Id b) {
  // Transitivity, both directions. Copies guard against reallocation while deriving.
  {
    const std::vector<Id> outs = sub_out_[b];
    for (Id d : outs) {
      if (d != b) derive({FactKind::Sub, a, d}, {f, get(FactKind::Sub, b, d)});
    }
    const std::vector<Id> ins = sub_in_[a];
    for (Id c : ins) {
      if (c != a) derive({FactKind::Sub, c, b}, {get(FactKind::Sub, c, a), f});
    }
  }
  if (b == kBottom) {
    // ∃r.a with unsatisfiable a is unsatisfiable.
    const std::vector<Id> somes = exists_by_filler_[a];
    for (Id s : somes) derive({FactKind::Sub, s, kBottom}, {f});
    for (Id c = 0; c < concepts_.size(); ++c) {
      const Concept& info = concepts_[c];
      if (c != kBottom && info.kind != K::SomeValuesFrom && existential(c) && info.operands[0] == a) {
        derive({FactKind::Sub, c, kBottom}, {f});
      }
    }
    // Properties whose domain or range is unsatisfiable.
    const std::vector<Id> doms = dom_by_class_[a];
    for (Id p : doms) derive({FactKind::UnsatProp, p, 0}, {get(FactKind::Dom, p, a), f});
    const std::vector<Id> rngs = rng_by_class_[a];
    for (Id p : rngs) derive({FactKind::UnsatProp, p, 0}, {get(FactKind::Rng, p, a), f});
  }
  check_intersections_sub(a, b);
  check_unions(a, b);
  // Disjointness: a ⊑ b, a ⊑ e, b disjoint e.
  {
    const auto partners = disj_[b];
    for (const auto& [e, disj_fact] : partners) {
      const Id other = get(FactKind::Sub, a, e);
      if (other != kNone) derive({FactKind::Sub, a, kBottom}, {f, other, disj_fact});
    }
  }
  // Existential monotonicity: a ⊑ b, r ⊑ s gives ∃r.a ⊑ ∃s.b.
  if (!exists_by_filler_[a].empty() && !exists_by_filler_[b].empty()) {
    const std::vector<Id> lhs = exists_by_filler_[a];
    const std::vector<Id> rhs = exists_by_filler_[b];
    for (Id s1 : lhs) {
      for (Id s2 : rhs) {
        const Id sp = get(FactKind::SubProp, concepts_[s1].property, concepts_[s2].property);
        if (sp != kNone) derive({FactKind::Sub, s1, s2}, {f, sp});
      }
    }
  }
  if (options_.abox) {
    const std::vector<Id> xs = type_by_class_[a];
    for (Id x : xs) derive({FactKind::Type, x, b}, {get(FactKind::Type, x, a), f});
  }
}

void Engine::check_intersections_sub(Id a, Id changed) {
  const std::vector<Id> inters = conj_of_[changed];
  for (Id inter : inters) {
    std::vector<Id> premises;
    bool all = true;
    for (Id op : concepts_[inter].operands) {
      const Id s = get(FactKind::Sub, a, op);
      if (s == kNone) {
        all = false;
        break;
      }
      premises.push_back(s);
    }
    if (all) derive({FactKind::Sub, a, inter}, premises);
  }
}

void Engine::check_unions(Id changed, Id b) {
  const std::vector<Id> unions = disj_of_[changed];
  for (Id u : unions) {
    if (u == b) continue;
    std::vector<Id> premises;
    bool all = true;
    for (Id op : concepts_[u].operands) {
      const Id s = get(FactKind::Sub, op, b);
      if (s == kNone) {
        all = false;
        break;
      }
      premises.push_back(s);
    }
    if (all) derive({FactKind::Sub, u, b}, premises);
  }
}

void Engine::on_disj(Id f, Id a, Id b) {
  const std::vector<Id> subs = sub_in_[a];
  for (Id c : subs) {
    const Id cb = get(FactKind::Sub, c, b);
    if (cb != kNone) derive({FactKind::Sub, c, kBottom}, {get(FactKind::Sub, c, a), cb, f});
  }
}

void Engine::on_subprop(Id f, Id p, Id q) {
  if (p != q) {
    const std::vector<Id> outs = subprop_out_[q];
    for (Id r : outs) {
      if (r != q) derive({FactKind::SubProp, p, r}, {f, get(FactKind::SubProp, q, r)});
    }
    const std::vector<Id> ins = subprop_in_[p];
    for (Id o : ins) {
      if (o != p) derive({FactKind::SubProp, o, q}, {get(FactKind::SubProp, o, p), f});
    }
    // Domain and range are inherited downwards.
    const std::vector<Id> doms = dom_[q];
    for (Id c : doms) derive({FactKind::Dom, p, c}, {get(FactKind::Dom, q, c), f});
    const std::vector<Id> rngs = rng_[q];
    for (Id c : rngs) derive({FactKind::Rng, p, c}, {get(FactKind::Rng, q, c), f});
    // Characteristics and inverses carry over between equivalent properties.
    const Id back = get(FactKind::SubProp, q, p);
    if (back != kNone) {
      for (Characteristic ch : kAllCharacteristics) {
        const Id from_p = get(FactKind::Char, p, static_cast<Id>(ch));
        if (from_p != kNone) derive({FactKind::Char, q, static_cast<Id>(ch)}, {from_p, f, back});
        const Id from_q = get(FactKind::Char, q, static_cast<Id>(ch));
        if (from_q != kNone) derive({FactKind::Char, p, static_cast<Id>(ch)}, {from_q, f, back});
      }
      const std::vector<Id> inv_p = inv_[p];
      for (Id x : inv_p) derive({FactKind::Inv, q, x}, {get(FactKind::Inv, p, x), f, back});
      const std::vector<Id> inv_q = inv_[q];
      for (Id x : inv_q) derive({FactKind::Inv, p, x}, {get(FactKind::Inv, q, x), f, back});
    }
    // Inverses of sub/super properties: p⁻ ⊑ q⁻.
    const std::vector<Id> ip = inv_[p];
    const std::vector<Id> iq = inv_[q];
    for (Id x : ip) {
      for (Id y : iq) derive({FactKind::SubProp, x, y}, {get(FactKind::Inv, p, x), f, get(FactKind::Inv, q, y)});
    }
    const Id uq = get(FactKind::UnsatProp, q, 0);
    if (uq != kNone) derive({FactKind::UnsatProp, p, 0}, {f, uq});
    // Existential monotonicity over the property.
    const std::vector<Id> somes_p = some_by_prop_[p];
    const std::vector<Id> somes_q = some_by_prop_[q];
    for (Id s1 : somes_p) {
      for (Id s2 : somes_q) {
        const Id sd = get(FactKind::Sub, concepts_[s1].operands[0], concepts_[s2].operands[0]);
        if (sd != kNone) derive({FactKind::Sub, s1, s2}, {sd, f});
      }
    }
    if (options_.abox) {
      const auto rels = rel_by_prop_[p];
      for (const auto& [x, y] : rels) derive({FactKind::Rel, x, q, y}, {get(FactKind::Rel, x, p, y), f});
    }
  }
}

void Engine::on_inv(Id f, Id p, Id q) {
  derive({FactKind::Inv, q, p}, {f});
  // The inverse of an inverse is equivalent to the property.
  const std::vector<Id> others = inv_[p];
  for (Id r : others) {
    if (r != q) {
      const Id pr = get(FactKind::Inv, p, r);
      derive({FactKind::SubProp, q, r}, {f, pr});
      derive({FactKind::SubProp, r, q}, {f, pr});
    }
  }
  // As first premise of Inv(p,q), SubProp(p,r), Inv(r,s) -> SubProp(q,s).
  {
    const std::vector<Id> supers = subprop_out_[p];
    for (Id r : supers) {
      if (r == p) continue;
      const std::vector<Id> invs = inv_[r];
      for (Id s : invs) derive({FactKind::SubProp, q, s}, {f, get(FactKind::SubProp, p, r), get(FactKind::Inv, r, s)});
    }
  }
  // As third premise (r = p, s = q).
  {
    const std::vector<Id> subs = subprop_in_[p];
    for (Id o : subs) {
      if (o == p) continue;
      const std::vector<Id> invs = inv_[o];
      for (Id x : invs) derive({FactKind::SubProp, x, q}, {get(FactKind::Inv, o, x), get(FactKind::SubProp, o, p), f});
    }
  }
  // Domain of p is the range of its inverse and vice versa.
  const std::vector<Id> doms = dom_[p];
  for (Id c : doms) derive({FactKind::Rng, q, c}, {f, get(FactKind::Dom, p, c)});
  const std::vector<Id> rngs = rng_[p];
  for (Id c : rngs) derive({FactKind::Dom, q, c}, {f, get(FactKind::Rng, p, c)});
  // Inverse transfers to properties equivalent to q.
  const std::vector<Id> supers_q = subprop_out_[q];
  for (Id r : supers_q) {
    if (r == q) continue;
    const Id back = get(FactKind::SubProp, r, q);
    if (back != kNone) derive({FactKind::Inv, p, r}, {f, get(FactKind::SubProp, q, r), back});
  }
  const Id up = get(FactKind::UnsatProp, p, 0);
  if (up != kNone) derive({FactKind::UnsatProp, q, 0}, {f, up});
  if (options_.abox) {
    const auto rels = rel_by_prop_[p];
    for (const auto& [x, y] : rels) derive({FactKind::Rel, y, q, x}, {get(FactKind::Rel, x, p, y), f});
  }
}

void Engine::on_dom(Id f, Id p, Id c) {
  const std::vector<Id> subs = subprop_in_[p];
  for (Id o : subs) {
    if (o != p) derive({FactKind::Dom, o, c}, {f, get(FactKind::SubProp, o, p)});
  }
  const std::vector<Id> invs = inv_[p];
  for (Id q : invs) derive({FactKind::Rng, q, c}, {get(FactKind::Inv, p, q), f});
  const Id unsat = get(FactKind::Sub, c, kBottom);
  if (unsat != kNone) derive({FactKind::UnsatProp, p, 0}, {f, unsat});
  // ∃p.D ⊑ domain(p).
  const std::vector<Id> exists = existential_by_prop_[p];
  for (Id e : exists) derive({FactKind::Sub, e, c}, {f});
  if (options_.abox) {
    const auto rels = rel_by_prop_[p];
    for (const auto& [x, y] : rels) derive({FactKind::Type, x, c}, {get(FactKind::Rel, x, p, y), f});
  }
}

void Engine::on_rng(Id f, Id p, Id c) {
  const std::vector<Id> subs = subprop_in_[p];
  for (Id o : subs) {
    if (o != p) derive({FactKind::Rng, o, c}, {f, get(FactKind::SubProp, o, p)});
  }
  const std::vector<Id> invs = inv_[p];
  for (Id q : invs) derive({FactKind::Dom, q, c}, {get(FactKind::Inv, p, q), f});
  const Id unsat = get(FactKind::Sub, c, kBottom);
  if (unsat != kNone) derive({FactKind::UnsatProp, p, 0}, {f, unsat});
  if (options_.abox) {
    const auto rels = rel_by_prop_[p];
    for (const auto& [x, y] : rels) derive({FactKind::Type, y, c}, {get(FactKind::Rel, x, p, y), f});
  }
}

void Engine::on_char(Id f, Id p, Characteristic k) {
  const std::vector<Id> supers = subprop_out_[p];
  for (Id q : supers) {
    if (q == p) continue;
    const Id back = get(FactKind::SubProp, q, p);
    if (back != kNone) derive({FactKind::Char, q, static_cast<Id>(k)}, {f, get(FactKind::SubProp, p, q), back});
  }
  auto conflict = [&](Characteristic other) {
    const Id o = get(FactKind::Char, p, static_cast<Id>(other));
    if (o != kNone) derive({FactKind::UnsatProp, p, 0}, {f, o});
  };
  switch (k) {
    case Characteristic::Symmetric: conflict(Characteristic::Asymmetric); break;
    case Characteristic::Asymmetric:
      conflict(Characteristic::Symmetric);
      conflict(Characteristic::Reflexive);
      break;
    case Characteristic::Reflexive:
      conflict(Characteristic::Irreflexive);
      conflict(Characteristic::Asymmetric);
      break;
    case Characteristic::Irreflexive: conflict(Characteristic::Reflexive); break;
    default: break;
  }
  if (!options_.abox) return;
  const auto rels = rel_by_prop_[p];
  if (k == Characteristic::Symmetric) {
    for (const auto& [x, y] : rels) derive({FactKind::Rel, y, p, x}, {get(FactKind::Rel, x, p, y), f});
  } else if (k == Characteristic::Transitive) {
    for (const auto& [x, y] : rels) {
      const std::vector<Id> next = rel_out(y, p);
      for (Id z : next) {
        derive({FactKind::Rel, x, p, z}, {get(FactKind::Rel, x, p, y), get(FactKind::Rel, y, p, z), f});
      }
    }
  }
}

void Engine::on_unsat_prop(Id f, Id p) {
  const std::vector<Id> subs = subprop_in_[p];
  for (Id o : subs) {
    if (o != p) derive({FactKind::UnsatProp, o, 0}, {get(FactKind::SubProp, o, p), f});
  }
  const std::vector<Id> invs = inv_[p];
  for (Id q : invs) derive({FactKind::UnsatProp, q, 0}, {get(FactKind::Inv, p, q), f});
  const std::vector<Id> exists = existential_by_prop_[p];
  for (Id e : exists) derive({FactKind::Sub, e, kBottom}, {f});
}

void Engine::check_intersections_type(Id x, Id changed) {
  const std::vector<Id> inters = conj_of_[changed];
  for (Id inter : inters) {
    std::vector<Id> premises;
    bool all = true;
    for (Id op : concepts_[inter].operands) {
      const Id t = get(FactKind::Type, x, op);
      if (t == kNone) {
        all = false;
        break;
      }
      premises.push_back(t);
    }
    if (all) derive({FactKind::Type, x, inter}, premises);
  }
}

void Engine::on_type(Id f, Id x, Id c) {
  const std::vector<Id> supers = sub_out_[c];
  for (Id d : supers) {
    if (d != c) derive({FactKind::Type, x, d}, {f, get(FactKind::Sub, c, d)});
  }
  check_intersections_type(x, c);
  const Concept& info = concepts_[c];
  if (info.kind == K::AllValuesFrom) {
    const std::vector<Id> ys = rel_out(x, info.property);
    for (Id y : ys) derive({FactKind::Type, y, info.operands[0]}, {f, get(FactKind::Rel, x, info.property, y)});
  }
  // Some-introduction: w p x with x : c gives w : ∃p.c.
  const std::vector<Id> somes = exists_by_filler_[c];
  for (Id s : somes) {
    const Id p = concepts_[s].property;
    const std::vector<Id> ws = rel_in(x, p);
    for (Id w : ws) derive({FactKind::Type, w, s}, {get(FactKind::Rel, w, p, x), f});
  }
}

void Engine::on_rel(Id f, Id x, Id p, Id y) {
  const std::vector<Id> supers = subprop_out_[p];
  for (Id q : supers) {
    if (q != p) derive({FactKind::Rel, x, q, y}, {f, get(FactKind::SubProp, p, q)});
  }
  const std::vector<Id> invs = inv_[p];
  for (Id q : invs) derive({FactKind::Rel, y, q, x}, {f, get(FactKind::Inv, p, q)});
  const Id sym = get(FactKind::Char, p, static_cast<Id>(Characteristic::Symmetric));
  if (sym != kNone) derive({FactKind::Rel, y, p, x}, {f, sym});
  const Id trans = get(FactKind::Char, p, static_cast<Id>(Characteristic::Transitive));
  if (trans != kNone) {
    const std::vector<Id> next = rel_out(y, p);
    for (Id z : next) derive({FactKind::Rel, x, p, z}, {f, get(FactKind::Rel, y, p, z), trans});
    const std::vector<Id> prev = rel_in(x, p);
    for (Id w : prev) derive({FactKind::Rel, w, p, y}, {get(FactKind::Rel, w, p, x), f, trans});
  }
  if (!chains_by_prop_[p].empty()) extend_chains(f, x, p, y);
  const std::vector<Id> doms = dom_[p];
  for (Id c : doms) derive({FactKind::Type, x, c}, {f, get(FactKind::Dom, p, c)});
  const std::vector<Id> rngs = rng_[p];
  for (Id c : rngs) derive({FactKind::Type, y, c}, {f, get(FactKind::Rng, p, c)});
  const std::vector<Id> somes = some_by_prop_[p];
  for (Id s : somes) {
    const Id t = get(FactKind::Type, y, concepts_[s].operands[0]);
    if (t != kNone) derive({FactKind::Type, x, s}, {f, t});
  }
  const std::vector<Id> alls = all_by_prop_[p];
  for (Id a : alls) {
    const Id t = get(FactKind::Type, x, a);
    if (t != kNone) derive({FactKind::Type, y, concepts_[a].operands[0]}, {t, f});
  }
}

void Engine::extend_chains(Id f, Id x, Id p, Id y) {
  const auto uses = chains_by_prop_[p];
  for (const auto& [chain_no, pos] : uses) {
    const ChainInfo chain = chains_[chain_no];
    const Id chain_fact = get(FactKind::Chain, chain_no, 0);
    // Walk backwards from x over props[pos-1..0], then forwards from y.
    std::vector<std::pair<Id, std::vector<Id>>> starts{{x, {}}};
    for (std::size_t i = pos; i-- > 0;) {
      std::vector<std::pair<Id, std::vector<Id>>> next;
      for (const auto& [node, prem] : starts) {
        for (Id w : rel_in(node, chain.props[i])) {
          auto extended = prem;
          extended.push_back(get(FactKind::Rel, w, chain.props[i], node));
          next.push_back({w, std::move(extended)});
        }
      }
      starts = std::move(next);
    }
    std::vector<std::pair<Id, std::vector<Id>>> ends{{y, {}}};
    for (std::size_t i = pos + 1; i < chain.props.size(); ++i) {
      std::vector<std::pair<Id, std::vector<Id>>> next;
      for (const auto& [node, prem] : ends) {
        for (Id z : rel_out(node, chain.props[i])) {
          auto extended = prem;
          extended.push_back(get(FactKind::Rel, node, chain.props[i], z));
          next.push_back({z, std::move(extended)});
        }
      }
      ends = std::move(next);
    }
    for (const auto& [s, sp] : starts) {
      for (const auto& [e, ep] : ends) {
        std::vector<Id> premises = sp;
        premises.push_back(f);
        premises.insert(premises.end(), ep.begin(), ep.end());
        premises.push_back(chain_fact);
        derive({FactKind::Rel, s, chain.sup, e}, premises);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Clashes

std::vector<ClashRecord> Engine::clashes() const {
  std::vector<ClashRecord> out;
  if (!options_.abox) return out;
  std::set<std::tuple<int, Id, Id, Id, Id>> seen;
  // Participants are ordered by IRI so that replays with other ids agree.
  auto by_iri = [this](Id a, Id b) { return individuals_[a] < individuals_[b]; };
  auto emit = [&](ClashRecord r, std::tuple<int, Id, Id, Id, Id> key) {
    if (seen.insert(key).second) out.push_back(std::move(r));
  };
  for (Id x = 0; x < individuals_.size(); ++x) {
    for (Id a : type_of_[x]) {
      if (a == kBottom) {
        emit(ClashRecord{ClashKind::BottomInstance, {x}, kNone, {kBottom}, {get(FactKind::Type, x, kBottom)}},
             {static_cast<int>(ClashKind::BottomInstance), x, 0, 0, 0});
        continue;
      }
      for (const auto& [b, disj_fact] : disj_[a]) {
        const Id tb = get(FactKind::Type, x, b);
        if (tb == kNone) continue;
        const bool complement = records_[disj_fact].key.c == 1;
        const ClashKind kind = complement ? ClashKind::ComplementInstance : ClashKind::DisjointInstance;
        const bool ordered = concept_exprs_[a] < concept_exprs_[b];
        const Id lo = ordered ? a : b, hi = ordered ? b : a;
        emit(ClashRecord{kind, {x}, kNone, {lo, hi}, {get(FactKind::Type, x, a), tb, disj_fact}},
             {static_cast<int>(kind), x, lo, hi, 0});
      }
    }
  }
  for (Id p = 0; p < properties_.size(); ++p) {
    const Id irr = get(FactKind::Char, p, static_cast<Id>(Characteristic::Irreflexive));
    const Id asym = get(FactKind::Char, p, static_cast<Id>(Characteristic::Asymmetric));
    const Id func = options_.una ? get(FactKind::Char, p, static_cast<Id>(Characteristic::Functional)) : kNone;
    const Id ifunc =
        options_.una ? get(FactKind::Char, p, static_cast<Id>(Characteristic::InverseFunctional)) : kNone;
    if (irr == kNone && asym == kNone && func == kNone && ifunc == kNone) continue;
    for (const auto& [x, y] : rel_by_prop_[p]) {
      const Id r = get(FactKind::Rel, x, p, y);
      if (irr != kNone && x == y) {
        emit(ClashRecord{ClashKind::IrreflexiveSelfLoop, {x}, p, {}, {r, irr}},
             {static_cast<int>(ClashKind::IrreflexiveSelfLoop), x, p, 0, 0});
      }
      if (asym != kNone && x <= y) {
        const Id back = get(FactKind::Rel, y, p, x);
        if (back != kNone) {
          std::vector<Id> premises{r, asym};
          if (back != r) premises.insert(premises.begin() + 1, back);
          const bool ordered = individuals_[x] <= individuals_[y];
          emit(ClashRecord{ClashKind::AsymmetricPair, {ordered ? x : y, ordered ? y : x}, p, {}, premises},
               {static_cast<int>(ClashKind::AsymmetricPair), x, y, p, 0});
        }
      }
    }
    auto fan = [&](Id char_fact, ClashKind kind, bool outgoing) {
      if (char_fact == kNone) return;
      std::set<Id> hubs;
      for (const auto& [x, y] : rel_by_prop_[p]) hubs.insert(outgoing ? x : y);
      for (Id hub : hubs) {
        const std::vector<Id>& targets = outgoing ? rel_out(hub, p) : rel_in(hub, p);
        if (targets.size() < 2) continue;
        std::vector<Id> sorted = targets;
        std::sort(sorted.begin(), sorted.end(), by_iri);
        for (std::size_t i = 0; i < sorted.size(); ++i) {
          for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            const Id y = sorted[i], z = sorted[j];
            const Id r1 = outgoing ? get(FactKind::Rel, hub, p, y) : get(FactKind::Rel, y, p, hub);
            const Id r2 = outgoing ? get(FactKind::Rel, hub, p, z) : get(FactKind::Rel, z, p, hub);
            emit(ClashRecord{kind, {hub, y, z}, p, {}, {r1, r2, char_fact}}, {static_cast<int>(kind), hub, y, z, p});
          }
        }
      }
    };
    fan(func, ClashKind::FunctionalFanOut, true);
    fan(ifunc, ClashKind::InverseFunctionalFanIn, false);
  }
  if (options_.una) {
    for (Id c = 0; c < concepts_.size(); ++c) {
      const Concept& info = concepts_[c];
      if (info.kind != K::MaxCardinality && info.kind != K::ExactCardinality) continue;
      const Id filler = info.operands[0];
      for (Id x : type_by_class_[c]) {
        std::vector<Id> ys;
        for (Id y : rel_out(x, info.property)) {
          if (has(FactKey{FactKind::Type, y, filler})) ys.push_back(y);
        }
        if (ys.size() <= info.n) continue;
        std::sort(ys.begin(), ys.end(), by_iri);
        ys.resize(info.n + 1);
        ClashRecord r{ClashKind::MaxCardinalityViolation, {x}, info.property, {c}, {get(FactKind::Type, x, c)}};
        for (Id y : ys) {
          r.individuals.push_back(y);
          r.premises.push_back(get(FactKind::Rel, x, info.property, y));
          if (filler != kTop) r.premises.push_back(get(FactKind::Type, y, filler));
        }
        emit(std::move(r), {static_cast<int>(ClashKind::MaxCardinalityViolation), x, c, 0, 0});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Support

std::vector<std::size_t> Engine::support(Id fact) const { return support(std::vector<Id>{fact}); }

std::vector<std::size_t> Engine::support(const std::vector<Id>& facts) const {
  std::vector<bool> visited(records_.size(), false);
  std::vector<Id> stack;
  std::set<std::size_t> axioms;
  for (Id f : facts) {
    if (f != kNone) stack.push_back(f);
  }
  while (!stack.empty()) {
    const Id f = stack.back();
    stack.pop_back();
    if (visited[f]) continue;
    visited[f] = true;
    const Record& r = records_[f];
    if (r.rule == Rule::Asserted) {
      axioms.insert(r.axiom);
      // Facts asserted by several axioms keep the first one only.
    }
    for (std::uint32_t i = 0; i < r.premise_count; ++i) stack.push_back(premise_pool_[r.premise_offset + i]);
  }
  return {axioms.begin(), axioms.end()};
}

}  // namespace kgsaf::detail
