#include "support/synthetic.hpp"

#include <algorithm>
#include <set>

#include "kgsaf/rdf/owl.hpp"

namespace kgsaf::gen {

namespace {

struct Prop {
  std::string iri;
  std::size_t domain, range;
};

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

}  // namespace

SyntheticKg synthetic_kg(Rng& rng, const SyntheticOptions& opt) {
  SyntheticKg kg;
  const std::size_t budget = std::max<std::size_t>(opt.schema_axioms, 20);
  const std::size_t nc = std::max<std::size_t>(8, budget * 2 / 5);

  // Random recursive tree rooted at class 0.
  std::vector<std::size_t> parent(nc, 0), depth(nc, 0);
  std::vector<std::vector<std::size_t>> children(nc);
  for (std::size_t i = 1; i < nc; ++i) {
    parent[i] = pick(rng, i);
    depth[i] = depth[parent[i]] + 1;
    children[parent[i]].push_back(i);
    kg.schema.add(Axiom::sub_class_of(cls(i), cls(parent[i])));
  }
  std::vector<std::size_t> shallow;
  for (std::size_t i = 0; i < nc; ++i) {
    if (depth[i] <= 2) shallow.push_back(i);
  }
  auto under = [&](std::size_t c, std::size_t a) {
    while (true) {
      if (c == a) return true;
      if (c == 0) return false;
      c = parent[c];
    }
  };

  std::size_t disjoints = budget / 10;
  for (std::size_t p = 0; p < nc && disjoints > 0; ++p) {
    for (std::size_t i = 0; i + 1 < children[p].size() && disjoints > 0; i += 2, --disjoints) {
      kg.schema.add(Axiom::disjoint_classes({cls(children[p][i]), cls(children[p][i + 1])}));
    }
  }

  // Typed properties; every fifth gets an inverse partner and a subproperty.
  std::vector<Prop> props;
  const std::size_t np = std::max<std::size_t>(4, budget / 12);
  for (std::size_t i = 0; props.size() < np; ++i) {
    Prop p{prop(props.size()), shallow[pick(rng, shallow.size())], shallow[pick(rng, shallow.size())]};
    kg.schema.add(Axiom::object_property_domain(p.iri, cls(p.domain)));
    kg.schema.add(Axiom::object_property_range(p.iri, cls(p.range)));
    props.push_back(p);
    if (i % 5 == 0) {
      Prop q{prop(props.size()), p.range, p.domain};
      kg.schema.add(Axiom::inverse_object_properties(p.iri, q.iri));
      kg.schema.add(Axiom::object_property_domain(q.iri, cls(q.domain)));
      kg.schema.add(Axiom::object_property_range(q.iri, cls(q.range)));
      props.push_back(q);
      Prop r{prop(props.size()), p.domain, p.range};
      kg.schema.add(Axiom::sub_object_property_of(r.iri, p.iri));
      props.push_back(r);
    }
  }
  // Restrictions compatible with the typing, then unions, up to the budget.
  for (std::size_t guard = 0; kg.schema.size() < budget && guard < budget * 20; ++guard) {
    const Prop& p = props[pick(rng, props.size())];
    const std::size_t c = pick(rng, nc);
    if (!under(c, p.domain)) continue;
    if (guard % 4 == 0) {
      kg.schema.add(Axiom::sub_class_of(cls(c), ClassExpression::all_values_from(p.iri, cls(p.range))));
    } else if (guard % 7 == 0 && !children[p.range].empty()) {
      kg.schema.add(Axiom::sub_class_of(
          cls(children[p.range][0]), ClassExpression::union_of({cls(p.range), cls(children[p.range].back())})));
    } else {
      kg.schema.add(Axiom::sub_class_of(cls(c), ClassExpression::some_values_from(p.iri, cls(p.range))));
    }
  }

  // Individuals with one class each, indexed by shallow ancestor.
  const std::size_t ni = opt.individuals ? opt.individuals : std::max<std::size_t>(10, opt.triples / 5);
  std::vector<std::vector<std::size_t>> members(nc);
  for (std::size_t x = 0; x < ni; ++x) {
    const std::size_t c = pick(rng, nc);
    kg.data.add(Axiom::class_assertion(ind(x), cls(c)));
    for (std::size_t a = c;; a = parent[a]) {
      if (depth[a] <= 2) members[a].push_back(x);
      if (a == 0) break;
    }
  }
  std::vector<const Prop*> usable;
  for (const auto& p : props) {
    if (!members[p.domain].empty() && !members[p.range].empty()) usable.push_back(&p);
  }
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t guard = 0; seen.size() < opt.triples && guard < opt.triples * 20 && !usable.empty(); ++guard) {
    const std::size_t pi = pick(rng, usable.size());
    const Prop& p = *usable[pi];
    const std::size_t s = members[p.domain][pick(rng, members[p.domain].size())];
    const std::size_t o = members[p.range][pick(rng, members[p.range].size())];
    if (s == o || !seen.insert({s, pi, o}).second) continue;
    kg.data.add(Axiom::object_property_assertion(ind(s), p.iri, ind(o)));
  }

  if (opt.seed_clash) {
    for (std::size_t p = 0; p < nc; ++p) {
      if (children[p].size() < 2) continue;
      // Any Disjoint pair among the siblings.
      const Axiom d = Axiom::disjoint_classes({cls(children[p][0]), cls(children[p][1])});
      if (!kg.schema.contains(d)) continue;
      const std::string z = iri("clash", 0);
      kg.clash = {Axiom::class_assertion(z, cls(children[p][0])), Axiom::class_assertion(z, cls(children[p][1]))};
      kg.data.add_all(kg.clash);
      // Relations so the individual survives extraction.
      const std::string y = ind(0);
      const std::string q = iri("clashProp", 0);
      kg.data.add(Axiom::object_property_assertion(z, q, y));
      kg.data.add(Axiom::object_property_assertion(y, q, z));
      break;
    }
  }
  return kg;
}

void write_kg(const SyntheticKg& kg, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  rdf::write_ontology(kg.schema, dir / "schema.ttl");
  rdf::write_ontology(kg.data, dir / "data.nt");
}

}  // namespace kgsaf::gen
