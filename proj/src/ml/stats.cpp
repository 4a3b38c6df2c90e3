#include "kgsaf/ml/stats.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <set>
#include <string_view>

#include <json.hpp>

namespace kgsaf {

PropertyCategory categorize(double hpt, double tpt) {
  if (hpt < 1.5) return tpt < 1.5 ? PropertyCategory::OneToOne : PropertyCategory::OneToMany;
  return tpt < 1.5 ? PropertyCategory::ManyToOne : PropertyCategory::ManyToMany;
}

double round2(double x) { return std::round(x * 100.0) / 100.0; }

std::array<double, 4> rounded_fractions(const std::array<std::size_t, 4>& counts) {
  const std::size_t total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  std::array<double, 4> out{};
  if (total == 0) return out;
  std::array<long long, 4> hundredths{};
  std::array<std::pair<std::size_t, std::size_t>, 4> rest{};  // (remainder, index)
  long long assigned = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    hundredths[i] = static_cast<long long>(counts[i] * 100 / total);
    rest[i] = {counts[i] * 100 % total, i};
    assigned += hundredths[i];
  }
  // Ties go to the earlier category.
  std::stable_sort(rest.begin(), rest.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < 100; ++i, ++assigned) ++hundredths[rest[i].second];
  for (std::size_t i = 0; i < 4; ++i) out[i] = static_cast<double>(hundredths[i]) / 100.0;
  return out;
}

namespace {

// Open addressing; std::unordered_map is several times slower at a million IRIs.
class Interner {
 public:
  void reserve(std::size_t n) {
    if (n * 2 > slots_.size()) rehash(std::bit_ceil(n * 2));
  }
  std::uint32_t id(std::string_view name) {
    if ((names_.size() + 1) * 2 > slots_.size()) rehash(std::max<std::size_t>(64, slots_.size() * 2));
    const std::size_t h = std::hash<std::string_view>{}(name);
    const auto tag = static_cast<std::uint32_t>(h >> 32);
    const std::size_t mask = slots_.size() - 1;
    for (std::size_t i = h & mask;; i = (i + 1) & mask) {
      Slot& s = slots_[i];
      if (s.id == kEmpty) {
        s = {tag, static_cast<std::uint32_t>(names_.size())};
        names_.push_back(name);
        return s.id;
      }
      if (s.tag == tag && names_[s.id] == name) return s.id;
    }
  }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string_view>& names() const { return names_; }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;
  struct Slot {
    std::uint32_t tag = 0;
    std::uint32_t id = kEmpty;
  };
  void rehash(std::size_t capacity) {
    slots_.assign(capacity, Slot{});
    const std::size_t mask = capacity - 1;
    for (std::uint32_t id = 0; id < names_.size(); ++id) {
      const std::size_t h = std::hash<std::string_view>{}(names_[id]);
      std::size_t i = h & mask;
      while (slots_[i].id != kEmpty) i = (i + 1) & mask;
      slots_[i] = {static_cast<std::uint32_t>(h >> 32), id};
    }
  }
  std::vector<Slot> slots_;
  std::vector<std::string_view> names_;
};

std::size_t distinct(std::vector<std::uint32_t>& v) {
  std::sort(v.begin(), v.end());
  return static_cast<std::size_t>(std::unique(v.begin(), v.end()) - v.begin());
}

void scan(const ClassExpression& e, std::set<ClassExpression::Kind>& kinds) {
  kinds.insert(e.kind());
  for (const auto& o : e.operands()) scan(o, kinds);
}

}  // namespace

StatsReport compute_stats(const std::vector<Axiom>& relations, const Ontology::AxiomSet& types, const Ontology& schema) {
  StatsReport r;
  // Integer ids keep this linear-ish on million-triple inputs.
  Interner individuals, props;
  individuals.reserve(relations.size() + types.size());
  std::vector<std::array<std::uint32_t, 3>> triples;  // (p, s, o)
  triples.reserve(relations.size());
  for (const auto& a : relations) {
    if (a.kind() != AxiomKind::ObjectPropertyAssertion) continue;
    triples.push_back({props.id(a.property()), individuals.id(a.subject()), individuals.id(a.object())});
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());

  std::set<std::string> abox_classes;
  for (const auto& a : types) {
    if (a.kind() != AxiomKind::ClassAssertion) continue;
    ++r.abox.class_assertions;
    individuals.id(a.individual());
    if (a.class_expression().is_named()) abox_classes.insert(a.class_expression().iri());
  }
  r.abox.triples = triples.size();
  r.abox.individuals = individuals.size();
  r.abox.properties = props.size();
  r.abox.classes = abox_classes.size();

  // Per property: heads per tail = n / distinct tails, tails per head = n / distinct heads.
  std::vector<std::uint32_t> heads, tails;
  for (std::size_t i = 0; i < triples.size();) {
    std::size_t j = i;
    heads.clear();
    tails.clear();
    for (; j < triples.size() && triples[j][0] == triples[i][0]; ++j) {
      heads.push_back(triples[j][1]);
      tails.push_back(triples[j][2]);
    }
    const double n = static_cast<double>(j - i);
    const double hpt = n / static_cast<double>(distinct(tails));
    const double tpt = n / static_cast<double>(distinct(heads));
    ++r.abox.category_counts[static_cast<std::size_t>(categorize(hpt, tpt))];
    i = j;
  }
  r.abox.fractions = rounded_fractions(r.abox.category_counts);
  if (props.size() > 0) {
    r.abox.avg_triples_per_property = round2(static_cast<double>(triples.size()) / static_cast<double>(props.size()));
  }

  // Schema.
  Signature sig = schema.vocabulary();
  std::set<std::string> classes(abox_classes), properties;
  for (auto p : props.names()) properties.emplace(p);
  for (const auto& e : sig) {
    if (e.kind == EntityKind::Class) classes.insert(e.iri);
    if (e.kind == EntityKind::ObjectProperty) properties.insert(e.iri);
  }
  std::set<std::string> domains, ranges, functional;
  std::set<AxiomKind> kinds;
  std::set<ClassExpression::Kind> constructors;
  for (const auto& a : schema.axioms()) {
    kinds.insert(a.kind());
    for (const auto& c : a.classes()) scan(c, constructors);
    switch (a.kind()) {
      case AxiomKind::DisjointClasses: ++r.schema.disjoints; break;
      case AxiomKind::SubClassOf:
        ++r.schema.subclasses;
        if (a.super_class().kind() == ClassExpression::Kind::SomeValuesFrom) ++r.schema.existentials;
        if (a.super_class().kind() == ClassExpression::Kind::AllValuesFrom) ++r.schema.universals;
        break;
      case AxiomKind::ObjectPropertyDomain:
        if (!a.class_expression().is_top()) domains.insert(a.property());
        break;
      case AxiomKind::ObjectPropertyRange:
        if (!a.class_expression().is_top()) ranges.insert(a.property());
        break;
      case AxiomKind::Characteristic:
        if (a.characteristic() == Characteristic::Functional) functional.insert(a.property());
        break;
      default: break;
    }
  }
  r.schema.classes = classes.size();
  r.schema.properties = properties.size();
  r.schema.with_domain = domains.size();
  r.schema.with_range = ranges.size();
  r.schema.functional = functional.size();
  for (const auto& p : domains) r.schema.with_both += ranges.contains(p);

  using K = ClassExpression::Kind;
  auto has = [&](AxiomKind k) { return kinds.contains(k); };
  auto uses = [&](K k) { return constructors.contains(k); };
  r.checklist = {
      {"ClassAssertion", r.abox.class_assertions > 0},
      {"SubClassOf", has(AxiomKind::SubClassOf)},
      {"EquivalentClasses", has(AxiomKind::EquivalentClasses)},
      {"DisjointClasses", has(AxiomKind::DisjointClasses)},
      {"UnionOf", uses(K::UnionOf)},
      {"IntersectionOf", uses(K::IntersectionOf)},
      {"ComplementOf", uses(K::ComplementOf)},
      {"Existential Restrictions", uses(K::SomeValuesFrom)},
      {"Universal Restrictions", uses(K::AllValuesFrom)},
      {"Cardinality Restrictions", uses(K::MinCardinality) || uses(K::MaxCardinality) || uses(K::ExactCardinality)},
      {"ObjPropDomain", has(AxiomKind::ObjectPropertyDomain)},
      {"ObjPropRange", has(AxiomKind::ObjectPropertyRange)},
      {"SubObjProp", has(AxiomKind::SubObjectPropertyOf)},
      {"InverseObjProp", has(AxiomKind::InverseObjectProperties)},
      {"EquivalentObjProp", has(AxiomKind::EquivalentObjectProperties)},
      {"ObjPropCharacteristic", has(AxiomKind::Characteristic)},
      {"ObjPropChain", has(AxiomKind::SubPropertyChainOf)},
  };
  return r;
}

namespace {

std::string fixed2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

std::string stats_json(const StatsReport& r, const std::string& name) {
  nlohmann::ordered_json j;
  j["dataset"] = name;
  const auto& a = r.abox;
  j["abox"] = {{"triples", a.triples},
               {"individuals", a.individuals},
               {"properties", a.properties},
               {"classes", a.classes},
               {"class_assertions", a.class_assertions},
               {"1to1", a.fractions[0]},
               {"1toN", a.fractions[1]},
               {"Nto1", a.fractions[2]},
               {"NtoN", a.fractions[3]},
               {"avg_triples_per_property", a.avg_triples_per_property}};
  const auto& s = r.schema;
  j["schema"] = {{"classes", s.classes},         {"disjoints", s.disjoints},     {"subclasses", s.subclasses},
                 {"existentials", s.existentials}, {"universals", s.universals},   {"properties", s.properties},
                 {"domain", s.with_domain},       {"range", s.with_range},        {"both", s.with_both},
                 {"functional", s.functional}};
  auto checklist = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.checklist) checklist[k] = v;
  j["checklist"] = std::move(checklist);
  return j.dump(2) + "\n";
}

std::string stats_markdown(const StatsReport& r, const std::string& name) {
  const auto& a = r.abox;
  const auto& s = r.schema;
  std::string out = "# " + name + "\n\n## ABox\n\n";
  out += "| Triples | Inds | Props | Classes | 1to1 | 1toN | Nto1 | NtoN | Avg Triples | Class Assert. |\n";
  out += "|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  out += "| " + std::to_string(a.triples) + " | " + std::to_string(a.individuals) + " | " +
         std::to_string(a.properties) + " | " + std::to_string(a.classes);
  for (double f : a.fractions) out += " | " + fixed2(f);
  out += " | " + fixed2(a.avg_triples_per_property) + " | " + std::to_string(a.class_assertions) + " |\n\n";
  out += "## Schema\n\n";
  out += "| Classes | Disjoints | Subclass | ⊑∃R.C | ⊑∀R.C | Prop. | Domain | Range | Both | Functional |\n";
  out += "|---:|---:|---:|---:|---:|---:|---:|---:|---:|---:|\n";
  for (std::size_t v : {s.classes, s.disjoints, s.subclasses, s.existentials, s.universals, s.properties,
                        s.with_domain, s.with_range, s.with_both, s.functional}) {
    out += "| " + std::to_string(v) + " ";
  }
  out += "|\n\n## Axiom coverage\n\n| Axiom Type | Present |\n|---|:---:|\n";
  for (const auto& [k, v] : r.checklist) out += "| " + k + " | " + (v ? "yes" : "no") + " |\n";
  return out;
}

}  // namespace kgsaf
