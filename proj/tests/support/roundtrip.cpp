#include "support/roundtrip.hpp"

#include <algorithm>
#include <exception>

#include "kgsaf/ml/owl_json.hpp"
#include "kgsaf/rdf/owl.hpp"

namespace kgsaf::gen {

std::vector<std::filesystem::path> corpus_documents(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    auto ext = e.path().extension();
    if (ext == ".ttl" || ext == ".nt" || ext == ".owl") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

RoundTrip round_trip(const std::filesystem::path& path) {
  RoundTrip r;
  r.path = path;
  try {
    auto loaded = rdf::load_ontology(path);
    const Ontology& o = loaded.ontology;
    r.axioms = o.size();
    for (const auto& [reason, n] : loaded.report.skip_reasons) {
      if (reason == rdf::SkipReason::UnrecognizedPattern || reason == rdf::SkipReason::MalformedList)
        r.unmapped += n;
    }

    auto ttl = rdf::serialize(o, rdf::Format::Turtle);
    auto nt = rdf::serialize(o, rdf::Format::NTriples);
    auto from_ttl = rdf::load_ontology_text(ttl, rdf::Format::Turtle).ontology;
    auto from_nt = rdf::load_ontology_text(nt, rdf::Format::NTriples).ontology;
    r.turtle_equal = from_ttl == o;
    r.ntriples_equal = from_nt == o;
    r.stable_text = rdf::serialize(from_ttl, rdf::Format::Turtle) == ttl &&
                    rdf::serialize(from_nt, rdf::Format::NTriples) == nt;

    Ontology::AxiomSet all;
    for (const auto& a : o.axioms()) all.insert(a);
    auto json = owl_to_json(all);
    auto back = json_to_owl(json);
    r.json_equal = back == all && owl_to_json(back) == json;
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace kgsaf::gen
