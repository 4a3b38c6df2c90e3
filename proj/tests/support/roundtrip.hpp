#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace kgsaf::gen {

struct RoundTrip {
  std::filesystem::path path;
  std::size_t axioms = 0;
  std::size_t unmapped = 0;  // skips other than literals, annotations, data properties
  bool turtle_equal = false;
  bool ntriples_equal = false;
  bool stable_text = false;  // serializing the reparsed ontology gives the same bytes
  bool json_equal = false;
  std::string error;

  bool ok() const {
    return error.empty() && unmapped == 0 && turtle_equal && ntriples_equal && stable_text && json_equal;
  }
};

// Every .ttl, .nt and .owl file under dir, sorted by name.
std::vector<std::filesystem::path> corpus_documents(const std::filesystem::path& dir);

RoundTrip round_trip(const std::filesystem::path& path);

}  // namespace kgsaf::gen
