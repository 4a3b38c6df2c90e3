#pragma once

#include <string>
#include <string_view>

#include "kgsaf/rdf/document.hpp"

namespace kgsaf::rdf::detail {

std::size_t read_ntriples(std::string_view text, const TripleSink& sink, const std::string& base);
std::size_t read_turtle(std::string_view text, const TripleSink& sink, const std::string& base);
std::size_t read_rdfxml(std::string_view text, const TripleSink& sink, const std::string& base);

}  // namespace kgsaf::rdf::detail
