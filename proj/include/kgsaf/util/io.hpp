#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace kgsaf::io {

std::string read_file(const std::filesystem::path& path);
// Writes through a temporary sibling and renames, so readers never observe a partial file.
void write_file(const std::filesystem::path& path, std::string_view contents);

// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace kgsaf::io
