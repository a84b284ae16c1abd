#pragma once

#include "reuse/source_model.hpp"

#include <filesystem>
#include <optional>
#include <string_view>

namespace reuse {

/// `.h .hpp .hh .cc .cpp .cxx` -> C++, `.java` -> Java, anything else nullopt.
std::optional<Dialect> dialect_for_path(const std::filesystem::path& path);

/// tokenize + scan_declarations over in-memory text, tagged with `path`.
ParsedFile parse_source(std::string_view text, std::string path, Dialect dialect);

/// Reads and scans one file. Throws IoError if the file cannot be read.
ParsedFile parse_file(const std::filesystem::path& path, Dialect dialect);

}  // namespace reuse
