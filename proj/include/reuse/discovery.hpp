#pragma once

#include "reuse/glob.hpp"
#include "reuse/source_model.hpp"

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace reuse {

struct DiscoveredFile {
    std::string path;  ///< root joined with the relative path, generic separators
    Dialect dialect;

    friend bool operator==(const DiscoveredFile&, const DiscoveredFile&) = default;
};

struct Discovery {
    std::vector<DiscoveredFile> files;  ///< sorted by path, unique
    std::vector<ParseDiagnostic> diagnostics;
};

/**
 * Walks each root (a directory, or a single file) and selects source files.
 *
 * Include/exclude globs (path mode) are matched against the path relative
 * to its root. Without include patterns, every file with a known extension
 * is a candidate. `dialect_override` replaces the extension-derived dialect.
 * Symlinked directories are followed once; a cycle yields a WARN and is not
 * re-entered. Throws IoError if a root does not exist.
 */
Discovery discover_files(std::span<const std::filesystem::path> roots, std::span<const Glob> include,
                         std::span<const Glob> exclude,
                         std::optional<Dialect> dialect_override = std::nullopt);

}  // namespace reuse
