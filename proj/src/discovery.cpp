#include "reuse/discovery.hpp"

#include "reuse/error.hpp"
#include "reuse/frontend.hpp"

#include <algorithm>
#include <set>

namespace fs = std::filesystem;

namespace reuse {

namespace {

class Walker {
public:
    Walker(std::span<const Glob> include, std::span<const Glob> exclude, std::optional<Dialect> dialect_override,
           Discovery& out)
        : include_(include), exclude_(exclude), override_(dialect_override), out_(out) {}

    void walk_root(const fs::path& root) {
        std::error_code ec;
        const auto status = fs::status(root, ec);
        if (ec || !fs::exists(status)) {
            throw IoError("cannot read root " + root.generic_string() + ": no such file or directory");
        }
        if (fs::is_directory(status)) {
            walk_dir(root, root);
        } else {
            consider(root, root.filename().generic_string());
        }
    }

private:
    void warn(const fs::path& path, std::string message) {
        out_.diagnostics.push_back({path.generic_string(), 0, Severity::kWarn, std::move(message)});
    }

    void walk_dir(const fs::path& root, const fs::path& dir) {
        std::error_code ec;
        const auto canonical = fs::canonical(dir, ec);
        if (ec) {
            warn(dir, "cannot resolve directory: " + ec.message());
            return;
        }
        if (!visited_.insert(canonical).second) {
            warn(dir, "directory already visited (symlink cycle or overlapping root), skipped");
            return;
        }

        std::vector<fs::directory_entry> entries;
        fs::directory_iterator it(dir, fs::directory_options::skip_permission_denied, ec);
        if (ec) {
            if (dir == root) {
                throw IoError("cannot read root " + root.generic_string() + ": " + ec.message());
            }
            warn(dir, "cannot read directory: " + ec.message());
            return;
        }
        for (; it != fs::directory_iterator(); it.increment(ec)) {
            if (ec) {
                warn(dir, "error while listing directory: " + ec.message());
                break;
            }
            entries.push_back(*it);
        }
        std::sort(entries.begin(), entries.end(),
                  [](const auto& a, const auto& b) { return a.path() < b.path(); });

        for (const auto& entry : entries) {
            std::error_code type_ec;
            if (entry.is_directory(type_ec)) {
                walk_dir(root, entry.path());
            } else if (entry.is_regular_file(type_ec)) {
                consider(entry.path(), entry.path().lexically_relative(root).generic_string());
            }
        }
    }

    void consider(const fs::path& path, const std::string& relative) {
        const auto matches = [&](const Glob& g) { return g.matches(relative); };
        const auto by_extension = dialect_for_path(path);
        if (include_.empty() ? !by_extension : std::none_of(include_.begin(), include_.end(), matches)) {
            return;
        }
        if (std::any_of(exclude_.begin(), exclude_.end(), matches)) {
            return;
        }
        const auto dialect = override_ ? override_ : by_extension;
        if (!dialect) {
            return;
        }
        out_.files.push_back({path.generic_string(), *dialect});
    }

    std::span<const Glob> include_;
    std::span<const Glob> exclude_;
    std::optional<Dialect> override_;
    Discovery& out_;
    std::set<fs::path> visited_;
};

}  // namespace

Discovery discover_files(std::span<const fs::path> roots, std::span<const Glob> include,
                         std::span<const Glob> exclude, std::optional<Dialect> dialect_override) {
    Discovery result;
    Walker walker(include, exclude, dialect_override, result);
    for (const auto& root : roots) {
        walker.walk_root(root);
    }
    auto& files = result.files;
    std::sort(files.begin(), files.end(),
              [](const DiscoveredFile& a, const DiscoveredFile& b) { return a.path < b.path; });
    files.erase(std::unique(files.begin(), files.end(),
                            [](const DiscoveredFile& a, const DiscoveredFile& b) { return a.path == b.path; }),
                files.end());
    std::sort(result.diagnostics.begin(), result.diagnostics.end());
    return result;
}

}  // namespace reuse
