#include "reuse/frontend.hpp"

#include "reuse/error.hpp"
#include "reuse/lexer.hpp"
#include "reuse/scanner.hpp"

#include <fstream>
#include <sstream>

namespace reuse {

std::optional<Dialect> dialect_for_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".h" || ext == ".hpp" || ext == ".hh" || ext == ".cc" || ext == ".cpp" || ext == ".cxx") {
        return Dialect::kCxxTemplates;
    }
    if (ext == ".java") {
        return Dialect::kJavaGenerics;
    }
    return std::nullopt;
}

ParsedFile parse_source(std::string_view text, std::string path, Dialect dialect) {
    LexResult lexed = tokenize(text, dialect);
    ParsedFile parsed;
    parsed.facts = scan_declarations(lexed.tokens, dialect);
    parsed.file.path = std::move(path);
    parsed.file.dialect = dialect;
    parsed.file.byte_count = text.size();

    auto& diags = parsed.file.diagnostics;
    diags = std::move(lexed.diagnostics);
    diags.insert(diags.end(), parsed.facts.diagnostics.begin(), parsed.facts.diagnostics.end());
    parsed.facts.diagnostics.clear();
    for (auto& d : diags) {
        d.file = parsed.file.path;
    }
    for (auto& c : parsed.facts.classes) {
        c.file = parsed.file.path;
    }
    for (auto& m : parsed.facts.methods) {
        m.file = parsed.file.path;
    }
    return parsed;
}

ParsedFile parse_file(const std::filesystem::path& path, Dialect dialect) {
    std::error_code ec;
    if (std::filesystem::is_directory(path, ec)) {
        throw IoError("cannot read " + path.generic_string() + ": is a directory");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.generic_string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading " + path.generic_string());
    }
    return parse_source(buffer.str(), path.generic_string(), dialect);
}

}  // namespace reuse
