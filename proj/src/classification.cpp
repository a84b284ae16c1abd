#include "reuse/classification.hpp"

#include "reuse/error.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace reuse {

std::string_view to_string(Category category) noexcept {
    switch (category) {
        case Category::kGeneralPurpose: return "GENERAL_PURPOSE";
        case Category::kDomainSpecific: return "DOMAIN_SPECIFIC";
        case Category::kProductSpecific: return "PRODUCT_SPECIFIC";
    }
    return "?";
}

std::optional<Category> parse_category(std::string_view text) noexcept {
    for (const auto category : kAllCategories) {
        if (to_string(category) == text) {
            return category;
        }
    }
    return std::nullopt;
}

bool ReuseManifest::matches(std::string_view qualified_name) const {
    return std::any_of(patterns.begin(), patterns.end(),
                       [&](const Glob& g) { return g.matches(qualified_name); });
}

Category classify_class(const ClassDecl& cls, const CategoryRules& rules) {
    for (const auto& rule : rules.rules) {
        if (rule.pattern.matches(cls.qualified_name)) {
            return rule.category;
        }
    }
    return rules.default_category;
}

std::map<Category, std::size_t> category_counts(const ProjectModel& model, const CategoryRules& rules) {
    std::map<Category, std::size_t> counts;
    for (const auto category : kAllCategories) {
        counts[category] = 0;
    }
    for (const auto& cls : model.classes()) {
        ++counts[classify_class(cls, rules)];
    }
    return counts;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

/// Calls `fn(line_number, content)` for each non-blank, non-comment line.
template <typename Fn>
void for_each_entry(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const auto line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        fn(line_no, line);
    }
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read " + path.generic_string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Glob compile_at(std::string_view pattern, std::size_t line) {
    try {
        return Glob::compile(pattern, GlobMode::kName);
    } catch (const InvalidPatternError& e) {
        throw InvalidPatternError(e.pattern(), e.reason(), line);
    }
}

}  // namespace

ReuseManifest parse_manifest(std::string_view text, std::string source_path) {
    ReuseManifest manifest;
    manifest.source_path = std::move(source_path);
    std::set<std::string, std::less<>> seen;
    for_each_entry(text, [&](std::size_t line, std::string_view entry) {
        if (!seen.insert(std::string(entry)).second) {
            manifest.diagnostics.push_back({manifest.source_path, line, Severity::kWarn,
                                            "duplicate manifest pattern '" + std::string(entry) + "'"});
            return;
        }
        manifest.patterns.push_back(compile_at(entry, line));
    });
    if (manifest.patterns.empty()) {
        throw Error(ErrorCode::kEmptyManifest,
                    "manifest " + manifest.source_path + " contains no patterns");
    }
    return manifest;
}

ReuseManifest load_manifest(const std::filesystem::path& path) {
    return parse_manifest(read_text(path), path.generic_string());
}

CategoryRules parse_rules(std::string_view text) {
    CategoryRules rules;
    for_each_entry(text, [&](std::size_t line, std::string_view entry) {
        const auto arrow = entry.find("=>");
        if (arrow == std::string_view::npos) {
            throw Error(ErrorCode::kInvalidRule,
                        "line " + std::to_string(line) + ": expected 'pattern => CATEGORY'");
        }
        const auto pattern = trim(entry.substr(0, arrow));
        const auto name = trim(entry.substr(arrow + 2));
        const auto category = parse_category(name);
        if (!category) {
            throw Error(ErrorCode::kInvalidRule,
                        "line " + std::to_string(line) + ": unknown category '" + std::string(name) + "'");
        }
        if (pattern == "default") {
            rules.default_category = *category;
            return;
        }
        rules.rules.push_back({compile_at(pattern, line), *category});
    });
    return rules;
}

CategoryRules load_rules(const std::filesystem::path& path) {
    return parse_rules(read_text(path));
}

}  // namespace reuse
