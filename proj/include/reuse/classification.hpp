#pragma once

#include "reuse/glob.hpp"
#include "reuse/source_model.hpp"

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reuse {

/// Reuse scope of a component.
enum class Category {
    kGeneralPurpose,   ///< horizontal: useful across domains
    kDomainSpecific,   ///< vertical: useful across products of one domain
    kProductSpecific,  ///< custom-built for one application
};

inline constexpr std::array kAllCategories = {
    Category::kGeneralPurpose, Category::kDomainSpecific, Category::kProductSpecific};

std::string_view to_string(Category category) noexcept;
/// Exact upper-case names: GENERAL_PURPOSE, DOMAIN_SPECIFIC, PRODUCT_SPECIFIC.
std::optional<Category> parse_category(std::string_view text) noexcept;

/// Class-name patterns of classes taken from the component repository.
struct ReuseManifest {
    std::vector<Glob> patterns;
    std::string source_path;
    /// Duplicate patterns (WARN).
    std::vector<ParseDiagnostic> diagnostics;

    [[nodiscard]] bool matches(std::string_view qualified_name) const;
};

struct CategoryRule {
    Glob pattern;
    Category category;
};

/// Ordered rules; the first pattern matching a class name decides its category.
struct CategoryRules {
    std::vector<CategoryRule> rules;
    Category default_category = Category::kProductSpecific;
};

Category classify_class(const ClassDecl& cls, const CategoryRules& rules);

/// Tally over every class in the model; all three categories are present.
std::map<Category, std::size_t> category_counts(const ProjectModel& model, const CategoryRules& rules);

/// One glob per line, `#` starts a comment line, blank lines ignored.
/// Throws InvalidPatternError (with line), Error(kEmptyManifest).
ReuseManifest parse_manifest(std::string_view text, std::string source_path);
/// As parse_manifest; throws IoError when the file cannot be read.
ReuseManifest load_manifest(const std::filesystem::path& path);

/// Lines `pattern => CATEGORY`; `default => CATEGORY` sets the fallback.
/// Throws InvalidPatternError, Error(kInvalidRule) with the line number.
CategoryRules parse_rules(std::string_view text);
CategoryRules load_rules(const std::filesystem::path& path);

}  // namespace reuse
