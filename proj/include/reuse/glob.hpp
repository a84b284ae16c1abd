#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace reuse {

enum class GlobMode {
    kName,  ///< `*` matches any run of characters, separators included
    kPath,  ///< `*`, `?` and `[...]` stop at `/`; `**` crosses directories
};

/**
 * Compiled shell-style wildcard.
 *
 * Supports `*`, `?`, `[abc]`, `[a-z]`, `[!x]`/`[^x]` and `\` escapes; in
 * path mode also `**`, where a leading or inner `**` followed by `/` matches zero or more whole directories.
 * Matching is case-sensitive.
 */
class Glob {
public:
    /// Throws InvalidPatternError for an empty pattern, an unclosed `[`, or a trailing `\`.
    static Glob compile(std::string_view pattern, GlobMode mode = GlobMode::kName);

    [[nodiscard]] bool matches(std::string_view text) const;
    [[nodiscard]] const std::string& pattern() const noexcept { return pattern_; }

private:
    enum class Op { kLiteral, kAny, kStar, kGlobstar, kGlobstarDir, kClass };

    struct Range {
        char lo;
        char hi;
    };

    struct Item {
        Op op = Op::kLiteral;
        char ch = 0;
        bool negated = false;
        std::vector<Range> ranges;
    };

    [[nodiscard]] bool item_accepts(const Item& item, char c) const;

    std::string pattern_;
    GlobMode mode_ = GlobMode::kName;
    std::vector<Item> items_;
};

}  // namespace reuse
