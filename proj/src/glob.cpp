#include "reuse/glob.hpp"

#include "reuse/error.hpp"

#include <cstdint>

namespace reuse {

Glob Glob::compile(std::string_view pattern, GlobMode mode) {
    if (pattern.empty()) {
        throw InvalidPatternError(std::string(pattern), "empty pattern");
    }
    Glob glob;
    glob.pattern_ = std::string(pattern);
    glob.mode_ = mode;

    for (std::size_t i = 0; i < pattern.size();) {
        const char c = pattern[i];
        Item item;
        if (c == '\\') {
            if (i + 1 == pattern.size()) {
                throw InvalidPatternError(glob.pattern_, "trailing escape character");
            }
            item.ch = pattern[i + 1];
            i += 2;
        } else if (c == '?') {
            item.op = Op::kAny;
            ++i;
        } else if (c == '*') {
            const bool doubled = i + 1 < pattern.size() && pattern[i + 1] == '*';
            if (mode == GlobMode::kPath && doubled) {
                const bool dir = i + 2 < pattern.size() && pattern[i + 2] == '/';
                item.op = dir ? Op::kGlobstarDir : Op::kGlobstar;
                i += dir ? 3 : 2;
            } else {
                item.op = Op::kStar;
                ++i;
            }
            while (i < pattern.size() && pattern[i] == '*' && item.op == Op::kStar) {
                ++i;
            }
        } else if (c == '[') {
            item.op = Op::kClass;
            std::size_t j = i + 1;
            if (j < pattern.size() && (pattern[j] == '!' || pattern[j] == '^')) {
                item.negated = true;
                ++j;
            }
            bool first = true;
            bool closed = false;
            while (j < pattern.size()) {
                char lo = pattern[j];
                if (lo == ']' && !first) {
                    closed = true;
                    ++j;
                    break;
                }
                if (lo == '\\' && j + 1 < pattern.size()) {
                    lo = pattern[++j];
                }
                char hi = lo;
                if (j + 2 < pattern.size() && pattern[j + 1] == '-' && pattern[j + 2] != ']') {
                    hi = pattern[j + 2];
                    j += 2;
                    if (static_cast<unsigned char>(hi) < static_cast<unsigned char>(lo)) {
                        throw InvalidPatternError(glob.pattern_, "reversed character range");
                    }
                }
                item.ranges.push_back({lo, hi});
                first = false;
                ++j;
            }
            if (!closed) {
                throw InvalidPatternError(glob.pattern_, "unclosed '['");
            }
            i = j;
        } else {
            item.ch = c;
            ++i;
        }
        glob.items_.push_back(std::move(item));
    }
    return glob;
}

bool Glob::item_accepts(const Item& item, char c) const {
    if (mode_ == GlobMode::kPath && c == '/' && item.op != Op::kLiteral) {
        return false;
    }
    switch (item.op) {
        case Op::kLiteral: return c == item.ch;
        case Op::kAny: return true;
        case Op::kClass: {
            bool in = false;
            for (const auto& r : item.ranges) {
                const auto u = static_cast<unsigned char>(c);
                if (u >= static_cast<unsigned char>(r.lo) && u <= static_cast<unsigned char>(r.hi)) {
                    in = true;
                    break;
                }
            }
            return in != item.negated;
        }
        default: return false;
    }
}

bool Glob::matches(std::string_view text) const {
    const std::size_t n_items = items_.size();
    const std::size_t n_text = text.size();
    // reach[j]: items_[0..i) can consume exactly text[0..j).
    std::vector<std::uint8_t> reach(n_text + 1, 0);
    std::vector<std::uint8_t> next(n_text + 1, 0);
    reach[0] = 1;
    for (std::size_t i = 0; i < n_items; ++i) {
        const Item& item = items_[i];
        std::fill(next.begin(), next.end(), 0);
        switch (item.op) {
            case Op::kStar: {
                bool open = false;
                for (std::size_t j = 0; j <= n_text; ++j) {
                    if (reach[j]) {
                        open = true;
                    }
                    next[j] = open;
                    if (j < n_text && mode_ == GlobMode::kPath && text[j] == '/') {
                        open = false;
                    }
                }
                break;
            }
            case Op::kGlobstar: {
                bool open = false;
                for (std::size_t j = 0; j <= n_text; ++j) {
                    open = open || reach[j];
                    next[j] = open;
                }
                break;
            }
            case Op::kGlobstarDir: {
                // Zero directories, or any prefix ending in '/'.
                bool open = false;
                for (std::size_t j = 0; j <= n_text; ++j) {
                    next[j] = reach[j] || (open && j > 0 && text[j - 1] == '/');
                    open = open || reach[j];
                }
                break;
            }
            default:
                for (std::size_t j = 0; j < n_text; ++j) {
                    if (reach[j] && item_accepts(item, text[j])) {
                        next[j + 1] = 1;
                    }
                }
                break;
        }
        reach.swap(next);
    }
    return reach[n_text] != 0;
}

}  // namespace reuse
