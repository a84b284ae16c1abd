#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace reuse {

/**
 * Exact fraction of two counts.
 *
 * Every metric is stored as the pair of counts it was computed from; the
 * decimal form is produced only when rendering. A zero denominator means the
 * metric is UNDEFINED (nothing to measure). Ordering an UNDEFINED ratio
 * throws, so a gate can never silently treat it as 0 or 1.
 */
class Ratio {
public:
    constexpr Ratio() = default;
    constexpr Ratio(std::uint64_t numerator, std::uint64_t denominator)
        : num_(numerator), den_(denominator) {}

    static constexpr Ratio undefined() { return {}; }

    [[nodiscard]] constexpr std::uint64_t numerator() const noexcept { return num_; }
    [[nodiscard]] constexpr std::uint64_t denominator() const noexcept { return den_; }
    [[nodiscard]] constexpr bool defined() const noexcept { return den_ != 0; }

    /// Same numerator and denominator, not merely the same value.
    [[nodiscard]] constexpr bool same_counts(const Ratio& other) const noexcept {
        return num_ == other.num_ && den_ == other.den_;
    }

    /// Count-wise sum: numerators add and denominators add.
    [[nodiscard]] constexpr Ratio pooled_with(const Ratio& other) const noexcept {
        return {num_ + other.num_, den_ + other.den_};
    }

    /// Value equality (2/3 == 4/6). Two UNDEFINED ratios compare equal; an
    /// UNDEFINED ratio never equals a defined one.
    friend bool operator==(const Ratio& a, const Ratio& b) noexcept;

    /// Exact ordering by cross-multiplication. Throws Error(kUndefinedRatio)
    /// if either side is UNDEFINED.
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

    /// Fixed six-place decimal, round-half-even. nullopt when UNDEFINED.
    [[nodiscard]] std::optional<std::string> decimal(unsigned places = 6) const;

    /// "num/den"
    [[nodiscard]] std::string to_string() const;

    /// Parses a threshold written as a decimal ("0.25", "1", ".5") or a
    /// fraction ("3/11"). The result is exact: "0.25" becomes 25/100.
    /// Throws Error(kInvalidThreshold) on malformed input or a zero denominator.
    static Ratio parse(std::string_view text);

private:
    std::uint64_t num_ = 0;
    std::uint64_t den_ = 0;
};

}  // namespace reuse
