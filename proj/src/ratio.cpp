#include "reuse/ratio.hpp"

#include "reuse/error.hpp"

#include <charconv>
#include <limits>

namespace reuse {

namespace {

__extension__ using Wide = unsigned __int128;

std::string wide_to_string(Wide value) {
    if (value == 0) {
        return "0";
    }
    std::string digits;
    while (value != 0) {
        digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    return digits;
}

[[noreturn]] void bad_threshold(std::string_view text, const char* why) {
    throw Error(ErrorCode::kInvalidThreshold,
                "invalid threshold '" + std::string(text) + "': " + why);
}

std::uint64_t parse_count(std::string_view digits, std::string_view whole) {
    if (digits.empty()) {
        bad_threshold(whole, "expected digits");
    }
    std::uint64_t value = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (ec == std::errc::result_out_of_range) {
        bad_threshold(whole, "number too large");
    }
    if (ec != std::errc() || ptr != end) {
        bad_threshold(whole, "expected digits");
    }
    return value;
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::kIo: return "IoError";
        case ErrorCode::kDuplicateFile: return "DuplicateFile";
        case ErrorCode::kInvalidPattern: return "InvalidPattern";
        case ErrorCode::kEmptyManifest: return "EmptyManifest";
        case ErrorCode::kInvalidRule: return "InvalidRule";
        case ErrorCode::kInvalidThreshold: return "InvalidThreshold";
        case ErrorCode::kUndefinedRatio: return "UndefinedRatio";
    }
    return "Error";
}

bool operator==(const Ratio& a, const Ratio& b) noexcept {
    if (!a.defined() || !b.defined()) {
        return a.defined() == b.defined();
    }
    return Wide(a.num_) * b.den_ == Wide(b.num_) * a.den_;
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    if (!a.defined() || !b.defined()) {
        throw Error(ErrorCode::kUndefinedRatio, "cannot order an UNDEFINED ratio (" +
                                                    a.to_string() + " vs " + b.to_string() + ")");
    }
    return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
}

std::optional<std::string> Ratio::decimal(unsigned places) const {
    if (!defined()) {
        return std::nullopt;
    }
    Wide scale = 1;
    for (unsigned i = 0; i < places; ++i) {
        scale *= 10;
    }
    const Wide scaled = Wide(num_) * scale;
    Wide quotient = scaled / den_;
    const Wide twice_remainder = (scaled % den_) * 2;
    if (twice_remainder > den_ || (twice_remainder == den_ && quotient % 2 == 1)) {
        ++quotient;
    }

    std::string text = wide_to_string(quotient / scale);
    if (places > 0) {
        std::string frac = wide_to_string(quotient % scale);
        text += '.';
        text.append(places - frac.size(), '0');
        text += frac;
    }
    return text;
}

std::string Ratio::to_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Ratio Ratio::parse(std::string_view text) {
    if (text.empty()) {
        bad_threshold(text, "empty");
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = parse_count(text.substr(0, slash), text);
        const auto den = parse_count(text.substr(slash + 1), text);
        if (den == 0) {
            bad_threshold(text, "zero denominator");
        }
        return {num, den};
    }

    const auto dot = text.find('.');
    const auto int_part = text.substr(0, dot);
    const auto frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
        bad_threshold(text, "expected digits");
    }
    // 10^19 overflows uint64; 18 places is far beyond any meaningful threshold.
    if (frac_part.size() > 18) {
        bad_threshold(text, "more than 18 decimal places");
    }
    const std::uint64_t whole = int_part.empty() ? 0 : parse_count(int_part, text);
    const std::uint64_t frac = frac_part.empty() ? 0 : parse_count(frac_part, text);
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) {
        den *= 10;
    }
    const Wide num = Wide(whole) * den + frac;
    if (num > std::numeric_limits<std::uint64_t>::max()) {
        bad_threshold(text, "number too large");
    }
    return {static_cast<std::uint64_t>(num), den};
}

}  // namespace reuse
