#pragma once

#include "reuse/metrics.hpp"
#include "reuse/ratio.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reuse {

enum class UndefinedPolicy {
    kFail,  ///< an UNDEFINED metric violates its gate
    kSkip,  ///< an UNDEFINED metric is not gated
};

std::optional<UndefinedPolicy> parse_undefined_policy(std::string_view text) noexcept;

/// Minimum values, each an exact fraction in [0, 1].
struct GateConfig {
    std::optional<Ratio> min_ctf;
    std::optional<Ratio> min_mtf;
    std::optional<Ratio> min_reuse_ratio;
    UndefinedPolicy undefined_policy = UndefinedPolicy::kFail;

    [[nodiscard]] bool any() const noexcept {
        return min_ctf.has_value() || min_mtf.has_value() || min_reuse_ratio.has_value();
    }
};

struct GateViolation {
    std::string metric;
    Ratio required;
    Ratio actual;  ///< UNDEFINED when the metric has no value

    friend bool operator==(const GateViolation& a, const GateViolation& b) {
        return a.metric == b.metric && a.required.same_counts(b.required) && a.actual.same_counts(b.actual);
    }
};

struct GateResult {
    bool passed = true;
    std::vector<GateViolation> violations;
};

/// Throws Error(kInvalidThreshold) if a threshold is outside [0, 1] or no threshold is set.
void validate(const GateConfig& config);

/// Passes a metric when actual >= required, compared by cross-multiplication.
/// A missing reuse ratio (no manifest) counts as UNDEFINED.
GateResult evaluate_gates(const MetricsReport& report, const GateConfig& config);

/// "ctf: required >= 1/2 (0.500000), actual 3/11 (0.272727)"
std::string describe(const GateViolation& violation);

}  // namespace reuse
