#include "reuse/gates.hpp"

#include "reuse/error.hpp"

namespace reuse {

std::optional<UndefinedPolicy> parse_undefined_policy(std::string_view text) noexcept {
    if (text == "fail") {
        return UndefinedPolicy::kFail;
    }
    if (text == "skip") {
        return UndefinedPolicy::kSkip;
    }
    return std::nullopt;
}

void validate(const GateConfig& config) {
    if (!config.any()) {
        throw Error(ErrorCode::kInvalidThreshold, "gating requested without any threshold");
    }
    for (const auto& threshold : {config.min_ctf, config.min_mtf, config.min_reuse_ratio}) {
        if (threshold && (!threshold->defined() || *threshold > Ratio(1, 1))) {
            throw Error(ErrorCode::kInvalidThreshold,
                        "threshold " + threshold->to_string() + " is outside [0, 1]");
        }
    }
}

GateResult evaluate_gates(const MetricsReport& report, const GateConfig& config) {
    validate(config);
    GateResult result;
    const auto check = [&](const char* metric, const std::optional<Ratio>& required, const Ratio& actual) {
        if (!required) {
            return;
        }
        if (!actual.defined()) {
            if (config.undefined_policy == UndefinedPolicy::kFail) {
                result.violations.push_back({metric, *required, actual});
            }
            return;
        }
        if (actual < *required) {
            result.violations.push_back({metric, *required, actual});
        }
    };
    check("ctf", config.min_ctf, report.ctf);
    check("mtf", config.min_mtf, report.mtf_system);
    check("reuse_ratio", config.min_reuse_ratio, report.reuse_ratio.value_or(Ratio::undefined()));
    result.passed = result.violations.empty();
    return result;
}

std::string describe(const GateViolation& violation) {
    const auto show = [](const Ratio& r) {
        return r.defined() ? r.to_string() + " (" + *r.decimal() + ")" : std::string("UNDEFINED");
    };
    return violation.metric + ": required >= " + show(violation.required) + ", actual " +
           show(violation.actual);
}

}  // namespace reuse
