#include "reuse/metrics.hpp"

#include <algorithm>

namespace reuse {

int uses_ct(const ClassDecl& cls) noexcept { return cls.is_template() ? 1 : 0; }

int uses_mt(const MethodDecl& method) noexcept { return method.is_template ? 1 : 0; }

Ratio compute_ctf(const ProjectModel& model) {
    std::uint64_t flagged = 0;
    for (const auto& cls : model.classes()) {
        flagged += static_cast<std::uint64_t>(uses_ct(cls));
    }
    return {flagged, model.classes().size()};
}

Ratio compute_mtf(const ProjectModel& model) {
    std::uint64_t flagged = 0;
    for (const auto& method : model.methods()) {
        flagged += static_cast<std::uint64_t>(uses_mt(method));
    }
    return {flagged, model.methods().size()};
}

Ratio compute_free_function_mtf(const ProjectModel& model) {
    std::uint64_t flagged = 0;
    std::uint64_t total = 0;
    for (const auto& method : model.methods()) {
        if (!method.owner) {
            ++total;
            flagged += static_cast<std::uint64_t>(uses_mt(method));
        }
    }
    return {flagged, total};
}

PerClassMtf mtf_per_class(const ProjectModel& model) {
    std::map<std::string, Ratio> pooled;
    for (const auto& cls : model.classes()) {
        std::uint64_t flagged = 0;
        for (const MethodId id : cls.method_ids) {
            flagged += static_cast<std::uint64_t>(uses_mt(model.methods()[id]));
        }
        auto [it, inserted] = pooled.try_emplace(cls.qualified_name, flagged, cls.method_ids.size());
        if (!inserted) {
            it->second = it->second.pooled_with(Ratio(flagged, cls.method_ids.size()));
        }
    }

    PerClassMtf result;
    for (auto& [name, ratio] : pooled) {
        if (ratio.defined()) {
            result.ratios.emplace(name, ratio);
        } else {
            result.undefined.push_back(name);
        }
    }
    return result;
}

Ratio compute_reuse_ratio(const ProjectModel& model, const ReuseManifest& manifest) {
    const auto reused = std::count_if(model.classes().begin(), model.classes().end(),
                                      [&](const ClassDecl& c) { return manifest.matches(c.qualified_name); });
    return {static_cast<std::uint64_t>(reused), model.classes().size()};
}

MetricsReport compute_report(const ProjectModel& model, const ReuseManifest* manifest,
                             const CategoryRules& rules) {
    MetricsReport report;
    report.ctf = compute_ctf(model);
    report.mtf_system = compute_mtf(model);
    report.mtf_free_functions = compute_free_function_mtf(model);
    auto per_class = mtf_per_class(model);
    report.mtf_per_class = std::move(per_class.ratios);
    report.undefined_mtf = std::move(per_class.undefined);
    if (manifest != nullptr) {
        report.reuse_ratio = compute_reuse_ratio(model, *manifest);
    }
    report.category_counts = category_counts(model, rules);
    report.summary = {model.files().size(), model.classes().size(), model.methods().size(),
                      model.free_function_count(), model.error_count()};
    return report;
}

}  // namespace reuse
