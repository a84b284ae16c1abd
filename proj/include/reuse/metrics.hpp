#pragma once

#include "reuse/classification.hpp"
#include "reuse/ratio.hpp"
#include "reuse/source_model.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reuse {

/// 1 iff the class is declared with a template/generic clause.
int uses_ct(const ClassDecl& cls) noexcept;
/// 1 iff the method carries its own template/generic clause.
int uses_mt(const MethodDecl& method) noexcept;

/// Class Template Factor: template classes / all classes.
Ratio compute_ctf(const ProjectModel& model);

/// System Method Template Factor: template methods / all methods, free
/// functions included. (MTM is the same metric under another name.)
Ratio compute_mtf(const ProjectModel& model);

/// MTF restricted to free functions (no owner).
Ratio compute_free_function_mtf(const ProjectModel& model);

struct PerClassMtf {
    /// Keyed by qualified name. Classes sharing a name pool their counts.
    std::map<std::string, Ratio> ratios;
    /// Classes with no methods, sorted and unique.
    std::vector<std::string> undefined;
};

/// Each class's template methods / its own methods; free functions excluded.
PerClassMtf mtf_per_class(const ProjectModel& model);

/// Reuse ratio U: classes matching the manifest / all classes.
Ratio compute_reuse_ratio(const ProjectModel& model, const ReuseManifest& manifest);

struct ModelSummary {
    std::size_t files = 0;
    std::size_t classes = 0;
    std::size_t methods = 0;
    std::size_t free_functions = 0;
    std::size_t error_diagnostics = 0;

    friend bool operator==(const ModelSummary&, const ModelSummary&) = default;
};

struct MetricsReport {
    Ratio ctf;
    Ratio mtf_system;
    Ratio mtf_free_functions;
    std::map<std::string, Ratio> mtf_per_class;
    std::vector<std::string> undefined_mtf;
    std::optional<Ratio> reuse_ratio;
    std::map<Category, std::size_t> category_counts;
    ModelSummary summary;
};

/// Every metric over `model`. U is present only when a manifest is given.
MetricsReport compute_report(const ProjectModel& model, const ReuseManifest* manifest,
                             const CategoryRules& rules = {});

}  // namespace reuse
