#pragma once

#include "reuse/metrics.hpp"
#include "reuse/source_model.hpp"

#include <string>

namespace reuse {

/// Version of both JSON documents (report and model dump).
inline constexpr int kSchemaVersion = 1;

/**
 * JSON report. Keys are sorted; each ratio is
 * `{"num": n, "den": d, "value": "0.272727"}` with `value` null when
 * UNDEFINED. Output ends with a newline.
 */
std::string render_json(const MetricsReport& report);

/// `section,name,num,den,value` rows: metrics, per-class MTF, classes
/// without methods, category tallies, summary counts.
std::string render_csv(const MetricsReport& report);

/// Aligned plain-text table for terminals.
std::string render_table(const MetricsReport& report);

/// The whole model, for debugging. Same schema family as render_json.
std::string render_model_json(const ProjectModel& model);

}  // namespace reuse
