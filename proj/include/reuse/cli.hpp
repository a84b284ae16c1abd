#pragma once

#include "reuse/gates.hpp"
#include "reuse/source_model.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace reuse::cli {

enum class OutputFormat { kJson, kCsv, kTable };

enum ExitCode : int {
    kExitOk = 0,
    kExitGateFailure = 1,
    kExitUsage = 2,
    kExitStrictErrors = 3,
};

struct RunConfig {
    std::vector<std::filesystem::path> roots;
    std::optional<Dialect> dialect_override;
    std::vector<std::string> include;
    std::vector<std::string> exclude;
    std::optional<std::filesystem::path> manifest_path;
    std::optional<std::filesystem::path> rules_path;
    OutputFormat output_format = OutputFormat::kTable;
    std::optional<GateConfig> gate;
    bool strict = false;
    bool dump_model = false;
    std::optional<std::filesystem::path> out_path;
    /// Scanner threads; 0 picks from the hardware.
    std::size_t jobs = 0;
};

/// Strict-mode parse errors outrank gate failures.
int decide_exit_code(bool strict, std::size_t error_diagnostics, const std::optional<GateResult>& gates);

/// Runs the whole pipeline. The report (or model dump) goes to `out` unless
/// `out_path` is set; diagnostics and gate violations go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and calls run(). Usage errors return kExitUsage.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace reuse::cli
