#include "reuse/cli.hpp"

#include "reuse/classification.hpp"
#include "reuse/discovery.hpp"
#include "reuse/error.hpp"
#include "reuse/frontend.hpp"
#include "reuse/metrics.hpp"
#include "reuse/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

namespace reuse::cli {

namespace {

std::vector<Glob> compile_paths(const std::vector<std::string>& patterns) {
    std::vector<Glob> globs;
    globs.reserve(patterns.size());
    for (const auto& p : patterns) {
        globs.push_back(Glob::compile(p, GlobMode::kPath));
    }
    return globs;
}

ParsedFile unreadable(const DiscoveredFile& file, const std::string& why) {
    ParsedFile parsed;
    parsed.file.path = file.path;
    parsed.file.dialect = file.dialect;
    parsed.file.diagnostics.push_back({file.path, 0, Severity::kError, why + "; file skipped"});
    return parsed;
}

std::vector<ParsedFile> parse_all(const std::vector<DiscoveredFile>& files, std::size_t jobs) {
    std::vector<ParsedFile> parsed(files.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < files.size(); i = next++) {
            try {
                parsed[i] = parse_file(files[i].path, files[i].dialect);
            } catch (const IoError& e) {
                parsed[i] = unreadable(files[i], e.what());
            }
        }
    };
    if (jobs == 0) {
        jobs = std::max(1U, std::thread::hardware_concurrency());
    }
    jobs = std::min(jobs, std::max<std::size_t>(files.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    return parsed;
}

void print_diagnostic(std::ostream& err, const ParseDiagnostic& d) {
    err << d.file;
    if (d.line > 0) {
        err << ':' << d.line;
    }
    err << ": " << to_string(d.severity) << ": " << d.message << '\n';
}

}  // namespace

int decide_exit_code(bool strict, std::size_t error_diagnostics, const std::optional<GateResult>& gates) {
    if (strict && error_diagnostics > 0) {
        return kExitStrictErrors;
    }
    if (gates && !gates->passed) {
        return kExitGateFailure;
    }
    return kExitOk;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.roots.empty()) {
        err << "error: no source roots given\n";
        return kExitUsage;
    }

    std::vector<Glob> include;
    std::vector<Glob> exclude;
    std::optional<ReuseManifest> manifest;
    CategoryRules rules;
    Discovery discovery;
    try {
        include = compile_paths(config.include);
        exclude = compile_paths(config.exclude);
        if (config.gate) {
            validate(*config.gate);
            if (config.gate->min_reuse_ratio && !config.manifest_path) {
                err << "error: --gate-u requires --manifest\n";
                return kExitUsage;
            }
        }
        if (config.manifest_path) {
            manifest = load_manifest(*config.manifest_path);
        }
        if (config.rules_path) {
            rules = load_rules(*config.rules_path);
        }
        discovery = discover_files(config.roots, include, exclude, config.dialect_override);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (manifest) {
        for (const auto& d : manifest->diagnostics) {
            print_diagnostic(err, d);
        }
    }
    for (const auto& d : discovery.diagnostics) {
        print_diagnostic(err, d);
    }
    if (discovery.files.empty()) {
        err << "error: no source files matched\n";
        return kExitUsage;
    }

    const ProjectModel model = ProjectModel::build(parse_all(discovery.files, config.jobs));
    for (const auto& d : model.diagnostics()) {
        print_diagnostic(err, d);
    }

    const MetricsReport report = compute_report(model, manifest ? &*manifest : nullptr, rules);
    std::string rendered;
    if (config.dump_model) {
        rendered = render_model_json(model);
    } else {
        switch (config.output_format) {
            case OutputFormat::kJson: rendered = render_json(report); break;
            case OutputFormat::kCsv: rendered = render_csv(report); break;
            case OutputFormat::kTable: rendered = render_table(report); break;
        }
    }

    if (config.out_path) {
        std::ofstream file(*config.out_path, std::ios::binary | std::ios::trunc);
        file << rendered;
        if (!file) {
            err << "error: cannot write " << config.out_path->generic_string() << '\n';
            return kExitUsage;
        }
    } else {
        out << rendered;
        out.flush();
    }

    std::optional<GateResult> gates;
    if (config.gate) {
        gates = evaluate_gates(report, *config.gate);
        for (const auto& v : gates->violations) {
            err << "gate failed: " << describe(v) << '\n';
        }
    }
    return decide_exit_code(config.strict, model.error_count(), gates);
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Measures template/generic-based reuse (CTF, MTF, U) in a source tree.", "reuse-metrics"};

    RunConfig config;
    std::vector<std::string> roots;
    std::string dialect;
    std::string format = "table";
    std::string manifest;
    std::string rules;
    std::string gate_ctf;
    std::string gate_mtf;
    std::string gate_u;
    std::string undefined = "fail";
    std::string out_path;

    app.add_option("roots", roots, "Source directories or files")->required();
    app.add_option("--dialect", dialect, "Force one dialect for every file: cxx or java");
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    app.add_option("--manifest", manifest, "Reuse manifest: one class-name glob per line");
    app.add_option("--rules", rules, "Category rules: 'pattern => CATEGORY' per line");
    app.add_option("--gate-ctf", gate_ctf, "Minimum CTF, decimal or fraction (e.g. 0.25, 3/11)");
    app.add_option("--gate-mtf", gate_mtf, "Minimum system MTF");
    app.add_option("--gate-u", gate_u, "Minimum reuse ratio U (needs --manifest)");
    auto* undefined_opt = app.add_option("--undefined", undefined, "Gate policy for UNDEFINED metrics")
                              ->check(CLI::IsMember({"fail", "skip"}))
                              ->capture_default_str();
    app.add_option("--include", config.include, "Path glob to include (repeatable)");
    app.add_option("--exclude", config.exclude, "Path glob to exclude (repeatable)");
    app.add_flag("--strict", config.strict, "Exit 3 when any file has parse errors");
    app.add_flag("--dump-model", config.dump_model, "Print the extracted model as JSON instead of the report");
    app.add_option("--out", out_path, "Write output to a file instead of stdout");
    app.add_option("--jobs", config.jobs, "Scanner threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    for (const auto& r : roots) {
        config.roots.emplace_back(r);
    }
    if (!dialect.empty()) {
        config.dialect_override = parse_dialect(dialect);
        if (!config.dialect_override) {
            err << "error: unknown dialect '" << dialect << "' (expected cxx or java)\n";
            return kExitUsage;
        }
    }
    config.output_format = format == "json" ? OutputFormat::kJson
                           : format == "csv" ? OutputFormat::kCsv
                                             : OutputFormat::kTable;
    if (!manifest.empty()) {
        config.manifest_path = manifest;
    }
    if (!rules.empty()) {
        config.rules_path = rules;
    }
    if (!out_path.empty()) {
        config.out_path = out_path;
    }

    GateConfig gate;
    try {
        if (!gate_ctf.empty()) {
            gate.min_ctf = Ratio::parse(gate_ctf);
        }
        if (!gate_mtf.empty()) {
            gate.min_mtf = Ratio::parse(gate_mtf);
        }
        if (!gate_u.empty()) {
            gate.min_reuse_ratio = Ratio::parse(gate_u);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    gate.undefined_policy = *parse_undefined_policy(undefined);
    if (gate.any()) {
        config.gate = gate;
    } else if (undefined_opt->count() > 0) {
        err << "error: --undefined needs at least one --gate-* threshold\n";
        return kExitUsage;
    }

    return run(config, out, err);
}

}  // namespace reuse::cli
