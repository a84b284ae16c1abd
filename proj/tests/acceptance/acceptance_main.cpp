// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include "corpus.hpp"
#include "crosscheck.hpp"
#include "oracle.hpp"
#include "reuse/cli.hpp"
#include "reuse/gates.hpp"
#include "reuse/metrics.hpp"
#include "reuse/report.hpp"
#include "test_helpers.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

namespace {

using namespace testing_helpers;
using reuse::Ratio;
using Clock = std::chrono::steady_clock;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << what << "; ";
        }
    }
};

double millis(Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); }

// 1. MTF of the template-function snippet is exactly 1/3, in under 10 ms.
void template_function_mtf(Check& c) {
    const auto start = Clock::now();
    const auto model = model_of_file(fixture("snippets/template_function.cpp"));
    const Ratio mtf = reuse::compute_mtf(model);
    const double ms = millis(Clock::now() - start);
    c.expect(mtf.same_counts(Ratio(1, 3)), "MTF " + mtf.to_string());
    c.expect(ms < 10.0, "took " + std::to_string(ms) + " ms");
    c.detail << "MTF " << mtf.to_string() << " in " << std::fixed << std::setprecision(3) << ms << " ms";
}

// 2. CTF of the template-class snippet is exactly 1/2.
void template_class_ctf(Check& c) {
    const Ratio ctf = reuse::compute_ctf(model_of_file(fixture("snippets/template_class.cpp")));
    c.expect(ctf.same_counts(Ratio(1, 2)), "CTF " + ctf.to_string());
    c.detail << "CTF " << ctf.to_string();
}

// 3. HR portal corpus: CTF 3/11 and the eleven per-class MTF values.
void hr_portal(Check& c) {
    const auto model = model_of_dir(fixture("hr_portal"));
    const Ratio ctf = reuse::compute_ctf(model);
    c.expect(ctf.same_counts(Ratio(3, 11)), "CTF " + ctf.to_string());
    const std::map<std::string, Ratio> expected = {
        {"EmployeeBean", {1, 3}},    {"HRProcess", {1, 2}},       {"BaseDAO", {2, 3}},
        {"InterviewDAO", {1, 2}},    {"HRDAO", {1, 3}},           {"ProcessDAO", {1, 3}},
        {"EmployeeDAO", {2, 3}},     {"EmployeeProfile", {1, 2}}, {"EmpSalary", {1, 2}},
        {"InterviewResult", {1, 4}}, {"InterviewResultsBean", {1, 2}}};
    const auto per_class = reuse::mtf_per_class(model);
    c.expect(per_class.ratios.size() == expected.size(),
             "per-class entries " + std::to_string(per_class.ratios.size()));
    std::size_t matched = 0;
    for (const auto& [name, want] : expected) {
        const auto it = per_class.ratios.find(name);
        if (it == per_class.ratios.end()) {
            c.expect(false, "missing " + name);
        } else if (!(it->second == want)) {
            c.expect(false, name + " " + it->second.to_string());
        } else {
            ++matched;
        }
    }
    c.detail << "CTF " << ctf.to_string() << ", " << matched << "/11 per-class MTF exact";
}

// 4. The independent counter agrees with the engine on every fixture and on
//    randomly generated files (and with the generator's own ground truth).
void oracle_equivalence(Check& c) {
    std::size_t files = 0;
    for (const char* name : {"snippets/template_function.cpp", "snippets/template_class.cpp"}) {
        const auto mismatch = compare_with_oracle(model_of_file(fixture(name)), oracle::count_cxx(read_file(fixture(name))));
        c.expect(mismatch.empty(), std::string(name) + ": " + mismatch);
        ++files;
    }
    oracle::Counts hr;
    for (const auto& entry : std::filesystem::directory_iterator(fixture("hr_portal"))) {
        hr += oracle::count_java(read_file(entry.path()));
        ++files;
    }
    const auto hr_mismatch = compare_with_oracle(model_of_dir(fixture("hr_portal")), hr);
    c.expect(hr_mismatch.empty(), "hr_portal: " + hr_mismatch);

    std::size_t random_files = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        for (const auto lang : {corpus::Lang::kCxx, corpus::Lang::kJava}) {
            corpus::Options options;
            options.noise = seed % 2 == 0;
            const auto file = corpus::generate_file(seed * 7717, lang, seed, options);
            const auto counted = oracle_counts(file);
            const auto truth = compare_truth(counted, file.truth);
            c.expect(truth.empty(), file.name + " seed " + std::to_string(seed) + ": " + truth);
            const auto mismatch = compare_with_oracle(model_of({{file.name, file.text}}), counted);
            c.expect(mismatch.empty(), file.name + " seed " + std::to_string(seed) + ": " + mismatch);
            ++random_files;
        }
    }
    c.detail << files << " fixture files, " << random_files << " random files";
}

std::vector<reuse::ParsedFile> parse_generated(const std::vector<corpus::GeneratedFile>& files) {
    std::vector<reuse::ParsedFile> parsed;
    for (const auto& f : files) {
        parsed.push_back(reuse::parse_source(
            f.text, f.name, f.lang == corpus::Lang::kCxx ? reuse::Dialect::kCxxTemplates : reuse::Dialect::kJavaGenerics));
    }
    return parsed;
}

// 5. Invariants over random models.
void invariants(Check& c) {
    constexpr std::uint64_t kModels = 20;
    for (std::uint64_t seed = 1; seed <= kModels; ++seed) {
        const std::string tag = "seed " + std::to_string(seed) + ": ";
        const auto files = corpus::generate_files(seed * 104729, 8);
        const auto model = reuse::ProjectModel::build(parse_generated(files));
        const auto report = reuse::compute_report(model, nullptr);

        std::vector<Ratio> ratios = {report.ctf, report.mtf_system, report.mtf_free_functions};
        for (const auto& [name, r] : report.mtf_per_class) {
            ratios.push_back(r);
        }
        for (const auto& r : ratios) {
            c.expect(!r.defined() || (r >= Ratio(0, 1) && r <= Ratio(1, 1)), tag + "ratio out of range " + r.to_string());
        }

        const std::vector<corpus::GeneratedFile> left(files.begin(), files.begin() + 3);
        const std::vector<corpus::GeneratedFile> right(files.begin() + 3, files.end());
        const std::vector<reuse::ProjectModel> parts = {reuse::ProjectModel::build(parse_generated(left)),
                                                        reuse::ProjectModel::build(parse_generated(right))};
        const auto merged = reuse::merge_models(parts);
        c.expect(reuse::compute_ctf(merged).same_counts(reuse::compute_ctf(parts[0]).pooled_with(reuse::compute_ctf(parts[1]))),
                 tag + "CTF not additive under merge");
        c.expect(reuse::compute_mtf(merged).same_counts(reuse::compute_mtf(parts[0]).pooled_with(reuse::compute_mtf(parts[1]))),
                 tag + "MTF not additive under merge");

        Ratio pooled = report.mtf_free_functions;
        for (const auto& [name, r] : report.mtf_per_class) {
            pooled = pooled.pooled_with(r);
        }
        c.expect(pooled.same_counts(report.mtf_system), tag + "per-class + free != system MTF");

        const auto reference = reuse::render_json(report);
        auto shuffled = files;
        std::shuffle(shuffled.begin(), shuffled.end(), std::mt19937_64(seed));
        c.expect(reuse::render_json(reuse::compute_report(reuse::ProjectModel::build(parse_generated(shuffled)), nullptr)) ==
                     reference,
                 tag + "scan order changed the report");

        corpus::Options noisy;
        noisy.noise = true;
        const auto noisy_files = corpus::generate_files(seed * 104729, 8, noisy);
        c.expect(reuse::render_json(reuse::compute_report(reuse::ProjectModel::build(parse_generated(noisy_files)), nullptr)) ==
                     reference,
                 tag + "comments/whitespace changed the report");
    }
    c.detail << kModels << " random models, 5 properties each";
}

// 6. Gates compare exactly at the boundary.
void gate_exactness(Check& c) {
    const auto report = reuse::compute_report(model_of_dir(fixture("hr_portal")), nullptr);
    auto passes = [&](const Ratio& threshold) {
        reuse::GateConfig config;
        config.min_ctf = threshold;
        return reuse::evaluate_gates(report, config).passed;
    };
    c.expect(passes(Ratio(3, 11)), "3/11 vs gate 3/11 failed");
    c.expect(passes(Ratio(6, 22)), "3/11 vs gate 6/22 failed");
    c.expect(passes(Ratio::parse("0.25")), "gate 0.25 failed");
    c.expect(!passes(Ratio::parse("0.5")), "gate 0.5 passed");
    c.expect(passes(Ratio::parse("0.272727")), "gate 0.272727 failed");
    c.expect(!passes(Ratio::parse("0.272728")), "gate 0.272728 passed");
    c.expect(passes(Ratio::parse("0.272727272727272727")), "gate 0.272727272727272727 failed");
    c.expect(!passes(Ratio::parse("0.272727272727272728")), "gate 0.272727272727272728 passed");
    c.expect(!passes(Ratio(3000001, 11000000)), "gate 3000001/11000000 passed");
    bool failed = false;
    for (std::uint64_t k = 0; k <= 10000; ++k) {
        const bool ok = passes(Ratio(k, 10000));
        c.expect(!(failed && ok), "non-monotone at " + std::to_string(k) + "/10000");
        failed = failed || !ok;
    }
    c.detail << "boundary 3/11 passes with >=, neighbours at 1e-18 split correctly";
}

// 7. Two runs over a 10k-line mixed corpus give byte-identical JSON, each under 1 s.
void determinism(Check& c) {
    TempDir dir;
    const auto files = corpus::generate_corpus(20240601, 10000);
    std::size_t lines = 0;
    for (const auto& f : files) {
        write_file(dir.path() / f.name, f.text);
        lines += corpus::line_count(f.text);
    }
    reuse::cli::RunConfig config;
    config.roots = {dir.path()};
    config.output_format = reuse::cli::OutputFormat::kJson;

    std::string outputs[2];
    double ms[2] = {0, 0};
    for (int run = 0; run < 2; ++run) {
        std::ostringstream out;
        std::ostringstream err;
        const auto start = Clock::now();
        const int code = reuse::cli::run(config, out, err);
        ms[run] = millis(Clock::now() - start);
        c.expect(code == 0, "run exited " + std::to_string(code) + ": " + err.str());
        outputs[run] = out.str();
        c.expect(ms[run] < 1000.0, "run " + std::to_string(run + 1) + " took " + std::to_string(ms[run]) + " ms");
    }
    c.expect(!outputs[0].empty() && outputs[0] == outputs[1], "outputs differ");
    c.detail << files.size() << " files, " << lines << " lines, runs " << std::fixed << std::setprecision(1)
             << ms[0] << " ms / " << ms[1] << " ms, " << outputs[0].size() << " bytes identical";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"template-function snippet MTF = 1/3 (< 10 ms)", template_function_mtf},
        {"template-class snippet CTF = 1/2", template_class_ctf},
        {"HR portal CTF = 3/11 and 11 per-class MTF values", hr_portal},
        {"oracle equivalence on fixtures and >= 20 random files", oracle_equivalence},
        {"invariant suite on random models", invariants},
        {"gate exactness at the 3/11 boundary", gate_exactness},
        {"determinism on a 10k-line mixed corpus (< 1 s per run)", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check check;
        try {
            criteria[i].second(check);
        } catch (const std::exception& e) {
            check.ok = false;
            check.detail << "exception: " << e.what();
        }
        failures += check.ok ? 0 : 1;
        std::cout << (check.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << " -- "
                  << check.detail.str() << '\n';
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
              << " acceptance criteria passed\n";
    return failures == 0 ? 0 : 1;
}
