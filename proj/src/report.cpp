#include "reuse/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <string_view>
#include <vector>

namespace reuse {

namespace {

using nlohmann::json;

json ratio_json(const Ratio& r) {
    json out = json::object();
    out["num"] = r.numerator();
    out["den"] = r.denominator();
    if (auto value = r.decimal()) {
        out["value"] = *value;
    } else {
        out["value"] = nullptr;
    }
    return out;
}

json diagnostic_json(const ParseDiagnostic& d) {
    return {{"file", d.file}, {"line", d.line}, {"severity", to_string(d.severity)}, {"message", d.message}};
}

std::string csv_field(std::string_view field) {
    if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(field);
    }
    std::string quoted = "\"";
    for (const char c : field) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void csv_row(std::ostringstream& out, std::string_view section, std::string_view name,
             const std::string& num, const std::string& den, const std::string& value) {
    out << csv_field(section) << ',' << csv_field(name) << ',' << num << ',' << den << ','
        << csv_field(value) << '\n';
}

void csv_ratio(std::ostringstream& out, std::string_view section, std::string_view name, const Ratio& r) {
    csv_row(out, section, name, std::to_string(r.numerator()), std::to_string(r.denominator()),
            r.decimal().value_or(""));
}

std::string show_value(const Ratio& r) { return r.decimal().value_or("UNDEFINED"); }

}  // namespace

std::string render_json(const MetricsReport& report) {
    json doc = json::object();
    doc["schema_version"] = kSchemaVersion;
    doc["kind"] = "metrics_report";
    doc["ctf"] = ratio_json(report.ctf);
    doc["mtf"] = ratio_json(report.mtf_system);
    doc["mtf_free_functions"] = ratio_json(report.mtf_free_functions);

    json per_class = json::object();
    for (const auto& [name, ratio] : report.mtf_per_class) {
        per_class[name] = ratio_json(ratio);
    }
    doc["mtf_per_class"] = per_class;
    doc["undefined_mtf"] = report.undefined_mtf;
    doc["reuse_ratio"] = report.reuse_ratio ? ratio_json(*report.reuse_ratio) : json(nullptr);

    json categories = json::object();
    for (const auto& [category, count] : report.category_counts) {
        categories[std::string(to_string(category))] = count;
    }
    doc["category_counts"] = categories;

    const auto& s = report.summary;
    doc["summary"] = {{"files", s.files},
                      {"classes", s.classes},
                      {"methods", s.methods},
                      {"free_functions", s.free_functions},
                      {"error_diagnostics", s.error_diagnostics}};
    return doc.dump(2) + "\n";
}

std::string render_csv(const MetricsReport& report) {
    std::ostringstream out;
    out << "section,name,num,den,value\n";
    csv_ratio(out, "metric", "ctf", report.ctf);
    csv_ratio(out, "metric", "mtf", report.mtf_system);
    csv_ratio(out, "metric", "mtf_free_functions", report.mtf_free_functions);
    if (report.reuse_ratio) {
        csv_ratio(out, "metric", "reuse_ratio", *report.reuse_ratio);
    }
    for (const auto& [name, ratio] : report.mtf_per_class) {
        csv_ratio(out, "mtf_per_class", name, ratio);
    }
    for (const auto& name : report.undefined_mtf) {
        csv_ratio(out, "undefined_mtf", name, Ratio::undefined());
    }
    for (const auto& [category, count] : report.category_counts) {
        csv_row(out, "category", to_string(category), std::to_string(count), "", "");
    }
    const auto& s = report.summary;
    csv_row(out, "summary", "files", std::to_string(s.files), "", "");
    csv_row(out, "summary", "classes", std::to_string(s.classes), "", "");
    csv_row(out, "summary", "methods", std::to_string(s.methods), "", "");
    csv_row(out, "summary", "free_functions", std::to_string(s.free_functions), "", "");
    csv_row(out, "summary", "error_diagnostics", std::to_string(s.error_diagnostics), "", "");
    return out.str();
}

std::string render_table(const MetricsReport& report) {
    std::vector<std::pair<std::string, Ratio>> metrics = {
        {"CTF", report.ctf},
        {"MTF (system)", report.mtf_system},
        {"MTF (free functions)", report.mtf_free_functions},
    };
    if (report.reuse_ratio) {
        metrics.emplace_back("U (reuse ratio)", *report.reuse_ratio);
    }

    std::size_t name_width = std::string_view("class").size();
    for (const auto& [name, ratio] : metrics) {
        name_width = std::max(name_width, name.size());
    }
    for (const auto& [name, ratio] : report.mtf_per_class) {
        name_width = std::max(name_width, name.size());
    }

    std::ostringstream out;
    const auto& s = report.summary;
    out << "files: " << s.files << "  classes: " << s.classes << "  methods: " << s.methods
        << "  free functions: " << s.free_functions << "  errors: " << s.error_diagnostics << "\n\n";

    const auto row = [&](const std::string& name, const Ratio& r) {
        out << std::left << std::setw(static_cast<int>(name_width)) << name << std::right
            << std::setw(8) << r.numerator() << std::setw(8) << r.denominator() << "  "
            << show_value(r) << '\n';
    };
    const auto header = [&](std::string_view first) {
        out << std::left << std::setw(static_cast<int>(name_width)) << first << std::right
            << std::setw(8) << "num" << std::setw(8) << "den" << "  value\n";
    };

    header("metric");
    for (const auto& [name, ratio] : metrics) {
        row(name, ratio);
    }

    out << '\n';
    header("class");
    for (const auto& [name, ratio] : report.mtf_per_class) {
        row(name, ratio);
    }
    if (!report.undefined_mtf.empty()) {
        out << "\nclasses without methods (MTF undefined):\n";
        for (const auto& name : report.undefined_mtf) {
            out << "  " << name << '\n';
        }
    }

    out << "\ncategories:\n";
    for (const auto& [category, count] : report.category_counts) {
        out << "  " << std::left << std::setw(18) << to_string(category) << std::right << count << '\n';
    }
    return out.str();
}

std::string render_model_json(const ProjectModel& model) {
    json files = json::array();
    for (const auto& f : model.files()) {
        json diags = json::array();
        for (const auto& d : f.diagnostics) {
            diags.push_back(diagnostic_json(d));
        }
        files.push_back({{"path", f.path},
                         {"dialect", to_string(f.dialect)},
                         {"byte_count", f.byte_count},
                         {"diagnostics", diags}});
    }

    json classes = json::array();
    for (ClassId id = 0; id < model.classes().size(); ++id) {
        const auto& c = model.classes()[id];
        classes.push_back({{"id", id},
                           {"qualified_name", c.qualified_name},
                           {"file", c.file},
                           {"span", {c.span.start, c.span.end}},
                           {"kind", to_string(c.kind)},
                           {"is_template", c.is_template()},
                           {"template_param_count", c.template_param_count},
                           {"method_ids", c.method_ids}});
    }

    json methods = json::array();
    for (MethodId id = 0; id < model.methods().size(); ++id) {
        const auto& m = model.methods()[id];
        methods.push_back({{"id", id},
                           {"qualified_name", m.qualified_name},
                           {"owner", m.owner ? json(*m.owner) : json(nullptr)},
                           {"file", m.file},
                           {"span", {m.span.start, m.span.end}},
                           {"is_template", m.is_template}});
    }

    json diags = json::array();
    for (const auto& d : model.diagnostics()) {
        diags.push_back(diagnostic_json(d));
    }

    json doc = {{"schema_version", kSchemaVersion},
                {"kind", "project_model"},
                {"files", files},
                {"classes", classes},
                {"methods", methods},
                {"diagnostics", diags}};
    return doc.dump(2) + "\n";
}

}  // namespace reuse
