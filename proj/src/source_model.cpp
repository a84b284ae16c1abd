#include "reuse/source_model.hpp"

#include "reuse/error.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>

namespace reuse {

std::string_view to_string(Dialect dialect) noexcept {
    switch (dialect) {
        case Dialect::kCxxTemplates: return "CXX_TEMPLATES";
        case Dialect::kJavaGenerics: return "JAVA_GENERICS";
    }
    return "?";
}

std::optional<Dialect> parse_dialect(std::string_view text) noexcept {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "cxx_templates" || lower == "cxx" || lower == "cpp" || lower == "c++") {
        return Dialect::kCxxTemplates;
    }
    if (lower == "java_generics" || lower == "java") {
        return Dialect::kJavaGenerics;
    }
    return std::nullopt;
}

std::string_view to_string(Severity severity) noexcept {
    return severity == Severity::kError ? "ERROR" : "WARN";
}

std::string_view to_string(ClassKind kind) noexcept {
    switch (kind) {
        case ClassKind::kClass: return "CLASS";
        case ClassKind::kStruct: return "STRUCT";
        case ClassKind::kInterface: return "INTERFACE";
    }
    return "?";
}

namespace {

void check_ownership(const ParsedFile& parsed) {
    const auto& facts = parsed.facts;
    for (MethodId m = 0; m < facts.methods.size(); ++m) {
        const auto& owner = facts.methods[m].owner;
        if (!owner) {
            continue;
        }
        if (*owner >= facts.classes.size()) {
            throw std::logic_error("method owner out of range in " + parsed.file.path);
        }
        const auto& ids = facts.classes[*owner].method_ids;
        if (std::find(ids.begin(), ids.end(), m) == ids.end()) {
            throw std::logic_error("owner does not list method in " + parsed.file.path);
        }
    }
    std::size_t listed = 0;
    for (const auto& cls : facts.classes) {
        listed += cls.method_ids.size();
    }
    const auto owned = static_cast<std::size_t>(std::count_if(
        facts.methods.begin(), facts.methods.end(), [](const auto& m) { return m.owner.has_value(); }));
    if (listed != owned) {
        throw std::logic_error("class method lists disagree with owners in " + parsed.file.path);
    }
}

}  // namespace

ProjectModel ProjectModel::build(std::vector<ParsedFile> parsed) {
    std::sort(parsed.begin(), parsed.end(),
              [](const ParsedFile& a, const ParsedFile& b) { return a.file.path < b.file.path; });
    for (std::size_t i = 1; i < parsed.size(); ++i) {
        if (parsed[i].file.path == parsed[i - 1].file.path) {
            throw DuplicateFileError(parsed[i].file.path);
        }
    }

    ProjectModel model;
    for (auto& entry : parsed) {
        check_ownership(entry);
        const auto& path = entry.file.path;
        const ClassId class_base = model.classes_.size();
        const MethodId method_base = model.methods_.size();

        for (auto& cls : entry.facts.classes) {
            cls.file = path;
            for (auto& id : cls.method_ids) {
                id += method_base;
            }
            model.classes_.push_back(std::move(cls));
        }
        for (auto& method : entry.facts.methods) {
            method.file = path;
            if (method.owner) {
                *method.owner += class_base;
            }
            model.methods_.push_back(std::move(method));
        }

        auto& diags = entry.file.diagnostics;
        diags.insert(diags.end(), std::make_move_iterator(entry.facts.diagnostics.begin()),
                     std::make_move_iterator(entry.facts.diagnostics.end()));
        for (auto& d : diags) {
            d.file = path;
        }
        std::sort(diags.begin(), diags.end());
        model.diagnostics_.insert(model.diagnostics_.end(), diags.begin(), diags.end());
        model.files_.push_back(std::move(entry.file));
    }

    std::unordered_map<std::string_view, ClassId> first_seen;
    for (ClassId id = 0; id < model.classes_.size(); ++id) {
        const auto& cls = model.classes_[id];
        auto [it, inserted] = first_seen.emplace(cls.qualified_name, id);
        if (!inserted) {
            const auto& first = model.classes_[it->second];
            model.diagnostics_.push_back(
                {cls.file, cls.span.start, Severity::kWarn,
                 "class name '" + cls.qualified_name + "' also declared at " + first.file + ":" +
                     std::to_string(first.span.start)});
        }
    }
    std::sort(model.diagnostics_.begin(), model.diagnostics_.end());
    return model;
}

std::size_t ProjectModel::error_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        diagnostics_.begin(), diagnostics_.end(),
        [](const ParseDiagnostic& d) { return d.severity == Severity::kError; }));
}

std::size_t ProjectModel::free_function_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(
        methods_.begin(), methods_.end(), [](const MethodDecl& m) { return !m.owner; }));
}

std::vector<ParsedFile> ProjectModel::fragments() const {
    std::vector<ParsedFile> out;
    out.reserve(files_.size());
    // Declarations are grouped by file in the same order as files_.
    ClassId next_class = 0;
    MethodId next_method = 0;
    for (const auto& file : files_) {
        ParsedFile frag{file, {}};
        const ClassId class_base = next_class;
        const MethodId method_base = next_method;
        while (next_class < classes_.size() && classes_[next_class].file == file.path) {
            auto cls = classes_[next_class++];
            for (auto& id : cls.method_ids) {
                id -= method_base;
            }
            frag.facts.classes.push_back(std::move(cls));
        }
        while (next_method < methods_.size() && methods_[next_method].file == file.path) {
            auto method = methods_[next_method++];
            if (method.owner) {
                *method.owner -= class_base;
            }
            frag.facts.methods.push_back(std::move(method));
        }
        out.push_back(std::move(frag));
    }
    return out;
}

ProjectModel merge_models(std::span<const ProjectModel> models) {
    std::vector<ParsedFile> all;
    for (const auto& model : models) {
        auto parts = model.fragments();
        all.insert(all.end(), std::make_move_iterator(parts.begin()),
                   std::make_move_iterator(parts.end()));
    }
    return ProjectModel::build(std::move(all));
}

}  // namespace reuse
