#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reuse {

/// Which declaration syntax a file is scanned with.
enum class Dialect {
    kCxxTemplates,  ///< C++: `template <...>` clauses
    kJavaGenerics,  ///< Java: `class Name<T>` and `<T> R method(...)`
};

std::string_view to_string(Dialect dialect) noexcept;
/// Accepts "CXX_TEMPLATES"/"cxx"/"cpp"/"c++" and "JAVA_GENERICS"/"java".
std::optional<Dialect> parse_dialect(std::string_view text) noexcept;

enum class Severity { kWarn, kError };

std::string_view to_string(Severity severity) noexcept;

struct ParseDiagnostic {
    std::string file;
    std::size_t line = 0;
    Severity severity = Severity::kWarn;
    std::string message;

    friend auto operator<=>(const ParseDiagnostic&, const ParseDiagnostic&) = default;
};

/// 1-based inclusive line range.
struct LineSpan {
    std::size_t start = 0;
    std::size_t end = 0;

    friend auto operator<=>(const LineSpan&, const LineSpan&) = default;
};

enum class ClassKind { kClass, kStruct, kInterface };

std::string_view to_string(ClassKind kind) noexcept;

/// Index into ProjectModel::classes() (or FileFacts::classes inside one file).
using ClassId = std::size_t;
/// Index into ProjectModel::methods() (or FileFacts::methods inside one file).
using MethodId = std::size_t;

struct ClassDecl {
    std::string qualified_name;
    std::string file;
    LineSpan span;
    ClassKind kind = ClassKind::kClass;
    std::size_t template_param_count = 0;
    std::vector<MethodId> method_ids;

    /// Declared with a template/generic parameter clause of at least one parameter.
    [[nodiscard]] bool is_template() const noexcept { return template_param_count >= 1; }
};

/// A member function, constructor, or free function. Free functions have no owner.
struct MethodDecl {
    std::string qualified_name;
    std::optional<ClassId> owner;
    std::string file;
    LineSpan span;
    /// The declaration's own template clause only; the owner's clause is irrelevant.
    bool is_template = false;
};

struct SourceFile {
    std::string path;
    Dialect dialect = Dialect::kCxxTemplates;
    std::size_t byte_count = 0;
    std::vector<ParseDiagnostic> diagnostics;
};

/// Declarations extracted from a single file. Ids are local to this file and
/// appear in declaration order.
struct FileFacts {
    std::vector<ClassDecl> classes;
    std::vector<MethodDecl> methods;
    std::vector<ParseDiagnostic> diagnostics;
};

struct ParsedFile {
    SourceFile file;
    FileFacts facts;
};

/**
 * Everything one analysis run knows about the source tree.
 *
 * Immutable after build(). Files are ordered by path and declarations by
 * (path, position in file), so the model's content never depends on the
 * order in which files were scanned. Class names that collide produce a WARN
 * diagnostic; both declarations stay in the model.
 */
class ProjectModel {
public:
    ProjectModel() = default;

    /// Throws DuplicateFileError if two entries share a path.
    static ProjectModel build(std::vector<ParsedFile> parsed);

    [[nodiscard]] const std::vector<SourceFile>& files() const noexcept { return files_; }
    [[nodiscard]] const std::vector<ClassDecl>& classes() const noexcept { return classes_; }
    [[nodiscard]] const std::vector<MethodDecl>& methods() const noexcept { return methods_; }
    /// File diagnostics plus model-level ones (name collisions), sorted.
    [[nodiscard]] const std::vector<ParseDiagnostic>& diagnostics() const noexcept {
        return diagnostics_;
    }

    [[nodiscard]] std::size_t error_count() const noexcept;
    [[nodiscard]] std::size_t free_function_count() const noexcept;

    /// Splits the model back into per-file fragments with file-local ids.
    [[nodiscard]] std::vector<ParsedFile> fragments() const;

private:
    std::vector<SourceFile> files_;
    std::vector<ClassDecl> classes_;
    std::vector<MethodDecl> methods_;
    std::vector<ParseDiagnostic> diagnostics_;
};

/// Union of disjoint models. Throws DuplicateFileError when a path repeats.
ProjectModel merge_models(std::span<const ProjectModel> models);

}  // namespace reuse
