#include "scanner_internal.hpp"

#include <algorithm>
#include <array>
#include <string_view>
#include <utility>
#include <vector>

namespace reuse::detail {

namespace {

constexpr int kMaxNesting = 256;

constexpr std::array kModifiers = std::to_array<std::string_view>({
    "abstract", "default", "final", "native", "private", "protected", "public", "static",
    "strictfp", "synchronized", "transient", "volatile",
});

bool is_modifier(const Token& t) {
    if (t.is(TokenKind::kKeyword)) {
        return std::find(kModifiers.begin(), kModifiers.end(), t.text) != kModifiers.end();
    }
    return t.is(TokenKind::kIdent, "sealed");
}

std::string join(const std::string& prefix, const std::string& name) {
    return prefix.empty() ? name : prefix + "." + name;
}

struct Scope {
    std::string prefix;
    std::optional<ClassId> cls;
    std::string class_name;
};

class JavaScanner {
public:
    explicit JavaScanner(std::span<const Token> tokens) : cur_(tokens) {}

    FileFacts run() {
        scan_body(Scope{}, 0);
        if (unclosed_ > 0) {
            builder_.warn(cur_.line(), "unbalanced braces: " + std::to_string(unclosed_) +
                                           " scope(s) still open at end of file");
        }
        return std::move(builder_).take();
    }

private:
    /// Returns true when the body's closing brace was consumed.
    bool scan_body(const Scope& scope, int depth) {
        std::optional<PendingClause> pending;
        std::size_t decl_line = 0;  // 0: no declaration started
        auto begin_decl = [&](std::size_t line) {
            if (decl_line == 0) {
                decl_line = line;
            }
        };
        auto end_decl = [&] {
            pending.reset();
            decl_line = 0;
        };

        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kBraceClose)) {
                if (depth > 0) {
                    cur_.next();
                    return true;
                }
                builder_.error(t->line, "unmatched '}'");
                cur_.next();
                end_decl();
                continue;
            }
            if (t->is(TokenKind::kSemi)) {
                cur_.next();
                end_decl();
                continue;
            }
            if (depth == 0 && t->is(TokenKind::kKeyword, "package")) {
                read_package();
                end_decl();
                continue;
            }
            if (t->is(TokenKind::kKeyword, "import")) {
                skip_to_semicolon(cur_);
                end_decl();
                continue;
            }
            if (t->is_punct("@")) {
                begin_decl(t->line);
                if (cur_.peek_is(TokenKind::kKeyword, "interface", 1)) {
                    cur_.next();
                    const bool ok = parse_type(scope, depth, ClassKind::kInterface, decl_line);
                    end_decl();
                    if (!ok) {
                        return false;
                    }
                    continue;
                }
                skip_annotation();
                continue;
            }
            if (is_modifier(*t)) {
                begin_decl(t->line);
                cur_.next();
                continue;
            }
            if (t->is(TokenKind::kIdent, "non") && cur_.peek_punct("-", 1) &&
                cur_.peek_is(TokenKind::kIdent, "sealed", 2)) {
                begin_decl(t->line);
                cur_.next();
                cur_.next();
                cur_.next();
                continue;
            }
            if (t->is(TokenKind::kTemplateOpen)) {
                begin_decl(t->line);
                if (auto params = read_clause(cur_)) {
                    pending = PendingClause{*params, decl_line};
                } else {
                    builder_.error(t->line, "malformed type parameter list");
                    pending.reset();
                }
                continue;
            }
            const bool record = t->is(TokenKind::kIdent, "record") && cur_.peek_is(TokenKind::kIdent, 1);
            if (record || t->is(TokenKind::kKeyword, "class") || t->is(TokenKind::kKeyword, "interface") ||
                t->is(TokenKind::kKeyword, "enum")) {
                begin_decl(t->line);
                const ClassKind kind = t->text == "interface" ? ClassKind::kInterface : ClassKind::kClass;
                const bool ok = parse_type(scope, depth, kind, decl_line);
                end_decl();
                if (!ok) {
                    return false;
                }
                continue;
            }
            if (t->is(TokenKind::kBraceOpen)) {
                skip_group(cur_);  // initializer block
                end_decl();
                continue;
            }
            begin_decl(t->line);
            if (scope.cls) {
                parse_member(scope, pending, decl_line);
            } else {
                builder_.error(t->line, "unexpected tokens outside a type declaration skipped");
                skip_declaration(cur_);
            }
            end_decl();
        }
        unclosed_ = std::max(unclosed_, depth);
        return false;
    }

    void read_package() {
        cur_.next();
        std::string name;
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kSemi) || t->is(TokenKind::kBraceOpen) || t->is(TokenKind::kBraceClose)) {
                break;
            }
            name += t->text;
            cur_.next();
        }
        if (cur_.peek_is(TokenKind::kSemi)) {
            cur_.next();
        }
        package_ = name;
    }

    void skip_annotation() {
        cur_.next();  // @
        while (cur_.peek_is(TokenKind::kIdent) || cur_.peek_is(TokenKind::kKeyword)) {
            cur_.next();
            if (!cur_.peek_punct(".")) {
                break;
            }
            cur_.next();
        }
        if (cur_.peek_is(TokenKind::kParenOpen)) {
            skip_group(cur_);
        }
    }

    /// At `class|interface|enum|record`. Returns false if the file ended inside the body.
    bool parse_type(const Scope& scope, int depth, ClassKind kind, std::size_t line) {
        const Token& keyword = cur_.next();
        if (!cur_.peek_is(TokenKind::kIdent)) {
            builder_.error(keyword.line, "malformed " + keyword.text + " declaration skipped");
            skip_declaration(cur_);
            return true;
        }
        const std::string name = cur_.next().text;
        std::size_t params = 0;
        if (cur_.peek_is(TokenKind::kTemplateOpen)) {
            params = read_clause(cur_).value_or(0);
        }
        if (keyword.text == "record" && cur_.peek_is(TokenKind::kParenOpen)) {
            skip_group(cur_);
        }
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kBraceOpen) || t->is(TokenKind::kSemi) || t->is(TokenKind::kBraceClose)) {
                break;
            }
            if (is_opener(*t)) {
                skip_group(cur_);
            } else {
                cur_.next();
            }
        }
        if (!cur_.peek_is(TokenKind::kBraceOpen)) {
            builder_.error(keyword.line, "malformed " + keyword.text + " declaration skipped");
            skip_to_semicolon(cur_);
            return true;
        }
        cur_.next();

        const std::string prefix = scope.cls ? scope.prefix : package_;
        const std::string qualified = join(prefix, name);
        const ClassId id = builder_.add_class(qualified, kind, params, line);

        if (depth + 1 > kMaxNesting) {
            builder_.error(line, "nesting too deep; type body skipped");
            int open = 1;
            while (open > 0 && !cur_.at_end()) {
                const Token& t = cur_.next();
                open += is_opener(t) ? 1 : is_closer(t) ? -1 : 0;
            }
            builder_.close_class(id, cur_.line());
            return true;
        }
        if (keyword.text == "enum") {
            skip_enum_constants();
        }
        const bool closed = scan_body(Scope{qualified, id, name}, depth + 1);
        builder_.close_class(id, closed ? cur_.previous()->line : cur_.line());
        return closed;
    }

    void skip_enum_constants() {
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kSemi)) {
                cur_.next();
                return;
            }
            if (t->is(TokenKind::kBraceClose)) {
                return;
            }
            if (is_opener(*t)) {
                skip_group(cur_);
            } else {
                cur_.next();
            }
        }
    }

    void parse_member(const Scope& scope, const std::optional<PendingClause>& pending, std::size_t start_line) {
        std::vector<const Token*> head;
        bool is_template = pending && pending->params >= 1;
        int angle = 0;
        while (const Token* t = cur_.peek()) {
            if (angle == 0 && t->is(TokenKind::kSemi)) {
                cur_.next();
                return;
            }
            if (t->is(TokenKind::kBraceClose)) {
                if (!head.empty()) {
                    builder_.error(start_line, "unrecognized member skipped");
                }
                return;
            }
            if (angle == 0 && t->is_punct("=")) {
                skip_to_semicolon(cur_);
                return;
            }
            if (t->is_punct("@")) {
                skip_annotation();
                continue;
            }
            if (t->is(TokenKind::kTemplateOpen)) {
                is_template = read_clause(cur_).value_or(0) >= 1 || is_template;
                continue;
            }
            if (t->is(TokenKind::kBraceOpen)) {
                if (head.size() == 1 && head.front()->is(TokenKind::kIdent, scope.class_name)) {
                    skip_group(cur_);  // compact record constructor
                    add_method(scope, scope.class_name, is_template, start_line);
                    return;
                }
                builder_.error(start_line, "unrecognized member skipped");
                skip_group(cur_);
                return;
            }
            if (t->is_punct("[") || (t->is(TokenKind::kParenOpen) && angle > 0)) {
                skip_group(cur_);
                continue;
            }
            if (t->is(TokenKind::kParenOpen)) {
                if (head.empty() || !head.back()->is(TokenKind::kIdent)) {
                    builder_.error(start_line, "unrecognized member skipped");
                    skip_declaration(cur_);
                    return;
                }
                const std::string name = head.back()->text;
                const bool ctor = head.size() == 1 && name == scope.class_name;
                if (head.size() < 2 && !ctor) {
                    builder_.error(start_line, "unrecognized member '" + name + "' skipped");
                    skip_declaration(cur_);
                    return;
                }
                skip_group(cur_);
                skip_method_tail();
                add_method(scope, name, is_template, start_line);
                return;
            }
            if (t->is_punct("<")) {
                ++angle;
            } else if (t->is_punct(">") && angle > 0) {
                --angle;
            }
            head.push_back(&cur_.next());
        }
        builder_.error(start_line, "unterminated member declaration at end of file");
    }

    /// After the parameter list: `throws ...`, `default ...`, then a body or `;`.
    void skip_method_tail() {
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kBraceOpen)) {
                skip_group(cur_);
                return;
            }
            if (t->is(TokenKind::kSemi)) {
                cur_.next();
                return;
            }
            if (t->is(TokenKind::kBraceClose)) {
                return;
            }
            if (is_opener(*t)) {
                skip_group(cur_);
            } else {
                cur_.next();
            }
        }
    }

    void add_method(const Scope& scope, const std::string& name, bool is_template, std::size_t start_line) {
        const LineSpan span{start_line, cur_.previous() ? cur_.previous()->line : start_line};
        builder_.add_method(join(scope.prefix, name), scope.cls, is_template, span);
    }

    Cursor cur_;
    FactsBuilder builder_;
    std::string package_;
    int unclosed_ = 0;
};

}  // namespace

FileFacts scan_java(std::span<const Token> tokens) {
    return JavaScanner(tokens).run();
}

}  // namespace reuse::detail
