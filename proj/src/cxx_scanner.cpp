#include "scanner_internal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <string_view>
#include <utility>
#include <vector>

namespace reuse::detail {

namespace {

constexpr int kMaxNesting = 256;

constexpr std::array kSpecifiers = std::to_array<std::string_view>({
    "consteval", "constexpr", "constinit", "explicit", "extern", "friend", "inline", "mutable",
    "register", "static", "thread_local", "virtual",
});

bool is_specifier(const Token& t) {
    return t.is(TokenKind::kKeyword) &&
           std::find(kSpecifiers.begin(), kSpecifiers.end(), t.text) != kSpecifiers.end();
}

bool is_access_keyword(const Token& t) {
    return t.is(TokenKind::kKeyword) &&
           (t.text == "public" || t.text == "private" || t.text == "protected");
}

bool skipped_with_declaration(const Token& t) {
    if (!t.is(TokenKind::kKeyword)) {
        return false;
    }
    return t.text == "using" || t.text == "typedef" || t.text == "static_assert" ||
           t.text == "friend" || t.text == "concept" || t.text == "enum" || t.text == "asm";
}

/// Keywords and attribute-like identifiers whose parenthesized argument is part of the head.
bool takes_paren_argument(const Token& t) {
    if (t.is(TokenKind::kKeyword)) {
        return t.text == "decltype" || t.text == "alignas" || t.text == "noexcept" ||
               t.text == "sizeof" || t.text == "alignof";
    }
    return t.is(TokenKind::kIdent) &&
           (t.text == "__attribute__" || t.text == "__declspec" || t.text == "_Alignas");
}

std::string join(const std::string& prefix, const std::string& name) {
    return prefix.empty() ? name : prefix + "::" + name;
}

std::string last_segment(const std::string& name) {
    const auto pos = name.rfind("::");
    return pos == std::string::npos ? name : name.substr(pos + 2);
}

std::string preview(const std::vector<const Token*>& head) {
    std::string text;
    for (const Token* t : head) {
        if (text.size() > 40) {
            text += " ...";
            break;
        }
        if (!text.empty()) {
            text += ' ';
        }
        text += t->text;
    }
    return text;
}

struct Scope {
    std::string prefix;
    std::optional<ClassId> cls;
    std::string class_name;
};

/// What precedes a declarator name.
struct HeadInfo {
    bool qualified = false;  ///< `X::name`
    bool has_type = false;   ///< a return type or other non-specifier token
};

/// `before` holds the head tokens preceding the declarator name.
HeadInfo analyze_head(std::span<const Token* const> before) {
    HeadInfo info;
    std::size_t j = before.size();
    info.qualified = j > 0 && before[j - 1]->is_punct("::");
    while (j > 0 && before[j - 1]->is_punct("::")) {
        --j;
        if (j > 0 && before[j - 1]->is_punct(">")) {
            int depth = 0;
            while (j > 0) {
                --j;
                if (before[j]->is_punct(">")) {
                    ++depth;
                } else if (before[j]->is_punct("<") && --depth == 0) {
                    break;
                }
            }
        }
        if (j > 0 && before[j - 1]->is(TokenKind::kIdent)) {
            --j;
        }
    }
    info.has_type = std::any_of(before.begin(), before.begin() + static_cast<std::ptrdiff_t>(j),
                                [](const Token* t) { return !is_specifier(*t); });
    return info;
}

/// Index of the identifier naming a declarator that ends `head`, looking
/// through template arguments as in `f<int>`.
std::optional<std::size_t> declarator_name(const std::vector<const Token*>& head) {
    std::size_t j = head.size();
    if (j > 0 && head[j - 1]->is_punct(">")) {
        int depth = 0;
        while (j > 0) {
            --j;
            if (head[j]->is_punct(">")) {
                ++depth;
            } else if (head[j]->is_punct("<") && --depth == 0) {
                break;
            }
        }
        if (depth != 0) {
            return std::nullopt;
        }
    }
    if (j == 0 || !head[j - 1]->is(TokenKind::kIdent)) {
        return std::nullopt;
    }
    return j - 1;
}

class CxxScanner {
public:
    explicit CxxScanner(std::span<const Token> tokens) : cur_(tokens) {}

    FileFacts run() {
        scan_scope(Scope{}, 0);
        if (unclosed_ > 0) {
            builder_.warn(cur_.line(), "unbalanced braces: " + std::to_string(unclosed_) +
                                           " scope(s) still open at end of file");
        }
        return std::move(builder_).take();
    }

private:
    /// Returns true when the scope's closing brace was consumed.
    bool scan_scope(const Scope& scope, int depth) {
        std::optional<PendingClause> pending;
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kBraceClose)) {
                if (depth > 0) {
                    cur_.next();
                    return true;
                }
                builder_.error(t->line, "unmatched '}'");
                cur_.next();
                pending.reset();
                continue;
            }
            if (t->is(TokenKind::kSemi)) {
                cur_.next();
                pending.reset();
                continue;
            }
            if (t->is(TokenKind::kKeyword, "template")) {
                read_template(pending);
                continue;
            }
            if (t->is_punct("[") && cur_.peek_punct("[", 1)) {
                skip_group(cur_);
                continue;
            }
            if (t->is(TokenKind::kKeyword, "extern") && cur_.peek_is(TokenKind::kLiteral, 1)) {
                cur_.next();
                cur_.next();
                if (cur_.peek_is(TokenKind::kBraceOpen)) {
                    cur_.next();
                    if (!scan_scope(scope, depth + 1)) {
                        return false;
                    }
                }
                continue;
            }
            if (t->is(TokenKind::kKeyword, "inline") && cur_.peek_is(TokenKind::kKeyword, "namespace", 1)) {
                cur_.next();
                continue;
            }
            if (t->is(TokenKind::kKeyword, "namespace")) {
                pending.reset();
                if (!scan_namespace(scope, depth)) {
                    return false;
                }
                continue;
            }
            if (skipped_with_declaration(*t)) {
                skip_declaration(cur_);
                pending.reset();
                continue;
            }
            if (is_access_keyword(*t)) {
                if (cur_.peek_punct(":", 1)) {
                    cur_.next();
                    cur_.next();
                    continue;
                }
                if (cur_.peek_is(TokenKind::kIdent, 1) && cur_.peek_punct(":", 2)) {
                    cur_.next();
                    cur_.next();
                    cur_.next();
                    continue;
                }
            }
            if (scope.cls && t->is(TokenKind::kIdent) && cur_.peek_punct(":", 1)) {
                // Qt-style `signals:` section label.
                cur_.next();
                cur_.next();
                continue;
            }
            if (t->is(TokenKind::kKeyword) &&
                (t->text == "class" || t->text == "struct" || t->text == "union")) {
                if (!parse_class(scope, depth, std::exchange(pending, std::nullopt))) {
                    return false;
                }
                continue;
            }
            parse_declaration(scope, std::exchange(pending, std::nullopt));
        }
        unclosed_ = std::max(unclosed_, depth);
        return false;
    }

    void read_template(std::optional<PendingClause>& pending) {
        const std::size_t line = cur_.next().line;
        if (!cur_.peek_is(TokenKind::kTemplateOpen)) {
            // Explicit instantiation: `template class X<int>;`
            skip_declaration(cur_);
            pending.reset();
            return;
        }
        if (auto params = read_clause(cur_)) {
            // Nested clauses (`template<class T> template<class U>`) keep the outer line.
            pending = PendingClause{*params, pending ? pending->line : line};
        } else {
            builder_.error(line, "malformed template parameter clause");
            pending.reset();
        }
    }

    bool scan_namespace(const Scope& scope, int depth) {
        cur_.next();
        std::string name;
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kIdent)) {
                name += t->text;
            } else if (t->is_punct("::")) {
                name += "::";
            } else if (t->is_punct("[") && cur_.peek_punct("[", 1)) {
                skip_group(cur_);
                continue;
            } else if (!t->is(TokenKind::kKeyword, "inline")) {
                break;
            }
            cur_.next();
        }
        if (!cur_.peek_is(TokenKind::kBraceOpen)) {
            skip_to_semicolon(cur_);  // namespace alias
            return true;
        }
        cur_.next();
        const std::string prefix = name.empty() ? scope.prefix : join(scope.prefix, name);
        if (depth + 1 > kMaxNesting) {
            builder_.error(cur_.line(), "nesting too deep; namespace body skipped");
            skip_rest_of_group();
            return true;
        }
        return scan_scope(Scope{prefix, std::nullopt, {}}, depth + 1);
    }

    /// Consumes tokens through the `}` closing the group whose `{` was just consumed.
    void skip_rest_of_group() {
        int depth = 1;
        while (const Token* t = cur_.peek()) {
            cur_.next();
            if (is_opener(*t)) {
                ++depth;
            } else if (is_closer(*t) && --depth == 0) {
                return;
            }
        }
    }

    bool parse_class(const Scope& scope, int depth, std::optional<PendingClause> pending) {
        const std::size_t start = cur_.position();
        const Token& keyword = cur_.next();
        std::string name;
        while (const Token* t = cur_.peek()) {
            if (t->is_punct("[") && cur_.peek_punct("[", 1)) {
                skip_group(cur_);
                continue;
            }
            if (takes_paren_argument(*t) && cur_.peek_is(TokenKind::kParenOpen, 1)) {
                cur_.next();
                skip_group(cur_);
                continue;
            }
            if (t->is(TokenKind::kIdent)) {
                if (t->text == "final" && (cur_.peek_is(TokenKind::kBraceOpen, 1) || cur_.peek_punct(":", 1))) {
                    cur_.next();
                    continue;
                }
                // `class EXPORT_MACRO Name`: a second identifier replaces the first.
                if (!name.empty() && !cur_.previous()->is_punct("::")) {
                    name.clear();
                }
                name += t->text;
                cur_.next();
                continue;
            }
            if (t->is_punct("::")) {
                name += "::";
                cur_.next();
                continue;
            }
            if (t->is(TokenKind::kTemplateOpen)) {
                if (!read_clause(cur_)) {
                    break;
                }
                continue;  // specialization arguments
            }
            break;
        }

        bool has_bases = false;
        if (cur_.peek_punct(":")) {
            has_bases = true;
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
        }

        if (!cur_.peek_is(TokenKind::kBraceOpen)) {
            if (has_bases) {
                builder_.error(keyword.line, "malformed " + keyword.text + " head skipped");
                skip_to_semicolon(cur_);
                return true;
            }
            if (cur_.peek_is(TokenKind::kSemi)) {
                cur_.next();  // forward declaration
                return true;
            }
            // Elaborated type specifier inside an ordinary declaration: `struct stat buf;`
            cur_.rewind(start);
            parse_declaration(scope, pending, /*class_keyword_in_head=*/true);
            return true;
        }

        if (keyword.text == "union" || name.empty()) {
            if (name.empty()) {
                builder_.warn(keyword.line, "anonymous " + keyword.text + " skipped");
            }
            const bool closed = skip_group(cur_);
            if (closed) {
                skip_to_semicolon(cur_);
            } else {
                unclosed_ = std::max(unclosed_, depth + 1);
            }
            return closed;
        }

        const std::string qualified = join(scope.prefix, name);
        const std::size_t line = pending ? pending->line : keyword.line;
        const ClassId id = builder_.add_class(
            qualified, keyword.text == "struct" ? ClassKind::kStruct : ClassKind::kClass,
            pending ? pending->params : 0, line);
        cur_.next();

        if (depth + 1 > kMaxNesting) {
            builder_.error(line, "nesting too deep; class body skipped");
            skip_rest_of_group();
            builder_.close_class(id, cur_.previous()->line);
            return true;
        }
        const bool closed = scan_scope(Scope{qualified, id, last_segment(name)}, depth + 1);
        builder_.close_class(id, closed ? cur_.previous()->line : cur_.line());
        if (closed && !cur_.peek_is(TokenKind::kBraceClose)) {
            skip_to_semicolon(cur_);  // trailing declarators: `} a, *b;`
        }
        return closed;
    }

    void parse_declaration(const Scope& scope, std::optional<PendingClause> pending,
                           bool class_keyword_in_head = false) {
        std::size_t start_line = pending ? pending->line : cur_.line();
        std::vector<const Token*> head;
        int angle = 0;
        if (class_keyword_in_head) {
            head.push_back(&cur_.next());
        }

        while (const Token* t = cur_.peek()) {
            if (angle == 0 && t->is(TokenKind::kSemi)) {
                cur_.next();
                return;
            }
            if (t->is(TokenKind::kBraceClose)) {
                if (!head.empty()) {
                    builder_.error(start_line, "unrecognized construct skipped: '" + preview(head) + "'");
                }
                return;
            }
            if (angle == 0 && t->is_punct("=")) {
                skip_to_semicolon(cur_);
                return;
            }
            if (is_access_keyword(*t) && !head.empty() &&
                (cur_.peek_punct(":", 1) || cur_.peek_punct(":", 2))) {
                builder_.warn(start_line, "unrecognized tokens before access specifier skipped: '" +
                                              preview(head) + "'");
                return;
            }
            if (t->is(TokenKind::kBraceOpen) || t->is_punct("[") ||
                (t->is(TokenKind::kParenOpen) && angle > 0)) {
                skip_group(cur_);
                continue;
            }
            if (takes_paren_argument(*t) && cur_.peek_is(TokenKind::kParenOpen, 1)) {
                head.push_back(&cur_.next());
                skip_group(cur_);
                continue;
            }
            if (t->is(TokenKind::kTemplateOpen)) {
                if (!read_clause(cur_)) {
                    cur_.next();
                }
                continue;
            }
            if (t->is(TokenKind::kKeyword, "operator")) {
                const HeadInfo info = analyze_head(head);
                std::string name = read_operator_name();
                if (!cur_.peek_is(TokenKind::kParenOpen)) {
                    builder_.error(start_line, "malformed operator declaration skipped");
                    skip_declaration(cur_);
                    return;
                }
                finish_function(scope, pending, start_line, std::move(name), info);
                return;
            }
            if (t->is(TokenKind::kParenOpen)) {
                const auto found = declarator_name(head);
                if (!found) {
                    skip_group(cur_);  // `void (*fp)(int)` and the like
                    continue;
                }
                std::size_t name_index = *found;
                std::string name = head[name_index]->text;
                const bool dtor = name_index > 0 && head[name_index - 1]->is_punct("~");
                if (dtor) {
                    --name_index;
                    name = "~" + name;
                }
                const HeadInfo info =
                    analyze_head(std::span<const Token* const>(head.data(), name_index));
                const bool ctor_like = dtor || (scope.cls && name == scope.class_name);
                if (!info.qualified && !info.has_type && !ctor_like) {
                    builder_.warn(head[name_index]->line, "macro invocation '" + name + "' skipped");
                    skip_group(cur_);
                    if (cur_.peek_is(TokenKind::kBraceOpen)) {
                        skip_group(cur_);
                        return;
                    }
                    head.clear();
                    angle = 0;
                    start_line = cur_.line();
                    continue;
                }
                finish_function(scope, pending, start_line, std::move(name), info);
                return;
            }
            if (t->is_punct("<") || t->is(TokenKind::kTemplateOpen)) {
                ++angle;
            } else if (t->is_punct(">") && angle > 0) {
                --angle;
            }
            head.push_back(&cur_.next());
        }
        if (!head.empty()) {
            builder_.error(start_line, "unterminated declaration at end of file");
        }
    }

    std::string read_operator_name() {
        cur_.next();
        std::string name = "operator";
        if (cur_.peek_is(TokenKind::kParenOpen) && cur_.peek_is(TokenKind::kParenClose, 1)) {
            cur_.next();
            cur_.next();
            return name + "()";
        }
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kParenOpen) || t->is(TokenKind::kSemi) ||
                t->is(TokenKind::kBraceOpen) || t->is(TokenKind::kBraceClose)) {
                break;
            }
            const bool word = t->is(TokenKind::kIdent) || t->is(TokenKind::kKeyword);
            if (word && std::isalnum(static_cast<unsigned char>(name.back()))) {
                name += ' ';
            }
            name += t->text;
            cur_.next();
        }
        return name;
    }

    /// At the parameter list of a function declarator.
    void finish_function(const Scope& scope, const std::optional<PendingClause>& pending,
                         std::size_t start_line, std::string name, const HeadInfo& info) {
        skip_group(cur_);
        bool has_body = false;
        bool in_init_list = false;
        while (const Token* t = cur_.peek()) {
            if (t->is(TokenKind::kBraceOpen)) {
                const Token* prev = cur_.previous();
                if (in_init_list && (prev->is(TokenKind::kIdent) || prev->is_punct(">"))) {
                    skip_group(cur_);  // brace-initialized member
                    continue;
                }
                skip_group(cur_);
                has_body = true;
                while (cur_.peek_is(TokenKind::kKeyword, "catch")) {
                    cur_.next();
                    if (cur_.peek_is(TokenKind::kParenOpen)) {
                        skip_group(cur_);
                    }
                    if (cur_.peek_is(TokenKind::kBraceOpen)) {
                        skip_group(cur_);
                    }
                }
                break;
            }
            if (t->is(TokenKind::kSemi)) {
                cur_.next();
                break;
            }
            if (t->is(TokenKind::kBraceClose)) {
                break;
            }
            if (t->is_punct(":")) {
                in_init_list = true;
            }
            if (is_opener(*t)) {
                skip_group(cur_);
                continue;
            }
            cur_.next();
        }

        if (info.qualified) {
            return;  // out-of-line member definition; the in-class declaration is counted
        }
        const LineSpan span{start_line, cur_.previous() ? cur_.previous()->line : start_line};
        const bool is_template = pending && pending->params >= 1;
        if (scope.cls) {
            builder_.add_method(join(scope.prefix, name), scope.cls, is_template, span);
        } else if (has_body) {
            builder_.add_method(join(scope.prefix, name), std::nullopt, is_template, span);
        }
    }

    Cursor cur_;
    FactsBuilder builder_;
    int unclosed_ = 0;
};

}  // namespace

FileFacts scan_cxx(std::span<const Token> tokens) {
    return CxxScanner(tokens).run();
}

}  // namespace reuse::detail
