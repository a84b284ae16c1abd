#include "reuse/scanner.hpp"

#include "scanner_internal.hpp"

namespace reuse {

namespace detail {

ClassId FactsBuilder::add_class(std::string qualified_name, ClassKind kind, std::size_t params,
                                std::size_t line) {
    ClassDecl decl;
    decl.qualified_name = std::move(qualified_name);
    decl.kind = kind;
    decl.template_param_count = params;
    decl.span = {line, line};
    facts_.classes.push_back(std::move(decl));
    return facts_.classes.size() - 1;
}

void FactsBuilder::close_class(ClassId id, std::size_t end_line) {
    facts_.classes[id].span.end = end_line;
}

void FactsBuilder::add_method(std::string qualified_name, std::optional<ClassId> owner,
                              bool is_template, LineSpan span) {
    MethodDecl decl;
    decl.qualified_name = std::move(qualified_name);
    decl.owner = owner;
    decl.is_template = is_template;
    decl.span = span;
    facts_.methods.push_back(std::move(decl));
    if (owner) {
        facts_.classes[*owner].method_ids.push_back(facts_.methods.size() - 1);
    }
}

void FactsBuilder::warn(std::size_t line, std::string message) {
    facts_.diagnostics.push_back({{}, line, Severity::kWarn, std::move(message)});
}

void FactsBuilder::error(std::size_t line, std::string message) {
    facts_.diagnostics.push_back({{}, line, Severity::kError, std::move(message)});
}

bool is_opener(const Token& t) noexcept {
    return t.kind == TokenKind::kBraceOpen || t.kind == TokenKind::kParenOpen || t.is_punct("[");
}

bool is_closer(const Token& t) noexcept {
    return t.kind == TokenKind::kBraceClose || t.kind == TokenKind::kParenClose || t.is_punct("]");
}

bool skip_group(Cursor& cur) {
    int depth = 0;
    while (const Token* t = cur.peek()) {
        cur.next();
        if (is_opener(*t)) {
            ++depth;
        } else if (is_closer(*t) && --depth <= 0) {
            return true;
        }
    }
    return false;
}

std::optional<std::size_t> read_clause(Cursor& cur) {
    cur.next();  // kTemplateOpen
    std::size_t params = 0;
    bool segment_has_tokens = false;
    int angle = 0;
    int nest = 0;
    while (const Token* t = cur.peek()) {
        if (t->is(TokenKind::kTemplateClose)) {
            cur.next();
            return params + (segment_has_tokens ? 1 : 0);
        }
        if (nest == 0 && (t->is(TokenKind::kSemi) || t->is(TokenKind::kBraceOpen) ||
                          t->is(TokenKind::kBraceClose))) {
            return std::nullopt;
        }
        cur.next();
        if (t->is(TokenKind::kParenOpen) || t->is_punct("[") || t->is(TokenKind::kBraceOpen)) {
            ++nest;
        } else if ((t->is(TokenKind::kParenClose) || t->is_punct("]") || t->is(TokenKind::kBraceClose)) &&
                   nest > 0) {
            --nest;
        } else if (nest == 0 && t->is_punct("<")) {
            ++angle;
        } else if (nest == 0 && t->is_punct(">") && angle > 0) {
            --angle;
        } else if (nest == 0 && angle == 0 && t->is_punct(",")) {
            if (segment_has_tokens) {
                ++params;
            }
            segment_has_tokens = false;
            continue;
        }
        segment_has_tokens = true;
    }
    return std::nullopt;
}

void skip_to_semicolon(Cursor& cur) {
    while (const Token* t = cur.peek()) {
        if (t->is(TokenKind::kSemi)) {
            cur.next();
            return;
        }
        if (t->is(TokenKind::kBraceClose)) {
            return;
        }
        if (is_opener(*t)) {
            skip_group(cur);
            continue;
        }
        cur.next();
    }
}

void skip_declaration(Cursor& cur) {
    bool after_params = false;
    while (const Token* t = cur.peek()) {
        if (t->is(TokenKind::kSemi)) {
            cur.next();
            return;
        }
        if (t->is(TokenKind::kBraceClose)) {
            return;
        }
        if (t->is(TokenKind::kBraceOpen)) {
            skip_group(cur);
            if (after_params) {
                return;
            }
            continue;
        }
        if (is_opener(*t)) {
            const bool paren = t->is(TokenKind::kParenOpen);
            skip_group(cur);
            after_params = after_params || paren;
            continue;
        }
        // `= ...` after a parameter list means a pure/defaulted declaration, not a body.
        if (t->is_punct("=")) {
            after_params = false;
        }
        cur.next();
    }
}

}  // namespace detail

FileFacts scan_declarations(std::span<const Token> tokens, Dialect dialect) {
    return dialect == Dialect::kCxxTemplates ? detail::scan_cxx(tokens) : detail::scan_java(tokens);
}

}  // namespace reuse
