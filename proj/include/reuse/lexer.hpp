#pragma once

#include "reuse/source_model.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace reuse {

enum class TokenKind {
    kIdent,
    kKeyword,
    kPunct,
    kLiteral,
    kTemplateOpen,
    kTemplateClose,
    kBraceOpen,
    kBraceClose,
    kParenOpen,
    kParenClose,
    kSemi,
};

std::string_view to_string(TokenKind kind) noexcept;

struct Token {
    TokenKind kind = TokenKind::kPunct;
    std::string text;
    std::size_t line = 0;

    [[nodiscard]] bool is(TokenKind k) const noexcept { return kind == k; }
    [[nodiscard]] bool is(TokenKind k, std::string_view t) const noexcept {
        return kind == k && text == t;
    }
    [[nodiscard]] bool is_punct(std::string_view t) const noexcept {
        return kind == TokenKind::kPunct && text == t;
    }

    friend bool operator==(const Token&, const Token&) = default;
};

struct LexResult {
    std::vector<Token> tokens;
    std::vector<ParseDiagnostic> diagnostics;
};

/**
 * Tolerant tokenizer shared by both dialects.
 *
 * Comments never reach the token stream, and neither do preprocessor lines
 * in the C++ dialect. Each string/char literal is one kLiteral token, so
 * delimiters inside literals never affect nesting.
 *
 * `<` becomes kTemplateOpen only at the head of a parameter clause: after
 * `template`, right after `class|struct|interface|record Name`, and (Java)
 * at the start of a member's own type-parameter list. The matching `>` is
 * kTemplateClose; every other angle bracket is plain kPunct. `>` is always
 * lexed alone so `>>` closes two clauses.
 *
 * Invalid UTF-8 is replaced with U+FFFD and reported once per line as WARN.
 * Unterminated comments, literals, and clauses are WARN with best-effort
 * recovery. Nothing here is fatal.
 */
LexResult tokenize(std::string_view text, Dialect dialect);

}  // namespace reuse
