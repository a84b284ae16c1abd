#pragma once

#include "reuse/lexer.hpp"
#include "reuse/source_model.hpp"

#include <optional>
#include <span>
#include <string>

namespace reuse::detail {

class Cursor {
public:
    explicit Cursor(std::span<const Token> tokens) : tokens_(tokens) {}

    [[nodiscard]] bool at_end() const noexcept { return pos_ >= tokens_.size(); }
    [[nodiscard]] const Token* peek(std::size_t ahead = 0) const noexcept {
        return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
    }
    [[nodiscard]] bool peek_is(TokenKind kind, std::size_t ahead = 0) const noexcept {
        const Token* t = peek(ahead);
        return t != nullptr && t->kind == kind;
    }
    [[nodiscard]] bool peek_is(TokenKind kind, std::string_view text, std::size_t ahead = 0) const noexcept {
        const Token* t = peek(ahead);
        return t != nullptr && t->is(kind, text);
    }
    [[nodiscard]] bool peek_punct(std::string_view text, std::size_t ahead = 0) const noexcept {
        const Token* t = peek(ahead);
        return t != nullptr && t->is_punct(text);
    }
    const Token& next() noexcept { return tokens_[pos_++]; }
    /// The most recently consumed token.
    [[nodiscard]] const Token* previous() const noexcept {
        return pos_ > 0 && pos_ <= tokens_.size() ? &tokens_[pos_ - 1] : nullptr;
    }
    [[nodiscard]] std::size_t position() const noexcept { return pos_; }
    void rewind(std::size_t pos) noexcept { pos_ = pos; }

    /// Line of the next token, or of the last token at end of stream.
    [[nodiscard]] std::size_t line() const noexcept {
        if (const Token* t = peek()) {
            return t->line;
        }
        return tokens_.empty() ? 1 : tokens_.back().line;
    }

private:
    std::span<const Token> tokens_;
    std::size_t pos_ = 0;
};

/// The template/generic clause that precedes the next declaration.
struct PendingClause {
    std::size_t params = 0;
    std::size_t line = 0;
};

class FactsBuilder {
public:
    ClassId add_class(std::string qualified_name, ClassKind kind, std::size_t params, std::size_t line);
    void close_class(ClassId id, std::size_t end_line);
    void add_method(std::string qualified_name, std::optional<ClassId> owner, bool is_template,
                    LineSpan span);
    void warn(std::size_t line, std::string message);
    void error(std::size_t line, std::string message);

    FileFacts take() && { return std::move(facts_); }

private:
    FileFacts facts_;
};

bool is_opener(const Token& t) noexcept;
bool is_closer(const Token& t) noexcept;

/// At an opener (`{`, `(`, `[`): consumes through its matching closer.
/// Returns false if the stream ended first.
bool skip_group(Cursor& cur);

/// At kTemplateOpen: consumes the clause and returns its parameter count
/// (top-level comma-separated, non-empty segments). Stops without consuming
/// at a stray `;`, `{` or `}` and returns nullopt.
std::optional<std::size_t> read_clause(Cursor& cur);

/// Skips to the end of an initializer or simple declaration: consumes a
/// top-level `;`, stops before a top-level `}`; groups are skipped whole.
void skip_to_semicolon(Cursor& cur);

/// Like skip_to_semicolon, but also ends after a brace group that follows a
/// parameter list (a function body with no trailing `;`).
void skip_declaration(Cursor& cur);

FileFacts scan_cxx(std::span<const Token> tokens);
FileFacts scan_java(std::span<const Token> tokens);

}  // namespace reuse::detail
