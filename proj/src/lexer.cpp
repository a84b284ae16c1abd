#include "reuse/lexer.hpp"

#include <array>
#include <algorithm>

namespace reuse {

std::string_view to_string(TokenKind kind) noexcept {
    switch (kind) {
        case TokenKind::kIdent: return "IDENT";
        case TokenKind::kKeyword: return "KEYWORD";
        case TokenKind::kPunct: return "PUNCT";
        case TokenKind::kLiteral: return "LITERAL";
        case TokenKind::kTemplateOpen: return "TEMPLATE_OPEN";
        case TokenKind::kTemplateClose: return "TEMPLATE_CLOSE";
        case TokenKind::kBraceOpen: return "BRACE_OPEN";
        case TokenKind::kBraceClose: return "BRACE_CLOSE";
        case TokenKind::kParenOpen: return "PAREN_OPEN";
        case TokenKind::kParenClose: return "PAREN_CLOSE";
        case TokenKind::kSemi: return "SEMI";
    }
    return "?";
}

namespace {

// Sorted for binary search.
constexpr std::array kCxxKeywords = std::to_array<std::string_view>({
    "alignas", "alignof", "asm", "auto", "bool", "break", "case", "catch", "char", "char16_t",
    "char32_t", "char8_t", "class", "co_await", "co_return", "co_yield", "concept", "const",
    "const_cast", "consteval", "constexpr", "constinit", "continue", "decltype", "default",
    "delete", "do", "double", "dynamic_cast", "else", "enum", "explicit", "export", "extern",
    "false", "float", "for", "friend", "goto", "if", "inline", "int", "long", "mutable",
    "namespace", "new", "noexcept", "nullptr", "operator", "private", "protected", "public",
    "register", "reinterpret_cast", "requires", "return", "short", "signed", "sizeof", "static",
    "static_assert", "static_cast", "struct", "switch", "template", "this", "thread_local",
    "throw", "true", "try", "typedef", "typeid", "typename", "union", "unsigned", "using",
    "virtual", "void", "volatile", "wchar_t", "while",
});

constexpr std::array kJavaKeywords = std::to_array<std::string_view>({
    "abstract", "assert", "boolean", "break", "byte", "case", "catch", "char", "class", "const",
    "continue", "default", "do", "double", "else", "enum", "extends", "false", "final",
    "finally", "float", "for", "goto", "if", "implements", "import", "instanceof", "int",
    "interface", "long", "native", "new", "null", "package", "private", "protected", "public",
    "return", "short", "static", "strictfp", "super", "switch", "synchronized", "this",
    "throw", "throws", "transient", "try", "void", "volatile", "while",
});

// Java modifiers after which `<` opens a method's own type-parameter list.
constexpr std::array kJavaModifiers = std::to_array<std::string_view>({
    "abstract", "default", "final", "native", "private", "protected", "public", "static",
    "strictfp", "synchronized",
});

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& sorted, std::string_view word) {
    return std::binary_search(sorted.begin(), sorted.end(), word);
}

bool is_ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_char(unsigned char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_type_keyword(std::string_view word) {
    return word == "class" || word == "struct" || word == "union" || word == "interface" ||
           word == "record";
}

/// Length of the valid UTF-8 sequence at `pos`, or 0 if invalid.
std::size_t utf8_sequence_length(std::string_view text, std::size_t pos) {
    const auto lead = static_cast<unsigned char>(text[pos]);
    std::size_t len = 0;
    unsigned min_cp = 0;
    unsigned cp = 0;
    if (lead < 0x80) {
        return 1;
    } else if ((lead & 0xE0) == 0xC0) {
        len = 2, min_cp = 0x80, cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
        len = 3, min_cp = 0x800, cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
        len = 4, min_cp = 0x10000, cp = lead & 0x07;
    } else {
        return 0;
    }
    if (pos + len > text.size()) {
        return 0;
    }
    for (std::size_t i = 1; i < len; ++i) {
        const auto c = static_cast<unsigned char>(text[pos + i]);
        if ((c & 0xC0) != 0x80) {
            return 0;
        }
        cp = (cp << 6) | (c & 0x3F);
    }
    if (cp < min_cp || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        return 0;
    }
    return len;
}

/// Copies `text` replacing every invalid byte with U+FFFD; one WARN per affected line.
std::string sanitize_utf8(std::string_view text, std::vector<ParseDiagnostic>& diags) {
    std::string out;
    out.reserve(text.size());
    std::size_t line = 1;
    std::size_t last_reported = 0;
    for (std::size_t pos = 0; pos < text.size();) {
        const auto len = utf8_sequence_length(text, pos);
        if (len == 0) {
            out += "\xEF\xBF\xBD";
            if (last_reported != line) {
                diags.push_back({{}, line, Severity::kWarn, "invalid UTF-8 replaced with U+FFFD"});
                last_reported = line;
            }
            ++pos;
            continue;
        }
        if (text[pos] == '\n') {
            ++line;
        }
        out.append(text, pos, len);
        pos += len;
    }
    return out;
}

class Lexer {
public:
    Lexer(std::string_view src, Dialect dialect, LexResult& out)
        : src_(src), dialect_(dialect), out_(out) {}

    void run() {
        while (pos_ < src_.size()) {
            step();
        }
        if (clause_depth_ > 0) {
            warn(line_, "unterminated template parameter clause at end of file");
        }
    }

private:
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
    }

    void warn(std::size_t line, std::string message) {
        out_.diagnostics.push_back({{}, line, Severity::kWarn, std::move(message)});
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            line_has_token_ = false;
        }
        ++pos_;
    }

    void emit(TokenKind kind, std::size_t begin, std::size_t line) {
        out_.tokens.push_back({kind, std::string(src_.substr(begin, pos_ - begin)), line});
        line_has_token_ = true;
    }

    const Token* back(std::size_t n) const {
        const auto& toks = out_.tokens;
        return toks.size() > n ? &toks[toks.size() - 1 - n] : nullptr;
    }

    void step() {
        const char c = peek();
        if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v' || c == '\n') {
            advance();
            return;
        }
        if (c == '/' && peek(1) == '/') {
            skip_line_comment();
            return;
        }
        if (c == '/' && peek(1) == '*') {
            skip_block_comment();
            return;
        }
        if (c == '#' && dialect_ == Dialect::kCxxTemplates && !line_has_token_) {
            skip_directive();
            return;
        }
        if (c == '"' || c == '\'') {
            lex_quoted(pos_, line_);
            return;
        }
        if (is_digit(static_cast<unsigned char>(c)) ||
            (c == '.' && is_digit(static_cast<unsigned char>(peek(1))))) {
            lex_number();
            return;
        }
        if (is_ident_start(static_cast<unsigned char>(c))) {
            lex_word();
            return;
        }
        lex_punct();
    }

    void skip_line_comment() {
        while (pos_ < src_.size() && peek() != '\n') {
            advance();
        }
    }

    void skip_block_comment() {
        const auto start_line = line_;
        pos_ += 2;
        while (pos_ < src_.size()) {
            if (peek() == '*' && peek(1) == '/') {
                pos_ += 2;
                return;
            }
            advance();
        }
        warn(start_line, "unterminated block comment");
    }

    void skip_directive() {
        while (pos_ < src_.size() && peek() != '\n') {
            if (peek() == '\\' && peek(1) == '\n') {
                pos_ += 1;
                advance();
            } else if (peek() == '\\' && peek(1) == '\r' && peek(2) == '\n') {
                pos_ += 2;
                advance();
            } else if (peek() == '/' && peek(1) == '*') {
                skip_block_comment();
            } else if (peek() == '/' && peek(1) == '/') {
                skip_line_comment();
            } else if (peek() == '"' || peek() == '\'') {
                skip_directive_quote();
            } else {
                advance();
            }
        }
    }

    void skip_directive_quote() {
        const char quote = peek();
        ++pos_;
        while (pos_ < src_.size() && peek() != quote && peek() != '\n') {
            if (peek() == '\\' && pos_ + 1 < src_.size() && peek(1) != '\n') {
                ++pos_;
            }
            ++pos_;
        }
        if (peek() == quote) {
            ++pos_;
        }
    }

    /// Ordinary "..." or '...' literal starting at the quote; `begin` may
    /// include an encoding prefix already consumed.
    void lex_quoted(std::size_t begin, std::size_t line) {
        const char quote = peek();
        if (dialect_ == Dialect::kJavaGenerics && quote == '"' && peek(1) == '"' && peek(2) == '"') {
            lex_text_block(begin, line);
            return;
        }
        ++pos_;
        while (true) {
            if (pos_ >= src_.size() || peek() == '\n') {
                warn(line, "unterminated literal");
                break;
            }
            const char ch = peek();
            if (ch == '\\') {
                ++pos_;
                if (pos_ < src_.size()) {
                    advance();
                }
                continue;
            }
            ++pos_;
            if (ch == quote) {
                break;
            }
        }
        emit(TokenKind::kLiteral, begin, line);
    }

    void lex_text_block(std::size_t begin, std::size_t line) {
        pos_ += 3;
        while (pos_ < src_.size()) {
            if (peek() == '\\') {
                ++pos_;
                if (pos_ < src_.size()) {
                    advance();
                }
                continue;
            }
            if (peek() == '"' && peek(1) == '"' && peek(2) == '"') {
                pos_ += 3;
                emit(TokenKind::kLiteral, begin, line);
                return;
            }
            advance();
        }
        warn(line, "unterminated text block");
        emit(TokenKind::kLiteral, begin, line);
    }

    /// R"delim( ... )delim" with `begin` at the start of the prefix and pos_ at the quote.
    void lex_raw_string(std::size_t begin, std::size_t line) {
        ++pos_;
        const auto delim_begin = pos_;
        while (pos_ < src_.size() && peek() != '(' && peek() != '\n' && pos_ - delim_begin <= 16) {
            ++pos_;
        }
        if (peek() != '(') {
            warn(line, "malformed raw string literal");
            emit(TokenKind::kLiteral, begin, line);
            return;
        }
        const std::string terminator =
            ")" + std::string(src_.substr(delim_begin, pos_ - delim_begin)) + "\"";
        const auto close = src_.find(terminator, pos_);
        if (close == std::string_view::npos) {
            warn(line, "unterminated raw string literal");
            while (pos_ < src_.size()) {
                advance();
            }
        } else {
            while (pos_ < close + terminator.size()) {
                advance();
            }
        }
        emit(TokenKind::kLiteral, begin, line);
    }

    void lex_number() {
        const auto begin = pos_;
        char prev = '\0';
        while (pos_ < src_.size()) {
            const char ch = peek();
            const bool exponent_sign =
                (ch == '+' || ch == '-') && (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P');
            const bool separator = ch == '\'' && dialect_ == Dialect::kCxxTemplates &&
                                   is_ident_char(static_cast<unsigned char>(peek(1)));
            if (!is_ident_char(static_cast<unsigned char>(ch)) && ch != '.' && !exponent_sign &&
                !separator) {
                break;
            }
            prev = ch;
            ++pos_;
        }
        emit(TokenKind::kLiteral, begin, line_);
    }

    void lex_word() {
        const auto begin = pos_;
        while (pos_ < src_.size() && is_ident_char(static_cast<unsigned char>(peek()))) {
            ++pos_;
        }
        const std::string_view word = src_.substr(begin, pos_ - begin);

        if (dialect_ == Dialect::kCxxTemplates && (peek() == '"' || peek() == '\'')) {
            const bool raw = word == "R" || word == "LR" || word == "u8R" || word == "uR" || word == "UR";
            const bool plain = word == "L" || word == "u8" || word == "u" || word == "U";
            if (raw && peek() == '"') {
                lex_raw_string(begin, line_);
                return;
            }
            if (plain) {
                lex_quoted(begin, line_);
                return;
            }
        }

        const bool keyword = dialect_ == Dialect::kCxxTemplates ? contains(kCxxKeywords, word)
                                                                : contains(kJavaKeywords, word);
        emit(keyword ? TokenKind::kKeyword : TokenKind::kIdent, begin, line_);
    }

    bool opens_clause() const {
        const Token* prev = back(0);
        if (prev == nullptr) {
            return false;
        }
        if (const Token* prev2 = back(1);
            prev2 != nullptr && prev->is(TokenKind::kIdent) && is_type_keyword(prev2->text)) {
            return true;
        }
        if (dialect_ == Dialect::kCxxTemplates) {
            return prev->is(TokenKind::kKeyword, "template");
        }
        if (prev->is(TokenKind::kKeyword) && contains(kJavaModifiers, prev->text)) {
            return true;
        }
        if (prev->is(TokenKind::kBraceOpen) || prev->is(TokenKind::kBraceClose) ||
            prev->is(TokenKind::kSemi)) {
            return true;
        }
        if (const Token* prev2 = back(1);
            prev2 != nullptr && prev->is(TokenKind::kIdent) && prev2->is_punct("@")) {
            return true;
        }
        return prev->is(TokenKind::kParenClose) && last_paren_was_annotation_;
    }

    void lex_punct() {
        const auto begin = pos_;
        const auto line = line_;
        const char c = peek();

        if (c == ':' && peek(1) == ':') {
            pos_ += 2;
            emit(TokenKind::kPunct, begin, line);
            return;
        }
        if (c == '-' && peek(1) == '>') {
            pos_ += 2;
            emit(TokenKind::kPunct, begin, line);
            return;
        }
        if (c == '.' && peek(1) == '.' && peek(2) == '.') {
            pos_ += 3;
            emit(TokenKind::kPunct, begin, line);
            return;
        }

        ++pos_;
        TokenKind kind = TokenKind::kPunct;
        switch (c) {
            case '{': kind = TokenKind::kBraceOpen; break;
            case '}': kind = TokenKind::kBraceClose; break;
            case '(': kind = TokenKind::kParenOpen; break;
            case ')': kind = TokenKind::kParenClose; break;
            case ';': kind = TokenKind::kSemi; break;
            default: break;
        }

        if (clause_depth_ > 0) {
            kind = classify_in_clause(c, kind, line);
        } else if (c == '<' && opens_clause()) {
            kind = TokenKind::kTemplateOpen;
            clause_depth_ = 1;
            clause_parens_ = 0;
        }

        if (dialect_ == Dialect::kJavaGenerics) {
            track_annotation_parens(kind);
        }
        emit(kind, begin, line);
    }

    TokenKind classify_in_clause(char c, TokenKind kind, std::size_t line) {
        if (kind == TokenKind::kBraceOpen || kind == TokenKind::kBraceClose || kind == TokenKind::kSemi) {
            warn(line, "unterminated template parameter clause");
            clause_depth_ = 0;
            return kind;
        }
        if (kind == TokenKind::kParenOpen) {
            ++clause_parens_;
        } else if (kind == TokenKind::kParenClose && clause_parens_ > 0) {
            --clause_parens_;
        } else if (clause_parens_ == 0 && c == '<') {
            ++clause_depth_;
        } else if (clause_parens_ == 0 && c == '>') {
            if (--clause_depth_ == 0) {
                return TokenKind::kTemplateClose;
            }
        }
        return kind;
    }

    void track_annotation_parens(TokenKind kind) {
        if (kind == TokenKind::kParenOpen) {
            const Token* name = back(0);
            const Token* at = back(1);
            annotation_parens_.push_back(name != nullptr && at != nullptr &&
                                         name->is(TokenKind::kIdent) && at->is_punct("@"));
        } else if (kind == TokenKind::kParenClose) {
            last_paren_was_annotation_ = !annotation_parens_.empty() && annotation_parens_.back();
            if (!annotation_parens_.empty()) {
                annotation_parens_.pop_back();
            }
        }
    }

    std::string_view src_;
    Dialect dialect_;
    LexResult& out_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    bool line_has_token_ = false;
    int clause_depth_ = 0;
    int clause_parens_ = 0;
    std::vector<bool> annotation_parens_;
    bool last_paren_was_annotation_ = false;
};

}  // namespace

LexResult tokenize(std::string_view text, Dialect dialect) {
    LexResult result;
    const std::string clean = sanitize_utf8(text, result.diagnostics);
    Lexer(clean, dialect, result).run();
    std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                     [](const auto& a, const auto& b) { return a.line < b.line; });
    return result;
}

}  // namespace reuse
