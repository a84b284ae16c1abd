#include "reuse/lexer.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace {

using reuse::Dialect;
using reuse::TokenKind;
using reuse::tokenize;

std::vector<TokenKind> kinds(const reuse::LexResult& result) {
    std::vector<TokenKind> out;
    for (const auto& t : result.tokens) {
        out.push_back(t.kind);
    }
    return out;
}

std::size_t count_kind(const reuse::LexResult& result, TokenKind kind) {
    return static_cast<std::size_t>(std::count_if(result.tokens.begin(), result.tokens.end(),
                                                  [&](const reuse::Token& t) { return t.kind == kind; }));
}

TEST(Lexer, CommentStripped) {
    const auto result = tokenize("// hi\nclass A {};", Dialect::kCxxTemplates);
    const std::vector<TokenKind> expected = {TokenKind::kKeyword, TokenKind::kIdent, TokenKind::kBraceOpen,
                                             TokenKind::kBraceClose, TokenKind::kSemi};
    EXPECT_EQ(kinds(result), expected);
    EXPECT_EQ(result.tokens[0].text, "class");
    EXPECT_EQ(result.tokens[1].text, "A");
    EXPECT_EQ(result.tokens[0].line, 2U);
    EXPECT_TRUE(result.diagnostics.empty());
}

TEST(Lexer, TemplateFunctionSnippetHasThreeNames) {
    const auto result = tokenize(
        "void function1() {\n.....}\ntemplate<class T>\nvoid function2(T &x, T&y) {\n.....}\n"
        "void function3() {\n.....}\n",
        Dialect::kCxxTemplates);
    int depth = 0;
    std::vector<std::string> top_level;
    for (const auto& t : result.tokens) {
        if (t.is(TokenKind::kBraceOpen)) {
            ++depth;
        } else if (t.is(TokenKind::kBraceClose)) {
            --depth;
        } else if (depth == 0 && t.is(TokenKind::kIdent) && t.text.rfind("function", 0) == 0) {
            top_level.push_back(t.text);
        }
    }
    EXPECT_EQ(top_level, (std::vector<std::string>{"function1", "function2", "function3"}));
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateOpen), 1U);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateClose), 1U);
}

TEST(Lexer, BraceInCharLiteralIsNotABrace) {
    const auto result = tokenize("char c = '{';", Dialect::kCxxTemplates);
    EXPECT_EQ(count_kind(result, TokenKind::kBraceOpen), 0U);
    EXPECT_EQ(count_kind(result, TokenKind::kLiteral), 1U);
}

TEST(Lexer, BracesInStringsAndRawStrings) {
    const auto result = tokenize("auto s = \"{\\\"}\"; auto r = R\"x({)\")x\";", Dialect::kCxxTemplates);
    EXPECT_EQ(count_kind(result, TokenKind::kBraceOpen), 0U);
    EXPECT_EQ(count_kind(result, TokenKind::kBraceClose), 0U);
    EXPECT_EQ(count_kind(result, TokenKind::kLiteral), 2U);
}

TEST(Lexer, JavaTextBlock) {
    const auto result = tokenize("String s = \"\"\"\n  { \"quoted\" }\n  \"\"\";\nclass A {}", Dialect::kJavaGenerics);
    EXPECT_EQ(count_kind(result, TokenKind::kBraceOpen), 1U);
    EXPECT_EQ(result.tokens.back().line, 4U);
}

TEST(Lexer, DigitSeparatorIsNotACharLiteral) {
    const auto result = tokenize("int n = 1'000'000; class A {};", Dialect::kCxxTemplates);
    EXPECT_EQ(count_kind(result, TokenKind::kBraceOpen), 1U);
    EXPECT_TRUE(result.diagnostics.empty());
}

TEST(Lexer, PreprocessorLinesDroppedInCxxOnly) {
    const auto cxx = tokenize("#include <vector>\n  # define X {\nclass A {};", Dialect::kCxxTemplates);
    EXPECT_EQ(cxx.tokens.front().text, "class");
    EXPECT_EQ(count_kind(cxx, TokenKind::kBraceOpen), 1U);
    const auto continued = tokenize("#define X \\\n  {\nclass A {};", Dialect::kCxxTemplates);
    EXPECT_EQ(count_kind(continued, TokenKind::kBraceOpen), 1U);
}

TEST(Lexer, BlockCommentsRemovedAcrossLines) {
    const auto result = tokenize("/* {\n } */ class /* { */ A {};", Dialect::kJavaGenerics);
    EXPECT_EQ(kinds(result).size(), 5U);
    EXPECT_EQ(result.tokens[0].line, 2U);
}

TEST(Lexer, UnterminatedCommentWarns) {
    const auto result = tokenize("class A {};\n/* never closed", Dialect::kCxxTemplates);
    ASSERT_EQ(result.diagnostics.size(), 1U);
    EXPECT_EQ(result.diagnostics[0].severity, reuse::Severity::kWarn);
    EXPECT_EQ(result.tokens.size(), 5U);
}

TEST(Lexer, UnterminatedStringWarns) {
    const auto result = tokenize("auto s = \"open\nclass A {};", Dialect::kCxxTemplates);
    ASSERT_FALSE(result.diagnostics.empty());
    EXPECT_EQ(count_kind(result, TokenKind::kBraceOpen), 1U);
}

TEST(Lexer, InvalidUtf8WarnsOncePerLine) {
    const std::string text = "class A {}; // \xff\xfe\nint \xc3;\n";
    const auto result = tokenize(text, Dialect::kCxxTemplates);
    ASSERT_EQ(result.diagnostics.size(), 2U);
    EXPECT_EQ(result.diagnostics[0].line, 1U);
    EXPECT_EQ(result.diagnostics[1].line, 2U);
}

TEST(Lexer, LessThanOutsideDeclarationHeadIsPunct) {
    const auto result = tokenize("bool f(int a, int b) { return a < b && b > 0; }", Dialect::kCxxTemplates);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateOpen), 0U);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateClose), 0U);
}

TEST(Lexer, NestedTemplateClauseClosesOnOuterAngle) {
    const auto result = tokenize("template <class T, class A = std::vector<T>> class C {};", Dialect::kCxxTemplates);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateOpen), 1U);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateClose), 1U);
    const auto close = std::find_if(result.tokens.begin(), result.tokens.end(),
                                    [](const reuse::Token& t) { return t.is(TokenKind::kTemplateClose); });
    ASSERT_NE(close, result.tokens.end());
    EXPECT_TRUE((close + 1)->is(TokenKind::kKeyword, "class"));
}

TEST(Lexer, ComparisonInsideClauseParens) {
    const auto result = tokenize("template <bool B = (1 > 2)> struct S {};", Dialect::kCxxTemplates);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateClose), 1U);
    EXPECT_TRUE(result.diagnostics.empty());
}

TEST(Lexer, JavaGenericTypeAndMethodClauses) {
    const auto result = tokenize("class Box<T> { T get() { return null; } <U> U pick(U u) { return u; } }",
                                 Dialect::kJavaGenerics);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateOpen), 2U);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateClose), 2U);
}

TEST(Lexer, JavaGenericReturnTypeIsNotAClause) {
    const auto result = tokenize("class A { List<String> names() { return null; } }", Dialect::kJavaGenerics);
    EXPECT_EQ(count_kind(result, TokenKind::kTemplateOpen), 0U);
}

TEST(Lexer, MultiCharPunctuation) {
    const auto result = tokenize("a::b->c...", Dialect::kCxxTemplates);
    std::vector<std::string> texts;
    for (const auto& t : result.tokens) {
        texts.push_back(t.text);
    }
    EXPECT_EQ(texts, (std::vector<std::string>{"a", "::", "b", "->", "c", "..."}));
}

TEST(Lexer, ShiftIsTwoTokens) {
    const auto result = tokenize("x >> 2", Dialect::kCxxTemplates);
    ASSERT_EQ(result.tokens.size(), 4U);
    EXPECT_EQ(result.tokens[1].text, ">");
    EXPECT_EQ(result.tokens[2].text, ">");
}

TEST(Lexer, Deterministic) {
    const std::string text = "template<class T> class A { void f(); };";
    EXPECT_EQ(tokenize(text, Dialect::kCxxTemplates).tokens, tokenize(text, Dialect::kCxxTemplates).tokens);
}

}  // namespace
