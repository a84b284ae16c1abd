#include "reuse/error.hpp"
#include "reuse/frontend.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

namespace {

using namespace testing_helpers;
using reuse::Dialect;

TEST(Frontend, DialectFromExtension) {
    for (const char* p : {"a.h", "a.hpp", "a.hh", "a.cc", "a.cpp", "a.cxx"}) {
        EXPECT_EQ(reuse::dialect_for_path(p), Dialect::kCxxTemplates) << p;
    }
    EXPECT_EQ(reuse::dialect_for_path("dir/B.java"), Dialect::kJavaGenerics);
    EXPECT_EQ(reuse::dialect_for_path("c.txt"), std::nullopt);
    EXPECT_EQ(reuse::dialect_for_path("Makefile"), std::nullopt);
}

TEST(Frontend, ParseFileTemplateFunctionSnippet) {
    const auto parsed = reuse::parse_file(fixture("snippets/template_function.cpp"), Dialect::kCxxTemplates);
    ASSERT_EQ(parsed.facts.methods.size(), 3U);
    EXPECT_EQ(parsed.facts.methods[1].qualified_name, "function2");
    EXPECT_TRUE(parsed.facts.methods[1].is_template);
    EXPECT_EQ(parsed.file.dialect, Dialect::kCxxTemplates);
    EXPECT_EQ(parsed.file.byte_count, read_file(fixture("snippets/template_function.cpp")).size());
    for (const auto& m : parsed.facts.methods) {
        EXPECT_EQ(m.file, parsed.file.path);
    }
}

TEST(Frontend, ParseFileMatchesParseSource) {
    const auto path = fixture("snippets/template_class.cpp");
    const auto from_file = reuse::parse_file(path, Dialect::kCxxTemplates);
    const auto from_text = reuse::parse_source(read_file(path), from_file.file.path, Dialect::kCxxTemplates);
    ASSERT_EQ(from_file.facts.classes.size(), from_text.facts.classes.size());
    for (std::size_t i = 0; i < from_file.facts.classes.size(); ++i) {
        EXPECT_EQ(from_file.facts.classes[i].qualified_name, from_text.facts.classes[i].qualified_name);
        EXPECT_EQ(from_file.facts.classes[i].span, from_text.facts.classes[i].span);
    }
    EXPECT_EQ(from_file.file.diagnostics, from_text.file.diagnostics);
}

TEST(Frontend, NonexistentPathThrowsIoError) {
    try {
        (void)reuse::parse_file(fixture("does/not/exist.cpp"), Dialect::kCxxTemplates);
        FAIL() << "expected IoError";
    } catch (const reuse::IoError& e) {
        EXPECT_EQ(e.code(), reuse::ErrorCode::kIo);
    }
}

TEST(Frontend, DirectoryThrowsIoError) {
    EXPECT_THROW((void)reuse::parse_file(fixture("snippets"), Dialect::kCxxTemplates), reuse::IoError);
}

TEST(Frontend, HrPortalFileByFileSumsToElevenClasses) {
    std::size_t classes = 0;
    std::size_t files = 0;
    for (const auto& entry : std::filesystem::directory_iterator(fixture("hr_portal"))) {
        const auto parsed = reuse::parse_file(entry.path(), Dialect::kJavaGenerics);
        EXPECT_EQ(parsed.facts.classes.size(), 1U) << entry.path();
        EXPECT_TRUE(parsed.file.diagnostics.empty()) << entry.path();
        classes += parsed.facts.classes.size();
        ++files;
    }
    EXPECT_EQ(files, 11U);
    EXPECT_EQ(classes, 11U);
}

TEST(Frontend, DiagnosticsCarryTheFilePath) {
    const auto parsed = reuse::parse_source("class A { .....};", "x/a.cpp", Dialect::kCxxTemplates);
    ASSERT_FALSE(parsed.file.diagnostics.empty());
    for (const auto& d : parsed.file.diagnostics) {
        EXPECT_EQ(d.file, "x/a.cpp");
    }
}

TEST(Frontend, DeterministicForIdenticalBytes) {
    const std::string text = read_file(fixture("hr_portal/EmployeeDAO.java"));
    const auto a = reuse::parse_source(text, "E.java", Dialect::kJavaGenerics);
    const auto b = reuse::parse_source(text, "E.java", Dialect::kJavaGenerics);
    ASSERT_EQ(a.facts.methods.size(), b.facts.methods.size());
    for (std::size_t i = 0; i < a.facts.methods.size(); ++i) {
        EXPECT_EQ(a.facts.methods[i].qualified_name, b.facts.methods[i].qualified_name);
        EXPECT_EQ(a.facts.methods[i].span, b.facts.methods[i].span);
        EXPECT_EQ(a.facts.methods[i].is_template, b.facts.methods[i].is_template);
    }
}

}  // namespace
