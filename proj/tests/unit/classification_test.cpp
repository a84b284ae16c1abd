#include "reuse/classification.hpp"
#include "reuse/error.hpp"
#include "test_helpers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace {

using namespace testing_helpers;
using reuse::Category;

reuse::ClassDecl named(const std::string& name) {
    reuse::ClassDecl c;
    c.qualified_name = name;
    return c;
}

TEST(Classification, DirectMatch) {
    reuse::CategoryRules rules;
    rules.rules.push_back({reuse::Glob::compile("util.*"), Category::kGeneralPurpose});
    EXPECT_EQ(reuse::classify_class(named("util.Strings"), rules), Category::kGeneralPurpose);
    EXPECT_EQ(reuse::classify_class(named("app.Main"), rules), Category::kProductSpecific);
}

TEST(Classification, EmptyRulesUseDefault) {
    const reuse::CategoryRules rules;
    EXPECT_EQ(rules.default_category, Category::kProductSpecific);
    EXPECT_EQ(reuse::classify_class(named("Anything"), rules), Category::kProductSpecific);
}

TEST(Classification, FirstMatchWins) {
    const auto rules = reuse::parse_rules("Base* => GENERAL_PURPOSE\n*DAO => DOMAIN_SPECIFIC\n");
    EXPECT_EQ(reuse::classify_class(named("BaseDAO"), rules), Category::kGeneralPurpose);
    EXPECT_EQ(reuse::classify_class(named("HRDAO"), rules), Category::kDomainSpecific);
}

TEST(Classification, HrPortalCategoryCounts) {
    const auto model = model_of_dir(fixture("hr_portal"));
    const auto rules = reuse::load_rules(fixture("config/dao_rules.txt"));
    const auto counts = reuse::category_counts(model, rules);
    EXPECT_EQ(counts.at(Category::kDomainSpecific), 5U);
    EXPECT_EQ(counts.at(Category::kProductSpecific), 6U);
    EXPECT_EQ(counts.at(Category::kGeneralPurpose), 0U);
}

TEST(Classification, CountsSumToClassTotalAndIgnoreOrder) {
    const auto model = model_of_dir(fixture("hr_portal"));
    const auto rules = reuse::parse_rules("*Bean => GENERAL_PURPOSE\n*DAO => DOMAIN_SPECIFIC\n");
    const auto counts = reuse::category_counts(model, rules);
    const auto total = std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                                       [](std::size_t n, const auto& kv) { return n + kv.second; });
    EXPECT_EQ(total, model.classes().size());

    auto classes = model.classes();
    std::map<std::string, Category> forward;
    for (const auto& c : classes) {
        forward[c.qualified_name] = reuse::classify_class(c, rules);
    }
    std::reverse(classes.begin(), classes.end());
    for (const auto& c : classes) {
        EXPECT_EQ(reuse::classify_class(c, rules), forward[c.qualified_name]);
    }
}

TEST(Classification, RulesDefaultDirectiveAndErrors) {
    const auto rules = reuse::parse_rules("# comment\n\ndefault => GENERAL_PURPOSE\n  x => PRODUCT_SPECIFIC  \n");
    EXPECT_EQ(rules.default_category, Category::kGeneralPurpose);
    ASSERT_EQ(rules.rules.size(), 1U);
    for (const char* bad : {"nope\n", "x => SOMETHING\n", "=> DOMAIN_SPECIFIC\n", "[x => DOMAIN_SPECIFIC\n"}) {
        EXPECT_THROW((void)reuse::parse_rules(bad), reuse::Error) << bad;
    }
}

TEST(Classification, ManifestTwoPatterns) {
    const auto manifest = reuse::parse_manifest("BaseDAO\n*Bean\n", "m.txt");
    EXPECT_EQ(manifest.patterns.size(), 2U);
    EXPECT_EQ(manifest.source_path, "m.txt");
    EXPECT_TRUE(manifest.matches("EmployeeBean"));
    EXPECT_FALSE(manifest.matches("HRDAO"));
}

TEST(Classification, ManifestOnlyCommentsIsEmpty) {
    try {
        (void)reuse::parse_manifest("# nothing\n   \n# here\n", "m.txt");
        FAIL() << "expected EmptyManifest";
    } catch (const reuse::Error& e) {
        EXPECT_EQ(e.code(), reuse::ErrorCode::kEmptyManifest);
    }
}

TEST(Classification, ManifestInvalidPatternReportsLine) {
    try {
        (void)reuse::parse_manifest("# header\nBaseDAO\n[unclosed\n", "m.txt");
        FAIL() << "expected InvalidPattern";
    } catch (const reuse::InvalidPatternError& e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_EQ(e.pattern(), "[unclosed");
    }
}

TEST(Classification, ManifestDuplicatesWarn) {
    const auto manifest = reuse::parse_manifest("BaseDAO\nBaseDAO\n", "m.txt");
    ASSERT_EQ(manifest.diagnostics.size(), 1U);
    EXPECT_EQ(manifest.diagnostics[0].severity, reuse::Severity::kWarn);
    EXPECT_EQ(manifest.diagnostics[0].line, 2U);
}

TEST(Classification, LoadManifestFromFile) {
    const auto manifest = reuse::load_manifest(fixture("config/dao_manifest.txt"));
    EXPECT_EQ(manifest.patterns.size(), 5U);
    EXPECT_THROW((void)reuse::load_manifest(fixture("config/missing.txt")), reuse::IoError);
}

TEST(Classification, CategoryNames) {
    for (const auto c : reuse::kAllCategories) {
        EXPECT_EQ(reuse::parse_category(reuse::to_string(c)), c);
    }
    EXPECT_EQ(reuse::parse_category("HORIZONTAL"), std::nullopt);
}

}  // namespace
