#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cribga/crib.hpp"
#include "cribga/random.hpp"

using namespace cribga;

namespace {

std::set<Text> as_set(const Crib& c) { return {c.names().begin(), c.names().end()}; }

} // namespace

TEST(Crib, LoadDeduplicates)
{
    const auto c = load_crib("anna\nanna\n");
    EXPECT_EQ(c.size(), 1u);
    EXPECT_TRUE(c.contains(U"anna"));
}

TEST(Crib, LoadNormalizes)
{
    const auto c = load_crib("# names\n Alena \nHELENA\n\n");
    EXPECT_EQ(as_set(c), (std::set<Text>{U"alena", U"helena"}));
    EXPECT_EQ(c.alphabet(), (Alphabet{U'a', U'e', U'h', U'l', U'n'}));
}

TEST(Crib, DiminutiveRewrite)
{
    const auto c = expand_crib(load_crib("alena\nhelena\n"), {RewriteRule(U"a", U"ka")});
    EXPECT_EQ(as_set(c), (std::set<Text>{U"alena", U"alenka", U"helena", U"helenka"}));
    EXPECT_TRUE(c.contains(U"alenka"));
    EXPECT_TRUE(c.alphabet().contains(U'k'));
}

TEST(Crib, RewriteWithoutMatchAddsNothing)
{
    const auto c = expand_crib(load_crib("mia\n"), {RewriteRule(U"z", U"kz")});
    EXPECT_EQ(as_set(c), (std::set<Text>{U"mia"}));
}

TEST(Crib, RewriteIsSinglePass)
{
    const auto c = expand_crib(load_crib("anka\n"), {RewriteRule(U"a", U"ka")});
    EXPECT_EQ(as_set(c), (std::set<Text>{U"anka", U"ankka"}));
    EXPECT_FALSE(c.contains(U"ankkka"));
}

TEST(Crib, ParseRewriteRule)
{
    EXPECT_EQ(parse_rewrite_rule("A=KA"), RewriteRule(U"a", U"ka"));
    EXPECT_EQ(parse_rewrite_rule("ova="), RewriteRule(U"ova", U""));
    EXPECT_THROW(parse_rewrite_rule("noequals"), InvalidParams);
    EXPECT_THROW(parse_rewrite_rule("=x"), InvalidParams);
}

TEST(Crib, ContainsEdgeCases)
{
    const auto c = load_crib("anna\n");
    EXPECT_FALSE(c.contains(U""));
    EXPECT_FALSE(c.contains(U"anne"));
    EXPECT_FALSE(c.contains(U"ann"));
    EXPECT_FALSE(c.contains(U"annax"));
    EXPECT_FALSE(c.contains(U"zzz"));
    EXPECT_FALSE(Crib().contains(U"anna"));
}

TEST(CribProperties, ContainsAgreesWithLinearScan)
{
    Rng rng(21);
    const Text letters = U"aeiklmnorstv";
    auto word = [&] {
        Text w;
        const auto len = 1 + rng.below(7);
        for (std::uint64_t k = 0; k < len; ++k) {
            w += letters[rng.below(letters.size())];
        }
        return w;
    };
    std::vector<Text> names;
    for (int i = 0; i < 500; ++i) {
        names.push_back(word());
    }
    const Crib c(names);
    for (const auto& n : c.names()) {
        ASSERT_TRUE(c.contains(n));
    }
    int non_members = 0;
    while (non_members < 1000) {
        const auto w = word();
        const bool linear = std::find(names.begin(), names.end(), w) != names.end();
        ASSERT_EQ(c.contains(w), linear);
        non_members += linear ? 0 : 1;
    }
}

TEST(CribProperties, ExpansionIsMonotoneAndStable)
{
    Rng rng(22);
    const Text letters = U"aeikn";
    const std::vector<RewriteRule> rules{RewriteRule(U"a", U"ka"), RewriteRule(U"e", U"ie")};
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Text> names;
        for (int i = 0; i < 20; ++i) {
            Text w;
            const auto len = 1 + rng.below(5);
            for (std::uint64_t k = 0; k < len; ++k) {
                w += letters[rng.below(letters.size())];
            }
            names.push_back(w);
        }
        const Crib base(names);
        const auto expanded = expand_crib(base, rules);
        const auto e = as_set(expanded);
        for (const auto& n : base.names()) {
            ASSERT_TRUE(e.count(n));
        }
        auto u = e;
        for (const auto& n : base.names()) {
            u.insert(n);
        }
        ASSERT_EQ(u, e);
        ASSERT_EQ(expanded.alphabet(), Alphabet::of(expanded.names()));
    }
}
