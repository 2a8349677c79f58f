#include <gtest/gtest.h>

#include <string>

#include "cribga/corpus.hpp"
#include "cribga/random.hpp"

using namespace cribga;

TEST(Corpus, DedupKeepsFirstOccurrenceOrder)
{
    const auto c = load_corpus("abc\nabc\nabd\n");
    EXPECT_EQ(c.tokens(), (std::vector<Text>{U"abc", U"abc", U"abd"}));
    EXPECT_EQ(c.types(), (std::vector<Text>{U"abc", U"abd"}));
    EXPECT_EQ(c.alphabet(), (Alphabet{U'a', U'b', U'c', U'd'}));
    EXPECT_EQ(c.total_type_chars(), 6u);
}

TEST(Corpus, EmptyInput)
{
    const auto c = load_corpus("");
    EXPECT_TRUE(c.tokens().empty());
    EXPECT_TRUE(c.types().empty());
    EXPECT_EQ(corpus_stats(c), (CorpusStats{0, 0, 0, 0, ""}));
}

TEST(Corpus, TrimsLowercasesAndSkipsCommentsAndBlanks)
{
    const auto c = load_corpus("# labels\n  OKEDY \r\n\n\tOtedy\n#okam\n");
    EXPECT_EQ(c.tokens(), (std::vector<Text>{U"okedy", U"otedy"}));
}

TEST(Corpus, InteriorWhitespaceNamesTheLine)
{
    try {
        load_corpus("okedy\n\nok edy\n");
        FAIL() << "expected MalformedInput";
    } catch (const MalformedInput& e) {
        ASSERT_TRUE(e.line().has_value());
        EXPECT_EQ(*e.line(), 3u);
    }
}

TEST(Corpus, NonAsciiSymbolsAreSingleCodePoints)
{
    const auto c = load_corpus("Šárka\n");
    EXPECT_EQ(c.types().front(), U"šárka");
    EXPECT_EQ(c.total_type_chars(), 5u);
    EXPECT_EQ(c.alphabet().size(), 5u);
}

TEST(Corpus, StatsOnSmallInput)
{
    const auto s = corpus_stats(load_corpus("abc\nabc\n"));
    EXPECT_EQ(s.tokens, 2u);
    EXPECT_EQ(s.types, 1u);
    EXPECT_EQ(s.total_type_chars, 3u);
    EXPECT_EQ(s.alphabet_size, 3u);
    EXPECT_EQ(s.alphabet, "abc");
}

TEST(Corpus, ReversalExamples)
{
    const auto r = reverse_corpus(load_corpus("okedy\notedy\n"));
    EXPECT_EQ(r.tokens(), (std::vector<Text>{U"ydeko", U"ydeto"}));
    EXPECT_EQ(reverse_corpus(load_corpus("aba\n")).tokens(), (std::vector<Text>{U"aba"}));
}

namespace {

std::string random_corpus_text(Rng& rng)
{
    static const std::string letters = "acdefghiklmnopqrsty";
    std::string out;
    const auto lines = rng.below(40);
    for (std::uint64_t i = 0; i < lines; ++i) {
        const auto len = 1 + rng.below(8);
        for (std::uint64_t k = 0; k < len; ++k) {
            out += letters[rng.below(letters.size())];
        }
        out += '\n';
    }
    return out;
}

} // namespace

TEST(CorpusProperties, ReversalIsAnInvolutionAndKeepsAlphabet)
{
    Rng rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto c = load_corpus(random_corpus_text(rng));
        const auto r = reverse_corpus(c);
        ASSERT_EQ(r.alphabet(), c.alphabet());
        ASSERT_EQ(r.tokens().size(), c.tokens().size());
        ASSERT_EQ(reverse_corpus(r), c);
    }
}

TEST(CorpusProperties, LoadIsIdempotentThroughRender)
{
    Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = load_corpus(random_corpus_text(rng));
        ASSERT_EQ(load_corpus(render_corpus(c)), c);
    }
}

TEST(CorpusProperties, TypeInvariants)
{
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const auto c = load_corpus(random_corpus_text(rng));
        ASSERT_LE(c.types().size(), c.tokens().size());
        std::size_t chars = 0;
        for (std::size_t i = 0; i < c.types().size(); ++i) {
            chars += c.types()[i].size();
            for (std::size_t j = 0; j < i; ++j) {
                ASSERT_NE(c.types()[i], c.types()[j]);
            }
            for (char32_t ch : c.types()[i]) {
                ASSERT_TRUE(c.alphabet().contains(ch));
            }
        }
        ASSERT_EQ(chars, c.total_type_chars());
    }
}
