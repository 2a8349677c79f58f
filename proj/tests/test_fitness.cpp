#include <gtest/gtest.h>

#include "cribga/fitness.hpp"
#include "cribga/synthetic.hpp"
#include "oracles.hpp"

using namespace cribga;

namespace {

const char* reference_240 = "a=i;c=k;d=t;e=n;f=a;g=k;h=f;i=l;k=k;l=l;m=m;n=e;o=a;p=j;q=g;r=r;s=i;t=n;y=a";

Chromosome identity(const Alphabet& a)
{
    std::vector<Text> genes;
    for (char32_t c : a.symbols()) {
        genes.push_back(Text(1, c));
    }
    return Chromosome(a, genes);
}

} // namespace

TEST(Fitness, IdentityOnSelfCribMatchesEveryType)
{
    const auto inst = make_synthetic_instance({});
    const auto& corpus = inst.corpus;
    const Crib self(corpus.types());
    std::size_t direct = 0;
    for (const auto& t : corpus.types()) {
        direct += t.size();
    }
    EXPECT_EQ(evaluate(identity(corpus.alphabet()), corpus, self), direct);
    EXPECT_EQ(direct, corpus.total_type_chars());
}

TEST(Fitness, EmptyCribScoresZero)
{
    const auto corpus = load_corpus("okedy\noky\n");
    Rng rng(1);
    const auto ch = random_chromosome(rng, GenePolicy(), corpus.alphabet(), Alphabet{U'a', U'b'});
    EXPECT_EQ(evaluate(ch, corpus, Crib()), 0u);
}

TEST(Fitness, ReferenceChromosomeOnReversedTypes)
{
    // ydeko -> atnka (5 symbols, in crib); yko -> aka (not in crib)
    const auto corpus = reverse_corpus(load_corpus("okedy\noky\n"));
    const auto crib = load_crib("atnka\n");
    EXPECT_EQ(evaluate(parse_chromosome(reference_240), corpus, crib), 5u);
}

TEST(Fitness, LengthIsCountedOnTheCipherSide)
{
    const Chromosome ch(Alphabet{U'k', U'o', U'y'}, {U"", U"gi", U"na"});
    const auto corpus = load_corpus("oky\n");
    EXPECT_EQ(evaluate(ch, corpus, load_crib("gina\n")), 3u);
}

TEST(Fitness, AllEmptyDecodingNeverMatches)
{
    const Chromosome ch(Alphabet{U'a'}, {U""});
    EXPECT_EQ(evaluate(ch, load_corpus("a\naa\n"), load_crib("x\n")), 0u);
}

TEST(Fitness, GeneSymbolsOutsideTheCribNeverMatch)
{
    const Chromosome ch(Alphabet{U'a', U'b'}, {U"/", U"x"});
    EXPECT_EQ(evaluate(ch, load_corpus("ab\nb\n"), load_crib("x\nxx\n")), 1u);
}

TEST(Fitness, AlphabetMismatchIsAContractViolation)
{
    const Chromosome ch(Alphabet{U'a'}, {U"x"});
    EXPECT_THROW(evaluate(ch, load_corpus("ab\n"), load_crib("x\n")), ContractViolation);
    EXPECT_THROW(match_report(ch, load_corpus("ab\n"), load_crib("x\n")), ContractViolation);
}

TEST(MatchReport, ConstructedOkamPair)
{
    const auto corpus = reverse_corpus(load_corpus("okam\n"));
    const Chromosome ch(Alphabet{U'a', U'k', U'm', U'o'}, {U"i", U"n", U"b", U"a"});
    const auto r = match_report(ch, corpus, load_crib("bina\n"));
    ASSERT_EQ(r.pairs.size(), 1u);
    EXPECT_EQ(r.pairs[0].cipher_type, U"mako");
    EXPECT_EQ(r.pairs[0].transcription, U"bina");
    EXPECT_EQ(r.fitness, 4u);
    EXPECT_EQ(to_tsv(r), "mako\tbina\n");
}

TEST(MatchReport, NoMatches)
{
    const auto corpus = load_corpus("okam\n");
    const auto r = match_report(identity(corpus.alphabet()), corpus, load_crib("bina\n"));
    EXPECT_TRUE(r.pairs.empty());
    EXPECT_EQ(r.fitness, 0u);
}

TEST(MatchReport, CountsDistinctNamesSeparately)
{
    // two types decode to the same name
    const Chromosome ch(Alphabet{U'a', U'b', U'c'}, {U"n", U"n", U"a"});
    const auto r = match_report(ch, load_corpus("ac\nbc\n"), load_crib("na\n"));
    EXPECT_EQ(r.matched_types(), 2u);
    EXPECT_EQ(r.distinct_names(), 1u);
    EXPECT_EQ(r.fitness, 4u);
}

TEST(FitnessProperties, MatchesNaiveReferenceAndReportAgrees)
{
    const auto inst = make_synthetic_instance({});
    const Evaluator eval(inst.corpus, inst.crib);
    Rng rng(41);
    for (const auto& policy : {GenePolicy(), GenePolicy::with_max_len(2)}) {
        for (int trial = 0; trial < 1000; ++trial) {
            const auto ch = random_chromosome(rng, policy, inst.corpus.alphabet(), inst.crib.alphabet());
            const auto f = eval.evaluate(ch);
            ASSERT_EQ(f, oracle::naive_fitness(ch, inst.corpus.types(), inst.crib.names()));
            ASSERT_EQ(eval.match_report(ch).fitness, f);
            ASSERT_LE(f, inst.corpus.total_type_chars());
        }
    }
    EXPECT_EQ(eval.evaluate(inst.key), inst.corpus.total_type_chars());
}

TEST(FitnessProperties, MonotoneInCribAndInsensitiveToDuplicates)
{
    const auto inst = make_synthetic_instance({});
    std::vector<Text> half(inst.crib.names().begin(), inst.crib.names().begin() + 250);
    const Crib small(half);
    auto doubled_tokens = inst.corpus.tokens();
    doubled_tokens.insert(doubled_tokens.end(), inst.corpus.tokens().begin(), inst.corpus.tokens().end());
    const CipherCorpus doubled(doubled_tokens);
    Rng rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        // start from the key and perturb a few genes so fitness is nonzero
        auto ch = mutate(inst.key, 0.2, rng, GenePolicy(), inst.crib.alphabet());
        const auto full = evaluate(ch, inst.corpus, inst.crib);
        ASSERT_LE(evaluate(ch, inst.corpus, small), full);
        ASSERT_EQ(evaluate(ch, doubled, inst.crib), full);
        const bool all_match = match_report(ch, inst.corpus, inst.crib).matched_types() == inst.corpus.types().size();
        ASSERT_EQ(full == inst.corpus.total_type_chars(), all_match);
    }
}
