#pragma once

// Fitness: total cipher-side length of the distinct corpus types whose
// decoding is an exact crib member.

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "cribga/corpus.hpp"
#include "cribga/crib.hpp"
#include "cribga/error.hpp"
#include "cribga/mapping.hpp"

namespace cribga {

using FitnessValue = std::uint64_t;

struct MatchPair {
    Text cipher_type;
    Text transcription;

    friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

struct MatchReport {
    std::vector<MatchPair> pairs; // corpus type order
    FitnessValue fitness = 0;

    std::size_t matched_types() const noexcept { return pairs.size(); }

    /// Several types can decode to the same name.
    std::size_t distinct_names() const
    {
        std::unordered_set<Text> names;
        for (const auto& p : pairs) {
            names.insert(p.transcription);
        }
        return names.size();
    }

    friend bool operator==(const MatchReport&, const MatchReport&) = default;
};

/// Pre-indexes a corpus against a crib so chromosomes can be scored without
/// building transcription strings. Holds references: corpus and crib must
/// outlive it. evaluate() is const and safe to call from many threads.
class Evaluator {
public:
    Evaluator(const CipherCorpus& corpus, const Crib& crib)
        : corpus_(corpus)
        , crib_(crib)
    {
        const auto& alpha = corpus.alphabet();
        offsets_.reserve(corpus.types().size() + 1);
        offsets_.push_back(0);
        for (const auto& t : corpus.types()) {
            for (char32_t c : t) {
                encoded_.push_back(static_cast<std::uint16_t>(alpha.index_of(c)));
            }
            offsets_.push_back(encoded_.size());
        }
    }

    const CipherCorpus& corpus() const noexcept { return corpus_; }
    const Crib& crib() const noexcept { return crib_; }

    FitnessValue evaluate(const Chromosome& ch) const
    {
        const auto compiled = compile(ch);
        const auto& trie = crib_.trie();
        FitnessValue total = 0;
        const std::size_t ntypes = offsets_.size() - 1;
        for (std::size_t t = 0; t < ntypes; ++t) {
            auto node = CribTrie::root;
            for (std::size_t k = offsets_[t]; k < offsets_[t + 1] && node != CribTrie::none; ++k) {
                const auto sym = encoded_[k];
                for (std::uint32_t j = compiled.start[sym]; j < compiled.start[sym + 1]; ++j) {
                    node = trie.step(node, compiled.chars[j]);
                    if (node == CribTrie::none) {
                        break;
                    }
                }
            }
            const std::size_t len = offsets_[t + 1] - offsets_[t];
            // an all-empty decoding stays at the root; empty names never match
            if (node != CribTrie::none && node != CribTrie::root && trie.is_terminal(node)) {
                total += len;
            }
        }
        return total;
    }

    MatchReport match_report(const Chromosome& ch) const
    {
        check_alphabet(ch);
        MatchReport r;
        for (const auto& t : corpus_.types()) {
            auto decoded = transcribe(ch, t);
            if (crib_.contains(decoded)) {
                r.fitness += t.size();
                r.pairs.push_back({t, std::move(decoded)});
            }
        }
        return r;
    }

private:
    struct Compiled {
        std::vector<std::uint32_t> start; // per corpus symbol, into chars
        std::vector<std::int32_t> chars;  // crib alphabet indices (npos if absent)
    };

    void check_alphabet(const Chromosome& ch) const
    {
        if (!ch.cipher_alphabet().includes(corpus_.alphabet())) {
            throw ContractViolation("corpus alphabet is not covered by the chromosome");
        }
    }

    Compiled compile(const Chromosome& ch) const
    {
        check_alphabet(ch);
        const auto& alpha = corpus_.alphabet();
        const auto& crib_alpha = crib_.alphabet();
        Compiled c;
        c.start.reserve(alpha.size() + 1);
        for (std::size_t s = 0; s < alpha.size(); ++s) {
            c.start.push_back(static_cast<std::uint32_t>(c.chars.size()));
            for (char32_t g : ch.gene_for(alpha[s])) {
                c.chars.push_back(crib_alpha.index_of(g));
            }
        }
        c.start.push_back(static_cast<std::uint32_t>(c.chars.size()));
        return c;
    }

    const CipherCorpus& corpus_;
    const Crib& crib_;
    std::vector<std::uint16_t> encoded_;
    std::vector<std::size_t> offsets_;
};

inline FitnessValue evaluate(const Chromosome& ch, const CipherCorpus& corpus, const Crib& crib)
{
    return Evaluator(corpus, crib).evaluate(ch);
}

inline MatchReport match_report(const Chromosome& ch, const CipherCorpus& corpus, const Crib& crib)
{
    return Evaluator(corpus, crib).match_report(ch);
}

/// `cipher_type<TAB>transcription` per line.
inline std::string to_tsv(const MatchReport& r)
{
    std::string out;
    for (const auto& p : r.pairs) {
        out += text::encode_utf8(p.cipher_type);
        out += '\t';
        out += text::encode_utf8(p.transcription);
        out += '\n';
    }
    return out;
}

} // namespace cribga
