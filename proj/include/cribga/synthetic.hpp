#pragma once

// Known-key test instances: a generated name list, a random bijective key,
// and a cipher corpus made by enciphering part of the list with it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "cribga/corpus.hpp"
#include "cribga/crib.hpp"
#include "cribga/error.hpp"
#include "cribga/mapping.hpp"
#include "cribga/random.hpp"

namespace cribga {

struct SyntheticSpec {
    std::size_t crib_names = 500;
    std::size_t cipher_names = 50;
    std::uint64_t seed = 1;
    /// 19 letters: 14 consonants then 5 vowels.
    Text consonants = U"bdgklmnprstvz" U"h";
    Text vowels = U"aeiou";
    /// Cipher-side symbols; must be as many as plaintext letters.
    Text cipher_symbols = U"acdefghiklmnopqrsty";
};

struct SyntheticInstance {
    Crib crib;
    CipherCorpus corpus;
    Chromosome key; // decodes the corpus exactly into crib names
    std::vector<Text> plaintexts; // corpus tokens before enciphering
};

namespace detail {

/// Name-like strings: 1-3 consonant-vowel syllables, optionally closed by a
/// consonant, with a feminine -a ending half of the time.
inline Text generate_name(Rng& rng, const Text& cons, const Text& vows)
{
    Text name;
    const std::size_t syllables = 1 + rng.below(3);
    if (rng.below(4) == 0) {
        name += vows[rng.below(vows.size())];
    }
    for (std::size_t s = 0; s < syllables; ++s) {
        name += cons[rng.below(cons.size())];
        name += vows[rng.below(vows.size())];
    }
    if (rng.below(3) == 0) {
        name += cons[rng.below(cons.size())];
    }
    if (rng.below(2) == 0 && name.back() != U'a') {
        if (vows.find(name.back()) != Text::npos) {
            name.back() = U'a';
        } else {
            name += U'a';
        }
    }
    return name;
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng)
{
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rng.below(i)]);
    }
}

} // namespace detail

inline SyntheticInstance make_synthetic_instance(const SyntheticSpec& spec = {})
{
    const Text plain = spec.consonants + spec.vowels;
    if (plain.size() != spec.cipher_symbols.size()) {
        throw InvalidParams("plaintext and cipher alphabets must have equal size");
    }
    if (spec.cipher_names > spec.crib_names) {
        throw InvalidParams("cannot encipher more names than the crib holds");
    }
    Rng rng(derive_seed(spec.seed, 0x5e7));

    std::vector<Text> names;
    std::unordered_set<Text> seen;
    // guarantees every plaintext letter appears in the crib alphabet
    for (char32_t v : spec.vowels) {
        for (char32_t c : spec.consonants) {
            if (names.size() >= spec.crib_names) {
                break;
            }
            Text n{c, v, spec.consonants[rng.below(spec.consonants.size())], U'a'};
            if (seen.insert(n).second) {
                names.push_back(n);
            }
        }
        if (names.size() > spec.crib_names / 4) {
            break;
        }
    }
    while (names.size() < spec.crib_names) {
        auto n = detail::generate_name(rng, spec.consonants, spec.vowels);
        if (n.size() >= 3 && seen.insert(n).second) {
            names.push_back(std::move(n));
        }
    }
    detail::shuffle(names, rng);

    // enciphering key: plain[i] -> cipher_symbols[perm[i]]
    std::vector<std::size_t> perm(plain.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
        perm[i] = i;
    }
    detail::shuffle(perm, rng);
    auto encipher = [&](const Text& p) {
        Text c;
        for (char32_t ch : p) {
            c += spec.cipher_symbols[perm[plain.find(ch)]];
        }
        return c;
    };

    std::vector<Text> picks = names;
    detail::shuffle(picks, rng);
    picks.resize(spec.cipher_names);
    std::vector<Text> tokens;
    for (const auto& p : picks) {
        tokens.push_back(encipher(p));
    }
    CipherCorpus corpus(std::move(tokens));

    std::vector<Text> genes;
    for (char32_t c : corpus.alphabet().symbols()) {
        const auto ci = spec.cipher_symbols.find(c);
        const auto pi = static_cast<std::size_t>(std::find(perm.begin(), perm.end(), ci) - perm.begin());
        genes.push_back(Text(1, plain[pi]));
    }
    Chromosome key(corpus.alphabet(), std::move(genes));
    return {Crib(names), std::move(corpus), std::move(key), std::move(picks)};
}

/// Newline-joined list, suitable for load_crib / load_corpus.
inline std::string render_lines(const std::vector<Text>& lines)
{
    std::string out;
    for (const auto& l : lines) {
        out += text::encode_utf8(l);
        out += '\n';
    }
    return out;
}

} // namespace cribga
