#pragma once

// The search individual: one substitution string ("gene") per cipher symbol,
// plus the genetic operators that create and recombine them.

#include <cmath>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "cribga/alphabet.hpp"
#include "cribga/error.hpp"
#include "cribga/random.hpp"
#include "cribga/text.hpp"

namespace cribga {

/// How long a gene may be and how lengths are drawn when a gene is sampled.
class GenePolicy {
public:
    /// Every gene is exactly one crib symbol.
    GenePolicy()
        : GenePolicy(1, {0.0, 1.0})
    {
    }

    /// weights[k] is the probability of a gene of length k, k = 0..max_len.
    GenePolicy(std::size_t max_len, std::vector<double> weights)
        : max_len_(max_len)
        , weights_(std::move(weights))
    {
        if (max_len_ < 1) {
            throw InvalidParams("gene max length must be at least 1");
        }
        if (weights_.size() != max_len_ + 1) {
            throw InvalidParams("need one length weight per length 0.." + std::to_string(max_len_));
        }
        double sum = 0.0;
        for (double w : weights_) {
            if (!(w >= 0.0)) {
                throw InvalidParams("length weights must be non-negative");
            }
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-9) {
            throw InvalidParams("length weights must sum to 1");
        }
    }

    /// Default weights: 1 -> 1.0 for max_len 1; otherwise 0.1 on the empty
    /// gene, 0.8 on length 1, and 0.1 shared evenly over lengths 2..max_len.
    static GenePolicy with_max_len(std::size_t max_len)
    {
        if (max_len == 1) {
            return GenePolicy();
        }
        if (max_len == 0) {
            throw InvalidParams("gene max length must be at least 1");
        }
        std::vector<double> w(max_len + 1, 0.1 / static_cast<double>(max_len - 1));
        w[0] = 0.1;
        w[1] = 0.8;
        return GenePolicy(max_len, std::move(w));
    }

    std::size_t max_len() const noexcept { return max_len_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    std::size_t sample_length(Rng& rng) const
    {
        if (max_len_ == 1 && weights_[0] == 0.0) {
            return 1;
        }
        const double u = rng.uniform();
        double acc = 0.0;
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            acc += weights_[k];
            if (u < acc) {
                return k;
            }
        }
        // u landed in the rounding gap above the last cumulative weight
        for (std::size_t k = weights_.size(); k-- > 0;) {
            if (weights_[k] > 0.0) {
                return k;
            }
        }
        return max_len_;
    }

    Text sample_gene(Rng& rng, const Alphabet& crib) const
    {
        Text g(sample_length(rng), U'\0');
        for (auto& c : g) {
            c = crib[rng.below(crib.size())];
        }
        return g;
    }

private:
    std::size_t max_len_ = 1;
    std::vector<double> weights_;
};

/// A candidate substitution alphabet. genes()[i] is what cipher symbol
/// cipher_alphabet()[i] decodes to; an empty gene deletes the symbol.
class Chromosome {
public:
    Chromosome(std::shared_ptr<const Alphabet> cipher, std::vector<Text> genes)
        : cipher_(std::move(cipher))
        , genes_(std::move(genes))
    {
        if (!cipher_ || cipher_->size() != genes_.size()) {
            throw ContractViolation("chromosome needs exactly one gene per cipher symbol");
        }
    }

    Chromosome(const Alphabet& cipher, std::vector<Text> genes)
        : Chromosome(std::make_shared<const Alphabet>(cipher), std::move(genes))
    {
    }

    const Alphabet& cipher_alphabet() const noexcept { return *cipher_; }
    const std::shared_ptr<const Alphabet>& shared_alphabet() const noexcept { return cipher_; }
    const std::vector<Text>& genes() const noexcept { return genes_; }
    std::size_t size() const noexcept { return genes_.size(); }
    const Text& gene(std::size_t i) const { return genes_[i]; }

    /// Gene for a cipher symbol. Throws if the symbol is not in the alphabet.
    const Text& gene_for(char32_t symbol) const
    {
        const auto i = cipher_->index_of(symbol);
        if (i == Alphabet::npos) {
            throw ContractViolation("symbol '" + text::encode_utf8(Text(1, symbol))
                                    + "' is not in the chromosome's cipher alphabet");
        }
        return genes_[static_cast<std::size_t>(i)];
    }

    /// True if every gene is at most max_len long and drawn from crib.
    bool well_formed(const Alphabet& crib, std::size_t max_len) const
    {
        for (const auto& g : genes_) {
            if (g.size() > max_len) {
                return false;
            }
            for (char32_t c : g) {
                if (!crib.contains(c)) {
                    return false;
                }
            }
        }
        return true;
    }

    friend bool operator==(const Chromosome& a, const Chromosome& b)
    {
        return a.genes_ == b.genes_
            && (a.cipher_ == b.cipher_ || *a.cipher_ == *b.cipher_);
    }

private:
    std::shared_ptr<const Alphabet> cipher_;
    std::vector<Text> genes_;
};

/// Decodes a cipher token: concatenation of the genes of its symbols.
inline Text transcribe(const Chromosome& ch, std::u32string_view token)
{
    Text out;
    out.reserve(token.size());
    for (char32_t c : token) {
        out += ch.gene_for(c);
    }
    return out;
}

inline Chromosome random_chromosome(Rng& rng, const GenePolicy& policy,
                                    std::shared_ptr<const Alphabet> cipher, const Alphabet& crib)
{
    if (!cipher || cipher->empty() || crib.empty()) {
        throw ContractViolation("random_chromosome needs nonempty cipher and crib alphabets");
    }
    std::vector<Text> genes;
    genes.reserve(cipher->size());
    for (std::size_t i = 0; i < cipher->size(); ++i) {
        genes.push_back(policy.sample_gene(rng, crib));
    }
    return Chromosome(std::move(cipher), std::move(genes));
}

inline Chromosome random_chromosome(Rng& rng, const GenePolicy& policy, const Alphabet& cipher,
                                    const Alphabet& crib)
{
    return random_chromosome(rng, policy, std::make_shared<const Alphabet>(cipher), crib);
}

/// Each gene is independently resampled with probability `rate`.
inline Chromosome mutate(const Chromosome& ch, double rate, Rng& rng, const GenePolicy& policy,
                         const Alphabet& crib)
{
    if (!(rate >= 0.0 && rate <= 1.0)) {
        throw ContractViolation("mutation rate must lie in [0, 1]");
    }
    if (rate == 0.0) {
        return ch;
    }
    std::vector<Text> genes = ch.genes();
    for (auto& g : genes) {
        if (rng.bernoulli(rate)) {
            g = policy.sample_gene(rng, crib);
        }
    }
    return Chromosome(ch.shared_alphabet(), std::move(genes));
}

/// Per gene: keep the allele where parents agree, otherwise take either
/// parent's allele with probability 1/2. Randomness is consumed only at
/// disagreeing positions.
inline Chromosome discrete_crossover(const Chromosome& p1, const Chromosome& p2, Rng& rng)
{
    if (p1.size() != p2.size()) {
        throw ContractViolation("crossover parents differ in gene count");
    }
    std::vector<Text> genes;
    genes.reserve(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const auto& a = p1.gene(i);
        const auto& b = p2.gene(i);
        if (a == b) {
            genes.push_back(a);
        } else {
            genes.push_back((rng() >> 63) == 0 ? a : b);
        }
    }
    return Chromosome(p1.shared_alphabet(), std::move(genes));
}

/// `a=i;c=k;...` in cipher alphabet order; an empty gene renders as `o=`.
inline std::string serialize(const Chromosome& ch)
{
    std::string out;
    for (std::size_t i = 0; i < ch.size(); ++i) {
        if (i > 0) {
            out += ';';
        }
        text::append_utf8(out, ch.cipher_alphabet()[i]);
        out += '=';
        out += text::encode_utf8(ch.gene(i));
    }
    return out;
}

/// Inverse of serialize. Each pair is split at its first '='; the left side
/// must be a single code point and may not repeat. Gene text is kept
/// verbatim (no case folding).
inline Chromosome parse_chromosome(std::string_view s)
{
    std::vector<std::pair<char32_t, Text>> pairs;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto semi = s.find(';', start);
        auto field = s.substr(start, semi == std::string_view::npos ? std::string_view::npos : semi - start);
        if (!field.empty()) {
            auto eq = field.find('=');
            if (eq == std::string_view::npos) {
                throw MalformedInput("chromosome pair without '=': " + std::string(field));
            }
            auto sym = text::decode_utf8(field.substr(0, eq));
            if (sym.size() != 1) {
                throw MalformedInput("chromosome key must be one symbol: " + std::string(field));
            }
            pairs.emplace_back(sym[0], text::decode_utf8(field.substr(eq + 1)));
        }
        if (semi == std::string_view::npos) {
            break;
        }
        start = semi + 1;
    }
    std::vector<char32_t> symbols;
    for (const auto& [c, g] : pairs) {
        symbols.push_back(c);
    }
    auto alphabet = std::make_shared<const Alphabet>(symbols);
    if (alphabet->size() != pairs.size()) {
        throw MalformedInput("chromosome repeats a cipher symbol");
    }
    std::vector<Text> genes(pairs.size());
    for (auto& [c, g] : pairs) {
        genes[static_cast<std::size_t>(alphabet->index_of(c))] = std::move(g);
    }
    return Chromosome(std::move(alphabet), std::move(genes));
}

} // namespace cribga
