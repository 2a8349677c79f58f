#pragma once

// Cipher token corpus: load, derive types and alphabet, reverse.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cribga/alphabet.hpp"
#include "cribga/error.hpp"
#include "cribga/text.hpp"

namespace cribga {

/// Ordered cipher tokens with their distinct types (first-occurrence order)
/// and the sorted alphabet they are written in. Immutable once built.
class CipherCorpus {
public:
    CipherCorpus() = default;

    /// Builds from already-normalized tokens. Every token must be nonempty
    /// and free of whitespace.
    explicit CipherCorpus(std::vector<Text> tokens)
        : tokens_(std::move(tokens))
    {
        std::unordered_set<Text> seen;
        for (const auto& t : tokens_) {
            if (seen.insert(t).second) {
                types_.push_back(t);
                total_type_chars_ += t.size();
            }
        }
        alphabet_ = Alphabet::of(tokens_);
    }

    const std::vector<Text>& tokens() const noexcept { return tokens_; }
    const std::vector<Text>& types() const noexcept { return types_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::size_t total_type_chars() const noexcept { return total_type_chars_; }

    friend bool operator==(const CipherCorpus& a, const CipherCorpus& b)
    {
        return a.tokens_ == b.tokens_ && a.types_ == b.types_ && a.alphabet_ == b.alphabet_
            && a.total_type_chars_ == b.total_type_chars_;
    }

private:
    std::vector<Text> tokens_;
    std::vector<Text> types_;
    Alphabet alphabet_;
    std::size_t total_type_chars_ = 0;
};

/// Parses a one-token-per-line cipher file. Lines are trimmed and
/// lowercased; blank lines and '#' comments are skipped. A token with
/// interior whitespace throws MalformedInput carrying its line number.
inline CipherCorpus load_corpus(std::string_view raw)
{
    std::vector<Text> tokens;
    for (auto& line : text::normalized_lines(raw)) {
        if (std::any_of(line.content.begin(), line.content.end(), text::is_space)) {
            throw MalformedInput("token contains whitespace", line.number);
        }
        tokens.push_back(std::move(line.content));
    }
    return CipherCorpus(std::move(tokens));
}

/// Joins tokens with '\n', the inverse of load_corpus on normalized input.
inline std::string render_corpus(const CipherCorpus& c)
{
    std::string out;
    for (const auto& t : c.tokens()) {
        out += text::encode_utf8(t);
        out += '\n';
    }
    return out;
}

/// Reverses the characters of every token; token order is kept.
inline CipherCorpus reverse_corpus(const CipherCorpus& c)
{
    std::vector<Text> reversed;
    reversed.reserve(c.tokens().size());
    for (const auto& t : c.tokens()) {
        reversed.emplace_back(t.rbegin(), t.rend());
    }
    return CipherCorpus(std::move(reversed));
}

struct CorpusStats {
    std::size_t tokens = 0;
    std::size_t types = 0;
    std::size_t total_type_chars = 0;
    std::size_t alphabet_size = 0;
    std::string alphabet; // UTF-8, sorted

    friend bool operator==(const CorpusStats&, const CorpusStats&) = default;
};

inline CorpusStats corpus_stats(const CipherCorpus& c)
{
    return {c.tokens().size(), c.types().size(), c.total_type_chars(), c.alphabet().size(),
            text::encode_utf8(c.alphabet().as_text())};
}

} // namespace cribga
