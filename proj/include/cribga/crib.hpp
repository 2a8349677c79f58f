#pragma once

// Plaintext wordlist ("crib"): normalization, suffix-rewrite expansion and a
// trie for exact membership.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cribga/alphabet.hpp"
#include "cribga/error.hpp"
#include "cribga/text.hpp"

namespace cribga {

/// Replace a terminal `suffix` with `replacement` (e.g. a -> ka turns
/// alena into alenka).
struct RewriteRule {
    Text suffix;
    Text replacement;

    RewriteRule(Text s, Text r)
        : suffix(std::move(s))
        , replacement(std::move(r))
    {
        if (suffix.empty()) {
            throw InvalidParams("rewrite rule suffix must be nonempty");
        }
    }

    bool applies_to(std::u32string_view name) const
    {
        return name.size() >= suffix.size()
            && name.substr(name.size() - suffix.size()) == suffix;
    }

    Text apply(std::u32string_view name) const
    {
        Text out(name.substr(0, name.size() - suffix.size()));
        out += replacement;
        return out;
    }

    friend bool operator==(const RewriteRule&, const RewriteRule&) = default;
};

/// Parses `SUFFIX=REPLACEMENT`. Both sides are lowercased like crib entries.
inline RewriteRule parse_rewrite_rule(std::string_view spec)
{
    auto eq = spec.find('=');
    if (eq == std::string_view::npos) {
        throw InvalidParams("rewrite rule must look like SUFFIX=REPLACEMENT: " + std::string(spec));
    }
    return RewriteRule(text::to_lower(text::decode_utf8(spec.substr(0, eq))),
                       text::to_lower(text::decode_utf8(spec.substr(eq + 1))));
}

/// Prefix tree over the crib alphabet. Children are stored densely, one row
/// of |alphabet| slots per node, so a step is a single array read.
class CribTrie {
public:
    using Node = std::int32_t;
    static constexpr Node none = -1;
    static constexpr Node root = 0;

    CribTrie() = default;

    CribTrie(const std::vector<Text>& words, const Alphabet& alphabet)
        : width_(alphabet.size())
    {
        add_node();
        for (const auto& w : words) {
            Node n = root;
            for (char32_t c : w) {
                const auto slot = static_cast<std::size_t>(n) * width_
                    + static_cast<std::size_t>(alphabet.index_of(c));
                if (children_[slot] == none) {
                    const Node child = add_node(); // may reallocate children_
                    children_[slot] = child;
                }
                n = children_[slot];
            }
            terminal_[static_cast<std::size_t>(n)] = 1;
        }
    }

    /// Child of n along alphabet index sym, or none. sym may be Alphabet::npos.
    Node step(Node n, std::int32_t sym) const noexcept
    {
        if (sym < 0) {
            return none;
        }
        return children_[static_cast<std::size_t>(n) * width_ + static_cast<std::size_t>(sym)];
    }

    bool is_terminal(Node n) const noexcept { return terminal_[static_cast<std::size_t>(n)] != 0; }
    std::size_t node_count() const noexcept { return terminal_.size(); }

private:
    Node add_node()
    {
        children_.resize(children_.size() + width_, none);
        terminal_.push_back(0);
        return static_cast<Node>(terminal_.size() - 1);
    }

    std::size_t width_ = 0;
    std::vector<Node> children_;
    std::vector<std::uint8_t> terminal_;
};

/// Distinct nonempty names (insertion order), their alphabet and a
/// membership index. Immutable once built.
class Crib {
public:
    Crib()
        : trie_(names_, alphabet_)
    {
    }

    explicit Crib(const std::vector<Text>& names)
    {
        std::unordered_set<Text> seen;
        for (const auto& n : names) {
            if (!n.empty() && seen.insert(n).second) {
                names_.push_back(n);
            }
        }
        alphabet_ = Alphabet::of(names_);
        trie_ = CribTrie(names_, alphabet_);
    }

    const std::vector<Text>& names() const noexcept { return names_; }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    const CribTrie& trie() const noexcept { return trie_; }
    std::size_t size() const noexcept { return names_.size(); }

    bool contains(std::u32string_view candidate) const noexcept
    {
        auto n = CribTrie::root;
        for (char32_t c : candidate) {
            n = trie_.step(n, alphabet_.index_of(c));
            if (n == CribTrie::none) {
                return false;
            }
        }
        return !candidate.empty() && trie_.is_terminal(n);
    }

    bool contains(std::string_view utf8) const { return contains(text::decode_utf8(utf8)); }

private:
    std::vector<Text> names_;
    Alphabet alphabet_;
    CribTrie trie_;
};

/// One name per line; trimmed, lowercased, blank and '#' lines skipped,
/// duplicates collapsed.
inline Crib load_crib(std::string_view raw)
{
    std::vector<Text> names;
    for (auto& line : text::normalized_lines(raw)) {
        names.push_back(std::move(line.content));
    }
    return Crib(names);
}

/// Union of the crib with one rewrite of each original name per matching
/// rule. Rules are applied to original names only, never to products.
inline Crib expand_crib(const Crib& c, const std::vector<RewriteRule>& rules)
{
    std::vector<Text> names = c.names();
    for (const auto& n : c.names()) {
        for (const auto& r : rules) {
            if (r.applies_to(n)) {
                names.push_back(r.apply(n));
            }
        }
    }
    return Crib(names);
}

} // namespace cribga
