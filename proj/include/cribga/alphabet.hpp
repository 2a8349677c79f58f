#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cribga/text.hpp"

namespace cribga {

/// One cipher- or plaintext-side symbol (a single code point).
struct Symbol {
    char32_t code;

    friend constexpr bool operator==(Symbol, Symbol) = default;
    friend constexpr auto operator<=>(Symbol, Symbol) = default;
};

/// Sorted set of distinct code points with O(1) index lookup for ASCII and
/// binary search beyond it.
class Alphabet {
public:
    static constexpr std::int32_t npos = -1;

    Alphabet() { ascii_.fill(npos); }

    explicit Alphabet(std::vector<char32_t> symbols)
        : symbols_(std::move(symbols))
    {
        std::sort(symbols_.begin(), symbols_.end());
        symbols_.erase(std::unique(symbols_.begin(), symbols_.end()), symbols_.end());
        rebuild_table();
    }

    Alphabet(std::initializer_list<char32_t> symbols)
        : Alphabet(std::vector<char32_t>(symbols))
    {
    }

    /// The alphabet of every code point appearing in the given strings.
    template <typename Range>
    static Alphabet of(const Range& strings)
    {
        std::vector<char32_t> all;
        for (const auto& s : strings) {
            all.insert(all.end(), s.begin(), s.end());
        }
        return Alphabet(std::move(all));
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    std::span<const char32_t> symbols() const noexcept { return symbols_; }
    char32_t operator[](std::size_t i) const { return symbols_[i]; }

    /// Position of c in sorted order, or npos.
    std::int32_t index_of(char32_t c) const noexcept
    {
        if (c < ascii_.size()) {
            return ascii_[c];
        }
        auto it = std::lower_bound(symbols_.begin(), symbols_.end(), c);
        if (it == symbols_.end() || *it != c) {
            return npos;
        }
        return static_cast<std::int32_t>(it - symbols_.begin());
    }

    bool contains(char32_t c) const noexcept { return index_of(c) != npos; }

    bool includes(const Alphabet& other) const
    {
        return std::includes(symbols_.begin(), symbols_.end(),
                             other.symbols_.begin(), other.symbols_.end());
    }

    Text as_text() const { return Text(symbols_.begin(), symbols_.end()); }

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

private:
    void rebuild_table()
    {
        ascii_.fill(npos);
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (symbols_[i] < ascii_.size()) {
                ascii_[symbols_[i]] = static_cast<std::int32_t>(i);
            }
        }
    }

    std::vector<char32_t> symbols_;
    std::array<std::int32_t, 128> ascii_{};
};

} // namespace cribga
