#pragma once

// Batch-level summaries: per-symbol consensus over elite chromosomes,
// convergence curves, and a two-sample rank test on final fitnesses.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "cribga/error.hpp"
#include "cribga/evolution.hpp"
#include "cribga/mapping.hpp"

namespace cribga {

// ---------------------------------------------------------------------------
// Consensus

struct ConsensusEntry {
    Text value; // gene value, opaque
    std::size_t count = 0;
    double frequency = 0.0;
};

/// For each cipher symbol, the distribution of gene values across a set of
/// chromosomes, most frequent first (ties by value).
class ConsensusTable {
public:
    ConsensusTable(Alphabet symbols, std::vector<std::vector<ConsensusEntry>> rows, std::size_t n)
        : symbols_(std::move(symbols))
        , rows_(std::move(rows))
        , n_(n)
    {
    }

    const Alphabet& symbols() const noexcept { return symbols_; }
    std::size_t sample_count() const noexcept { return n_; }
    const std::vector<ConsensusEntry>& distribution(std::size_t symbol_index) const { return rows_[symbol_index]; }

    const std::vector<ConsensusEntry>& distribution_for(char32_t symbol) const
    {
        auto i = symbols_.index_of(symbol);
        if (i == Alphabet::npos) {
            throw ContractViolation("symbol not in consensus table");
        }
        return rows_[static_cast<std::size_t>(i)];
    }

    /// Frequency of `value` for `symbol`; 0 when never observed.
    double frequency(char32_t symbol, std::u32string_view value) const
    {
        for (const auto& e : distribution_for(symbol)) {
            if (e.value == value) {
                return e.frequency;
            }
        }
        return 0.0;
    }

private:
    Alphabet symbols_;
    std::vector<std::vector<ConsensusEntry>> rows_;
    std::size_t n_;
};

inline ConsensusTable consensus(std::span<const Chromosome> chromosomes)
{
    if (chromosomes.empty()) {
        throw ContractViolation("consensus needs at least one chromosome");
    }
    const Alphabet& alpha = chromosomes.front().cipher_alphabet();
    std::vector<std::map<Text, std::size_t>> counts(alpha.size());
    for (const auto& ch : chromosomes) {
        if (!(ch.cipher_alphabet() == alpha)) {
            throw ContractViolation("consensus over chromosomes with different cipher alphabets");
        }
        for (std::size_t i = 0; i < ch.size(); ++i) {
            ++counts[i][ch.gene(i)];
        }
    }
    const auto n = chromosomes.size();
    std::vector<std::vector<ConsensusEntry>> rows(alpha.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (const auto& [value, c] : counts[i]) {
            rows[i].push_back({value, c, static_cast<double>(c) / static_cast<double>(n)});
        }
        std::stable_sort(rows[i].begin(), rows[i].end(),
                         [](const auto& a, const auto& b) { return a.count > b.count; });
    }
    return ConsensusTable(alpha, std::move(rows), n);
}

/// `symbol<TAB>value<TAB>frequency`, one line per observed value.
inline std::string to_tsv(const ConsensusTable& t)
{
    std::ostringstream os;
    os.precision(6);
    for (std::size_t i = 0; i < t.symbols().size(); ++i) {
        const auto sym = text::encode_utf8(Text(1, t.symbols()[i]));
        for (const auto& e : t.distribution(i)) {
            os << sym << '\t' << text::encode_utf8(e.value) << '\t' << e.frequency << '\n';
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Mann-Whitney U

struct BatchComparison {
    double statistic = 0.0; // U of the first batch
    double p_value = 1.0;   // two-sided
    std::size_t n_a = 0;
    std::size_t n_b = 0;
    bool exact = false;
};

namespace detail {

/// Twice the midrank of every value of a then b in the pooled sample, so
/// ties stay integral. Also returns the tie-group sizes.
struct PooledRanks {
    std::vector<std::int64_t> doubled; // first n_a entries belong to a
    std::vector<std::size_t> ties;
};

inline PooledRanks pooled_ranks(std::span<const double> a, std::span<const double> b)
{
    const std::size_t n = a.size() + b.size();
    std::vector<std::pair<double, std::size_t>> pooled;
    pooled.reserve(n);
    for (std::size_t i = 0; i < a.size(); ++i) {
        pooled.emplace_back(a[i], i);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        pooled.emplace_back(b[i], a.size() + i);
    }
    std::sort(pooled.begin(), pooled.end());
    PooledRanks r;
    r.doubled.assign(n, 0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first) {
            ++j;
        }
        // positions i..j-1 hold 1-based ranks i+1..j; twice their mean is i+1+j
        for (std::size_t k = i; k < j; ++k) {
            r.doubled[pooled[k].second] = static_cast<std::int64_t>(i + 1 + j);
        }
        r.ties.push_back(j - i);
        i = j;
    }
    return r;
}

} // namespace detail

/// Exact permutation distribution of U with midranks for ties. The
/// distribution of the first sample's rank sum is built by dynamic
/// programming over the pooled ranks.
inline BatchComparison mann_whitney_exact(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty()) {
        throw ContractViolation("rank test needs two nonempty samples");
    }
    const auto na = a.size();
    const auto nb = b.size();
    const auto ranks = detail::pooled_ranks(a, b);

    std::int64_t max_sum = 0;
    for (auto r : ranks.doubled) {
        max_sum += r;
    }
    // ways[k][s]: subsets of size k with doubled rank sum s
    std::vector<std::vector<double>> ways(na + 1, std::vector<double>(static_cast<std::size_t>(max_sum) + 1, 0.0));
    ways[0][0] = 1.0;
    for (auto r : ranks.doubled) {
        for (std::size_t k = na; k >= 1; --k) {
            auto& dst = ways[k];
            const auto& src = ways[k - 1];
            for (std::int64_t s = max_sum; s >= r; --s) {
                dst[static_cast<std::size_t>(s)] += src[static_cast<std::size_t>(s - r)];
            }
        }
    }

    std::int64_t observed = 0;
    for (std::size_t i = 0; i < na; ++i) {
        observed += ranks.doubled[i];
    }
    const auto offset = static_cast<std::int64_t>(na * (na + 1));
    const auto centre = static_cast<std::int64_t>(na * nb); // 2 * E[U]
    const auto obs_dev = std::llabs((observed - offset) - centre);

    double total = 0.0;
    double tail = 0.0;
    for (std::int64_t s = 0; s <= max_sum; ++s) {
        const double w = ways[na][static_cast<std::size_t>(s)];
        if (w == 0.0) {
            continue;
        }
        total += w;
        if (std::llabs((s - offset) - centre) >= obs_dev) {
            tail += w;
        }
    }
    BatchComparison out;
    out.statistic = static_cast<double>(observed - offset) / 2.0;
    out.p_value = std::min(1.0, tail / total);
    out.n_a = na;
    out.n_b = nb;
    out.exact = true;
    return out;
}

/// Normal approximation with tie-corrected variance and a 0.5 continuity
/// correction.
inline BatchComparison mann_whitney_normal(std::span<const double> a, std::span<const double> b)
{
    if (a.empty() || b.empty()) {
        throw ContractViolation("rank test needs two nonempty samples");
    }
    const auto na = static_cast<double>(a.size());
    const auto nb = static_cast<double>(b.size());
    const double n = na + nb;
    const auto ranks = detail::pooled_ranks(a, b);
    double ra = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ra += static_cast<double>(ranks.doubled[i]) / 2.0;
    }
    const double u = ra - na * (na + 1.0) / 2.0;
    double tie_term = 0.0;
    for (auto t : ranks.ties) {
        const auto td = static_cast<double>(t);
        tie_term += td * td * td - td;
    }
    const double var = n > 1.0 ? na * nb / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0))) : 0.0;

    BatchComparison out;
    out.statistic = u;
    out.n_a = a.size();
    out.n_b = b.size();
    out.exact = false;
    if (var <= 0.0) {
        out.p_value = 1.0;
        return out;
    }
    const double dev = std::max(0.0, std::abs(u - na * nb / 2.0) - 0.5);
    const double z = dev / std::sqrt(var);
    out.p_value = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
    return out;
}

/// Two-sided Mann-Whitney U. Exact when both samples have at most 12
/// members, normal approximation otherwise.
inline BatchComparison compare_batches(std::span<const double> a, std::span<const double> b)
{
    if (a.size() <= 12 && b.size() <= 12) {
        return mann_whitney_exact(a, b);
    }
    return mann_whitney_normal(a, b);
}

inline BatchComparison compare_batches(std::span<const FitnessValue> a, std::span<const FitnessValue> b)
{
    std::vector<double> da(a.begin(), a.end());
    std::vector<double> db(b.begin(), b.end());
    return compare_batches(std::span<const double>(da), std::span<const double>(db));
}

// ---------------------------------------------------------------------------
// Convergence

struct ConvergenceRow {
    std::size_t generation = 0;
    double best_mean = 0.0;
    FitnessValue best_min = 0;
    FitnessValue best_max = 0;
};

inline std::vector<ConvergenceRow> convergence_table(std::span<const RunResult> batch)
{
    if (batch.empty()) {
        return {};
    }
    const auto g = batch.front().trace.size();
    for (const auto& r : batch) {
        if (r.trace.size() != g) {
            throw ContractViolation("runs in a batch have different generation counts");
        }
    }
    std::vector<ConvergenceRow> rows;
    rows.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        ConvergenceRow row{batch.front().trace[i].generation, 0.0, batch.front().trace[i].best, 0};
        long double sum = 0;
        for (const auto& r : batch) {
            const auto b = r.trace[i].best;
            sum += static_cast<long double>(b);
            row.best_min = std::min(row.best_min, b);
            row.best_max = std::max(row.best_max, b);
        }
        row.best_mean = static_cast<double>(sum / static_cast<long double>(batch.size()));
        rows.push_back(row);
    }
    return rows;
}

/// `generation,best_mean,best_min,best_max` with a header line.
inline std::string to_csv(std::span<const ConvergenceRow> rows)
{
    std::ostringstream os;
    os.precision(10);
    os << "generation,best_mean,best_min,best_max\n";
    for (const auto& r : rows) {
        os << r.generation << ',' << r.best_mean << ',' << r.best_min << ',' << r.best_max << '\n';
    }
    return os.str();
}

/// Best fitness of each run's final elite.
inline std::vector<FitnessValue> final_best(std::span<const RunResult> batch)
{
    std::vector<FitnessValue> out;
    out.reserve(batch.size());
    for (const auto& r : batch) {
        out.push_back(r.final_elite.empty() ? 0 : r.final_elite.front().fitness);
    }
    return out;
}

} // namespace cribga
