#pragma once

// Generational search: roulette-wheel parent selection, elitism, discrete
// crossover and per-gene mutation over seeded independent runs.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "cribga/corpus.hpp"
#include "cribga/crib.hpp"
#include "cribga/error.hpp"
#include "cribga/fitness.hpp"
#include "cribga/mapping.hpp"
#include "cribga/random.hpp"

namespace cribga {

struct EvolutionParams {
    std::size_t population_size = 5000;
    std::size_t elite_size = 5;
    double mutation_rate = 0.0005;
    std::size_t generations = 200;
    std::size_t runs = 10;
    std::uint64_t seed = 0;
    GenePolicy gene_policy;
    bool reverse = false;
    /// Worker threads for fitness evaluation inside one run. Results do not
    /// depend on it.
    std::size_t eval_threads = 1;
    /// Batch members executed concurrently. Results do not depend on it.
    std::size_t parallel_runs = 1;

    void validate() const
    {
        if (population_size == 0) {
            throw InvalidParams("population size must be positive");
        }
        if (elite_size >= population_size) {
            throw InvalidParams("elite size must be smaller than the population");
        }
        if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
            throw InvalidParams("mutation rate must lie in [0, 1]");
        }
        if (generations < 1) {
            throw InvalidParams("at least one generation is required");
        }
        if (runs < 1) {
            throw InvalidParams("at least one run is required");
        }
        if (eval_threads < 1 || parallel_runs < 1) {
            throw InvalidParams("thread counts must be positive");
        }
    }
};

struct Individual {
    Chromosome chromosome;
    FitnessValue fitness = 0;

    friend bool operator==(const Individual&, const Individual&) = default;
};

using Population = std::vector<Individual>;

struct GenerationRecord {
    std::size_t generation = 0; // 1-based; state after that many steps
    FitnessValue best = 0;
    double mean = 0.0;

    friend bool operator==(const GenerationRecord&, const GenerationRecord&) = default;
};

using RunTrace = std::vector<GenerationRecord>;

struct RunResult {
    std::uint64_t seed_used = 0;
    RunTrace trace;
    std::vector<Individual> final_elite; // descending fitness
    MatchReport best_report;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

namespace detail {

/// Runs fn(i) for i in [0, n) over `threads` workers in contiguous chunks.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t threads, Fn&& fn)
{
    threads = std::max<std::size_t>(1, std::min(threads, n));
    if (threads == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::thread> workers;
    std::exception_ptr error;
    std::mutex error_mutex;
    const std::size_t chunk = (n + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) {
            break;
        }
        workers.emplace_back([&, lo, hi] {
            try {
                for (std::size_t i = lo; i < hi; ++i) {
                    fn(i);
                }
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) {
        w.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace detail

/// Fitness-proportionate selection over a fixed set of fitnesses. Integer
/// prefix sums keep the draw exact. All-zero fitness falls back to uniform.
class RouletteWheel {
public:
    explicit RouletteWheel(std::span<const FitnessValue> fitnesses)
    {
        if (fitnesses.empty()) {
            throw ContractViolation("roulette selection over an empty population");
        }
        cumulative_.reserve(fitnesses.size());
        FitnessValue acc = 0;
        for (auto f : fitnesses) {
            acc += f;
            cumulative_.push_back(acc);
        }
    }

    std::size_t select(Rng& rng) const
    {
        const FitnessValue total = cumulative_.back();
        if (total == 0) {
            return rng.below(cumulative_.size());
        }
        const FitnessValue r = rng.below(total);
        auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), r);
        return static_cast<std::size_t>(it - cumulative_.begin());
    }

private:
    std::vector<FitnessValue> cumulative_;
};

inline std::size_t roulette_select(std::span<const FitnessValue> fitnesses, Rng& rng)
{
    return RouletteWheel(fitnesses).select(rng);
}

/// Indices sorted by fitness descending; ties keep population order.
inline std::vector<std::size_t> rank_population(const Population& pop)
{
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pop[a].fitness > pop[b].fitness; });
    return order;
}

inline void evaluate_population(std::span<Individual> individuals, const Evaluator& eval,
                                std::size_t threads)
{
    detail::parallel_for(individuals.size(), threads, [&](std::size_t i) {
        individuals[i].fitness = eval.evaluate(individuals[i].chromosome);
    });
}

/// One generation. The elite is copied first, in rank order; the remaining
/// slots are children of two roulette-selected parents (elites included,
/// repeats allowed) after discrete crossover and mutation. Only the children
/// are re-evaluated.
inline Population step_generation(const Population& pop, const EvolutionParams& params,
                                  const Evaluator& eval, const Alphabet& crib_alphabet, Rng& rng)
{
    if (pop.size() != params.population_size) {
        throw ContractViolation("population size does not match parameters");
    }
    std::vector<FitnessValue> fitnesses;
    fitnesses.reserve(pop.size());
    for (const auto& ind : pop) {
        fitnesses.push_back(ind.fitness);
    }
    const RouletteWheel wheel(fitnesses);
    const auto order = rank_population(pop);

    Population next;
    next.reserve(pop.size());
    for (std::size_t e = 0; e < params.elite_size; ++e) {
        next.push_back(pop[order[e]]);
    }
    while (next.size() < params.population_size) {
        const auto& a = pop[wheel.select(rng)].chromosome;
        const auto& b = pop[wheel.select(rng)].chromosome;
        auto child = mutate(discrete_crossover(a, b, rng), params.mutation_rate, rng,
                            params.gene_policy, crib_alphabet);
        next.push_back({std::move(child), 0});
    }
    evaluate_population(std::span(next).subspan(params.elite_size), eval, params.eval_threads);
    return next;
}

inline GenerationRecord summarize(const Population& pop, std::size_t generation)
{
    GenerationRecord rec{generation, 0, 0.0};
    long double sum = 0;
    for (const auto& ind : pop) {
        rec.best = std::max(rec.best, ind.fitness);
        sum += static_cast<long double>(ind.fitness);
    }
    rec.mean = pop.empty() ? 0.0 : static_cast<double>(sum / static_cast<long double>(pop.size()));
    return rec;
}

/// Called after each generation with (run seed, record).
using ProgressFn = std::function<void(std::uint64_t, const GenerationRecord&)>;

/// One seeded run. Stream 0 of the seed initializes the population; stream g
/// drives generation g. The corpus is reversed first when params.reverse.
inline RunResult run(const EvolutionParams& params, const CipherCorpus& corpus, const Crib& crib,
                     const ProgressFn& progress = {})
{
    params.validate();
    if (corpus.alphabet().empty() || crib.alphabet().empty()) {
        throw InvalidParams("corpus and crib must both be nonempty");
    }
    const CipherCorpus working = params.reverse ? reverse_corpus(corpus) : corpus;
    const Evaluator eval(working, crib);
    const auto cipher = std::make_shared<const Alphabet>(working.alphabet());

    Rng init(derive_seed(params.seed, 0));
    Population pop;
    pop.reserve(params.population_size);
    for (std::size_t i = 0; i < params.population_size; ++i) {
        pop.push_back({random_chromosome(init, params.gene_policy, cipher, crib.alphabet()), 0});
    }
    evaluate_population(pop, eval, params.eval_threads);

    RunResult result;
    result.seed_used = params.seed;
    result.trace.reserve(params.generations);
    for (std::size_t g = 1; g <= params.generations; ++g) {
        Rng rng(derive_seed(params.seed, g));
        pop = step_generation(pop, params, eval, crib.alphabet(), rng);
        result.trace.push_back(summarize(pop, g));
        if (progress) {
            progress(params.seed, result.trace.back());
        }
    }

    const auto order = rank_population(pop);
    for (std::size_t e = 0; e < std::max<std::size_t>(params.elite_size, 1); ++e) {
        result.final_elite.push_back(pop[order[e]]);
    }
    result.best_report = eval.match_report(result.final_elite.front().chromosome);
    return result;
}

/// `params.runs` independent runs with seeds seed, seed+1, ...; up to
/// params.parallel_runs of them at a time.
inline std::vector<RunResult> run_batch(const EvolutionParams& params, const CipherCorpus& corpus,
                                        const Crib& crib, const ProgressFn& progress = {})
{
    params.validate();
    std::vector<RunResult> results(params.runs);
    std::mutex progress_mutex;
    ProgressFn guarded;
    if (progress) {
        guarded = [&](std::uint64_t seed, const GenerationRecord& rec) {
            std::lock_guard lock(progress_mutex);
            progress(seed, rec);
        };
    }
    detail::parallel_for(params.runs, params.parallel_runs, [&](std::size_t i) {
        EvolutionParams p = params;
        p.seed = params.seed + i;
        results[i] = run(p, corpus, crib, guarded);
    });
    return results;
}

} // namespace cribga
