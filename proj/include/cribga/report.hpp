#pragma once

// JSON forms of run results, corpus/crib statistics and batch comparisons.
// Key order is fixed by nlohmann::ordered_json so files are reproducible.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cribga/corpus.hpp"
#include "cribga/crib.hpp"
#include "cribga/error.hpp"
#include "cribga/evolution.hpp"
#include "cribga/fitness.hpp"
#include "cribga/stats.hpp"

namespace cribga::report {

using Json = nlohmann::ordered_json;

inline std::string utf8(const Text& t) { return text::encode_utf8(t); }

inline Json to_json(const MatchReport& r, bool reversed)
{
    Json pairs = Json::array();
    for (const auto& p : r.pairs) {
        Json j;
        j["cipher_type"] = utf8(p.cipher_type);
        // the type as written in the input file
        j["input_type"] = utf8(reversed ? Text(p.cipher_type.rbegin(), p.cipher_type.rend()) : p.cipher_type);
        j["transcription"] = utf8(p.transcription);
        pairs.push_back(std::move(j));
    }
    Json j;
    j["fitness"] = r.fitness;
    j["matched_types"] = r.matched_types();
    j["distinct_names"] = r.distinct_names();
    j["pairs"] = std::move(pairs);
    return j;
}

inline Json to_json(const RunResult& r, bool reversed)
{
    Json trace = Json::array();
    for (const auto& g : r.trace) {
        Json j;
        j["generation"] = g.generation;
        j["best"] = g.best;
        j["mean"] = g.mean;
        trace.push_back(std::move(j));
    }
    Json elite = Json::array();
    for (const auto& ind : r.final_elite) {
        Json j;
        j["fitness"] = ind.fitness;
        j["chromosome"] = serialize(ind.chromosome);
        elite.push_back(std::move(j));
    }
    Json j;
    j["seed"] = r.seed_used;
    j["final_best"] = r.final_elite.empty() ? 0 : r.final_elite.front().fitness;
    j["final_elite"] = std::move(elite);
    j["best_report"] = to_json(r.best_report, reversed);
    j["trace"] = std::move(trace);
    return j;
}

/// Parameters that determine results. Thread counts are left out on purpose
/// since they never change the output.
inline Json to_json(const EvolutionParams& p)
{
    Json j;
    j["population_size"] = p.population_size;
    j["elite_size"] = p.elite_size;
    j["mutation_rate"] = p.mutation_rate;
    j["generations"] = p.generations;
    j["runs"] = p.runs;
    j["seed"] = p.seed;
    j["gene_max_len"] = p.gene_policy.max_len();
    j["length_weights"] = p.gene_policy.weights();
    j["reverse"] = p.reverse;
    return j;
}

inline Json to_json(const CorpusStats& s)
{
    Json j;
    j["tokens"] = s.tokens;
    j["types"] = s.types;
    j["total_type_chars"] = s.total_type_chars;
    j["alphabet_size"] = s.alphabet_size;
    j["alphabet"] = s.alphabet;
    return j;
}

inline Json crib_json(const Crib& c)
{
    Json j;
    j["names"] = c.size();
    j["alphabet_size"] = c.alphabet().size();
    j["alphabet"] = utf8(c.alphabet().as_text());
    return j;
}

inline Json to_json(const BatchComparison& c)
{
    Json j;
    j["statistic"] = c.statistic;
    j["p_value"] = c.p_value;
    j["n_a"] = c.n_a;
    j["n_b"] = c.n_b;
    j["exact"] = c.exact;
    return j;
}

/// Final best fitness of every run in a parsed runs.json document.
inline std::vector<FitnessValue> final_best_from_runs_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("runs") || !doc["runs"].is_array()) {
        throw MalformedInput("runs file has no 'runs' array");
    }
    std::vector<FitnessValue> out;
    for (const auto& r : doc["runs"]) {
        if (!r.is_object() || !r.contains("final_best") || !r["final_best"].is_number_unsigned()) {
            throw MalformedInput("run entry without an unsigned 'final_best'");
        }
        out.push_back(r["final_best"].get<FitnessValue>());
    }
    if (out.empty()) {
        throw MalformedInput("runs file contains no runs");
    }
    return out;
}

} // namespace cribga::report
