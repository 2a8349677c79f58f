#pragma once

// The three user-facing commands (evolve, compare, stats) as functions that
// take a config and streams and return a process exit status.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cribga/corpus.hpp"
#include "cribga/crib.hpp"
#include "cribga/error.hpp"
#include "cribga/evolution.hpp"
#include "cribga/report.hpp"
#include "cribga/stats.hpp"

namespace cribga {

enum class ExitCode : int {
    ok = 0,
    check_failed = 1,
    missing_file = 2,
    malformed_input = 3,
    invalid_params = 4,
    io_error = 5,
};

struct ExperimentConfig {
    std::string cipher_path;
    std::string crib_path;
    std::vector<std::string> rewrite_rules; // SUFFIX=REPLACEMENT
    EvolutionParams params;
    std::string output_dir = "out";
    bool write_matches = true;
    bool verbose = false;
};

/// Counts a standard Calendar label extraction is expected to show.
struct CalendarReference {
    static constexpr std::size_t tokens = 290;
    static constexpr std::size_t types = 264;
    static constexpr std::size_t total_type_chars = 2045;
    static constexpr std::size_t alphabet_size = 19;
};

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputNotFound("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing " + path.string());
    }
}

namespace detail {

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn)
{
    try {
        return fn();
    } catch (const InputNotFound& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::missing_file);
    } catch (const MalformedInput& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return static_cast<int>(ExitCode::malformed_input);
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return static_cast<int>(ExitCode::malformed_input);
    } catch (const InvalidParams& e) {
        err << "error: invalid parameters: " << e.what() << '\n';
        return static_cast<int>(ExitCode::invalid_params);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::io_error);
    }
}

inline std::vector<RewriteRule> parse_rules(const std::vector<std::string>& specs)
{
    std::vector<RewriteRule> rules;
    for (const auto& s : specs) {
        rules.push_back(parse_rewrite_rule(s));
    }
    return rules;
}

} // namespace detail

/// Runs a batch and writes convergence.csv, runs.json, consensus.tsv,
/// stats.json (and best_matches.tsv) into config.output_dir. Inputs and
/// parameters are fully validated before anything is written.
inline int run_experiment(const ExperimentConfig& config, std::ostream& log = std::cerr)
{
    return detail::guarded(log, [&] {
        config.params.validate();
        if (config.cipher_path.empty() || config.crib_path.empty()) {
            throw InvalidParams("both a cipher file and a crib file are required");
        }
        const auto rules = detail::parse_rules(config.rewrite_rules);
        const auto cipher_text = read_file(config.cipher_path);
        const auto crib_text = read_file(config.crib_path);
        const auto corpus = load_corpus(cipher_text);
        const auto base_crib = load_crib(crib_text);
        const auto crib = expand_crib(base_crib, rules);
        if (corpus.types().empty()) {
            throw InvalidParams("cipher file contains no tokens");
        }
        if (crib.size() == 0) {
            throw InvalidParams("crib file contains no names");
        }

        ProgressFn progress;
        if (config.verbose) {
            progress = [&log](std::uint64_t seed, const GenerationRecord& rec) {
                log << "seed " << seed << " generation " << rec.generation << " best " << rec.best
                    << " mean " << rec.mean << '\n';
            };
        }
        const auto results = run_batch(config.params, corpus, crib, progress);

        namespace fs = std::filesystem;
        const fs::path dir(config.output_dir);
        fs::create_directories(dir);

        write_file(dir / "convergence.csv", to_csv(convergence_table(results)));

        report::Json runs;
        runs["params"] = report::to_json(config.params);
        runs["inputs"] = {{"cipher", config.cipher_path},
                          {"crib", config.crib_path},
                          {"rewrite", config.rewrite_rules}};
        runs["runs"] = report::Json::array();
        for (const auto& r : results) {
            runs["runs"].push_back(report::to_json(r, config.params.reverse));
        }
        write_file(dir / "runs.json", runs.dump(2) + "\n");

        std::vector<Chromosome> bests;
        for (const auto& r : results) {
            bests.push_back(r.final_elite.front().chromosome);
        }
        write_file(dir / "consensus.tsv", to_tsv(consensus(bests)));

        report::Json stats;
        stats["cipher"] = report::to_json(corpus_stats(corpus));
        stats["crib"] = report::crib_json(base_crib);
        stats["crib_expanded"] = report::crib_json(crib);
        write_file(dir / "stats.json", stats.dump(2) + "\n");

        if (config.write_matches) {
            const auto best = std::max_element(results.begin(), results.end(), [](const auto& a, const auto& b) {
                return a.best_report.fitness < b.best_report.fitness;
            });
            write_file(dir / "best_matches.tsv", to_tsv(best->best_report));
        }

        const auto finals = final_best(results);
        log << "finished " << results.size() << " run(s); final best fitness:";
        for (auto f : finals) {
            log << ' ' << f;
        }
        log << " (max possible " << corpus.total_type_chars() << ")\n";
        return static_cast<int>(ExitCode::ok);
    });
}

/// Rank test between the final best fitnesses of two runs.json files;
/// prints the comparison as JSON on `out`.
inline int compare_experiments(const std::string& runs_a, const std::string& runs_b, std::ostream& out,
                               std::ostream& err = std::cerr)
{
    return detail::guarded(err, [&] {
        const auto doc_a = report::Json::parse(read_file(runs_a));
        const auto doc_b = report::Json::parse(read_file(runs_b));
        const auto a = report::final_best_from_runs_json(doc_a);
        const auto b = report::final_best_from_runs_json(doc_b);
        out << report::to_json(compare_batches(std::span<const FitnessValue>(a), std::span<const FitnessValue>(b))).dump()
            << '\n';
        return static_cast<int>(ExitCode::ok);
    });
}

struct StatsOptions {
    std::optional<std::string> cipher_path;
    std::optional<std::string> crib_path;
    std::vector<std::string> rewrite_rules;
    bool check_calendar = false;
};

/// Prints corpus and crib counts. With check_calendar, also compares the
/// corpus against the Calendar reference counts and reports every
/// mismatch; a mismatch yields ExitCode::check_failed.
inline int stats_command(const StatsOptions& opts, std::ostream& out, std::ostream& err = std::cerr)
{
    return detail::guarded(err, [&] {
        if (!opts.cipher_path && !opts.crib_path) {
            throw InvalidParams("stats needs --cipher and/or --crib");
        }
        if (opts.check_calendar && !opts.cipher_path) {
            throw InvalidParams("--check-calendar needs --cipher");
        }
        const auto rules = detail::parse_rules(opts.rewrite_rules);
        bool check_ok = true;
        if (opts.cipher_path) {
            const auto s = corpus_stats(load_corpus(read_file(*opts.cipher_path)));
            out << "cipher tokens: " << s.tokens << '\n'
                << "cipher types: " << s.types << '\n'
                << "cipher type characters: " << s.total_type_chars << '\n'
                << "cipher alphabet size: " << s.alphabet_size << '\n'
                << "cipher alphabet: " << s.alphabet << '\n';
            if (opts.check_calendar) {
                auto line = [&](const char* what, std::size_t got, std::size_t want) {
                    out << "calendar check " << what << ": " << got << " (expected " << want << ") "
                        << (got == want ? "ok" : "MISMATCH") << '\n';
                    check_ok = check_ok && got == want;
                };
                line("tokens", s.tokens, CalendarReference::tokens);
                line("types", s.types, CalendarReference::types);
                line("type characters", s.total_type_chars, CalendarReference::total_type_chars);
                line("alphabet size", s.alphabet_size, CalendarReference::alphabet_size);
            }
        }
        if (opts.crib_path) {
            const auto crib = load_crib(read_file(*opts.crib_path));
            out << "crib names: " << crib.size() << '\n'
                << "crib alphabet size: " << crib.alphabet().size() << '\n'
                << "crib alphabet: " << text::encode_utf8(crib.alphabet().as_text()) << '\n';
            if (!rules.empty()) {
                const auto expanded = expand_crib(crib, rules);
                out << "crib names after rewrite: " << expanded.size() << '\n'
                    << "crib alphabet size after rewrite: " << expanded.alphabet().size() << '\n';
            }
        }
        return static_cast<int>(check_ok ? ExitCode::ok : ExitCode::check_failed);
    });
}

} // namespace cribga
