// cribga: evolve substitution alphabets that map a cipher word list onto a
// plaintext name list (a "crib"), then compare and summarize runs.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cribga/experiment.hpp"

namespace {

using cribga::ExitCode;

std::vector<double> parse_weights(const std::string& s)
{
    std::vector<double> w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) {
            throw cribga::InvalidParams("bad length weight: " + item);
        }
        w.push_back(v);
    }
    return w;
}

/// Expands `--config FILE` (flat key=value lines, '#' comments) into flags
/// inserted ahead of the user's own. A key also given on the command line is
/// dropped, so flags always win. Boolean keys take true/false.
std::vector<std::string> expand_config(std::vector<std::string> args, const std::vector<std::string>& bool_keys)
{
    auto it = std::find_if(args.begin(), args.end(), [](const std::string& a) {
        return a == "--config" || a.rfind("--config=", 0) == 0;
    });
    if (it == args.end()) {
        return args;
    }
    std::string path;
    if (*it == "--config") {
        if (std::next(it) == args.end()) {
            throw cribga::InvalidParams("--config needs a file");
        }
        path = *std::next(it);
        args.erase(it, it + 2);
    } else {
        path = it->substr(std::string("--config=").size());
        args.erase(it);
    }

    auto given = [&](const std::string& key) {
        const std::string flag = "--" + key;
        return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    };

    std::vector<std::string> injected;
    std::istringstream in(cribga::read_file(path));
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw cribga::MalformedInput("config entry must be key=value", number);
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (given(key)) {
            continue;
        }
        if (std::find(bool_keys.begin(), bool_keys.end(), key) != bool_keys.end()) {
            if (value == "true" || value == "1") {
                injected.push_back("--" + key);
            } else if (value != "false" && value != "0") {
                throw cribga::MalformedInput("boolean config key '" + key + "' needs true or false", number);
            }
            continue;
        }
        injected.push_back("--" + key);
        injected.push_back(value);
    }
    // keep the subcommand name in front
    args.insert(args.begin() + 1, injected.begin(), injected.end());
    return args;
}

std::uint64_t time_seed()
{
    return static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Evolve substitution alphabets against a crib (plausible-plaintext attack)"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    // evolve
    cribga::ExperimentConfig cfg;
    std::optional<std::uint64_t> seed;
    std::size_t gene_max_len = 1;
    std::string length_weights;
    bool no_matches = false;
    auto* evolve = app.add_subcommand("evolve", "Run a batch of seeded evolutionary runs");
    evolve->add_option("--cipher", cfg.cipher_path, "Cipher token file, one token per line")->required();
    evolve->add_option("--crib", cfg.crib_path, "Crib file, one name per line")->required();
    evolve->add_option("--rewrite", cfg.rewrite_rules, "Crib suffix rewrite SUFFIX=REPLACEMENT (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    evolve->add_flag("--reverse", cfg.params.reverse, "Reverse every cipher token before decoding");
    evolve->add_option("--population", cfg.params.population_size, "Population size")->capture_default_str();
    evolve->add_option("--elite", cfg.params.elite_size, "Elite size")->capture_default_str();
    evolve->add_option("--mutation", cfg.params.mutation_rate, "Per-gene mutation probability")->capture_default_str();
    evolve->add_option("--generations", cfg.params.generations, "Generations per run")->capture_default_str();
    evolve->add_option("--runs", cfg.params.runs, "Independent runs")->capture_default_str();
    evolve->add_option("--seed", seed, "Master seed (run i uses seed+i); time-derived if omitted");
    evolve->add_option("--gene-max-len", gene_max_len, "Maximum gene length (multi-character substitutions)")
        ->capture_default_str();
    evolve->add_option("--length-weights", length_weights,
                       "Comma-separated probabilities of gene lengths 0..gene-max-len");
    evolve->add_option("--output,-o", cfg.output_dir, "Output directory")->capture_default_str();
    evolve->add_option("--parallel-runs", cfg.params.parallel_runs, "Runs executed concurrently")
        ->capture_default_str();
    evolve->add_option("--eval-threads", cfg.params.eval_threads, "Fitness evaluation threads per run")
        ->capture_default_str();
    evolve->add_flag("--no-matches", no_matches, "Do not write best_matches.tsv");
    evolve->add_flag("--verbose,-v", cfg.verbose, "Log one line per generation");

    // compare
    std::string runs_a;
    std::string runs_b;
    auto* compare = app.add_subcommand("compare", "Mann-Whitney U test between two runs.json batches");
    compare->add_option("runs_a", runs_a, "First runs.json")->required();
    compare->add_option("runs_b", runs_b, "Second runs.json")->required();

    // stats
    cribga::StatsOptions stats_opts;
    auto* stats = app.add_subcommand("stats", "Print corpus and crib statistics");
    stats->add_option("--cipher", stats_opts.cipher_path, "Cipher token file");
    stats->add_option("--crib", stats_opts.crib_path, "Crib file");
    stats->add_option("--rewrite", stats_opts.rewrite_rules, "Crib suffix rewrite SUFFIX=REPLACEMENT (repeatable)")
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    stats->add_flag("--check-calendar", stats_opts.check_calendar,
                    "Compare the cipher counts against the 290/264/2045/19 Calendar reference");

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        if (!args.empty() && args.front() == "evolve") {
            args = expand_config(args, {"reverse", "no-matches", "verbose"});
        }
    } catch (const cribga::InputNotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::missing_file);
    } catch (const cribga::MalformedInput& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return static_cast<int>(ExitCode::malformed_input);
    } catch (const cribga::InvalidParams& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(ExitCode::invalid_params);
    }
    std::reverse(args.begin(), args.end()); // CLI11 consumes a reversed vector

    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ExitCode::invalid_params);
    }

    if (evolve->parsed()) {
        try {
            cfg.params.gene_policy = length_weights.empty()
                ? cribga::GenePolicy::with_max_len(gene_max_len)
                : cribga::GenePolicy(gene_max_len, parse_weights(length_weights));
        } catch (const std::exception& e) {
            std::cerr << "error: invalid parameters: " << e.what() << '\n';
            return static_cast<int>(ExitCode::invalid_params);
        }
        cfg.params.seed = seed ? *seed : time_seed();
        cfg.write_matches = !no_matches;
        return cribga::run_experiment(cfg, std::cerr);
    }
    if (compare->parsed()) {
        return cribga::compare_experiments(runs_a, runs_b, std::cout, std::cerr);
    }
    return cribga::stats_command(stats_opts, std::cout, std::cerr);
}
