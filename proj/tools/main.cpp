// Command-line front end: enumerate combinatorial data, compute degrees,
// run experiments, render checkpoints, and run the acceptance scenarios.
#include <algorithm>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "osculant/experiment.hpp"
#include "osculant/instance.hpp"
#include "osculant/permutation.hpp"
#include "osculant/solver.hpp"
#include "osculant/verify.hpp"

using namespace osculant;

namespace {

// "2,3;5" (or "2,3:5"): steps before the separator, ambient dimension after.
FlagType parse_flag_type(const std::string& text) {
    const size_t sep = text.find_first_of(";:");
    if (sep == std::string::npos)
        throw CLI::ValidationError("flag type must look like \"2,3;5\"");
    std::vector<int> steps;
    std::string head = text.substr(0, sep);
    for (size_t pos = 0; pos < head.size();) {
        size_t next = head.find(',', pos);
        if (next == std::string::npos) next = head.size();
        steps.push_back(std::stoi(head.substr(pos, next - pos)));
        pos = next + 1;
    }
    return FlagType(steps, std::stoi(text.substr(sep + 1)));
}

// "13245^4,12435^4": conditions with repetition counts.
std::vector<std::pair<Permutation, int>> parse_data(const std::string& text) {
    std::vector<std::pair<Permutation, int>> out;
    for (size_t pos = 0; pos < text.size();) {
        size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        std::string item = text.substr(pos, next - pos);
        int count = 1;
        if (const size_t caret = item.find('^'); caret != std::string::npos) {
            count = std::stoi(item.substr(caret + 1));
            item = item.substr(0, caret);
        }
        if (count < 1) throw CLI::ValidationError("repetition counts must be positive");
        out.emplace_back(Permutation::parse(item), count);
        pos = next + 1;
    }
    if (out.empty()) throw CLI::ValidationError("empty Schubert data");
    return out;
}

SchubertData expand_data(const FlagType& ft,
                         const std::vector<std::pair<Permutation, int>>& data) {
    SchubertData sd{ft, {}};
    for (const auto& [w, count] : data)
        for (int i = 0; i < count; ++i) sd.conditions.push_back(w);
    return sd;
}

int cmd_enumerate(const std::string& flag_text, const std::string& data_text) {
    const FlagType ft = parse_flag_type(flag_text);
    if (data_text.empty()) {
        for (const auto& w : enumerate_wa(ft)) {
            std::cout << w.to_string() << "  length " << length(w);
            const auto dd = descent_data(w);
            if (dd.delta) std::cout << "  descent " << *dd.delta;
            std::cout << "\n";
        }
        return 0;
    }
    SchubertData sd = expand_data(ft, parse_data(data_text));
    validate_schubert_data(sd);
    std::map<char, int> multiset;
    std::cout << "labels:";
    for (char c : condition_labels(sd)) {
        std::cout << ' ' << c;
        multiset[c] += 1;
    }
    std::cout << "\n";
    for (const auto& nk : enumerate_necklaces(multiset))
        std::cout << nk << (is_monotone(nk) ? "  (monotone)" : "") << "\n";
    return 0;
}

int cmd_degree(const std::string& flag_text, const std::string& data_text,
               std::uint64_t seed, long bound) {
    const FlagType ft = parse_flag_type(flag_text);
    SchubertData sd = expand_data(ft, parse_data(data_text));
    validate_schubert_data(sd);
    const bool all_special =
        std::all_of(sd.conditions.begin(), sd.conditions.end(),
                    [&](const Permutation& w) {
                        return special_condition(w, ft).has_value();
                    });
    if (all_special) {
        std::cout << chain_degree(sd) << "\n";
        return 0;
    }
    // No chain count available: solve one generic instance.
    SplitMix64 rng(seed);
    std::vector<Rational> pts =
        sample_points(static_cast<int>(sd.conditions.size()), rng, bound);
    SolveResult res = solve_instance(build_instance(sd, pts), std::nullopt,
                                     derive_seed(seed, 1));
    if (!res.quotient_dim) {
        std::cerr << "no quotient dimension: " << res.summary() << "\n";
        return 1;
    }
    std::cout << *res.quotient_dim << "\n";
    return 0;
}

int cmd_run(const std::string& config_path, std::optional<std::uint64_t> seed,
            std::optional<long> iterations, std::optional<int> workers,
            std::optional<std::string> output) {
    ExperimentConfig cfg = ExperimentConfig::load(config_path);
    if (seed) cfg.seed = *seed;
    if (iterations) cfg.iterations = *iterations;
    if (workers) cfg.worker_count = *workers;
    if (output) cfg.output_path = *output;
    FrequencyTable table = run_experiment(cfg);
    std::cout << report(table, ReportFormat::Text);
    if (table.monotone_violations > 0) {
        std::cerr << "monotone violations: " << table.monotone_violations << "\n";
        return 2;
    }
    return 0;
}

int cmd_verify(bool quick, std::optional<std::uint64_t> seed) {
    VerifyOptions opt;
    if (seed) opt.seed = *seed;
    if (quick) {
        opt.monotone_instances = 5;
        opt.counterexample_instances = 20;
        opt.nonreality_round_cap = 20;
        opt.full_reality_instances = 5;
        opt.witness_triples = 5;
        opt.gaps_rounds = 5;
    }
    bool all = true;
    for (const CriterionResult& r : run_all_criteria(opt)) {
        std::cout << "criterion " << r.index << " (" << r.name
                  << "): " << (r.passed ? "PASS" : "FAIL") << " — " << r.detail
                  << "\n";
        all = all && r.passed;
    }
    return all ? 0 : 1;
}

int cmd_report(const std::string& csv_path, const std::string& format) {
    FrequencyTable table = load_checkpoint_table(csv_path);
    std::cout << report(table,
                        format == "csv" ? ReportFormat::Csv : ReportFormat::Text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schubert intersection problems on flags osculating a rational normal curve"};
    app.require_subcommand(1);

    std::string flag_text, data_text, config_path, csv_path, format = "text";
    std::optional<std::uint64_t> seed_opt;
    std::optional<long> iterations_opt;
    std::optional<int> workers_opt;
    std::optional<std::string> output_opt;
    bool quick = false;

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List W^a for a flag type, or the necklaces of a problem");
    enumerate->add_option("--flag", flag_text, "flag type, e.g. \"2,3;5\"")
        ->required();
    enumerate->add_option("--data", data_text,
                          "Schubert data, e.g. \"13245^4,12435^4\"");

    CLI::App* degree = app.add_subcommand(
        "degree", "Degree of a problem (chain count, or one generic solve)");
    degree->add_option("--flag", flag_text, "flag type")->required();
    degree->add_option("--data", data_text, "Schubert data")->required();
    degree->add_option("--seed", seed_opt, "seed for the generic instance");
    long degree_bound = 16;
    degree->add_option("--bound", degree_bound, "point bound for the generic instance");

    CLI::App* run = app.add_subcommand("run", "Run an experiment from a config");
    run->add_option("--config", config_path, "JSON config path")->required();
    run->add_option("--seed", seed_opt, "override the config seed");
    run->add_option("--iterations", iterations_opt, "override the iteration count");
    run->add_option("--workers", workers_opt, "override the worker count");
    run->add_option("--output", output_opt, "override the checkpoint path");

    CLI::App* verify =
        app.add_subcommand("verify", "Run the built-in acceptance scenarios");
    verify->add_flag("--quick", quick, "reduced sizes for a fast sanity pass");
    verify->add_option("--seed", seed_opt, "scenario seed");

    CLI::App* rep = app.add_subcommand("report", "Render a checkpoint CSV");
    rep->add_option("checkpoint", csv_path, "checkpoint CSV path")->required();
    rep->add_option("--format", format, "text (default) or csv")
        ->check(CLI::IsMember({"text", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (enumerate->parsed()) return cmd_enumerate(flag_text, data_text);
        if (degree->parsed())
            return cmd_degree(flag_text, data_text, seed_opt.value_or(271828),
                              degree_bound);
        if (run->parsed())
            return cmd_run(config_path, seed_opt, iterations_opt, workers_opt,
                           output_opt);
        if (verify->parsed()) return cmd_verify(quick, seed_opt);
        if (rep->parsed()) return cmd_report(csv_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
