#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osculant/instance.hpp"
#include "osculant/rng.hpp"
#include "osculant/solver.hpp"

namespace osculant {

struct ExperimentConfig {
    FlagType flag_type;
    // Condition with repetition count, order preserved.
    std::vector<std::pair<Permutation, int>> schubert_data;
    long expected_degree = 0;
    long iterations = 0;
    std::uint64_t seed = 0;
    int point_pool_size = 0;     // 0: one pool point per condition
    long sampling_range = 65536;  // points drawn from [-B..B] \ {0}
    std::string output_path;      // empty: in-memory only, no checkpoints
    int worker_count = 1;
    long step_budget = kDefaultGroebnerBudget;

    // The expanded condition list (each condition repeated `count` times).
    SchubertData expand() const;
    int condition_count() const;

    std::string to_json() const;
    static ExperimentConfig from_json(const std::string& text);
    static ExperimentConfig load(const std::string& path);

    // Everything except iterations must match for a checkpoint resume.
    bool resume_compatible(const ExperimentConfig& other) const;
};

struct NecklaceRow {
    std::map<int, long> counts;                   // real count -> occurrences
    long set_aside = 0;                           // non-Solved instances
    std::map<std::string, long> set_aside_statuses;
};

struct FrequencyTable {
    std::map<Necklace, NecklaceRow> rows;
    long degree = 0;
    long rounds_done = 0;
    long monotone_violations = 0;  // Solved monotone instances below degree

    long total_instances() const;
};

// `count` pairwise-distinct nonzero rationals drawn uniformly from
// {-B..B} \ {0}, sorted ascending.  Deterministic from the rng state.
std::vector<Rational> sample_points(int count, SplitMix64& rng, long range);

// The condition carrying the i-th label of the canonical necklace is
// evaluated at the i-th smallest point (same-label conditions are used in
// data order).  Throws if the label multisets disagree.
Instance assign_by_necklace(const Necklace& nk, const SchubertData& sd,
                            const std::vector<Rational>& points);

// The full protocol: per round, draw a pool of points, select one subset
// shared by every necklace of the problem, solve one instance per necklace,
// tabulate Solved real counts and set-asides.  Checkpoints (CSV + sidecar
// state) are written after every round via write-then-rename; an existing
// compatible checkpoint at cfg.output_path is resumed.
FrequencyTable run_experiment(const ExperimentConfig& cfg);

enum class ReportFormat { Csv, Text };

// CSV: "necklace,<c>,...,set_aside" with real-count columns d mod 2 through
// d step 2; text: aligned table.  The monotone necklace row comes first,
// remaining rows lexicographic.
std::string report(const FrequencyTable& table, ReportFormat format);

// Reload a checkpoint's table from its sidecar state file.
FrequencyTable load_checkpoint_table(const std::string& csv_path);
std::optional<long> checkpoint_rounds_done(const std::string& csv_path);

}  // namespace osculant
