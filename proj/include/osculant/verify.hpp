#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace osculant {

// Size knobs for the built-in acceptance scenarios.  The defaults are the
// shipped acceptance sizes; smaller values make quick smoke runs.
struct VerifyOptions {
    std::uint64_t seed = 271828;
    int monotone_instances = 100;
    int counterexample_instances = 100;
    int counterexample_search_cap = 500;
    int nonreality_round_cap = 200;
    int full_reality_instances = 50;
    int witness_triples = 20;
    int witness_pairs = 10;
    long gaps_rounds = 100;
    // Point bound for the scenario samplers.  Small points keep exact
    // coefficients small; every scenario only needs distinct nonzero values.
    long sampling_bound = 16;
    // The interleaved zero-real search benefits from a wider spread.
    long search_bound = 1000;
};

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string detail;  // counters, or the first observed failure
};

// Scenario 1: the monotone necklace of (13245^4, 12435^4) on Fl(2,3;5)
// always gives 12 real solutions out of 12.
CriterionResult criterion_monotone_reality(const VerifyOptions& opt);

// Scenario 2: ((1324)^3, (1243)^2) on Fl(2,3;4) -- disjoint intervals give
// 2 real solutions; some interleaved configuration gives 0.
CriterionResult criterion_counterexample(const VerifyOptions& opt);

// Scenario 3: the alternating necklace 23232323 of the degree-12 problem
// records an instance with fewer than 12 real solutions.
CriterionResult criterion_nonmonotone_nonreality(const VerifyOptions& opt);

// Scenario 4: (142536^4) on Fl(2,4;6) always has all 6 solutions real.
CriterionResult criterion_full_reality(const VerifyOptions& opt);

// Scenario 5: the overdetermined data (32514, 21435, 21435) on Fl(1,3;5) is
// never inconsistent, and the explicit witness flag passes membership.
CriterionResult criterion_witness(const VerifyOptions& opt);

// Scenario 6: chain-count and solver degrees across four problems.
CriterionResult criterion_degrees(const VerifyOptions& opt);

// Scenario 7: every Solved real count of (312564^2, 124356^5) lies in
// {2, 6, 10}.
CriterionResult criterion_gaps(const VerifyOptions& opt);

// Scenario 8: condensed property sweep (algebra, combinatorics, solver,
// harness).  The unit suites cover the same ground in more depth.
CriterionResult criterion_properties(const VerifyOptions& opt);

// All eight, in order.
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt = {});

}  // namespace osculant
