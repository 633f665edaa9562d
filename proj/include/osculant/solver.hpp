#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "osculant/groebner.hpp"
#include "osculant/instance.hpp"
#include "osculant/unipoly.hpp"

namespace osculant {

enum class SolveStatus {
    Solved,             // square-free eliminant, degree = quotient dim (= expected)
    NonTransverse,      // eliminant not square-free, or quotient dim != expected
    EliminantFailed,    // no shape-position linear form within the retry cap
    PositiveDimensional,
    Inconsistent,       // Groebner basis is {1}
    ExhaustedBudget,    // Groebner step budget ran out; no verdict
};

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::ExhaustedBudget;
    std::optional<long> quotient_dim;   // absent: infinite or unknown
    std::optional<UniPoly> eliminant;   // minimal polynomial of the used form
    std::optional<int> real_count;      // distinct real roots when Solved
    long groebner_steps = 0;

    std::string summary() const;
};

inline constexpr int kEliminantRetryCap = 5;

struct EliminantResult {
    UniPoly minimal_polynomial;
    std::vector<long long> form;  // coefficients of the linear form used
    bool shape_position = false;  // degree reached the quotient dimension
};

// Minimal polynomial of a seeded random linear form on the quotient ring:
// normal forms of its powers are tracked until the first exact linear
// dependence.  Retries with fresh coefficients up to kEliminantRetryCap
// when the degree falls short of the quotient dimension.
// Requires a complete basis with finite quotient dimension >= 1.
EliminantResult eliminant(const GroebnerBasis& gb, std::uint64_t seed);

// Full pipeline: Groebner -> quotient dimension -> eliminant -> square-free
// check -> Sturm count.
SolveResult solve_system(const std::vector<MultiPoly>& generators,
                         std::optional<long> expected_degree,
                         std::uint64_t seed = 0,
                         long step_budget = kDefaultGroebnerBudget);

SolveResult solve_instance(const Instance& inst,
                           std::optional<long> expected_degree,
                           std::uint64_t seed = 0,
                           long step_budget = kDefaultGroebnerBudget);

}  // namespace osculant
