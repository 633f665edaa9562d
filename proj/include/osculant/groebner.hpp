#pragma once

#include <optional>
#include <vector>

#include "osculant/multipoly.hpp"

namespace osculant {

// Unit of work: one term cancellation during polynomial reduction.
inline constexpr long kDefaultGroebnerBudget = 50'000'000;

// Reduced Groebner basis under grevlex.  Generators are primitive with
// positive leading coefficients, sorted by increasing leading monomial, so
// the representation is canonical (unique for the ideal).
struct GroebnerBasis {
    std::vector<MultiPoly> generators;
    bool complete = true;  // false: the step budget ran out mid-computation
    long steps = 0;

    bool is_unit_ideal() const {
        return generators.size() == 1 && generators.front().is_constant() &&
               !generators.front().is_zero();
    }
};

// Buchberger with normal (minimal-lcm) pair selection, the product and
// chain criteria, and fraction-free reduction.  Deterministic; permuting
// the input yields the identical basis.
GroebnerBasis groebner(const std::vector<MultiPoly>& generators,
                       long step_budget = kDefaultGroebnerBudget);

// Unique remainder of p modulo the (Groebner) basis: no term of the result
// is divisible by any leading monomial of the basis.  Exact rational
// arithmetic, so normal_form(p) - p lies in the ideal.
MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis);

// Count of standard monomials when the quotient is finite-dimensional
// (every variable has a pure-power leading term), nullopt otherwise.
std::optional<long> quotient_dimension(const GroebnerBasis& gb);

// The standard monomials themselves, ascending grevlex; requires a
// finite-dimensional quotient.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb);

}  // namespace osculant
