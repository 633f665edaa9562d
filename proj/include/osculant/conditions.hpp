#pragma once

#include <vector>

#include "osculant/multipoly.hpp"
#include "osculant/pattern.hpp"
#include "osculant/permutation.hpp"
#include "osculant/rational.hpp"

namespace osculant {

// One essential rank condition "dim E_{a_i} cap F_j >= r" of a Schubert
// variety: equivalently rank(A) <= a_i + j - r for the stacked matrix A,
// i.e. all minors of A of size 1 + a_i + j - r vanish.
struct RankCondition {
    int block;           // a_i
    int osculation_order;  // j
    int required_dim;    // r = r_w(a_i, j)
    int rank_bound;      // a_i + j - r
    int minor_size;      // rank_bound + 1

    friend bool operator==(const RankCondition&, const RankCondition&) = default;
};

// The non-automatic conditions of w: pairs (a_i, j) with
// r_w(a_i, j) > max(0, a_i + j - n).  No further pruning.
std::vector<RankCondition> condition_set(const Permutation& w, const FlagType& ft);

// All minors of size c.minor_size of the matrix obtained by stacking the
// first c.block rows of `pattern` (which must be M_iota for the governing
// flag type) on top of osculating_matrix(t, c.osculation_order, n).
// Each minor is normalized primitive with positive leading coefficient;
// identically-zero minors are dropped.
std::vector<MultiPoly> condition_polynomials(const RankCondition& c,
                                             const Rational& t,
                                             const CoordMatrix& pattern);

// Same construction with t symbolic: polynomials in pattern.variable_count()+1
// variables, t at the last index.
std::vector<MultiPoly> condition_polynomials_symbolic(const RankCondition& c,
                                                      const CoordMatrix& pattern);

}  // namespace osculant
