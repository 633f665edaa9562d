#pragma once

#include <vector>

#include "osculant/multipoly.hpp"
#include "osculant/rational.hpp"

namespace osculant {

// The moment curve gamma(t) = (t^{n-1}, ..., t, 1).  Row i (1-based) of the
// osculating matrix is the (i-1)-st derivative of gamma at t; the row span
// of the first j rows is the osculating subspace F_j(t).
std::vector<std::vector<Rational>> osculating_matrix(const Rational& t, int j, int n);

// Same rows with t left symbolic, as polynomials in `total_vars` variables
// with t sitting at index `t_index`.
std::vector<std::vector<MultiPoly>> osculating_matrix_symbolic(int t_index,
                                                               int total_vars,
                                                               int j, int n);

}  // namespace osculant
