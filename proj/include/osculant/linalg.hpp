#pragma once

#include <optional>
#include <vector>

#include "osculant/rational.hpp"

namespace osculant {

struct Dependence {
    size_t index;                  // first index whose prefix is dependent
    std::vector<Rational> coeffs;  // length index+1, last entry -1:
                                   // sum coeffs[i] * v_i = 0
};

// Incremental exact Gaussian elimination.  Feed vectors one at a time; the
// first vector lying in the span of its predecessors yields the dependence.
class DependenceTracker {
  public:
    explicit DependenceTracker(size_t dimension) : dim_(dimension) {}

    // Returns the dependence if v is in the span of the vectors added so
    // far (v is then NOT stored); otherwise stores the reduced vector.
    std::optional<Dependence> add(const std::vector<Rational>& v);

    size_t rank() const { return rows_.size(); }
    size_t added() const { return added_; }

  private:
    struct Row {
        std::vector<Rational> values;  // reduced, pivot normalized to 1
        size_t pivot;
        std::vector<Rational> combo;   // expression in the original vectors
    };
    size_t dim_;
    size_t added_ = 0;
    std::vector<Row> rows_;
};

// First index at which the prefix of `vectors` becomes linearly dependent,
// with exact coefficients, or nullopt if they are independent.
std::optional<Dependence> exact_dependence(
    const std::vector<std::vector<Rational>>& vectors);

// Exact rank by fraction-free Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> m);

}  // namespace osculant
