#pragma once

#include <vector>

#include "osculant/multipoly.hpp"
#include "osculant/permutation.hpp"

namespace osculant {

enum class EntryKind { Zero, One, Variable };

struct PatternEntry {
    EntryKind kind = EntryKind::Zero;
    int var = -1;  // 0-based variable index when kind == Variable
};

// Coordinate pattern M_w: an a_k x n matrix whose row span sweeps out the
// Schubert cell of w as the free entries run over all values.
class CoordMatrix {
  public:
    CoordMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          entries_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int variable_count() const { return variable_count_; }

    const PatternEntry& entry(int i, int j) const {  // 1-based
        return entries_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
    }

    // Row i as polynomials in `total_vars` variables (>= variable_count).
    std::vector<MultiPoly> symbolic_row(int i, int total_vars) const;

    // Row i with the free entries filled in from `values` (one Rational per
    // pattern variable, in variable order).
    std::vector<Rational> numeric_row(int i, const std::vector<Rational>& values) const;

    std::string to_string() const;

  private:
    friend CoordMatrix coordinate_pattern(const Permutation& w, const FlagType& ft);
    PatternEntry& at(int i, int j) {
        return entries_[static_cast<size_t>(i - 1) * cols_ + (j - 1)];
    }

    int rows_, cols_;
    int variable_count_ = 0;
    std::vector<PatternEntry> entries_;
};

// The pattern M_w: entry (i, w(i)) is One; Zero where j < w(i), or
// w^-1(j) < i, or a_l < i < w^-1(j) <= a_{l+1} for some l; every other
// entry is a free variable, numbered row-major.  Free entries number
// dim(a) - length(w).  Throws if w is not in W^a.
CoordMatrix coordinate_pattern(const Permutation& w, const FlagType& ft);

}  // namespace osculant
