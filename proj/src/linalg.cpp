#include "osculant/linalg.hpp"

#include <stdexcept>

namespace osculant {

std::optional<Dependence> DependenceTracker::add(const std::vector<Rational>& v) {
    if (v.size() != dim_) throw std::invalid_argument("vector has wrong dimension");
    std::vector<Rational> work = v;
    std::vector<Rational> combo(added_ + 1, Rational(0));
    combo.back() = Rational(1);

    for (const Row& row : rows_) {
        const Rational& c = work[row.pivot];
        if (sign(c) == 0) continue;
        const Rational factor = c;  // row pivot is normalized to 1
        for (size_t j = 0; j < dim_; ++j) work[j] -= factor * row.values[j];
        for (size_t j = 0; j < row.combo.size(); ++j)
            combo[j] -= factor * row.combo[j];
    }

    size_t pivot = dim_;
    for (size_t j = 0; j < dim_; ++j) {
        if (sign(work[j]) != 0) {
            pivot = j;
            break;
        }
    }

    if (pivot == dim_) {
        // work == 0: combo expresses 0 = v - sum(prev), with coefficient 1
        // on v.  Flip so the last coefficient is -1.
        for (auto& c : combo) c = -c;
        Dependence dep{added_, std::move(combo)};
        ++added_;
        return dep;
    }

    const Rational inv = Rational(1) / work[pivot];
    for (auto& x : work) x *= inv;
    for (auto& c : combo) c *= inv;
    rows_.push_back(Row{std::move(work), pivot, std::move(combo)});
    ++added_;
    return std::nullopt;
}

std::optional<Dependence> exact_dependence(
    const std::vector<std::vector<Rational>>& vectors) {
    if (vectors.empty()) return std::nullopt;
    DependenceTracker tracker(vectors.front().size());
    for (const auto& v : vectors) {
        if (auto dep = tracker.add(v)) return dep;
    }
    return std::nullopt;
}

int matrix_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && sign(m[piv][c]) == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (sign(m[i][c]) == 0) continue;
            const Rational f = m[i][c] / m[r][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

}  // namespace osculant
