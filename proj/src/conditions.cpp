#include "osculant/conditions.hpp"

#include <algorithm>
#include <stdexcept>

#include "osculant/osculating.hpp"

namespace osculant {

std::vector<RankCondition> condition_set(const Permutation& w, const FlagType& ft) {
    if (!in_wa(w, ft))
        throw std::invalid_argument("permutation " + w.to_string() +
                                    " is not in W^a for " + ft.to_string());
    std::vector<RankCondition> out;
    for (int ai : ft.a) {
        for (int j = 1; j <= ft.n; ++j) {
            const int r = rank_function(w, ai, j);
            if (r > std::max(0, ai + j - ft.n))
                out.push_back({ai, j, r, ai + j - r, ai + j - r + 1});
        }
    }
    return out;
}

namespace {

// Enumerate all size-k index subsets of {0..m-1} via callback.
template <typename F>
void for_each_subset(int m, int k, F&& fn) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        fn(idx);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<size_t>(pos)] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
    }
}

std::vector<MultiPoly> all_minors(const std::vector<std::vector<MultiPoly>>& stacked,
                                  int minor_size, int nvars) {
    const int rows = static_cast<int>(stacked.size());
    const int cols = static_cast<int>(stacked[0].size());
    if (minor_size > rows || minor_size > cols)
        throw std::invalid_argument("minor size exceeds matrix dimensions");
    std::vector<MultiPoly> out;
    for_each_subset(rows, minor_size, [&](const std::vector<int>& ri) {
        for_each_subset(cols, minor_size, [&](const std::vector<int>& ci) {
            std::vector<std::vector<MultiPoly>> sub(
                static_cast<size_t>(minor_size));
            for (int i = 0; i < minor_size; ++i) {
                auto& row = sub[static_cast<size_t>(i)];
                row.reserve(static_cast<size_t>(minor_size));
                for (int j = 0; j < minor_size; ++j)
                    row.push_back(stacked[static_cast<size_t>(ri[static_cast<size_t>(i)])]
                                         [static_cast<size_t>(ci[static_cast<size_t>(j)])]);
            }
            MultiPoly d = det_poly(sub);
            if (!d.is_zero()) out.push_back(std::move(d.make_primitive()));
        });
    });
    (void)nvars;
    return out;
}

}  // namespace

std::vector<MultiPoly> condition_polynomials(const RankCondition& c,
                                             const Rational& t,
                                             const CoordMatrix& pattern) {
    const int n = pattern.cols();
    if (c.block > pattern.rows())
        throw std::invalid_argument("condition block exceeds pattern rows");
    const int nvars = pattern.variable_count();
    std::vector<std::vector<MultiPoly>> stacked;
    stacked.reserve(static_cast<size_t>(c.block + c.osculation_order));
    for (int i = 1; i <= c.block; ++i)
        stacked.push_back(pattern.symbolic_row(i, nvars));
    const auto osc = osculating_matrix(t, c.osculation_order, n);
    for (const auto& row : osc) {
        std::vector<MultiPoly> prow;
        prow.reserve(static_cast<size_t>(n));
        for (const auto& v : row) prow.push_back(MultiPoly::constant(nvars, v));
        stacked.push_back(std::move(prow));
    }
    return all_minors(stacked, c.minor_size, nvars);
}

std::vector<MultiPoly> condition_polynomials_symbolic(const RankCondition& c,
                                                      const CoordMatrix& pattern) {
    const int n = pattern.cols();
    if (c.block > pattern.rows())
        throw std::invalid_argument("condition block exceeds pattern rows");
    const int nvars = pattern.variable_count() + 1;
    const int t_index = nvars - 1;
    std::vector<std::vector<MultiPoly>> stacked;
    stacked.reserve(static_cast<size_t>(c.block + c.osculation_order));
    for (int i = 1; i <= c.block; ++i)
        stacked.push_back(pattern.symbolic_row(i, nvars));
    auto osc = osculating_matrix_symbolic(t_index, nvars, c.osculation_order, n);
    for (auto& row : osc) stacked.push_back(std::move(row));
    return all_minors(stacked, c.minor_size, nvars);
}

}  // namespace osculant
