#include "osculant/osculating.hpp"

#include <stdexcept>

namespace osculant {

namespace {

void check_args(int j, int n) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
    if (j < 1 || j > n) throw std::out_of_range("osculation order out of range");
}

// (p)(p-1)...(p-q+1) as an exact integer; q >= 0.
Integer falling_factorial(int p, int q) {
    Integer r(1);
    for (int s = 0; s < q; ++s) r *= (p - s);
    return r;
}

}  // namespace

std::vector<std::vector<Rational>> osculating_matrix(const Rational& t, int j, int n) {
    check_args(j, n);
    Rational tc = t;
    tc.canonicalize();  // mpq_class(num, den) arrives uncanonicalized
    std::vector<std::vector<Rational>> m(static_cast<size_t>(j));
    for (int r = 1; r <= j; ++r) {
        auto& row = m[static_cast<size_t>(r - 1)];
        row.reserve(static_cast<size_t>(n));
        for (int c = 1; c <= n; ++c) {
            const int p = n - c;        // gamma coordinate t^p
            const int e = p - (r - 1);  // exponent after differentiating
            if (e < 0) {
                row.emplace_back(0);
            } else {
                row.push_back(Rational(falling_factorial(p, r - 1)) *
                              rational_pow(tc, static_cast<unsigned>(e)));
            }
        }
    }
    return m;
}

std::vector<std::vector<MultiPoly>> osculating_matrix_symbolic(int t_index,
                                                               int total_vars,
                                                               int j, int n) {
    check_args(j, n);
    if (t_index < 0 || t_index >= total_vars)
        throw std::out_of_range("t index out of range");
    std::vector<std::vector<MultiPoly>> m(static_cast<size_t>(j));
    for (int r = 1; r <= j; ++r) {
        auto& row = m[static_cast<size_t>(r - 1)];
        row.reserve(static_cast<size_t>(n));
        for (int c = 1; c <= n; ++c) {
            const int p = n - c;
            const int e = p - (r - 1);
            if (e < 0) {
                row.push_back(MultiPoly::zero(total_vars));
            } else {
                row.push_back(MultiPoly::monomial(
                    total_vars, Monomial::var(t_index, e),
                    Rational(falling_factorial(p, r - 1))));
            }
        }
    }
    return m;
}

}  // namespace osculant
