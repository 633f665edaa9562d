#include "osculant/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace osculant {

namespace {

// Fraction-free full reduction of p by the active elements of basis.
// Result is only defined up to a positive scalar; callers normalize.
// Returns false when the step budget runs out mid-reduction.
bool reduce_fraction_free(MultiPoly& p, const std::vector<MultiPoly>& basis,
                          const std::vector<bool>& active, long budget,
                          long& steps) {
    // Finished (irreducible) terms are set aside with the cumulative scale
    // current at emission time; trailing scalings are applied at the end.
    std::vector<Term> finished;
    std::vector<Integer> emitted_scale;
    Integer scale(1);

    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        const MultiPoly* reducer = nullptr;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!active[k]) continue;
            if (basis[k].leading_monomial().divides(lt.mono)) {
                reducer = &basis[k];
                break;
            }
        }
        if (!reducer) {
            finished.push_back(lt);
            emitted_scale.push_back(scale);
            std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
            p = MultiPoly::from_terms(p.variable_count(), std::move(tail));
            continue;
        }
        if (++steps > budget) return false;
        // gcd-trimmed fraction-free elimination keeps coefficients integral:
        // p <- (d/g)*p - (c/g)*shift*reducer with c = lc(p), d = lc(reducer).
        const Integer c = lt.coeff.get_num();
        const Integer d = reducer->leading_coeff().get_num();
        const Integer g = gcd(c, d);
        Rational a(d / g), b(c / g);
        if (sign(a) < 0) {
            a = -a;
            b = -b;
        }
        const Monomial shift = lt.mono.divided_by(reducer->leading_monomial());
        p.combine(a, b, shift, *reducer);
        if (!(a == Rational(1))) scale *= a.get_num();
    }

    for (size_t i = 0; i < finished.size(); ++i) {
        const Integer mult = scale / emitted_scale[i];
        if (mult != 1) finished[i].coeff *= Rational(mult);
    }
    p = MultiPoly::from_terms(p.variable_count(), std::move(finished));
    return true;
}

struct Pair {
    Monomial lcm;
    int i, j;
};

struct PairOrder {
    bool operator()(const Pair& a, const Pair& b) const {
        if (!(a.lcm == b.lcm)) return grevlex_less(a.lcm, b.lcm);
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

std::optional<std::vector<Monomial>> try_standard_monomials(
    const GroebnerBasis& gb) {
    if (gb.generators.empty()) return std::nullopt;
    if (gb.is_unit_ideal()) return std::vector<Monomial>{};
    const int nvars = gb.generators.front().variable_count();

    std::vector<Monomial> lts;
    lts.reserve(gb.generators.size());
    for (const auto& g : gb.generators)
        if (!g.is_zero()) lts.push_back(g.leading_monomial());

    // Finite quotient iff every variable carries a pure-power leading term.
    for (int v = 0; v < nvars; ++v) {
        bool pure = false;
        for (const auto& m : lts) {
            if (m.e[v] == 0 || m.degree != m.e[v]) continue;
            pure = true;
            break;
        }
        if (!pure) return std::nullopt;
    }

    const auto divisible = [&](const Monomial& m) {
        for (const auto& lt : lts)
            if (lt.divides(m)) return true;
        return false;
    };

    // DFS over the staircase; standard monomials form an order ideal, so
    // pruning at the first divisible exponent is exhaustive.
    std::vector<Monomial> out;
    Monomial cur;
    auto dfs = [&](auto&& self, int v) -> void {
        if (v == nvars) {
            out.push_back(cur);
            return;
        }
        const std::uint8_t saved_e = cur.e[v];
        const std::uint16_t saved_d = cur.degree;
        for (int e = 0;; ++e) {
            cur.e[v] = static_cast<std::uint8_t>(e);
            cur.degree = static_cast<std::uint16_t>(saved_d + e);
            if (divisible(cur)) break;
            self(self, v + 1);
        }
        cur.e[v] = saved_e;
        cur.degree = saved_d;
    };
    dfs(dfs, 0);
    std::sort(out.begin(), out.end(), grevlex_less);
    return out;
}

}  // namespace

GroebnerBasis groebner(const std::vector<MultiPoly>& generators, long step_budget) {
    if (generators.empty()) throw std::invalid_argument("empty generator list");
    const int nvars = generators.front().variable_count();
    for (const auto& g : generators)
        if (g.variable_count() != nvars)
            throw std::invalid_argument("mismatched variable counts");

    GroebnerBasis out;

    // Canonicalized, deduplicated working set.
    std::vector<MultiPoly> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue;
        MultiPoly h = g;
        h.make_primitive();
        basis.push_back(std::move(h));
    }
    std::sort(basis.begin(), basis.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                  if (!(a.leading_monomial() == b.leading_monomial()))
                      return grevlex_less(a.leading_monomial(), b.leading_monomial());
                  return a.term_count() < b.term_count();
              });
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    if (basis.empty()) {
        out.generators.push_back(MultiPoly(nvars));
        return out;
    }

    std::vector<bool> active(basis.size(), true);
    std::set<Pair, PairOrder> pending;
    auto lm = [&](int k) -> const Monomial& {
        return basis[static_cast<size_t>(k)].leading_monomial();
    };
    auto queue_pairs_for = [&](int t) {
        for (int k = 0; k < t; ++k)
            pending.insert(Pair{Monomial::lcm(lm(k), lm(t)), k, t});
    };
    for (size_t t = 1; t < basis.size(); ++t)
        queue_pairs_for(static_cast<int>(t));

    while (!pending.empty()) {
        const Pair pr = *pending.begin();
        pending.erase(pending.begin());

        // Product criterion: coprime leading monomials reduce to zero.
        if (lm(pr.i).coprime_with(lm(pr.j))) continue;
        // Chain criterion, sound under minimal-lcm selection: a third
        // element divides the lcm and both sub-lcms are strictly smaller.
        bool superfluous = false;
        for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lm(k).divides(pr.lcm)) continue;
            if (Monomial::lcm(lm(pr.i), lm(k)) == pr.lcm) continue;
            if (Monomial::lcm(lm(pr.j), lm(k)) == pr.lcm) continue;
            superfluous = true;
            break;
        }
        if (superfluous) continue;

        // Fraction-free S-polynomial:
        // (cj/g) * shift_i * p_i - (ci/g) * shift_j * p_j.
        const Integer ci = basis[static_cast<size_t>(pr.i)].leading_coeff().get_num();
        const Integer cj = basis[static_cast<size_t>(pr.j)].leading_coeff().get_num();
        const Integer g = gcd(ci, cj);
        MultiPoly spoly(nvars);
        spoly.combine(Rational(1), Rational(-(cj / g)),
                      pr.lcm.divided_by(lm(pr.i)), basis[static_cast<size_t>(pr.i)]);
        spoly.combine(Rational(1), Rational(ci / g),
                      pr.lcm.divided_by(lm(pr.j)), basis[static_cast<size_t>(pr.j)]);

        if (++out.steps > step_budget ||
            !reduce_fraction_free(spoly, basis, active, step_budget, out.steps)) {
            out.complete = false;
            break;
        }
        if (spoly.is_zero()) continue;

        spoly.make_primitive();
        const int t = static_cast<int>(basis.size());
        basis.push_back(std::move(spoly));
        active.push_back(true);
        // Strict multiples of the new leading monomial stop acting as
        // reducers; their queued pairs stay valid.
        for (int k = 0; k < t; ++k)
            if (active[static_cast<size_t>(k)] && lm(t).divides(lm(k)) &&
                !(lm(k) == lm(t)))
                active[static_cast<size_t>(k)] = false;
        queue_pairs_for(t);
    }

    // Minimal basis: drop elements whose leading monomial another element
    // strictly divides (for equal leading monomials keep the first).
    std::vector<MultiPoly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < basis.size() && keep; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (!mj.divides(mi)) continue;
            if (mj == mi) {
                if (j < i) keep = false;
            } else {
                keep = false;
            }
        }
        if (keep) minimal.push_back(basis[i]);
    }

    // Inter-reduce tails for the reduced basis.
    std::vector<MultiPoly> reduced;
    reduced.reserve(minimal.size());
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        others.reserve(minimal.size() - 1);
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others);
        r.make_primitive();
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const MultiPoly& a, const MultiPoly& b) {
                  return grevlex_less(a.leading_monomial(), b.leading_monomial());
              });
    out.generators = std::move(reduced);
    return out;
}

MultiPoly normal_form(MultiPoly p, const std::vector<MultiPoly>& basis) {
    if (basis.empty()) return p;
    const int nvars = p.variable_count();
    std::vector<Term> finished;
    while (!p.is_zero()) {
        const Term& lt = p.leading_term();
        const MultiPoly* reducer = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(lt.mono)) {
                reducer = &g;
                break;
            }
        }
        if (!reducer) {
            finished.push_back(lt);
            std::vector<Term> tail(p.terms().begin() + 1, p.terms().end());
            p = MultiPoly::from_terms(nvars, std::move(tail));
            continue;
        }
        const Monomial shift = lt.mono.divided_by(reducer->leading_monomial());
        const Rational b = lt.coeff / reducer->leading_coeff();
        p.combine(Rational(1), b, shift, *reducer);
    }
    return MultiPoly::from_terms(nvars, std::move(finished));
}

std::optional<long> quotient_dimension(const GroebnerBasis& gb) {
    const auto sm = try_standard_monomials(gb);
    if (!sm) return std::nullopt;
    return static_cast<long>(sm->size());
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb) {
    auto sm = try_standard_monomials(gb);
    if (!sm) throw std::invalid_argument("quotient is not finite-dimensional");
    return std::move(*sm);
}

}  // namespace osculant
