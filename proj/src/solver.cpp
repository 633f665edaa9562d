#include "osculant/solver.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "osculant/linalg.hpp"
#include "osculant/rng.hpp"

namespace osculant {

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "Solved";
        case SolveStatus::NonTransverse: return "NonTransverse";
        case SolveStatus::EliminantFailed: return "EliminantFailed";
        case SolveStatus::PositiveDimensional: return "PositiveDimensional";
        case SolveStatus::Inconsistent: return "Inconsistent";
        case SolveStatus::ExhaustedBudget: return "ExhaustedBudget";
    }
    return "?";
}

std::string SolveResult::summary() const {
    std::ostringstream os;
    os << to_string(status);
    if (quotient_dim) os << " dim=" << *quotient_dim;
    if (eliminant) os << " elim_deg=" << eliminant->degree();
    if (real_count) os << " real=" << *real_count;
    os << " steps=" << groebner_steps;
    return os.str();
}

EliminantResult eliminant(const GroebnerBasis& gb, std::uint64_t seed) {
    if (!gb.complete) throw std::invalid_argument("incomplete Groebner basis");
    const auto dim = quotient_dimension(gb);
    if (!dim) throw std::invalid_argument("positive-dimensional ideal");
    const long D = *dim;
    if (D < 1) throw std::invalid_argument("unit ideal has no eliminant");
    const int nvars = gb.generators.front().variable_count();

    const std::vector<Monomial> sm = standard_monomials(gb);
    std::map<Monomial, size_t, decltype(&grevlex_less)> index(&grevlex_less);
    for (size_t i = 0; i < sm.size(); ++i) index.emplace(sm[i], i);

    const auto coords = [&](const MultiPoly& nf) {
        std::vector<Rational> v(sm.size(), Rational(0));
        for (const auto& t : nf.terms()) {
            const auto it = index.find(t.mono);
            if (it == index.end())
                throw std::logic_error("normal form left the standard basis");
            v[it->second] = t.coeff;
        }
        return v;
    };

    EliminantResult best;
    for (int attempt = 0; attempt < kEliminantRetryCap; ++attempt) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        std::vector<long long> form(static_cast<size_t>(nvars), 0);
        bool nonzero = false;
        while (!nonzero) {
            for (auto& c : form) {
                c = rng.uniform(-9, 9);
                nonzero = nonzero || c != 0;
            }
        }
        std::vector<Term> lam_terms;
        for (int i = 0; i < nvars; ++i)
            if (form[static_cast<size_t>(i)] != 0)
                lam_terms.push_back({Monomial::var(i),
                                     Rational(static_cast<long>(form[static_cast<size_t>(i)]))});
        const MultiPoly lambda = MultiPoly::from_terms(nvars, std::move(lam_terms));

        DependenceTracker tracker(sm.size());
        MultiPoly power = MultiPoly::constant(nvars, Rational(1));  // lambda^0 mod I
        std::optional<Dependence> dep;
        for (long k = 0; k <= D; ++k) {
            dep = tracker.add(coords(power));
            if (dep) break;
            power = normal_form(power * lambda, gb.generators);
        }
        if (!dep) throw std::logic_error("no dependence within quotient dimension");

        // dep->coeffs has length d+1 with final entry -1:
        // sum_{i<d} c_i lambda^i - lambda^d = 0, so the monic minimal
        // polynomial is lambda^d - sum c_i lambda^i.
        std::vector<Rational> mono_coeffs(dep->coeffs.size(), Rational(0));
        for (size_t i = 0; i + 1 < dep->coeffs.size(); ++i)
            mono_coeffs[i] = -dep->coeffs[i];
        mono_coeffs.back() = Rational(1);
        UniPoly minpoly{std::move(mono_coeffs)};

        if (minpoly.degree() == D) {
            return EliminantResult{std::move(minpoly), std::move(form), true};
        }
        if (attempt == 0 || minpoly.degree() > best.minimal_polynomial.degree()) {
            best = EliminantResult{std::move(minpoly), std::move(form), false};
        }
    }
    return best;
}

SolveResult solve_system(const std::vector<MultiPoly>& generators,
                         std::optional<long> expected_degree,
                         std::uint64_t seed, long step_budget) {
    if (generators.empty())
        throw std::invalid_argument("cannot solve an empty system");

    SolveResult res;
    const GroebnerBasis gb = groebner(generators, step_budget);
    res.groebner_steps = gb.steps;
    if (!gb.complete) {
        res.status = SolveStatus::ExhaustedBudget;
        return res;
    }
    if (gb.is_unit_ideal()) {
        res.status = SolveStatus::Inconsistent;
        res.quotient_dim = 0;
        return res;
    }
    const auto dim = quotient_dimension(gb);
    if (!dim) {
        res.status = SolveStatus::PositiveDimensional;
        return res;
    }
    res.quotient_dim = *dim;
    if (expected_degree && *dim != *expected_degree) {
        res.status = SolveStatus::NonTransverse;
        return res;
    }

    const EliminantResult el = eliminant(gb, seed);
    res.eliminant = el.minimal_polynomial;
    if (!el.shape_position) {
        res.status = SolveStatus::EliminantFailed;
        return res;
    }
    const UniPoly sf = squarefree_part(el.minimal_polynomial);
    if (sf.degree() != el.minimal_polynomial.degree()) {
        res.status = SolveStatus::NonTransverse;
        return res;
    }
    res.real_count = sturm_count(el.minimal_polynomial);
    res.status = SolveStatus::Solved;
    return res;
}

SolveResult solve_instance(const Instance& inst,
                           std::optional<long> expected_degree,
                           std::uint64_t seed, long step_budget) {
    return solve_system(inst.generators, expected_degree, seed, step_budget);
}

}  // namespace osculant
