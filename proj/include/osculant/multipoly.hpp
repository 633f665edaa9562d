#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "osculant/rational.hpp"

namespace osculant {

// Hard cap on variable count; covers every flag manifold handled here
// (dim Fl(1,3,5;6) = 13) plus one slot for a symbolic curve parameter.
inline constexpr int kMaxVars = 14;

// Exponent vector with cached total degree.  Fixed-size so monomials are
// trivially copyable and comparisons stay branch-light.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};
    std::uint16_t degree = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial var(int i, int power = 1);

    bool is_one() const { return degree == 0; }
    int exponent(int i) const { return e[static_cast<size_t>(i)]; }

    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial divided_by(const Monomial& m) const;  // requires m.divides(*this)
    bool coprime_with(const Monomial& m) const;

    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree == b.degree && a.e == b.e;
    }
};

// Degree-reverse-lexicographic order: compare total degree first; on ties
// the monomial with the smaller exponent in the last differing variable
// is the larger one.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct Term {
    Monomial mono;
    Rational coeff;
};

// Sparse multivariate polynomial over Q.  Terms are kept sorted in
// descending grevlex order with nonzero coefficients, so the leading
// term is terms().front() and equality is structural.
class MultiPoly {
  public:
    MultiPoly() = default;
    explicit MultiPoly(int variable_count);

    static MultiPoly zero(int variable_count) { return MultiPoly(variable_count); }
    static MultiPoly constant(int variable_count, const Rational& c);
    static MultiPoly variable(int variable_count, int index);
    static MultiPoly monomial(int variable_count, const Monomial& m,
                              const Rational& c);
    // Sorts and merges arbitrary term lists.
    static MultiPoly from_terms(int variable_count, std::vector<Term> terms);

    int variable_count() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    int total_degree() const;  // -1 for the zero polynomial
    size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    Rational coeff_of(const Monomial& m) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);
    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);

    MultiPoly& scale(const Rational& c);  // c may be zero
    friend MultiPoly operator*(const Rational& c, MultiPoly p) {
        return std::move(p.scale(c));
    }

    // *this = a*(*this) - b*x^shift*q, the fused update used throughout
    // polynomial reduction.  a must be nonzero.
    void combine(const Rational& a, const Rational& b, const Monomial& shift,
                 const MultiPoly& q);

    Rational evaluate(const std::vector<Rational>& point) const;
    // Fixes variable `index` to `value`; the variable count is unchanged
    // (the slot simply no longer occurs).
    MultiPoly substitute(int index, const Rational& value) const;

    // Multiplies by the least common denominator, divides by the integer
    // content, and flips sign so the leading coefficient is positive.
    // Zero stays zero.  Returns *this.
    MultiPoly& make_primitive();

    // Canonical text form: terms in descending grevlex order, coefficients
    // as num/den, variables named x1..xN (or a caller-supplied name list).
    std::string to_string() const;
    std::string to_string(const std::vector<std::string>& names) const;

    friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
        return p.nvars_ == q.nvars_ && p.same_terms(q);
    }

  private:
    bool same_terms(const MultiPoly& q) const;
    void assert_compatible(const MultiPoly& q) const;

    int nvars_ = 0;
    std::vector<Term> terms_;
};

// True when p and q agree up to a nonzero rational scalar.
bool proportional(const MultiPoly& p, const MultiPoly& q);

// Exact determinant of a square matrix of polynomials.  Cofactor expansion
// along the sparsest row/column for size <= 5, fraction-free Bareiss
// elimination above; both paths give the identical polynomial.
MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& m);

// Exact quotient p / q; throws std::domain_error if q does not divide p.
MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q);

namespace detail {
MultiPoly det_cofactor(const std::vector<std::vector<MultiPoly>>& m);
MultiPoly det_bareiss(const std::vector<std::vector<MultiPoly>>& m);
}  // namespace detail

}  // namespace osculant
