#pragma once

#include <string>
#include <vector>

#include "osculant/rational.hpp"

namespace osculant {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Invariant: no trailing zero coefficient (the zero polynomial is empty).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const Rational& c);
    static UniPoly monomial(int degree, const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const;  // 0 outside stored range
    const Rational& leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    UniPoly& scale(const Rational& c);

    Rational evaluate(const Rational& x) const;
    std::string to_string(const std::string& var = "x") const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

  private:
    void trim();
    std::vector<Rational> c_;
};

UniPoly derivative(const UniPoly& p);

// Integer-primitive form with positive leading coefficient (zero unchanged).
UniPoly primitive_part(UniPoly p);

// gcd via the primitive remainder sequence; result primitive, positive lc.
// gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// p / gcd(p, p'), primitive with positive leading coefficient.
// Throws std::invalid_argument on the zero polynomial.
UniPoly squarefree_part(const UniPoly& p);

// Number of distinct real roots of a square-free p over the whole line,
// by Sturm's theorem with signs at -inf/+inf read off leading coefficients.
// Throws std::invalid_argument on the zero polynomial.
int sturm_count(const UniPoly& p);

// Roots in the half-open interval (lo, hi]; requires lo < hi.
int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi);

}  // namespace osculant
