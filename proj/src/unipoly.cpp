#include "osculant/unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace osculant {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_) c.canonicalize();  // mpq_class(num, den) is lazy
    trim();
}

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (sign(c) != 0) p.c_.push_back(c);
    return p;
}

UniPoly UniPoly::monomial(int degree, const Rational& c) {
    UniPoly p;
    if (sign(c) != 0) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.c_.back() = c;
    }
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading_coeff() const {
    if (c_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) out[i] += q.c_[i];
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& p, const UniPoly& q) {
    std::vector<Rational> out(std::max(p.c_.size(), q.c_.size()), Rational(0));
    for (size_t i = 0; i < p.c_.size(); ++i) out[i] += p.c_[i];
    for (size_t i = 0; i < q.c_.size(); ++i) out[i] -= q.c_[i];
    return UniPoly(std::move(out));
}

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly();
    std::vector<Rational> out(p.c_.size() + q.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < p.c_.size(); ++i)
        for (size_t j = 0; j < q.c_.size(); ++j)
            out[i + j] += p.c_[i] * q.c_[j];
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::scale(const Rational& c) {
    if (sign(c) == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational xc = x;
    xc.canonicalize();  // mpq_class(num, den) is lazy
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * xc + *it;
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (sign(c) == 0) continue;
        if (first) {
            if (sign(c) < 0) os << "-";
            first = false;
        } else {
            os << (sign(c) < 0 ? " - " : " + ");
        }
        const Rational a = abs(c);
        if (i == 0) {
            os << rational_to_string(a);
        } else {
            if (!(a == Rational(1))) os << rational_to_string(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

UniPoly derivative(const UniPoly& p) {
    if (p.degree() < 1) return UniPoly();
    std::vector<Rational> out;
    out.reserve(static_cast<size_t>(p.degree()));
    for (int i = 1; i <= p.degree(); ++i) out.push_back(Rational(i) * p.coeff(i));
    return UniPoly(std::move(out));
}

UniPoly primitive_part(UniPoly p) {
    if (p.is_zero()) return p;
    Integer den(1);
    for (const auto& c : p.coeffs()) den = lcm(den, Integer(c.get_den()));
    Integer num(0);
    for (const auto& c : p.coeffs()) {
        if (sign(c) == 0) continue;
        num = gcd(num, Integer(c.get_num() * (den / c.get_den())));
    }
    Rational factor(den, num);
    factor.canonicalize();
    if (sign(p.leading_coeff()) < 0) factor = -factor;
    p.scale(factor);
    return p;
}

namespace {

// Exact remainder of a by b over Q (degree(b) >= 0).
UniPoly rational_remainder(UniPoly a, const UniPoly& b) {
    const int db = b.degree();
    while (a.degree() >= db && !a.is_zero()) {
        const Rational q = a.coeff(a.degree()) / b.leading_coeff();
        const int shift = a.degree() - db;
        std::vector<Rational> sub(a.coeffs());
        for (int i = 0; i <= db; ++i)
            sub[static_cast<size_t>(i + shift)] -= q * b.coeff(i);
        a = UniPoly(std::move(sub));
    }
    return a;
}

}  // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    a = primitive_part(std::move(a));
    b = primitive_part(std::move(b));
    while (!b.is_zero()) {
        UniPoly r = primitive_part(rational_remainder(std::move(a), b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free part of zero");
    if (p.degree() == 0) return UniPoly::constant(Rational(1));
    const UniPoly g = poly_gcd(p, derivative(p));
    UniPoly q = primitive_part(p);
    if (g.degree() > 0) {
        // Exact division p / g, coefficient-wise synthetic division.
        std::vector<Rational> rem(q.coeffs());
        const int dq = q.degree(), dg = g.degree();
        std::vector<Rational> quot(static_cast<size_t>(dq - dg) + 1, Rational(0));
        for (int i = dq; i >= dg; --i) {
            Rational c = rem[static_cast<size_t>(i)] / g.leading_coeff();
            quot[static_cast<size_t>(i - dg)] = c;
            if (sign(c) != 0)
                for (int j = 0; j <= dg; ++j)
                    rem[static_cast<size_t>(i - dg + j)] -= c * g.coeff(j);
        }
        q = UniPoly(std::move(quot));
    }
    return primitive_part(std::move(q));
}

namespace {

// Primitive up to a positive factor.  primitive_part itself normalizes the
// leading sign, which would erase exactly the information a Sturm chain
// carries; only positive scalings are admissible here.
UniPoly primitive_keep_sign(const UniPoly& q) {
    const int s = sign(q.leading_coeff());
    UniPoly r = primitive_part(q);
    if (s < 0) r.scale(Rational(-1));
    return r;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    std::vector<UniPoly> seq;
    seq.push_back(primitive_keep_sign(p));
    if (p.degree() >= 1) seq.push_back(primitive_keep_sign(derivative(p)));
    while (seq.size() >= 2 && !seq.back().is_zero() && seq.back().degree() >= 0) {
        const UniPoly& b = seq.back();
        const UniPoly& a = seq[seq.size() - 2];
        if (b.degree() == 0) break;
        UniPoly r = rational_remainder(a, b);
        if (r.is_zero()) break;
        seq.push_back(primitive_keep_sign(-r));
    }
    return seq;
}

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

int sturm_count(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm count of zero polynomial");
    if (p.degree() == 0) return 0;
    const auto seq = sturm_sequence(p);
    std::vector<int> at_minus, at_plus;
    at_minus.reserve(seq.size());
    at_plus.reserve(seq.size());
    for (const auto& q : seq) {
        const int lc = sign(q.leading_coeff());
        at_plus.push_back(lc);
        at_minus.push_back(q.degree() % 2 ? -lc : lc);
    }
    return variations(at_minus) - variations(at_plus);
}

int sturm_count(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("Sturm count of zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("empty interval");
    if (p.degree() == 0) return 0;
    const auto seq = sturm_sequence(p);
    std::vector<int> at_lo, at_hi;
    for (const auto& q : seq) {
        at_lo.push_back(sign(q.evaluate(lo)));
        at_hi.push_back(sign(q.evaluate(hi)));
    }
    return variations(at_lo) - variations(at_hi);
}

}  // namespace osculant
