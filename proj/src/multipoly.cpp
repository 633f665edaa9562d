#include "osculant/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace osculant {

Monomial Monomial::var(int i, int power) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index");
    Monomial m;
    m.e[static_cast<size_t>(i)] = static_cast<std::uint8_t>(power);
    m.degree = static_cast<std::uint16_t>(power);
    return m;
}

bool Monomial::divides(const Monomial& m) const {
    if (degree > m.degree) return false;
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] > m.e[i]) return false;
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
        r.e[i] = static_cast<std::uint8_t>(e[i] + m.e[i]);
    r.degree = static_cast<std::uint16_t>(degree + m.degree);
    return r;
}

Monomial Monomial::divided_by(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i)
        r.e[i] = static_cast<std::uint8_t>(e[i] - m.e[i]);
    r.degree = static_cast<std::uint16_t>(degree - m.degree);
    return r;
}

bool Monomial::coprime_with(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
        if (e[i] && m.e[i]) return false;
    return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
        r.e[i] = std::max(a.e[i], b.e[i]);
        deg += r.e[i];
    }
    r.degree = static_cast<std::uint16_t>(deg);
    return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (int i = kMaxVars - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

namespace {

bool term_desc(const Term& s, const Term& t) {
    return grevlex_less(t.mono, s.mono);
}

}  // namespace

MultiPoly::MultiPoly(int variable_count) : nvars_(variable_count) {
    if (variable_count < 0 || variable_count > kMaxVars)
        throw std::invalid_argument("variable count out of range");
}

MultiPoly MultiPoly::constant(int variable_count, const Rational& c) {
    MultiPoly p(variable_count);
    Rational cc = c;
    cc.canonicalize();  // mpq_class(num, den) is lazy
    if (sign(cc) != 0) p.terms_.push_back({Monomial::one(), std::move(cc)});
    return p;
}

MultiPoly MultiPoly::variable(int variable_count, int index) {
    if (index < 0 || index >= variable_count)
        throw std::out_of_range("variable index exceeds variable count");
    MultiPoly p(variable_count);
    p.terms_.push_back({Monomial::var(index), Rational(1)});
    return p;
}

MultiPoly MultiPoly::monomial(int variable_count, const Monomial& m,
                              const Rational& c) {
    MultiPoly p(variable_count);
    Rational cc = c;
    cc.canonicalize();
    if (sign(cc) != 0) p.terms_.push_back({m, std::move(cc)});
    return p;
}

MultiPoly MultiPoly::from_terms(int variable_count, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), term_desc);
    MultiPoly p(variable_count);
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (sign(p.terms_.back().coeff) == 0) p.terms_.pop_back();
        } else if (sign(t.coeff) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int MultiPoly::total_degree() const {
    return terms_.empty() ? -1 : terms_.front().mono.degree;
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return terms_.front();
}

Rational MultiPoly::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_) {
        if (t.mono == m) return t.coeff;
        if (grevlex_less(t.mono, m)) break;
    }
    return Rational(0);
}

void MultiPoly::assert_compatible(const MultiPoly& q) const {
    if (nvars_ != q.nvars_)
        throw std::invalid_argument("mismatched variable counts");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    assert_compatible(q);
    combine(Rational(1), Rational(-1), Monomial::one(), q);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
    assert_compatible(q);
    combine(Rational(1), Rational(1), Monomial::one(), q);
    return *this;
}

void MultiPoly::combine(const Rational& a, const Rational& b,
                        const Monomial& shift, const MultiPoly& q) {
    // Merge of two descending term streams; q's monomials are shifted on
    // the fly (monomial multiplication preserves grevlex order).
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    const bool scale_self = !(a == Rational(1));
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < q.terms_.size()) {
        const Monomial qm = q.terms_[j].mono.times(shift);
        if (terms_[i].mono == qm) {
            Rational c = scale_self ? Rational(a * terms_[i].coeff)
                                    : terms_[i].coeff;
            c -= b * q.terms_[j].coeff;
            if (sign(c) != 0) out.push_back({qm, std::move(c)});
            ++i, ++j;
        } else if (grevlex_less(qm, terms_[i].mono)) {
            out.push_back({terms_[i].mono,
                           scale_self ? Rational(a * terms_[i].coeff)
                                      : terms_[i].coeff});
            ++i;
        } else {
            Rational c = -(b * q.terms_[j].coeff);
            if (sign(c) != 0) out.push_back({qm, std::move(c)});
            ++j;
        }
    }
    for (; i < terms_.size(); ++i)
        out.push_back({terms_[i].mono, scale_self ? Rational(a * terms_[i].coeff)
                                                  : terms_[i].coeff});
    for (; j < q.terms_.size(); ++j) {
        Rational c = -(b * q.terms_[j].coeff);
        if (sign(c) != 0) out.push_back({q.terms_[j].mono.times(shift), std::move(c)});
    }
    terms_ = std::move(out);
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    p.assert_compatible(q);
    if (p.is_zero() || q.is_zero()) return MultiPoly(p.nvars_);
    // Accumulate into the smaller-times-larger merge: repeated combine is
    // O(terms(p) * terms(q)) coefficient operations, good enough at the
    // term counts seen here.
    const MultiPoly& small = p.term_count() <= q.term_count() ? p : q;
    const MultiPoly& large = p.term_count() <= q.term_count() ? q : p;
    MultiPoly acc(p.nvars_);
    for (const auto& t : small.terms_)
        acc.combine(Rational(1), -t.coeff, t.mono, large);
    return acc;
}

MultiPoly& MultiPoly::scale(const Rational& c) {
    if (sign(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluation point has wrong arity");
    std::vector<Rational> pt = point;
    for (auto& v : pt) v.canonicalize();  // mpq_class(num, den) is lazy
    // Per-variable power tables keep this linear in the term count.
    std::array<int, kMaxVars> maxe{};
    for (const auto& t : terms_)
        for (int i = 0; i < nvars_; ++i)
            maxe[i] = std::max<int>(maxe[i], t.mono.e[i]);
    std::vector<std::vector<Rational>> pow(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        pow[i].reserve(static_cast<size_t>(maxe[i]) + 1);
        pow[i].push_back(Rational(1));
        for (int k = 1; k <= maxe[i]; ++k) pow[i].push_back(pow[i].back() * pt[i]);
    }
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational prod = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            if (t.mono.e[i]) prod *= pow[i][t.mono.e[i]];
        acc += prod;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(int index, const Rational& value) const {
    if (index < 0 || index >= nvars_)
        throw std::out_of_range("substitution index");
    Rational v = value;
    v.canonicalize();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const int e = t.mono.e[index];
        Term nt = t;
        if (e) {
            nt.coeff *= rational_pow(v, static_cast<unsigned>(e));
            nt.mono.e[index] = 0;
            nt.mono.degree = static_cast<std::uint16_t>(nt.mono.degree - e);
        }
        if (sign(nt.coeff) != 0) out.push_back(std::move(nt));
    }
    return from_terms(nvars_, std::move(out));
}

MultiPoly& MultiPoly::make_primitive() {
    if (terms_.empty()) return *this;
    Integer den(1);
    for (const auto& t : terms_) den = lcm(den, Integer(t.coeff.get_den()));
    Integer num(0);
    for (const auto& t : terms_) {
        Integer scaled = t.coeff.get_num() * (den / t.coeff.get_den());
        num = gcd(num, scaled);
    }
    // num is the integer content of den * this (positive); scaling by
    // den/num normalizes. Sign fix afterwards.
    Rational factor(den, num);
    factor.canonicalize();
    if (sign(terms_.front().coeff) < 0) factor = -factor;
    for (auto& t : terms_) t.coeff *= factor;
    return *this;
}

bool MultiPoly::same_terms(const MultiPoly& q) const {
    if (terms_.size() != q.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == q.terms_[i].mono) ||
            terms_[i].coeff != q.terms_[i].coeff)
            return false;
    return true;
}

std::string MultiPoly::to_string() const {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(nvars_));
    for (int i = 1; i <= nvars_; ++i) names.push_back("x" + std::to_string(i));
    return to_string(names);
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
        throw std::invalid_argument("name list has wrong arity");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (first) {
            if (sign(t.coeff) < 0) os << "-";
            first = false;
        } else {
            os << (sign(t.coeff) < 0 ? " - " : " + ");
        }
        const Rational a = abs(t.coeff);
        std::string factors;
        for (int i = 0; i < nvars_; ++i) {
            if (!t.mono.e[i]) continue;
            if (!factors.empty()) factors += "*";
            factors += names[static_cast<size_t>(i)];
            if (t.mono.e[i] > 1) factors += "^" + std::to_string(t.mono.e[i]);
        }
        const bool unit = a == Rational(1);
        if (factors.empty()) {
            os << rational_to_string(a);
        } else if (unit) {
            os << factors;
        } else {
            os << rational_to_string(a) << "*" << factors;
        }
    }
    return os.str();
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.variable_count() != q.variable_count()) return false;
    if (p.term_count() != q.term_count()) return false;
    const Rational cp = p.leading_coeff();
    const Rational cq = q.leading_coeff();
    for (size_t i = 0; i < p.term_count(); ++i) {
        if (!(p.terms()[i].mono == q.terms()[i].mono)) return false;
        if (p.terms()[i].coeff * cq != q.terms()[i].coeff * cp) return false;
    }
    return true;
}

MultiPoly divide_exact(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    MultiPoly r = p;
    MultiPoly quot(p.variable_count());
    std::vector<Term> qterms;
    while (!r.is_zero()) {
        const Term& lt = r.leading_term();
        if (!q.leading_monomial().divides(lt.mono))
            throw std::domain_error("inexact polynomial division");
        const Monomial shift = lt.mono.divided_by(q.leading_monomial());
        Rational c = lt.coeff / q.leading_coeff();
        qterms.push_back({shift, c});
        r.combine(Rational(1), c, shift, q);
    }
    return MultiPoly::from_terms(p.variable_count(), std::move(qterms));
}

namespace detail {

namespace {

MultiPoly det_cofactor_rec(const std::vector<std::vector<MultiPoly>>& m,
                           std::vector<int> rows, std::vector<int> cols,
                           int nvars) {
    const size_t k = rows.size();
    if (k == 0) return MultiPoly::constant(nvars, Rational(1));
    if (k == 1) return m[rows[0]][cols[0]];

    // Expand along the row with the most zero entries.
    size_t best_r = 0, best_zeros = 0;
    for (size_t r = 0; r < k; ++r) {
        size_t z = 0;
        for (size_t c = 0; c < k; ++c)
            if (m[rows[r]][cols[c]].is_zero()) ++z;
        if (r == 0 || z > best_zeros) best_r = r, best_zeros = z;
    }
    std::vector<int> sub_rows;
    for (size_t r = 0; r < k; ++r)
        if (r != best_r) sub_rows.push_back(rows[r]);

    MultiPoly acc(nvars);
    for (size_t c = 0; c < k; ++c) {
        const MultiPoly& entry = m[rows[best_r]][cols[c]];
        if (entry.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t cc = 0; cc < k; ++cc)
            if (cc != c) sub_cols.push_back(cols[cc]);
        MultiPoly minor = det_cofactor_rec(m, sub_rows, sub_cols, nvars);
        MultiPoly piece = entry * minor;
        if ((best_r + c) % 2) acc -= piece; else acc += piece;
    }
    return acc;
}

}  // namespace

MultiPoly det_cofactor(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t k = m.size();
    const int nvars = m[0][0].variable_count();
    std::vector<int> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    return det_cofactor_rec(m, idx, idx, nvars);
}

MultiPoly det_bareiss(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t k = m.size();
    const int nvars = m[0][0].variable_count();
    std::vector<std::vector<MultiPoly>> a = m;
    MultiPoly prev = MultiPoly::constant(nvars, Rational(1));
    int sgn_flips = 0;
    for (size_t step = 0; step + 1 < k; ++step) {
        if (a[step][step].is_zero()) {
            size_t swap_row = step + 1;
            while (swap_row < k && a[swap_row][step].is_zero()) ++swap_row;
            if (swap_row == k) return MultiPoly(nvars);  // singular
            std::swap(a[step], a[swap_row]);
            ++sgn_flips;
        }
        const bool const_prev = prev.is_constant();
        const Rational prev_inv = const_prev ? Rational(1 / prev.leading_coeff())
                                             : Rational(1);
        for (size_t i = step + 1; i < k; ++i) {
            for (size_t j = step + 1; j < k; ++j) {
                MultiPoly num = a[step][step] * a[i][j] - a[i][step] * a[step][j];
                if (num.is_zero())
                    a[i][j] = std::move(num);
                else if (const_prev)
                    a[i][j] = std::move(num.scale(prev_inv));
                else
                    a[i][j] = divide_exact(num, prev);
            }
            a[i][step] = MultiPoly(nvars);
        }
        prev = a[step][step];
    }
    MultiPoly det = a[k - 1][k - 1];
    if (sgn_flips % 2) det.scale(Rational(-1));
    return det;
}

}  // namespace detail

MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t k = m.size();
    if (k == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
        if (row.size() != k) throw std::invalid_argument("matrix is not square");
    const int nvars = m[0][0].variable_count();
    for (const auto& row : m)
        for (const auto& entry : row)
            if (entry.variable_count() != nvars)
                throw std::invalid_argument("mismatched variable counts in matrix");
    return k <= 5 ? detail::det_cofactor(m) : detail::det_bareiss(m);
}

}  // namespace osculant
