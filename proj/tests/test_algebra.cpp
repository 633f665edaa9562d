#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "osculant/linalg.hpp"
#include "osculant/multipoly.hpp"
#include "osculant/rational.hpp"
#include "osculant/rng.hpp"
#include "osculant/unipoly.hpp"

using namespace osculant;

namespace {

Rational rat(long num, long den = 1) { return Rational(num, den); }

UniPoly upoly(std::initializer_list<long> coeffs) {
    std::vector<Rational> c;
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

// x - root
UniPoly linear(const Rational& root) { return UniPoly({-root, Rational(1)}); }

Monomial mono(std::initializer_list<std::pair<int, int>> powers) {
    Monomial m;
    for (const auto& [var, pow] : powers) m = m.times(Monomial::var(var, pow));
    return m;
}

MultiPoly random_poly(SplitMix64& rng, int vars, int terms, int max_power) {
    MultiPoly p = MultiPoly::zero(vars);
    for (int i = 0; i < terms; ++i) {
        Monomial m;
        for (int v = 0; v < vars; ++v) {
            const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_power + 1)));
            if (e > 0) m = m.times(Monomial::var(v, e));
        }
        const long c = rng.uniform(-9, 9);
        if (c != 0) p += MultiPoly::monomial(vars, m, Rational(c));
    }
    return p;
}

// Term-by-term product, an oracle for operator*.
MultiPoly naive_product(const MultiPoly& p, const MultiPoly& q, int vars) {
    MultiPoly out = MultiPoly::zero(vars);
    for (const auto& a : p.terms())
        for (const auto& b : q.terms())
            out += MultiPoly::monomial(vars, a.mono.times(b.mono), a.coeff * b.coeff);
    return out;
}

std::vector<Rational> random_point(SplitMix64& rng, int vars) {
    std::vector<Rational> point;
    for (int v = 0; v < vars; ++v) point.emplace_back(static_cast<long>(rng.uniform(-7, 7)));
    return point;
}

}  // namespace

TEST_CASE("rational helpers keep values canonical") {
    CHECK(rational_from_string("14/4") == rat(7, 2));
    CHECK(rational_from_string("-6/3") == rat(-2));
    CHECK(rational_to_string(rat(-3)) == "-3");
    CHECK(rational_to_string(rat(7, 2)) == "7/2");
    CHECK(rational_to_string(rat(0)) == "0");
    CHECK(rational_pow(rat(2, 3), 5) == rat(32, 243));
    CHECK(rational_pow(rat(-2), 3) == rat(-8));
    CHECK(rational_pow(rat(5), 0) == rat(1));
    CHECK(sign(rat(-7, 3)) == -1);
    CHECK(sign(rat(0)) == 0);
}

TEST_CASE("grevlex compares degree first, then the last difference") {
    const Monomial one = Monomial::one();
    const Monomial x = Monomial::var(0);
    const Monomial y = Monomial::var(1);
    const Monomial z = Monomial::var(2);

    CHECK(grevlex_less(one, x));
    CHECK(grevlex_less(y, x));
    CHECK(grevlex_less(y, x.times(x)));  // degree dominates
    // The classic grevlex pair: xz < y^2.
    CHECK(grevlex_less(x.times(z), y.times(y)));
    CHECK(!grevlex_less(y.times(y), x.times(z)));

    SplitMix64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial a, b;
        for (int v = 0; v < 4; ++v) {
            a = a.times(Monomial::var(v, static_cast<int>(rng.below(4))));
            b = b.times(Monomial::var(v, static_cast<int>(rng.below(4))));
        }
        // Total order: exactly one of <, ==, > holds.
        const int rel = grevlex_less(a, b) ? -1 : (grevlex_less(b, a) ? 1 : 0);
        CHECK((rel != 0 || a == b));

        const Monomial l = Monomial::lcm(a, b);
        CHECK(a.divides(l));
        CHECK(b.divides(l));
        CHECK(l.divided_by(a).times(a) == l);
        CHECK(a.times(b).divided_by(b) == a);
        CHECK(a.coprime_with(b) == (Monomial::lcm(a, b).degree == a.times(b).degree));
    }
}

TEST_CASE("multipoly product matches the naive convolution") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int vars = 1 + static_cast<int>(rng.below(4));
        const MultiPoly p = random_poly(rng, vars, 6, 3);
        const MultiPoly q = random_poly(rng, vars, 6, 3);
        const MultiPoly r = random_poly(rng, vars, 4, 2);
        CHECK(p * q == naive_product(p, q, vars));
        CHECK((p + q) - q == p);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * MultiPoly::constant(vars, rat(1)) == p);
        CHECK((p * MultiPoly::zero(vars)).is_zero());
    }
}

TEST_CASE("combine is a*p - b*shift*q") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const int vars = 2 + static_cast<int>(rng.below(3));
        const MultiPoly p = random_poly(rng, vars, 5, 3);
        const MultiPoly q = random_poly(rng, vars, 5, 3);
        const Rational a(static_cast<long>(rng.uniform(1, 9)));
        const Rational b(static_cast<long>(rng.uniform(-9, -1)));
        const Monomial shift = mono({{0, 1}, {static_cast<int>(rng.below(static_cast<std::uint64_t>(vars))), 2}});
        MultiPoly got = p;
        got.combine(a, b, shift, q);
        const MultiPoly expected =
            a * p - b * (MultiPoly::monomial(vars, shift, rat(1)) * q);
        CHECK(got == expected);
    }
}

TEST_CASE("evaluate and substitute agree") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int vars = 2 + static_cast<int>(rng.below(3));
        const MultiPoly p = random_poly(rng, vars, 7, 3);
        const auto point = random_point(rng, vars);
        CHECK(p.substitute(0, point[0]).evaluate(point) == p.evaluate(point));

        MultiPoly collapsed = p;
        for (int v = 0; v < vars; ++v) collapsed = collapsed.substitute(v, point[v]);
        CHECK(collapsed.is_constant());
        CHECK(collapsed.evaluate(point) == p.evaluate(point));
    }
}

TEST_CASE("make_primitive clears denominators and content") {
    MultiPoly p = MultiPoly::zero(2);
    p += MultiPoly::monomial(2, mono({{0, 2}}), rat(6, 35));
    p += MultiPoly::monomial(2, mono({{1, 1}}), rat(-4, 7));
    MultiPoly q = p;
    q.make_primitive();
    CHECK(proportional(p, q));
    // 6/35 x^2 - 4/7 y  ->  3 x^2 - 10 y
    MultiPoly expected = MultiPoly::zero(2);
    expected += MultiPoly::monomial(2, mono({{0, 2}}), rat(3));
    expected += MultiPoly::monomial(2, mono({{1, 1}}), rat(-10));
    CHECK(q == expected);

    // Idempotent, sign-normalizing.
    MultiPoly neg = rat(-2) * q;
    neg.make_primitive();
    CHECK(neg == expected);
}

TEST_CASE("determinants by cofactor and bareiss agree") {
    // Vandermonde with nodes 2, 3, 5: det = (3-2)(5-2)(5-3) = 6.
    std::vector<std::vector<MultiPoly>> vm(3, std::vector<MultiPoly>(3, MultiPoly::zero(1)));
    const long nodes[3] = {2, 3, 5};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            vm[i][j] = MultiPoly::constant(1, rational_pow(rat(nodes[i]), static_cast<unsigned>(j)));
    CHECK(det_poly(vm) == MultiPoly::constant(1, rat(6)));

    // Symbolic 2x2.
    std::vector<std::vector<MultiPoly>> m2{
        {MultiPoly::variable(4, 0), MultiPoly::variable(4, 1)},
        {MultiPoly::variable(4, 2), MultiPoly::variable(4, 3)}};
    const MultiPoly ad = MultiPoly::variable(4, 0) * MultiPoly::variable(4, 3);
    const MultiPoly bc = MultiPoly::variable(4, 1) * MultiPoly::variable(4, 2);
    CHECK(det_poly(m2) == ad - bc);

    SplitMix64 rng(41);
    for (int size = 3; size <= 6; ++size) {
        std::vector<std::vector<MultiPoly>> m(size, std::vector<MultiPoly>(size, MultiPoly::zero(2)));
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) m[i][j] = random_poly(rng, 2, 2, 1);
        const MultiPoly det = det_poly(m);
        CHECK(detail::det_cofactor(m) == det);
        CHECK(detail::det_bareiss(m) == det);

        // Alternating in the rows.
        std::swap(m[0], m[1]);
        CHECK(det_poly(m) == -det);
        // Repeated row kills it.
        m[0] = m[1];
        CHECK(det_poly(m).is_zero());
    }
}

TEST_CASE("unipoly arithmetic") {
    const UniPoly p = upoly({-1, 0, 1});  // x^2 - 1
    CHECK(p == linear(rat(1)) * linear(rat(-1)));
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(rat(3)) == rat(8));
    CHECK(p.coeff(5) == rat(0));
    CHECK((p - p).is_zero());
    CHECK(UniPoly::zero().degree() == -1);

    CHECK(derivative(upoly({0, -2, 0, 1})) == upoly({-2, 0, 3}));  // (x^3 - 2x)' = 3x^2 - 2
    CHECK(derivative(UniPoly::constant(rat(5))).is_zero());

    UniPoly scaled = p;
    scaled.scale(rat(-3, 2));
    CHECK(scaled == upoly({3, 0, -3}).scale(rat(1, 2)));
}

TEST_CASE("primitive part and gcd") {
    CHECK(primitive_part(UniPoly({rat(2, 3), rat(4, 3)})) == upoly({1, 2}));
    // The leading sign is normalized positive.
    CHECK(primitive_part(upoly({4, -2})) == upoly({-2, 1}));

    const UniPoly a = linear(rat(1)) * linear(rat(2));
    const UniPoly b = linear(rat(2)) * linear(rat(3));
    CHECK(poly_gcd(a, b) == linear(rat(2)));
    CHECK(poly_gcd(a, UniPoly::zero()) == a);
    CHECK(poly_gcd(linear(rat(1)), linear(rat(5))).degree() == 0);
    CHECK(poly_gcd(UniPoly::zero(), UniPoly::zero()).is_zero());

    // gcd ignores scalar factors entirely.
    UniPoly a2 = a;
    a2.scale(rat(-7, 3));
    CHECK(poly_gcd(a2, b) == linear(rat(2)));
}

TEST_CASE("squarefree part strips multiplicity") {
    const UniPoly p = linear(rat(1)) * linear(rat(1)) * linear(rat(3));
    CHECK(squarefree_part(p) == linear(rat(1)) * linear(rat(3)));

    SplitMix64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        UniPoly q = UniPoly::constant(rat(static_cast<long>(rng.uniform(1, 5))));
        for (int k = 0; k < 4; ++k) {
            const UniPoly f = linear(rat(static_cast<long>(rng.uniform(-6, 6))));
            const int mult = 1 + static_cast<int>(rng.below(3));
            for (int e = 0; e < mult; ++e) q = q * f;
        }
        const UniPoly sf = squarefree_part(q);
        // Idempotent; coprime with its derivative; divides nothing extra.
        CHECK(squarefree_part(sf) == sf);
        CHECK(poly_gcd(sf, derivative(sf)).degree() == 0);
        CHECK(poly_gcd(q, sf) == sf);
    }
    CHECK_THROWS_AS(squarefree_part(UniPoly::zero()), std::invalid_argument);
}

TEST_CASE("sturm counts distinct real roots") {
    // x^2 + 1 has none; its Sturm chain ends in a negative constant, which
    // must not be sign-normalized away.
    CHECK(sturm_count(upoly({1, 0, 1})) == 0);
    CHECK(sturm_count(upoly({-1, 0, 1})) == 2);
    CHECK(sturm_count(upoly({0, 1})) == 1);
    CHECK(sturm_count(UniPoly::constant(rat(7))) == 0);
    // (x^2 + 1)(x^2 + x + 1): two negative-leading remainders in the chain.
    CHECK(sturm_count(upoly({1, 0, 1}) * upoly({1, 1, 1})) == 0);

    SplitMix64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        // Distinct linear factors times irreducible quadratics: the real
        // root count is the number of linear factors, by construction.
        std::vector<Rational> roots;
        const int want = 1 + static_cast<int>(rng.below(4));
        while (static_cast<int>(roots.size()) < want) {
            const Rational r(static_cast<long>(rng.uniform(-20, 20)));
            if (std::find(roots.begin(), roots.end(), r) == roots.end())
                roots.push_back(r);
        }
        UniPoly p = UniPoly::constant(rat(trial % 2 == 0 ? 3 : -3));
        for (const Rational& r : roots) p = p * linear(r);
        for (int k = 0; k < trial % 3; ++k) {
            const Rational b(static_cast<long>(rng.uniform(-5, 5)));
            const Rational c = b * b / 4 + Rational(1 + static_cast<long>(rng.below(5)));
            p = p * UniPoly({c, b, rat(1)});  // discriminant < 0
        }
        CHECK(sturm_count(p) == want);
    }
}

TEST_CASE("sturm counts on half-open intervals") {
    const UniPoly p = linear(rat(1)) * linear(rat(4));
    CHECK(sturm_count(p, rat(0), rat(2)) == 1);
    CHECK(sturm_count(p, rat(1), rat(4)) == 1);  // 1 excluded, 4 included
    CHECK(sturm_count(p, rat(1), rat(3)) == 0);
    CHECK(sturm_count(p, rat(0), rat(4)) == 2);
    CHECK(sturm_count(p, rat(-10), rat(10)) == sturm_count(p));
}

TEST_CASE("dependence tracker finds the first exact relation") {
    DependenceTracker tracker(3);
    CHECK(!tracker.add({rat(1), rat(0), rat(0)}).has_value());
    CHECK(!tracker.add({rat(0), rat(1), rat(0)}).has_value());
    const auto dep = tracker.add({rat(2), rat(-3), rat(0)});
    REQUIRE(dep.has_value());
    CHECK(dep->index == 2);
    CHECK(dep->coeffs == std::vector<Rational>{rat(2), rat(-3), rat(-1)});
    CHECK(tracker.rank() == 2);
    CHECK(tracker.added() == 3);

    // Independent vectors stay independent.
    CHECK(!exact_dependence({{rat(1), rat(2)}, {rat(3), rat(4)}}).has_value());

    SplitMix64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Rational>> vectors;
        for (int i = 0; i < 3; ++i) vectors.push_back(random_point(rng, 5));
        // Plant an exact combination of the first three.
        std::vector<Rational> planted(5, rat(0));
        std::vector<Rational> weights;
        for (int i = 0; i < 3; ++i) {
            weights.emplace_back(static_cast<long>(rng.uniform(-4, 4)));
            for (int c = 0; c < 5; ++c) planted[c] += weights[i] * vectors[i][c];
        }
        vectors.push_back(planted);
        const auto found = exact_dependence(vectors);
        REQUIRE(found.has_value());
        CHECK(found->index <= 3);
        // The reported coefficients really do vanish.
        std::vector<Rational> acc(5, rat(0));
        for (size_t i = 0; i <= found->index; ++i)
            for (int c = 0; c < 5; ++c) acc[c] += found->coeffs[i] * vectors[i][c];
        for (const Rational& v : acc) CHECK(v == rat(0));
        CHECK(found->coeffs.back() == rat(-1));
    }
}

TEST_CASE("matrix rank") {
    CHECK(matrix_rank({{rat(1), rat(2)}, {rat(2), rat(4)}}) == 1);
    CHECK(matrix_rank({{rat(0), rat(0)}, {rat(0), rat(0)}}) == 0);
    CHECK(matrix_rank({{rat(1), rat(2), rat(4)},
                       {rat(1), rat(3), rat(9)},
                       {rat(1), rat(5), rat(25)}}) == 3);
    CHECK(matrix_rank({{rat(1), rat(1, 2)}, {rat(4), rat(2)}, {rat(6), rat(3)}}) == 1);
}
