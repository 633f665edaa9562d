#include "doctest.h"

#include <stdexcept>
#include <string>
#include <vector>

#include "osculant/conditions.hpp"
#include "osculant/instance.hpp"
#include "osculant/osculating.hpp"
#include "osculant/pattern.hpp"
#include "osculant/permutation.hpp"

using namespace osculant;

namespace {

Rational rat(long num, long den = 1) { return Rational(num, den); }

MultiPoly c8(const Rational& q) { return MultiPoly::constant(8, q); }
MultiPoly v8(int i) { return MultiPoly::variable(8, i); }

SchubertData repeat(const FlagType& ft, const std::vector<std::pair<std::string, int>>& counts) {
    SchubertData sd;
    sd.flag_type = ft;
    for (const auto& [text, count] : counts)
        for (int i = 0; i < count; ++i) sd.conditions.push_back(Permutation::parse(text));
    return sd;
}

// det of the matrix cut out by "E_2 meets the osculating 3-plane at t" in
// the standard chart: rows (1 0 x1 x2 x3), (0 1 x4 x5 x6), then the moment
// curve at t with its first two derivative rows (the second one halved).
MultiPoly displayed_f(const Rational& t) {
    const Rational t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    std::vector<std::vector<MultiPoly>> m{
        {c8(rat(1)), c8(rat(0)), v8(0), v8(1), v8(2)},
        {c8(rat(0)), c8(rat(1)), v8(3), v8(4), v8(5)},
        {c8(t4), c8(t3), c8(t2), c8(t), c8(rat(1))},
        {c8(4 * t3), c8(3 * t2), c8(2 * t), c8(rat(1)), c8(rat(0))},
        {c8(6 * t2), c8(3 * t), c8(rat(1)), c8(rat(0)), c8(rat(0))}};
    return det_poly(m);
}

// Likewise for "E_3 meets the osculating 2-plane at t".
MultiPoly displayed_g(const Rational& t) {
    const Rational t2 = t * t, t3 = t2 * t, t4 = t3 * t;
    std::vector<std::vector<MultiPoly>> m{
        {c8(rat(1)), c8(rat(0)), v8(0), v8(1), v8(2)},
        {c8(rat(0)), c8(rat(1)), v8(3), v8(4), v8(5)},
        {c8(rat(0)), c8(rat(0)), c8(rat(1)), v8(6), v8(7)},
        {c8(t4), c8(t3), c8(t2), c8(t), c8(rat(1))},
        {c8(4 * t3), c8(3 * t2), c8(2 * t), c8(rat(1)), c8(rat(0))}};
    return det_poly(m);
}

// displayed_f with t symbolic, at variable index 8.
MultiPoly displayed_f_symbolic() {
    auto c = [](long v) { return MultiPoly::constant(9, Rational(v)); };
    auto x = [](int i) { return MultiPoly::variable(9, i); };
    auto tp = [](int power, long coef) {
        return MultiPoly::monomial(9, Monomial::var(8, power), Rational(coef));
    };
    std::vector<std::vector<MultiPoly>> m{
        {c(1), c(0), x(0), x(1), x(2)},
        {c(0), c(1), x(3), x(4), x(5)},
        {tp(4, 1), tp(3, 1), tp(2, 1), tp(1, 1), c(1)},
        {tp(3, 4), tp(2, 3), tp(1, 2), c(1), c(0)},
        {tp(2, 6), tp(1, 3), c(1), c(0), c(0)}};
    return det_poly(m);
}

// The witness flag E_1 = span(v1) inside E_3 = span(v1, v2, v3): v1 spans
// the intersection of the osculating 4-planes at s and t.
std::vector<std::vector<Rational>> witness_rows(const Rational& s, const Rational& t) {
    return {{6 * s * t, rat(3, 2) * (s + t), rat(1), rat(0), rat(0)},
            {rat(0), -3 * s * t, rat(0), rat(1), rat(0)},
            {rat(1), rat(0), rat(0), rat(0), rat(0)}};
}

}  // namespace

TEST_CASE("the identity pattern is the standard chart") {
    const CoordMatrix m = coordinate_pattern(Permutation::identity(5), FlagType({2, 3}, 5));
    REQUIRE(m.rows() == 3);
    REQUIRE(m.cols() == 5);
    CHECK(m.variable_count() == 8);

    const EntryKind O = EntryKind::One, Z = EntryKind::Zero, V = EntryKind::Variable;
    const EntryKind expected[3][5] = {{O, Z, V, V, V}, {Z, O, V, V, V}, {Z, Z, O, V, V}};
    int var = 0;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 5; ++j) {
            CHECK(m.entry(i, j).kind == expected[i - 1][j - 1]);
            if (m.entry(i, j).kind == V) CHECK(m.entry(i, j).var == var++);
        }
}

TEST_CASE("patterns have codimension-many constraints") {
    for (const FlagType& ft : {FlagType({2, 3}, 5), FlagType({2, 4}, 6)}) {
        for (const Permutation& w : enumerate_wa(ft)) {
            const CoordMatrix m = coordinate_pattern(w, ft);
            CHECK(m.rows() == ft.a.back());
            CHECK(m.cols() == ft.n);
            CHECK(m.variable_count() == flag_dimension(ft) - length(w));
            for (int i = 1; i <= m.rows(); ++i) {
                CHECK(m.entry(i, w(i)).kind == EntryKind::One);
                // Everything left of the pivot is zero.
                for (int j = 1; j < w(i); ++j)
                    CHECK(m.entry(i, j).kind == EntryKind::Zero);
            }
        }
    }
    CHECK_THROWS_AS(coordinate_pattern(Permutation::parse("21435"), FlagType({2, 3}, 5)),
                    std::invalid_argument);
}

TEST_CASE("pattern rows evaluate consistently") {
    const CoordMatrix m = coordinate_pattern(Permutation::identity(5), FlagType({2, 3}, 5));
    std::vector<Rational> values;
    for (int i = 1; i <= 8; ++i) values.push_back(rat(i * i, 3));
    for (int row = 1; row <= 3; ++row) {
        const auto nums = m.numeric_row(row, values);
        const auto syms = m.symbolic_row(row, 8);
        REQUIRE(nums.size() == 5);
        REQUIRE(syms.size() == 5);
        for (int col = 0; col < 5; ++col) CHECK(syms[col].evaluate(values) == nums[col]);
    }
}

TEST_CASE("osculating matrices differentiate the moment curve") {
    const auto m = osculating_matrix(rat(2), 3, 5);
    REQUIRE(m.size() == 3);
    CHECK(m[0] == std::vector<Rational>{rat(16), rat(8), rat(4), rat(2), rat(1)});
    CHECK(m[1] == std::vector<Rational>{rat(32), rat(12), rat(4), rat(1), rat(0)});
    CHECK(m[2] == std::vector<Rational>{rat(48), rat(12), rat(2), rat(0), rat(0)});

    // The symbolic rows specialize to the numeric ones.
    const auto sym = osculating_matrix_symbolic(8, 9, 3, 5);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 5; ++j) {
            MultiPoly val = sym[i][j].substitute(8, rat(2));
            CHECK(val.is_constant());
            CHECK(val.evaluate(std::vector<Rational>(9, rat(0))) == m[i][j]);
        }

    const auto frac = osculating_matrix(rat(1, 2), 2, 4);
    CHECK(frac[0] == std::vector<Rational>{rat(1, 8), rat(1, 4), rat(1, 2), rat(1)});
    CHECK(frac[1] == std::vector<Rational>{rat(3, 4), rat(1), rat(1), rat(0)});
}

TEST_CASE("essential condition sets") {
    CHECK(condition_set(Permutation::parse("13245"), FlagType({2, 3}, 5)) ==
          std::vector<RankCondition>{{2, 3, 1, 4, 5}});
    CHECK(condition_set(Permutation::parse("12435"), FlagType({2, 3}, 5)) ==
          std::vector<RankCondition>{{3, 2, 1, 4, 5}});
    CHECK(condition_set(Permutation::parse("1324"), FlagType({2, 3}, 4)) ==
          std::vector<RankCondition>{{2, 2, 1, 3, 4}});
    CHECK(condition_set(Permutation::parse("1243"), FlagType({2, 3}, 4)) ==
          std::vector<RankCondition>{{3, 1, 1, 3, 4}});
    CHECK(condition_set(Permutation::identity(5), FlagType({2, 3}, 5)).empty());

    // A longer condition needs several rank constraints at once.
    const auto big = condition_set(Permutation::parse("32514"), FlagType({1, 3}, 5));
    CHECK(big.size() >= 2);
    for (const RankCondition& c : big) {
        CHECK((c.block == 1 || c.block == 3));
        CHECK(c.minor_size == c.rank_bound + 1);
        CHECK(c.required_dim == rank_function(Permutation::parse("32514"), c.block,
                                              c.osculation_order));
    }
}

TEST_CASE("condition polynomials match the displayed determinants") {
    const FlagType ft({2, 3}, 5);
    const CoordMatrix chart = coordinate_pattern(Permutation::identity(5), ft);
    const auto cond_f = condition_set(Permutation::parse("13245"), ft);
    const auto cond_g = condition_set(Permutation::parse("12435"), ft);
    REQUIRE(cond_f.size() == 1);
    REQUIRE(cond_g.size() == 1);

    for (const Rational& t : {rat(1), rat(-2), rat(3, 2), rat(7)}) {
        const auto f = condition_polynomials(cond_f[0], t, chart);
        REQUIRE(f.size() == 1);
        CHECK(proportional(f[0], displayed_f(t)));

        const auto g = condition_polynomials(cond_g[0], t, chart);
        REQUIRE(g.size() == 1);
        CHECK(proportional(g[0], displayed_g(t)));
    }

    // The symbolic generator is the displayed determinant as a polynomial
    // identity in all nine variables.
    const auto f_sym = condition_polynomials_symbolic(cond_f[0], chart);
    REQUIRE(f_sym.size() == 1);
    CHECK(proportional(f_sym[0], displayed_f_symbolic()));
}

TEST_CASE("build_instance assembles the system and the necklace") {
    const SchubertData sd = repeat(FlagType({2, 3}, 5), {{"13245", 4}, {"12435", 4}});
    const std::vector<Rational> sorted{rat(-4), rat(-3), rat(-2), rat(-1),
                                       rat(1),  rat(2),  rat(3),  rat(4)};
    const Instance monotone = build_instance(sd, sorted);
    CHECK(monotone.necklace == "22223333");
    CHECK(monotone.generators.size() == 8);
    CHECK(monotone.points == sorted);

    const std::vector<Rational> interleaved{rat(-4), rat(-2), rat(1), rat(3),
                                            rat(-3), rat(-1), rat(2), rat(4)};
    CHECK(build_instance(sd, interleaved).necklace == "23232323");

    // Deterministic plain-text form.
    const Instance again = build_instance(sd, sorted);
    CHECK(serialize_instance(again) == serialize_instance(monotone));
    CHECK(serialize_instance(monotone).find("22223333") != std::string::npos);

    CHECK_THROWS_AS(build_instance(sd, std::vector<Rational>(8, rat(1))),
                    std::invalid_argument);
    std::vector<Rational> with_zero = sorted;
    with_zero[0] = rat(0);
    CHECK_THROWS_AS(build_instance(sd, with_zero), std::invalid_argument);
}

TEST_CASE("build_system accepts overdetermined data") {
    // Codimensions 5 + 2 + 2 exceed dim 8; no instance exists, but the
    // system itself is well-formed.
    const SchubertData sd =
        repeat(FlagType({1, 3}, 5), {{"32514", 1}, {"21435", 1}, {"21435", 1}});
    const auto gens = build_system(sd, {rat(1), rat(2), rat(3)});
    CHECK(gens.size() > 8);
    CHECK_THROWS_AS(build_instance(sd, {rat(1), rat(2), rat(3)}), std::invalid_argument);
}

TEST_CASE("membership certifies the witness flag") {
    const FlagType ft({1, 3}, 5);
    const Permutation cond = Permutation::parse("21435");
    const Permutation at_infinity = Permutation::parse("32514");

    for (const auto& [s, t] : std::vector<std::pair<Rational, Rational>>{
             {rat(1), rat(2)}, {rat(-3), rat(5)}, {rat(1, 2), rat(7, 3)}}) {
        const auto rows = witness_rows(s, t);
        CHECK(membership_check(rows, cond, ft, s));
        CHECK(membership_check(rows, cond, ft, t));
        // Away from s and t the secant condition fails...
        Rational off = t + 1;
        if (off == s) off = t + 2;
        CHECK(!membership_check(rows, cond, ft, off));
        // ...and the remaining condition of the problem never holds at a
        // finite parameter: this witness satisfies it at infinity only.
        CHECK(!membership_check(rows, at_infinity, ft, rat(0)));
        CHECK(!membership_check(rows, at_infinity, ft, s));
    }

    // The osculating flag at t satisfies every condition at its own point.
    const auto osc = osculating_matrix(rat(3), 3, 5);
    for (const Permutation& w : enumerate_wa(ft))
        CHECK(membership_check(osc, w, ft, rat(3)));

    // Values overload fills the standard chart.
    const CoordMatrix chart = coordinate_pattern(Permutation::identity(5), ft);
    std::vector<Rational> zeros(static_cast<size_t>(chart.variable_count()), rat(0));
    CHECK(membership_check(zeros, Permutation::identity(5), ft, rat(1)));
}
