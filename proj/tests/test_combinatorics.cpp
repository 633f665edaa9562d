#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "osculant/instance.hpp"
#include "osculant/necklace.hpp"
#include "osculant/permutation.hpp"

using namespace osculant;

namespace {

// Inversion count straight from the definition, as an oracle for length().
int inversions(const Permutation& w) {
    int count = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (w(i) > w(j)) ++count;
    return count;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// |W^a| = n! / prod of block-size factorials.
long wa_size_oracle(const FlagType& ft) {
    long size = factorial(ft.n);
    int prev = 0;
    for (int ai : ft.a) {
        size /= factorial(ai - prev);
        prev = ai;
    }
    return size / factorial(ft.n - prev);
}

SchubertData repeat(const FlagType& ft, const std::vector<std::pair<std::string, int>>& counts) {
    SchubertData sd;
    sd.flag_type = ft;
    for (const auto& [text, count] : counts)
        for (int i = 0; i < count; ++i) sd.conditions.push_back(Permutation::parse(text));
    return sd;
}

// Distinct necklaces of a label multiset by brute force over all
// arrangements, as an oracle for enumerate_necklaces.
std::set<std::string> necklaces_brute_force(const std::map<char, int>& multiset) {
    std::string labels;
    for (const auto& [c, count] : multiset) labels.append(count, c);
    std::sort(labels.begin(), labels.end());
    std::set<std::string> out;
    do {
        out.insert(necklace_canonical(labels));
    } while (std::next_permutation(labels.begin(), labels.end()));
    return out;
}

}  // namespace

TEST_CASE("one-line notation parses and round-trips") {
    const Permutation w = Permutation::parse("32514");
    CHECK(w.size() == 5);
    CHECK(w(1) == 3);
    CHECK(w(5) == 4);
    CHECK(w.to_string() == "32514");
    CHECK(w.inverse_image(5) == 3);
    CHECK(w.inverse_image(4) == 5);

    const Permutation big = Permutation::parse("2,5,3,1,6,7,4,8");
    CHECK(big.size() == 8);
    CHECK(big(2) == 5);

    CHECK(Permutation::parse("1234") == Permutation::identity(4));
    CHECK(Permutation::identity(4).is_identity());

    // Swapping the positions holding 3 and 2 sorts 13245.
    CHECK(Permutation::parse("13245").with_positions_swapped(2, 3) ==
          Permutation::identity(5));

    CHECK_THROWS_AS(Permutation::parse("1135"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1204"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse(""), std::invalid_argument);
}

TEST_CASE("length equals the inversion count") {
    CHECK(length(Permutation::parse("32514")) == 5);
    CHECK(length(Permutation::parse("21435")) == 2);
    CHECK(length(Permutation::parse("13245")) == 1);
    CHECK(length(Permutation::parse("12435")) == 1);
    CHECK(length(Permutation::parse("142536")) == 3);
    CHECK(length(Permutation::parse("312564")) == 4);
    CHECK(length(Permutation::parse("132456")) == 1);
    CHECK(length(Permutation::parse("125346")) == 2);
    CHECK(length(Permutation::parse("124356")) == 1);

    for (const Permutation& w : enumerate_wa(FlagType({2, 3}, 5)))
        CHECK(length(w) == inversions(w));
}

TEST_CASE("descent data identifies grassmannian conditions") {
    const DescentData f = descent_data(Permutation::parse("13245"));
    CHECK(f.grassmannian);
    CHECK(f.delta == 2);

    const DescentData g = descent_data(Permutation::parse("12435"));
    CHECK(g.grassmannian);
    CHECK(g.delta == 3);

    const DescentData two = descent_data(Permutation::parse("142536"));
    CHECK(!two.grassmannian);
    CHECK(two.descents == std::set<int>{2, 4});
    CHECK(!two.delta.has_value());

    CHECK(descent_data(Permutation::parse("312564")).descents == std::set<int>{1, 5});
    CHECK(descent_data(Permutation::identity(4)).descents.empty());
    CHECK(!descent_data(Permutation::identity(4)).delta.has_value());
}

TEST_CASE("rank function counts large images") {
    // r_w(i,j) = |{l <= i : j + w(l) > n}| directly.
    const Permutation w = Permutation::parse("32514");
    CHECK(rank_function(w, 2, 3) == 1);
    CHECK(rank_function(w, 3, 1) == 1);
    CHECK(rank_function(w, 5, 5) == 5);
    CHECK(rank_function(w, 1, 1) == 0);

    // Monotone in both arguments across a whole W^a.
    for (const Permutation& v : enumerate_wa(FlagType({2, 3}, 5)))
        for (int i = 1; i <= 5; ++i)
            for (int j = 1; j <= 5; ++j) {
                if (i > 1) CHECK(rank_function(v, i, j) >= rank_function(v, i - 1, j));
                if (j > 1) CHECK(rank_function(v, i, j) >= rank_function(v, i, j - 1));
                CHECK(rank_function(v, i, j) <= std::min(i, j));
            }
}

TEST_CASE("flag manifold dimensions") {
    CHECK(flag_dimension(FlagType({2, 3}, 5)) == 8);
    CHECK(flag_dimension(FlagType({2, 3}, 4)) == 5);
    CHECK(flag_dimension(FlagType({1, 3}, 5)) == 8);
    CHECK(flag_dimension(FlagType({2, 3}, 6)) == 11);
    CHECK(flag_dimension(FlagType({2, 4}, 6)) == 12);
    CHECK(flag_dimension(FlagType({1, 3, 5}, 6)) == 13);
    CHECK(flag_dimension(FlagType({2}, 4)) == 4);
}

TEST_CASE("W^a enumeration is complete, sorted, and bounded by the longest element") {
    for (const FlagType& ft : {FlagType({2, 3}, 5), FlagType({2}, 4),
                               FlagType({1, 3}, 5), FlagType({1, 3, 5}, 6)}) {
        const auto wa = enumerate_wa(ft);
        CHECK(static_cast<long>(wa.size()) == wa_size_oracle(ft));
        CHECK(std::is_sorted(wa.begin(), wa.end()));
        CHECK(std::adjacent_find(wa.begin(), wa.end()) == wa.end());

        const Permutation top = longest_wa(ft);
        CHECK(length(top) == flag_dimension(ft));
        bool has_id = false, has_top = false;
        for (const Permutation& w : wa) {
            CHECK(in_wa(w, ft));
            CHECK(length(w) <= length(top));
            has_id |= w.is_identity();
            has_top |= (w == top);
        }
        CHECK(has_id);
        CHECK(has_top);
    }

    // Blocks of the longest element are filled top-down.
    CHECK(longest_wa(FlagType({2, 3}, 5)) == Permutation::parse("45312"));
    CHECK(longest_wa(FlagType({2}, 4)) == Permutation::parse("3412"));
}

TEST_CASE("schubert data validation") {
    const FlagType ft({2, 3}, 5);
    CHECK(validate_schubert_data(repeat(ft, {{"13245", 4}, {"12435", 4}})));
    // Wrong total codimension.
    CHECK(!validate_schubert_data(repeat(ft, {{"13245", 3}, {"12435", 4}})));
    // 21435 has a descent at 1, outside {2, 3}.
    CHECK_THROWS_AS(validate_schubert_data(repeat(ft, {{"21435", 4}})),
                    std::invalid_argument);

    // Codimensions 5 + 2 + 2 exceed dim 8: valid conditions, invalid count.
    CHECK(!validate_schubert_data(
        repeat(FlagType({1, 3}, 5), {{"32514", 1}, {"21435", 1}, {"21435", 1}})));
}

TEST_CASE("a_i-Bruhat covers agree with the definition") {
    const FlagType gr24({2}, 4);
    const auto covers = ai_bruhat_covers(Permutation::identity(4), 2);
    CHECK(covers == std::vector<Permutation>{Permutation::parse("1324")});

    // Brute force over all transpositions straddling a_i.
    for (const Permutation& w : enumerate_wa(FlagType({2, 3}, 5))) {
        for (int ai : {2, 3}) {
            std::set<Permutation> expected;
            for (int b = 1; b <= ai; ++b)
                for (int c = ai + 1; c <= 5; ++c) {
                    const Permutation v = w.with_positions_swapped(b, c);
                    if (length(v) == length(w) + 1) expected.insert(v);
                }
            const auto got = ai_bruhat_covers(w, ai);
            CHECK(std::set<Permutation>(got.begin(), got.end()) == expected);
            CHECK(got.size() == expected.size());
        }
    }
    (void)gr24;
}

TEST_CASE("pieri sets from the identity are the special conditions") {
    const FlagType ft({2, 3}, 5);
    CHECK(pieri_lambda(Permutation::identity(5), ft, 1, 1) ==
          std::vector<Permutation>{Permutation::parse("13245")});
    CHECK(pieri_lambda(Permutation::identity(5), ft, 2, 1) ==
          std::vector<Permutation>{Permutation::parse("12435")});
    CHECK(pieri_lambda(Permutation::identity(5), ft, 1, 0) ==
          std::vector<Permutation>{Permutation::identity(5)});

    const FlagType ft6({2, 3}, 6);
    const auto lam2 = pieri_lambda(Permutation::identity(6), ft6, 2, 2);
    // Lambda-set members use exactly m positions past a_i; every member is
    // in W^a at the right length.
    for (const Permutation& v : lam2) {
        CHECK(in_wa(v, ft6));
        CHECK(length(v) == 2);
        int moved = 0;
        for (int l = 4; l <= 6; ++l)
            if (v(l) != l) ++moved;
        CHECK(moved == 2);
    }
    CHECK(std::find(lam2.begin(), lam2.end(), Permutation::parse("125346")) != lam2.end());
}

TEST_CASE("special conditions are recognized") {
    const auto f = special_condition(Permutation::parse("1324"), FlagType({2, 3}, 4));
    REQUIRE(f.has_value());
    CHECK(f->block_index == 1);
    CHECK(f->codim == 1);

    const auto g = special_condition(Permutation::parse("1243"), FlagType({2, 3}, 4));
    REQUIRE(g.has_value());
    CHECK(g->block_index == 2);
    CHECK(g->codim == 1);

    const auto omega2 = special_condition(Permutation::parse("125346"), FlagType({2, 3}, 6));
    REQUIRE(omega2.has_value());
    CHECK(omega2->block_index == 2);
    CHECK(omega2->codim == 2);

    // Two descents, or a non-identity prefix, are not special.
    CHECK(!special_condition(Permutation::parse("312564"), FlagType({1, 3, 5}, 6)));
    CHECK(!special_condition(Permutation::parse("21435"), FlagType({1, 3}, 5)));
    CHECK(!special_condition(Permutation::parse("32514"), FlagType({1, 3}, 5)));
    CHECK(!special_condition(Permutation::parse("2314"), FlagType({2}, 4)));
    CHECK(!special_condition(Permutation::identity(4), FlagType({2}, 4)));
}

TEST_CASE("chain degrees of grassmannian problems count rectangular tableaux") {
    // Degree of Gr(k, n) under powers of the codimension-1 condition is the
    // number of standard Young tableaux of the k x (n-k) rectangle.
    SchubertData gr24 = repeat(FlagType({2}, 4), {{"1324", 4}});
    CHECK(chain_degree(gr24) == 2);

    SchubertData gr25 = repeat(FlagType({2}, 5), {{"13245", 6}});
    CHECK(chain_degree(gr25) == 5);

    SchubertData gr36 = repeat(FlagType({3}, 6), {{"124356", 9}});
    CHECK(chain_degree(gr36) == 42);
}

TEST_CASE("chain degrees of the flag problems") {
    CHECK(chain_degree(repeat(FlagType({2, 3}, 5), {{"13245", 4}, {"12435", 4}})) == 12);
    CHECK(chain_degree(repeat(FlagType({2, 3}, 4), {{"1324", 3}, {"1243", 2}})) == 2);
    CHECK(chain_degree(repeat(FlagType({2, 3}, 6), {{"132456", 5}, {"125346", 3}})) == 14);

    // Chain counting refuses non-special conditions instead of guessing.
    CHECK_THROWS_AS(
        chain_degree(repeat(FlagType({1, 3, 5}, 6), {{"312564", 2}, {"124356", 5}})),
        std::invalid_argument);

    // Order independence over a mixed-codimension multiset.
    CHECK(chain_degree(repeat(FlagType({2, 3}, 6), {{"125346", 3}, {"132456", 5}})) == 14);
}

TEST_CASE("necklace canonical form") {
    CHECK(necklace_canonical("332") == "233");
    CHECK(necklace_canonical("23232323") == "23232323");
    CHECK(necklace_canonical("32323232") == "23232323");
    CHECK(necklace_canonical("33322") == "22333");
    CHECK(necklace_canonical("2") == "2");
    CHECK(necklace_canonical("A33A333") == "333A33A");

    // Idempotent, rotation invariant, reflection invariant.
    const std::string base = "2323A23";
    const std::string canon = necklace_canonical(base);
    CHECK(necklace_canonical(canon) == canon);
    std::string rotated = base;
    std::rotate(rotated.begin(), rotated.begin() + 3, rotated.end());
    CHECK(necklace_canonical(rotated) == canon);
    std::string reflected(base.rbegin(), base.rend());
    CHECK(necklace_canonical(reflected) == canon);
}

TEST_CASE("necklace enumeration matches brute force") {
    const std::map<char, int> conj_a{{'2', 4}, {'3', 4}};
    const std::map<char, int> lower{{'2', 5}, {'3', 3}};
    const std::map<char, int> gaps{{'3', 5}, {'A', 2}};
    const std::map<char, int> single{{'A', 4}};
    const std::map<char, int> five{{'2', 3}, {'3', 2}};

    CHECK(enumerate_necklaces(conj_a).size() == 8);
    CHECK(enumerate_necklaces(lower).size() == 5);
    CHECK(enumerate_necklaces(gaps).size() == 3);
    CHECK(enumerate_necklaces(single) == std::vector<Necklace>{"AAAA"});
    CHECK(enumerate_necklaces(five).size() == 2);

    for (const auto& multiset : {conj_a, lower, gaps, single, five}) {
        const auto got = enumerate_necklaces(multiset);
        const auto expected = necklaces_brute_force(multiset);
        CHECK(std::set<std::string>(got.begin(), got.end()) == expected);
        CHECK(got.size() == expected.size());
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
}

TEST_CASE("monotone necklaces") {
    CHECK(is_monotone("22223333"));
    CHECK(!is_monotone("23232323"));
    CHECK(!is_monotone("22232333"));
    CHECK(is_monotone("22233"));
    CHECK(is_monotone("2"));
    CHECK(is_monotone("32"));   // a rotation of 23
    CHECK(is_monotone("232"));  // a rotation of 223

    // Monotonicity needs every condition grassmannian: letter labels never
    // qualify, whatever the arrangement.
    CHECK(!is_monotone("33333AA"));
    CHECK(!is_monotone("AAAA"));
    CHECK(!is_monotone("AAA333B"));
    CHECK_THROWS_AS(is_monotone(""), std::invalid_argument);
}

TEST_CASE("condition labels") {
    const auto conj_a =
        condition_labels(repeat(FlagType({2, 3}, 5), {{"13245", 4}, {"12435", 4}}));
    CHECK(conj_a == std::vector<char>{'2', '2', '2', '2', '3', '3', '3', '3'});

    const auto gaps = condition_labels(
        repeat(FlagType({1, 3, 5}, 6), {{"312564", 2}, {"124356", 5}}));
    CHECK(gaps == std::vector<char>{'A', 'A', '3', '3', '3', '3', '3'});

    // Distinct non-grassmannian conditions get distinct letters in order of
    // first appearance.
    const auto two = condition_labels(
        repeat(FlagType({1, 3, 5}, 6), {{"312564", 1}, {"214356", 1}}));
    CHECK(two == std::vector<char>{'A', 'B'});
}
