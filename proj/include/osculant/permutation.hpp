#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace osculant {

/// Permutation of {1..n} in one-line notation, 1-indexed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    // Accepts compact digit strings ("13245") for n <= 9 and
    // comma-separated lists ("2,5,3,1,6,7,4,8") for larger n.
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }
    int inverse_image(int j) const;
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    std::string to_string() const;

    // Swap the entries at positions b and c (right multiplication by the
    // transposition of b and c).
    Permutation with_positions_swapped(int b, int c) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// Flag type a = (a_1 < ... < a_k) in ambient dimension n, with a_k < n.
struct FlagType {
    std::vector<int> a;
    int n = 0;

    FlagType() = default;
    FlagType(std::vector<int> a_, int n_);

    int steps() const { return static_cast<int>(a.size()); }
    bool is_descent_position(int pos) const;
    std::string to_string() const;

    friend bool operator==(const FlagType&, const FlagType&) = default;
};

/// An intersection problem: a flag type plus an ordered list of conditions.
struct SchubertData {
    FlagType flag_type;
    std::vector<Permutation> conditions;
};

/// Number of inversions of w.
int length(const Permutation& w);

std::set<int> descent_set(const Permutation& w);

struct DescentData {
    std::set<int> descents;
    bool grassmannian = false;
    std::optional<int> delta;  // the unique descent, when grassmannian
};
DescentData descent_data(const Permutation& w);

/// r_w(i,j) = |{l <= i : j + w(l) > n}|.
int rank_function(const Permutation& w, int i, int j);

/// dim of the flag manifold of type ft: sum (n - a_i)(a_i - a_{i-1}).
long flag_dimension(const FlagType& ft);

/// Does w have all its descents inside {a_1,...,a_k}?
bool in_wa(const Permutation& w, const FlagType& ft);

/// All permutations with descents in ft.a, in lexicographic order.
std::vector<Permutation> enumerate_wa(const FlagType& ft);

/// The longest element of W^a (each block filled with the largest available
/// values, ascending inside blocks).
Permutation longest_wa(const FlagType& ft);

// True iff the condition lengths sum to flag_dimension(ft). Throws
// std::invalid_argument naming the offending permutation if some condition
// is not in W^a.
bool validate_schubert_data(const SchubertData& sd);

/// All v = w sigma_{bc} with b <= ai < c and length(v) = length(w) + 1.
std::vector<Permutation> ai_bruhat_covers(const Permutation& w, int ai);

// The set {v in W^a : w <_{a_i} v, l(v) = l(w) + m, #{l > a_i : v(l) != w(l)} = m}.
// The order relation is the transitive closure of a_i-Bruhat covers (BFS of
// depth m; chains may leave W^a, only the endpoint is filtered). m = 0
// returns {w}.
std::vector<Permutation> pieri_lambda(const Permutation& w, const FlagType& ft,
                                      int i, int m);

// A special condition: the pull-back of {E : dim E cap F >= 1} along the
// projection to Gr(a_i, n).  As a permutation: single descent at a_i,
// identity prefix, one jump of size codim at the descent.
struct SpecialCondition {
    int block_index;  // 1-based index into ft.a
    int codim;        // = length of the permutation
};

// Identifies w as a special condition, or nullopt (codimension-1 conditions
// are exactly the special ones with codim 1).
std::optional<SpecialCondition> special_condition(const Permutation& w,
                                                  const FlagType& ft);

// Degree of Schubert data whose conditions are all special, by counting
// weighted chains of Pieri steps from the identity to the longest element
// of W^a.  Throws std::invalid_argument on a non-special condition.
unsigned long long chain_degree(const SchubertData& sd);

}  // namespace osculant
