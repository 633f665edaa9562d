#include "osculant/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace osculant {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    if (n < 1) throw std::invalid_argument("permutation must be nonempty");
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of {1.." +
                                        std::to_string(n) + "}");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty permutation literal");
    std::vector<int> im;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty())
                throw std::invalid_argument("malformed permutation literal: " + text);
            im.push_back(std::stoi(part));
        }
    } else {
        for (char ch : text) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("malformed permutation literal: " + text);
            im.push_back(ch - '0');
        }
    }
    return Permutation(std::move(im));
}

int Permutation::inverse_image(int j) const {
    for (int i = 1; i <= size(); ++i)
        if (images_[i - 1] == j) return i;
    throw std::out_of_range("value out of range");
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (images_[i - 1] != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out;
    if (size() <= 9) {
        for (int v : images_) out.push_back(static_cast<char>('0' + v));
    } else {
        for (int i = 0; i < size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(images_[i]);
        }
    }
    return out;
}

Permutation Permutation::with_positions_swapped(int b, int c) const {
    std::vector<int> im = images_;
    std::swap(im[b - 1], im[c - 1]);
    return Permutation(std::move(im));
}

FlagType::FlagType(std::vector<int> a_, int n_) : a(std::move(a_)), n(n_) {
    if (n < 2) throw std::invalid_argument("ambient dimension must be >= 2");
    if (a.empty()) throw std::invalid_argument("flag type needs at least one step");
    int prev = 0;
    for (int v : a) {
        if (v <= prev) throw std::invalid_argument("flag type must be strictly increasing");
        prev = v;
    }
    if (a.back() >= n) throw std::invalid_argument("flag type steps must stay below n");
}

bool FlagType::is_descent_position(int pos) const {
    return std::find(a.begin(), a.end(), pos) != a.end();
}

std::string FlagType::to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(a[i]);
    }
    out += ";" + std::to_string(n) + ")";
    return out;
}

int length(const Permutation& w) {
    int inv = 0;
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

std::set<int> descent_set(const Permutation& w) {
    std::set<int> d;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) d.insert(i);
    return d;
}

DescentData descent_data(const Permutation& w) {
    DescentData dd;
    dd.descents = descent_set(w);
    dd.grassmannian = dd.descents.size() == 1;
    if (dd.grassmannian) dd.delta = *dd.descents.begin();
    return dd;
}

int rank_function(const Permutation& w, int i, int j) {
    const int n = w.size();
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("rank_function arguments must lie in 1..n");
    int count = 0;
    for (int l = 1; l <= i; ++l)
        if (j + w(l) > n) ++count;
    return count;
}

long flag_dimension(const FlagType& ft) {
    long dim = 0;
    int prev = 0;
    for (int ai : ft.a) {
        dim += static_cast<long>(ft.n - ai) * (ai - prev);
        prev = ai;
    }
    return dim;
}

bool in_wa(const Permutation& w, const FlagType& ft) {
    if (w.size() != ft.n) return false;
    for (int i = 1; i < ft.n; ++i)
        if (w(i) > w(i + 1) && !ft.is_descent_position(i)) return false;
    return true;
}

namespace {

// Values are assigned block by block; each block is ascending, so choosing
// the value set per block determines the permutation.
void enumerate_wa_rec(const std::vector<int>& blocks, size_t bi,
                      std::vector<int>& available, std::vector<int>& prefix,
                      std::vector<Permutation>& out) {
    if (bi == blocks.size()) {
        out.emplace_back(prefix);
        return;
    }
    const int take = blocks[bi];
    const int m = static_cast<int>(available.size());
    std::vector<int> mask(m, 0);
    std::fill(mask.begin(), mask.begin() + take, 1);
    // iterate over all `take`-subsets of available, each used in sorted order
    std::vector<int> chosen, rest;
    do {
        chosen.clear();
        rest.clear();
        for (int idx = 0; idx < m; ++idx)
            (mask[idx] ? chosen : rest).push_back(available[idx]);
        const size_t base = prefix.size();
        prefix.insert(prefix.end(), chosen.begin(), chosen.end());
        std::vector<int> rest_copy = rest;
        enumerate_wa_rec(blocks, bi + 1, rest_copy, prefix, out);
        prefix.resize(base);
    } while (std::prev_permutation(mask.begin(), mask.end()));
}

}  // namespace

std::vector<Permutation> enumerate_wa(const FlagType& ft) {
    std::vector<int> blocks;
    int prev = 0;
    for (int ai : ft.a) {
        blocks.push_back(ai - prev);
        prev = ai;
    }
    blocks.push_back(ft.n - prev);
    std::vector<int> available(ft.n);
    std::iota(available.begin(), available.end(), 1);
    std::vector<int> prefix;
    std::vector<Permutation> out;
    enumerate_wa_rec(blocks, 0, available, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation longest_wa(const FlagType& ft) {
    std::vector<int> im;
    std::vector<int> available(ft.n);
    std::iota(available.begin(), available.end(), 1);
    int prev = 0;
    std::vector<int> steps = ft.a;
    steps.push_back(ft.n);
    for (int ai : steps) {
        const int take = ai - prev;
        // largest remaining values, ascending within the block
        for (int k = static_cast<int>(available.size()) - take;
             k < static_cast<int>(available.size()); ++k)
            im.push_back(available[k]);
        available.resize(available.size() - take);
        prev = ai;
    }
    return Permutation(std::move(im));
}

bool validate_schubert_data(const SchubertData& sd) {
    long total = 0;
    for (const auto& w : sd.conditions) {
        if (!in_wa(w, sd.flag_type))
            throw std::invalid_argument("condition " + w.to_string() +
                                        " is not in W^a for flag type " +
                                        sd.flag_type.to_string());
        total += length(w);
    }
    return total == flag_dimension(sd.flag_type);
}

std::vector<Permutation> ai_bruhat_covers(const Permutation& w, int ai) {
    std::vector<Permutation> covers;
    const int n = w.size();
    const int lw = length(w);
    for (int b = 1; b <= ai; ++b) {
        for (int c = ai + 1; c <= n; ++c) {
            if (w(b) >= w(c)) continue;  // swapping would decrease length
            Permutation v = w.with_positions_swapped(b, c);
            if (length(v) == lw + 1) covers.push_back(std::move(v));
        }
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::vector<Permutation> pieri_lambda(const Permutation& w, const FlagType& ft,
                                      int i, int m) {
    if (i < 1 || i > ft.steps())
        throw std::out_of_range("block index out of range for flag type");
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    if (!in_wa(w, ft))
        throw std::invalid_argument("permutation " + w.to_string() +
                                    " is not in W^a");
    if (m == 0) return {w};

    // Chains may pass through permutations outside W^a; only the endpoint
    // is required to land in W^a.  Each cover raises length by exactly 1,
    // so depth-m BFS reaches precisely the v with w <_{a_i} v, ℓ(v)=ℓ(w)+m.
    const int ai = ft.a[i - 1];
    std::set<Permutation> frontier{w};
    for (int depth = 0; depth < m; ++depth) {
        std::set<Permutation> next;
        for (const auto& u : frontier)
            for (auto& v : ai_bruhat_covers(u, ai)) next.insert(std::move(v));
        frontier = std::move(next);
    }

    std::vector<Permutation> out;
    for (const auto& v : frontier) {
        if (!in_wa(v, ft)) continue;
        int changed = 0;
        for (int l = ai + 1; l <= ft.n; ++l)
            if (v(l) != w(l)) ++changed;
        if (changed == m) out.push_back(v);
    }
    return out;
}

std::optional<SpecialCondition> special_condition(const Permutation& w,
                                                  const FlagType& ft) {
    if (!in_wa(w, ft)) return std::nullopt;
    const auto dd = descent_data(w);
    if (!dd.delta) return std::nullopt;  // multiple descents (or identity)
    const int delta = *dd.delta;
    auto it = std::find(ft.a.begin(), ft.a.end(), delta);
    if (it == ft.a.end()) return std::nullopt;
    // Single-row shape: identity prefix, one jump at the descent.  The
    // ascending suffix is then automatic for a single-descent element.
    for (int j = 1; j < delta; ++j)
        if (w(j) != j) return std::nullopt;
    return SpecialCondition{static_cast<int>(it - ft.a.begin()) + 1,
                            w(delta) - delta};
}

unsigned long long chain_degree(const SchubertData& sd) {
    const FlagType& ft = sd.flag_type;
    std::vector<SpecialCondition> specials;
    for (const auto& w : sd.conditions) {
        auto sc = special_condition(w, ft);
        if (!sc)
            throw std::invalid_argument("chain_degree needs special conditions; " +
                                        w.to_string() + " is not one");
        specials.push_back(*sc);
    }

    std::map<Permutation, unsigned long long> layer{{Permutation::identity(ft.n), 1}};
    for (const auto& sc : specials) {
        std::map<Permutation, unsigned long long> next;
        for (const auto& [u, mult] : layer)
            for (const auto& v : pieri_lambda(u, ft, sc.block_index, sc.codim))
                next[v] += mult;
        layer = std::move(next);
    }

    const Permutation top = longest_wa(ft);
    auto it = layer.find(top);
    return it == layer.end() ? 0ull : it->second;
}

}  // namespace osculant
