#include "osculant/necklace.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace osculant {

namespace {

std::string min_rotation(const std::string& s) {
    std::string best = s;
    std::string cur = s;
    for (size_t k = 1; k < s.size(); ++k) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

}  // namespace

Necklace necklace_canonical(const std::string& labels) {
    if (labels.empty()) throw std::invalid_argument("empty necklace");
    std::string rev(labels.rbegin(), labels.rend());
    return std::min(min_rotation(labels), min_rotation(rev));
}

std::vector<Necklace> enumerate_necklaces(const std::map<char, int>& multiset) {
    std::string word;
    for (const auto& [label, count] : multiset) {
        if (count < 1) throw std::invalid_argument("multiset counts must be positive");
        word.append(static_cast<size_t>(count), label);
    }
    if (word.empty()) throw std::invalid_argument("empty multiset");

    std::set<Necklace> seen;
    std::sort(word.begin(), word.end());
    do {
        seen.insert(necklace_canonical(word));
    } while (std::next_permutation(word.begin(), word.end()));
    return {seen.begin(), seen.end()};
}

bool is_monotone(const Necklace& nk) {
    if (nk.empty()) throw std::invalid_argument("empty necklace");
    // Monotonicity is about the descent of each condition, so it is only
    // defined when every condition is Grassmannian (digit labels).
    for (char c : nk)
        if (c < '0' || c > '9') return false;
    for (int orient = 0; orient < 2; ++orient) {
        std::string s = orient ? std::string(nk.rbegin(), nk.rend()) : nk;
        for (size_t k = 0; k < s.size(); ++k) {
            bool ok = true;
            for (size_t i = 0; i + 1 < s.size() && ok; ++i)
                ok = s[(k + i) % s.size()] <= s[(k + i + 1) % s.size()];
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace osculant
