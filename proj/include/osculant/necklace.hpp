#pragma once

#include <map>
#include <string>
#include <vector>

namespace osculant {

// A necklace is a circular arrangement of condition labels, considered up to
// rotation and reflection.  Stored as its canonical string form.
using Necklace = std::string;

// Lexicographically minimal string among all rotations of `labels` and of
// its reversal.  Idempotent.
Necklace necklace_canonical(const std::string& labels);

// All distinct canonical necklaces over the multiset (label -> count),
// sorted.  Equivalence includes reflection.
std::vector<Necklace> enumerate_necklaces(const std::map<char, int>& multiset);

// True iff every label is a descent digit (all conditions Grassmannian) and
// some rotation of the circular sequence, in either orientation, is weakly
// increasing.
bool is_monotone(const Necklace& nk);

}  // namespace osculant
