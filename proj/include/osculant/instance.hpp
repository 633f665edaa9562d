#pragma once

#include <string>
#include <vector>

#include "osculant/multipoly.hpp"
#include "osculant/necklace.hpp"
#include "osculant/pattern.hpp"
#include "osculant/permutation.hpp"

namespace osculant {

// One evaluated intersection problem: condition i of schubert_data is
// imposed at points[i]; generators cut out the intersection inside the
// M_iota chart.
struct Instance {
    SchubertData schubert_data;
    std::vector<Rational> points;
    std::vector<MultiPoly> generators;
    Necklace necklace;
};

// One label per condition: the digit character of delta(w) for Grassmannian
// conditions; capital letters 'A', 'B', ... for non-Grassmannian ones, one
// letter per distinct permutation in order of first appearance.
std::vector<char> condition_labels(const SchubertData& sd);

// Generators of the intersection in the M_iota chart, condition i imposed
// at points[i].  Validates only membership of the conditions in W^a and
// that points are pairwise distinct and nonzero (the chart is centered at
// F(0)).  Suitable for deliberately overdetermined data.
std::vector<MultiPoly> build_system(const SchubertData& sd,
                                    const std::vector<Rational>& points);

// Full instance construction; additionally requires the condition lengths
// to sum to the flag manifold dimension and computes the necklace from the
// circular order of the points.
Instance build_instance(const SchubertData& sd, const std::vector<Rational>& points);

// Does the flag spanned by the rows (first a_i rows spanning E_{a_i})
// satisfy every essential condition of w at parameter t?  Exact rank
// computation on stacked matrices.
bool membership_check(const std::vector<std::vector<Rational>>& flag_rows,
                      const Permutation& w, const FlagType& ft,
                      const Rational& t);

// Convenience overload: values fill in the pattern M_iota.
bool membership_check(const std::vector<Rational>& values, const Permutation& w,
                      const FlagType& ft, const Rational& t);

// Plain-text canonical form: header (flag type, conditions, points,
// necklace), then one generator per line; bit-identical across runs.
std::string serialize_instance(const Instance& inst);

}  // namespace osculant
