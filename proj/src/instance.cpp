#include "osculant/instance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "osculant/conditions.hpp"
#include "osculant/linalg.hpp"
#include "osculant/osculating.hpp"

namespace osculant {

std::vector<char> condition_labels(const SchubertData& sd) {
    std::vector<char> labels;
    labels.reserve(sd.conditions.size());
    std::map<Permutation, char> opaque;
    for (const auto& w : sd.conditions) {
        const auto dd = descent_data(w);
        if (dd.grassmannian) {
            if (*dd.delta > 9)
                throw std::invalid_argument("descent position exceeds single-digit labels");
            labels.push_back(static_cast<char>('0' + *dd.delta));
        } else {
            auto it = opaque.find(w);
            if (it == opaque.end()) {
                const char next = static_cast<char>('A' + opaque.size());
                if (next > 'Z')
                    throw std::invalid_argument("too many distinct non-Grassmannian conditions");
                it = opaque.emplace(w, next).first;
            }
            labels.push_back(it->second);
        }
    }
    return labels;
}

namespace {

// mpq_class(num, den) does not canonicalize; normalize before any arithmetic.
std::vector<Rational> check_points(const std::vector<Rational>& points, size_t expected) {
    if (points.size() != expected)
        throw std::invalid_argument("point count does not match condition count");
    std::vector<Rational> canonical = points;
    std::set<Rational> seen;
    for (auto& t : canonical) {
        t.canonicalize();
        if (sign(t) == 0)
            throw std::invalid_argument("points must be nonzero (the chart is centered at F(0))");
        if (!seen.insert(t).second)
            throw std::invalid_argument("points must be pairwise distinct");
    }
    return canonical;
}

}  // namespace

std::vector<MultiPoly> build_system(const SchubertData& sd,
                                    const std::vector<Rational>& points) {
    const std::vector<Rational> pts = check_points(points, sd.conditions.size());
    const CoordMatrix pattern = coordinate_pattern(
        Permutation::identity(sd.flag_type.n), sd.flag_type);
    std::vector<MultiPoly> gens;
    for (size_t i = 0; i < sd.conditions.size(); ++i) {
        if (!in_wa(sd.conditions[i], sd.flag_type))
            throw std::invalid_argument("condition " + sd.conditions[i].to_string() +
                                        " is not in W^a");
        for (const auto& c : condition_set(sd.conditions[i], sd.flag_type)) {
            auto polys = condition_polynomials(c, pts[i], pattern);
            std::move(polys.begin(), polys.end(), std::back_inserter(gens));
        }
    }
    return gens;
}

Instance build_instance(const SchubertData& sd, const std::vector<Rational>& points) {
    if (!validate_schubert_data(sd))
        throw std::invalid_argument("condition lengths do not sum to the flag manifold dimension");
    const std::vector<Rational> pts = check_points(points, sd.conditions.size());

    Instance inst;
    inst.schubert_data = sd;
    inst.points = pts;
    inst.generators = build_system(sd, pts);

    const auto labels = condition_labels(sd);
    std::vector<size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return pts[a] < pts[b]; });
    std::string circular;
    circular.reserve(order.size());
    for (size_t idx : order) circular.push_back(labels[idx]);
    inst.necklace = necklace_canonical(circular);
    return inst;
}

bool membership_check(const std::vector<std::vector<Rational>>& flag_rows,
                      const Permutation& w, const FlagType& ft,
                      const Rational& t) {
    const int n = ft.n;
    if (static_cast<int>(flag_rows.size()) != ft.a.back())
        throw std::invalid_argument("flag must have a_k rows");
    std::vector<std::vector<Rational>> rows = flag_rows;
    for (auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("flag rows must have n entries");
        for (auto& v : row) v.canonicalize();
    }
    // The rows must actually span a flag: the first a_i rows independent.
    {
        std::vector<std::vector<Rational>> all(rows.begin(), rows.end());
        if (matrix_rank(std::move(all)) != ft.a.back())
            throw std::invalid_argument("flag rows are linearly dependent");
    }

    for (const auto& c : condition_set(w, ft)) {
        std::vector<std::vector<Rational>> stacked(rows.begin(),
                                                   rows.begin() + c.block);
        auto osc = osculating_matrix(t, c.osculation_order, n);
        for (auto& row : osc) stacked.push_back(std::move(row));
        if (matrix_rank(std::move(stacked)) > c.rank_bound) return false;
    }
    return true;
}

bool membership_check(const std::vector<Rational>& values, const Permutation& w,
                      const FlagType& ft, const Rational& t) {
    const CoordMatrix pattern = coordinate_pattern(Permutation::identity(ft.n), ft);
    std::vector<std::vector<Rational>> rows;
    rows.reserve(static_cast<size_t>(pattern.rows()));
    for (int i = 1; i <= pattern.rows(); ++i)
        rows.push_back(pattern.numeric_row(i, values));
    return membership_check(rows, w, ft, t);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << "# flag_type " << inst.schubert_data.flag_type.to_string() << "\n";
    os << "# conditions ";
    for (size_t i = 0; i < inst.schubert_data.conditions.size(); ++i) {
        if (i) os << ",";
        os << inst.schubert_data.conditions[i].to_string();
    }
    os << "\n# points ";
    for (size_t i = 0; i < inst.points.size(); ++i) {
        if (i) os << ",";
        os << rational_to_string(inst.points[i]);
    }
    os << "\n# necklace " << inst.necklace << "\n";
    for (const auto& g : inst.generators) os << g.to_string() << "\n";
    return os.str();
}

}  // namespace osculant
