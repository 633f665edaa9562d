#include "osculant/pattern.hpp"

#include <sstream>
#include <stdexcept>

namespace osculant {

std::vector<MultiPoly> CoordMatrix::symbolic_row(int i, int total_vars) const {
    if (total_vars < variable_count_)
        throw std::invalid_argument("total_vars below pattern variable count");
    std::vector<MultiPoly> row;
    row.reserve(static_cast<size_t>(cols_));
    for (int j = 1; j <= cols_; ++j) {
        const PatternEntry& e = entry(i, j);
        switch (e.kind) {
            case EntryKind::Zero:
                row.push_back(MultiPoly::zero(total_vars));
                break;
            case EntryKind::One:
                row.push_back(MultiPoly::constant(total_vars, Rational(1)));
                break;
            case EntryKind::Variable:
                row.push_back(MultiPoly::variable(total_vars, e.var));
                break;
        }
    }
    return row;
}

std::vector<Rational> CoordMatrix::numeric_row(
    int i, const std::vector<Rational>& values) const {
    if (static_cast<int>(values.size()) != variable_count_)
        throw std::invalid_argument("value list has wrong arity");
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(cols_));
    for (int j = 1; j <= cols_; ++j) {
        const PatternEntry& e = entry(i, j);
        switch (e.kind) {
            case EntryKind::Zero: row.push_back(Rational(0)); break;
            case EntryKind::One: row.push_back(Rational(1)); break;
            case EntryKind::Variable: {
                Rational v = values[static_cast<size_t>(e.var)];
                v.canonicalize();  // mpq_class(num, den) is lazy
                row.push_back(std::move(v));
                break;
            }
        }
    }
    return row;
}

std::string CoordMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) os << " ";
            const PatternEntry& e = entry(i, j);
            switch (e.kind) {
                case EntryKind::Zero: os << "0"; break;
                case EntryKind::One: os << "1"; break;
                case EntryKind::Variable: os << "x" << (e.var + 1); break;
            }
        }
        os << "\n";
    }
    return os.str();
}

CoordMatrix coordinate_pattern(const Permutation& w, const FlagType& ft) {
    if (!in_wa(w, ft))
        throw std::invalid_argument("permutation " + w.to_string() +
                                    " is not in W^a for " + ft.to_string());
    const int n = ft.n;
    const int rows = ft.a.back();
    CoordMatrix m(rows, n);
    int next_var = 0;
    for (int i = 1; i <= rows; ++i) {
        for (int j = 1; j <= n; ++j) {
            PatternEntry& e = m.at(i, j);
            if (j == w(i)) {
                e.kind = EntryKind::One;
                continue;
            }
            const int wi = w.inverse_image(j);
            bool zero = j < w(i) || wi < i;
            if (!zero) {
                // a_l < i < w^-1(j) <= a_{l+1} for some block l (a_0 = 0)
                int prev = 0;
                for (int al1 : ft.a) {
                    if (prev < i && i < wi && wi <= al1) {
                        zero = true;
                        break;
                    }
                    prev = al1;
                }
            }
            if (zero) {
                e.kind = EntryKind::Zero;
            } else {
                e.kind = EntryKind::Variable;
                e.var = next_var++;
            }
        }
    }
    m.variable_count_ = next_var;
    return m;
}

}  // namespace osculant
