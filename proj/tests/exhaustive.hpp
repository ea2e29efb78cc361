#pragma once

// Exhaustive filters over all primary roots, shared by unit and acceptance tests.

#include <vector>

#include "cycroots/rootgen.hpp"
#include "oracles.hpp"

namespace exhaustive {

using cycroots::MatrixXc;

// Every primary root that passes the power oracle.
inline std::vector<MatrixXc> enn_primary_roots(const cycroots::CyclicJordanForm& form, int p) {
    std::vector<MatrixXc> out;
    cycroots::PrimarySelectionEnumerator it(form, p);
    cycroots::BranchSelection sel;
    while (it.next(sel)) {
        const auto root = cycroots::construct_root(form, sel);
        if (oracles::enn_by_powers(root.X, form.h)) {
            out.push_back(root.X);
        }
    }
    return out;
}

inline bool same_matrix_sets(const std::vector<MatrixXc>& a, const std::vector<MatrixXc>& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    std::vector<bool> used(b.size(), false);
    for (const auto& x : a) {
        bool hit = false;
        for (std::size_t j = 0; j < b.size() && !hit; ++j) {
            if (!used[j] && (x - b[j]).cwiseAbs().maxCoeff() <= tol) {
                used[j] = hit = true;
            }
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

// Nonderogatory h-cyclic nonnegative instances, n = h*m <= 10, whose primary
// root space p^n stays within `budget`.
inline bool fits(int n, int p, double budget) { return std::pow(static_cast<double>(p), n) <= budget; }

}  // namespace exhaustive
