#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "cycroots/common.hpp"
#include "cycroots/spectral.hpp"

namespace fixtures {

using cycroots::Complex;
using cycroots::MatrixXc;
using cycroots::MatrixXr;

inline Complex omega(int h, int k = 1) { return std::polar(1.0, cycroots::kTwoPi * k / h); }

// 3-cyclic stochastic 6x6 matrix with parts {0,1}, {2,3}, {4,5}.
inline MatrixXr three_cyclic_a() {
    MatrixXr a(6, 6);
    a << 0, 0, 2, 1, 0, 0,  //
        0, 0, 1, 2, 0, 0,   //
        0, 0, 0, 0, 2, 1,   //
        0, 0, 0, 0, 1, 2,   //
        2, 1, 0, 0, 0, 0,   //
        1, 2, 0, 0, 0, 0;
    return a / 3.0;
}

// Eigenvectors of three_cyclic_a for eigenvalues 1, w, w^2, 1/3, w/3, w^2/3.
inline MatrixXc three_cyclic_z() {
    const Complex w = omega(3);
    const Complex w2 = w * w;
    MatrixXc z(6, 6);
    z << 1, 1, 1, 1, 1, 1,     //
        1, 1, 1, -1, -1, -1,   //
        1, w, w2, 1, w, w2,    //
        1, w, w2, -1, -w, -w2, //
        1, w2, w, 1, w2, w,    //
        1, w2, w, -1, -w2, -w;
    return z;
}

inline std::vector<cycroots::JordanBlock> three_cyclic_blocks() {
    const Complex w = omega(3);
    return {{1.0, 1}, {w, 1}, {w * w, 1}, {1.0 / 3.0, 1}, {w / 3.0, 1}, {w * w / 3.0, 1}};
}

// The two eventually nonnegative square roots of three_cyclic_a.
inline MatrixXr three_cyclic_root(bool hat) {
    const double big = (3.0 + std::sqrt(3.0)) / 6.0;
    const double small = (3.0 - std::sqrt(3.0)) / 6.0;
    const double a = hat ? big : small;
    const double b = hat ? small : big;
    MatrixXr x(6, 6);
    x << 0, 0, 0, 0, a, b,  //
        0, 0, 0, 0, b, a,   //
        a, b, 0, 0, 0, 0,   //
        b, a, 0, 0, 0, 0,   //
        0, 0, a, b, 0, 0,   //
        0, 0, b, a, 0, 0;
    return x;
}

inline MatrixXr cycle_permutation(int n) {
    MatrixXr c = MatrixXr::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        c(i, (i + 1) % n) = 1.0;
    }
    return c;
}

// Square of the 4-cycle: two disjoint 2-cycles.
inline MatrixXr two_by_two_cycles() {
    MatrixXr b(4, 4);
    b << 0, 0, 1, 0,  //
        0, 0, 0, 1,   //
        1, 0, 0, 0,   //
        0, 1, 0, 0;
    return b;
}

// Nonnegative irreducible h-cyclic matrix with h parts of size m, laid out
// consecutively. Block (l, l+1) has entries drawn from [lo, 1].
inline MatrixXr random_cyclic(int h, int m, std::mt19937_64& rng, double lo = 0.05) {
    std::uniform_real_distribution<double> u(lo, 1.0);
    const int n = h * m;
    MatrixXr a = MatrixXr::Zero(n, n);
    for (int l = 0; l < h; ++l) {
        const int next = (l + 1) % h;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                a(l * m + i, next * m + j) = u(rng);
            }
        }
    }
    return a;
}

// h-cyclic pattern with signed entries; spectra include Minus and Complex families.
inline MatrixXr random_signed_cyclic(int h, int m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int n = h * m;
    MatrixXr a = MatrixXr::Zero(n, n);
    for (int l = 0; l < h; ++l) {
        const int next = (l + 1) % h;
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                a(l * m + i, next * m + j) = u(rng);
            }
        }
    }
    return a;
}

}  // namespace fixtures
