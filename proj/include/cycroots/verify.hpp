#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cycroots/common.hpp"
#include "cycroots/rootgen.hpp"
#include "cycroots/spectral.hpp"
#include "cycroots/structure.hpp"

namespace cycroots {

enum class Verdict { EventuallyNonnegative, NotEventuallyNonnegative, Inconclusive };

const char* to_string(Verdict v);

struct Violation {
    int power = 0;
    int row = 0;
    int col = 0;
    double value = 0.0;
};

struct VerifyOptions {
    int k_max = 200;
    double neg_tol = 1e-10;   // relative to max |entry| of each power
    double zero_tol = 1e-9;   // relative threshold for reading digraphs of computed matrices
    double imag_tol = 1e-9;   // relative threshold for treating a complex matrix as real
};

struct EnnVerdict {
    Verdict verdict = Verdict::Inconclusive;
    std::optional<int> power_index_estimate;
    std::optional<Violation> first_violation;
    int k_max = 0;
    std::string reason;
};

/// Outcome of the spectral characterization for an irreducible matrix with
/// cyclic index h > 1: peripheral spectrum rho * Omega_h, all simple, and
/// strictly positive Perron vectors.
struct Characterization {
    bool applicable = false;  // X irreducible with cyclic index > 1
    bool holds = false;
    int h = 1;
    std::string reason;
};

Characterization eventual_nonnegativity_characterization(const MatrixXr& x, double zero_tol = 1e-9);

/// Smallest k0 <= k_max with X^k >= -neg_tol * max|X^k| for every k in
/// [k0, k_max]; 0 for a nonnegative matrix, nullopt when X^{k_max} still
/// has a negative entry.
std::optional<int> power_index_estimate(const MatrixXr& x, int k_max = 200, double neg_tol = 1e-10);

/// Tri-state eventual nonnegativity. Powers alone never prove the property;
/// a nonnegative tail is upgraded to a verdict only with structural backing.
EnnVerdict power_verdict(const MatrixXr& x, const VerifyOptions& opts = {});
EnnVerdict power_verdict(const MatrixXc& x, const VerifyOptions& opts = {});

struct PeripheralSplit {
    MatrixXc X1;
    MatrixXc X2;
    std::optional<std::int64_t> q;  // permutation exponent, when gcd(h, p) = 1
    double rho1 = 0.0;
    double rho2 = 0.0;
    double orthogonality = 0.0;  // max(||X1 X2||, ||X2 X1||)
    bool gamma_contained = false;  // digraph of X2 inside digraph of X1

    double rho_ratio() const { return rho1 > 0.0 ? rho2 / rho1 : 0.0; }
    /// max over k = 1..k_max of ||X^k - X1^k - X2^k||_inf.
    double additivity_defect(int k_max = 20) const;
};

/// Splits a root X = Z F Z^{-1} into the part carried by the Perron family
/// and the rest. Throws PreconditionError when h = 1 or the Perron family is
/// missing.
PeripheralSplit peripheral_split(const CyclicJordanForm& form, const RootCandidate& root);

/// The same split applied to the source matrix: X1 = A_1.
PeripheralSplit peripheral_split(const CyclicJordanForm& form);

/// A_1 = rho * h * [x_l y_{l+1}^T] on the cyclic block pattern, with Perron
/// vectors scaled so y^T x = 1.
MatrixXr perron_projection(const MatrixXr& a, const OrderedPartition& partition);

}  // namespace cycroots
