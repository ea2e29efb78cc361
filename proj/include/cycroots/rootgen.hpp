#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cycroots/common.hpp"
#include "cycroots/spectral.hpp"

namespace cycroots {

/// f_j(z) = |z|^(1/p) exp(i (theta + 2 pi j) / p) with theta = arg z in [0, 2 pi).
Complex branch_value(Complex z, int p, std::int64_t j);

/// f_j applied to J_r(lambda): upper triangular Toeplitz with entry (u, u+m)
/// equal to binom(1/p, m) * f_j(lambda) * lambda^(-m).
MatrixXc branch_jordan_block(const JordanBlock& block, int p, std::int64_t j);

/// Direct sum of branch_jordan_block over the members of a family.
MatrixXc branch_family(const CyclicFamily& family, int p, const std::vector<std::int64_t>& tuple);

/// One h-tuple of branch indices per family, in the form's family order.
struct BranchSelection {
    int p = 2;
    std::vector<std::vector<std::int64_t>> per_family;

    /// Throws PreconditionError when the shape does not match the form or an
    /// index lies outside 0..p-1.
    void validate(const CyclicJordanForm& form) const;

    /// Families sharing an eigenvalue set carry identical tuples.
    bool is_primary(const CyclicJordanForm& form) const;

    friend bool operator==(const BranchSelection& a, const BranchSelection& b) {
        return a.p == b.p && a.per_family == b.per_family;
    }
};

struct RootCandidate {
    MatrixXc X;
    BranchSelection selection;
    bool is_real = false;
    bool primary = true;
    double residual = 0.0;

    MatrixXr real_part() const { return X.real(); }
};

/// 1e-8 * n * max(1, ||A||_inf).
double default_root_tol(const CyclicJordanForm& form);

/// Lazily walks the p^s primary selections (s distinct eigenvalues) in
/// lexicographic order: classes in family order, members in rotation order,
/// last index fastest.
class PrimarySelectionEnumerator {
public:
    PrimarySelectionEnumerator(const CyclicJordanForm& form, int p);

    /// p^s, or nullopt if it does not fit in 63 bits.
    std::optional<std::int64_t> total() const { return total_; }
    int distinct_eigenvalues() const { return static_cast<int>(digits_.size()); }

    /// Writes the next selection; false once exhausted.
    bool next(BranchSelection& out);

private:
    const CyclicJordanForm* form_;
    int p_;
    std::vector<std::int64_t> digits_;
    std::optional<std::int64_t> total_;
    bool started_ = false;
    bool done_ = false;

    BranchSelection expand() const;
};

/// X = Z (direct sum of f_j(J_i)) Z^{-1}. Throws NumericalError when
/// ||X^p - A||_inf exceeds root_tol or the eigenvalues of X differ from the
/// branch images of the eigenvalues of A.
RootCandidate construct_root(const CyclicJordanForm& form, const BranchSelection& selection,
                             std::optional<double> root_tol = std::nullopt);

/// X(U) = Z U F U^{-1} Z^{-1} for a nonsingular U commuting with J. Needs a
/// derogatory form and a selection giving different tuples to two families
/// with the same eigenvalues.
RootCandidate construct_derogatory_root(const CyclicJordanForm& form, const BranchSelection& selection,
                                        const MatrixXc& U, std::optional<double> root_tol = std::nullopt);

/// Branch choice whose images lie in the sector |arg| < pi/p: index 0 for
/// arguments in [0, pi), p-1 for arguments in (pi, 2 pi). Throws DomainError
/// when an eigenvalue lies on the negative real axis.
BranchSelection principal_selection(const CyclicJordanForm& form, int p);

/// base^exp; throws SizeError when the result does not fit in 63 bits.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp);

}  // namespace cycroots
