#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cycroots/common.hpp"

namespace cycroots {

struct JordanBlock {
    Complex eigenvalue{0.0, 0.0};
    int size = 1;
};

/// The h blocks J_r(lambda w^k), k = 0..h-1. Member k has eigenvalue
/// approximately base_eigenvalue * w^k; the base is the member whose argument
/// lies in [0, 2 pi / h).
struct CyclicFamily {
    Complex base_eigenvalue{0.0, 0.0};
    int block_size = 1;
    int h = 1;
    std::vector<JordanBlock> members;
    std::vector<std::size_t> block_index;  // member k -> position in the source block list
};

enum class FamilyLabel { Plus, Minus, Complex };

const char* to_string(FamilyLabel label);

/// Families with identical eigenvalue sets. Primary roots must treat every
/// family of a class alike.
struct FamilyClass {
    std::vector<std::size_t> families;
    FamilyLabel label = FamilyLabel::Plus;
    std::optional<std::size_t> conjugate;  // class holding the conjugate eigenvalues
};

struct SpectralTolerances {
    double cluster = 1e-8;    // eigenvalues closer than cluster * max(1, rho) count as clustered
    double singular = 1e-12;  // smallest / largest singular value below this means singular
    double real = 1e-10;      // |Im z| <= real * max(1, |z|) means real
    double family = 1e-6;     // relative match tolerance when grouping rotated eigenvalues
    std::optional<double> recon;  // default 1e-8 * n * ||A||_inf
};

/// Z and the Jordan matrix J = diag(families), with Z J Z^{-1} = source.
/// Blocks are stored family-major: family f, member k sits at index f*h + k.
struct CyclicJordanForm {
    MatrixXc Z;
    MatrixXc Z_inv;
    std::vector<JordanBlock> blocks;
    std::vector<Eigen::Index> offsets;  // first column of each block
    int h = 1;
    std::vector<CyclicFamily> families;
    std::vector<FamilyLabel> labels;  // per family
    std::vector<FamilyClass> classes;
    std::vector<std::size_t> zero_blocks;  // singular blocks, stored after the families
    // Counts over classes (distinct eigenvalue sets).
    int r1 = 0;
    int r2 = 0;
    int c = 0;
    int complex_pairs = 0;           // conjugate pairs among the Complex classes
    int self_conjugate_complex = 0;  // Complex classes closed under conjugation
    bool derogatory = false;
    MatrixXc source;
    bool real_source = false;
    SpectralTolerances tol;

    int n() const { return static_cast<int>(Z.rows()); }
    MatrixXc jordan_matrix() const;
    double reconstruction_residual() const;
    bool all_blocks_scalar() const;
    bool nonsingular() const;
};

struct SpectrumMultiset {
    std::vector<Complex> values;

    double radius() const;
    SpectrumMultiset conjugate() const;
    SpectrumMultiset rotated(int h) const;
};

SpectrumMultiset spectrum_of(const MatrixXr& matrix);
SpectrumMultiset spectrum_of(const MatrixXc& matrix);

/// Multiset equality up to tol * max(1, max |z|).
bool multiset_equal(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol);

/// Numeric path. Rejects singular input (SingularityError) and clustered
/// spectra (NumericalError; such matrices must come in as a Jordan pair).
/// When h is not given it is read from the zero pattern of the matrix.
CyclicJordanForm eigendecompose(const MatrixXr& matrix, const SpectralTolerances& tol = {},
                                std::optional<int> h = std::nullopt, double zero_tol = 0.0);
CyclicJordanForm eigendecompose(const MatrixXc& matrix, const SpectralTolerances& tol = {},
                                std::optional<int> h = std::nullopt, double zero_tol = 0.0);

/// Exact-input path: the caller supplies Z and the Jordan blocks (in Z's
/// column order). Nonzero blocks not closed under rotation by w_h raise
/// StructureError; zero blocks are kept apart in `zero_blocks`.
CyclicJordanForm from_jordan_pair(const MatrixXc& Z, const std::vector<JordanBlock>& blocks, int h,
                                  const SpectralTolerances& tol = {});

/// Partitions the blocks into cyclic families. Throws StructureError when a
/// block has no partner of equal size at some rotation.
std::vector<CyclicFamily> group_into_families(const std::vector<JordanBlock>& blocks, int h,
                                              double tol = 1e-6);

/// Fills labels, classes and the (r1, r2, c) counts of a form.
void partition_families(CyclicJordanForm& form);

FamilyLabel label_of(const CyclicFamily& family, double real_tol = 1e-10);

/// Index of the family J(rho nu_h, 1), if present.
std::optional<std::size_t> perron_family(const CyclicJordanForm& form);

struct FrobeniusTest {
    bool ok = false;
    std::optional<int> h;
};

FrobeniusTest is_self_conjugate_frobenius_set(const SpectrumMultiset& s, double tol = 1e-8);

/// Whether s splits into self-conjugate Frobenius sets. nullopt when the
/// search budget runs out.
std::optional<bool> is_union_of_self_conjugate_frobenius_sets(const SpectrumMultiset& s, double tol = 1e-8);

struct PerronVectors {
    double rho = 0.0;
    VectorXr right;  // A x = rho x
    VectorXr left;   // y^T A = rho y^T, scaled so y^T x = 1
};

/// Perron root and eigenvectors of a real matrix, sign-normalised to
/// positive sums. Nothing is asserted about positivity here.
PerronVectors perron_vectors(const MatrixXr& a);

struct PerronFrobeniusReport {
    double rho = 0.0;
    int h = 1;
    bool rho_positive_eigenvalue = false;      // rho > 0 and rho in spectrum
    bool positive_eigenvectors = false;        // left and right Perron vectors strictly positive
    bool simple = false;                       // rho algebraically simple
    bool peripheral_matches = false;           // peripheral spectrum = rho * Omega_h
    bool rotation_invariant = false;           // w^k spectrum = spectrum
    VectorXr right;
    VectorXr left;
    std::vector<std::string> failed;

    bool all_pass() const { return failed.empty(); }
};

/// Checks the Perron-Frobenius conclusions for a nonnegative irreducible
/// matrix. Throws PreconditionError on negative entries or reducible input.
PerronFrobeniusReport verify_perron_frobenius(const MatrixXr& a, double tol = 1e-8);

}  // namespace cycroots
