#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycroots/common.hpp"
#include "cycroots/rootgen.hpp"
#include "cycroots/spectral.hpp"
#include "cycroots/verify.hpp"

namespace cycroots {

struct EnnCount {
    std::int64_t h = 1;
    int p = 2;
    bool gcd_ok = false;
    int r1 = 0;
    int r2 = 0;
    int c = 0;        // Complex classes
    int c_pairs = 0;  // conjugate pairs among them; the exponent used in p^c
    bool derogatory = false;
    std::optional<std::int64_t> count;  // nullopt on overflow
    std::string rule;
};

/// Checks that the form comes from a real, nonnegative, nonsingular,
/// irreducible matrix with cyclic index h >= 2. Throws PreconditionError
/// naming the failing property.
void require_irreducible_imprimitive(const CyclicJordanForm& form);

/// 0 when gcd(h, p) > 1. Otherwise 2^(r1-1) p^c (p even, r2 = 0), 0 (p even,
/// r2 > 0) or p^c (p odd), with c the number of conjugate pairs of Complex
/// classes.
EnnCount count_enn_primary_roots(const CyclicJordanForm& form, int p);

struct EnnEnumeration {
    std::vector<RootCandidate> roots;
    std::vector<EnnVerdict> verdicts;
    std::optional<std::int64_t> total;  // size of the selection space before the cap
    bool truncated = false;
    std::string diagnostic;
};

/// Per class, the admissible shifted tuples: the Perron class takes the
/// unique tuple j*, self-conjugate classes take the shifts whose images stay
/// closed under conjugation, and of a conjugate pair only the first class is
/// free while the second follows by conjugation. Every emitted root is
/// checked with power_verdict; a failing candidate raises NumericalError.
EnnEnumeration enumerate_enn_roots(const CyclicJordanForm& form, int p, std::size_t cap = 64,
                                   const VerifyOptions& opts = {});

struct ExistenceReport {
    bool exists = false;
    bool primary_exists = false;
    std::string reason;
};

/// An eventually nonnegative p-th root exists iff a real p-th root exists and
/// gcd(h, p) = 1. For p even a real root needs the Jordan blocks at negative
/// eigenvalues to pair up; primary real roots need r2 = 0.
ExistenceReport enn_root_exists(const CyclicJordanForm& form, int p);

struct NilpotentGroup {
    int m = 0;                         // size of the nilpotent block being split
    std::vector<std::size_t> blocks;  // zero blocks of the form it produces
};

struct SingularReport {
    std::vector<int> zero_block_sizes;
    bool nilpotent_root_exists = false;
    std::vector<NilpotentGroup> groups;
    MatrixXr X0;  // real p-th root of J_0 in the zero-block coordinates
    EnnCount nonsingular_count;
    std::vector<RootCandidate> witnesses;
    std::string diagnostic;
};

/// Splits J_0 into groups that are the p-th powers of single nilpotent
/// blocks. When possible, composes Z (X_0 + X_1) Z^{-1} with X_1 from the
/// eventually nonnegative selections of the nonsingular part.
SingularReport classify_singular(const CyclicJordanForm& form, int p, std::size_t cap = 64,
                                 const VerifyOptions& opts = {});

/// Groups of nilpotent block sizes realisable as p-th powers of single
/// nilpotent blocks; nullopt when no grouping exists.
std::optional<std::vector<std::vector<int>>> nilpotent_root_grouping(const std::vector<int>& sizes, int p);

/// A 0/1 matrix N with N^p equal to the direct sum of J_s(0) for s in sizes.
/// The sizes must be the p-split of J_m(0), m = sum of sizes.
MatrixXr nilpotent_root(const std::vector<int>& sizes, int p);

Characterization check_eventual_nonnegativity_characterization(const MatrixXr& x);

struct ReducibleBlock {
    std::vector<int> vertices;
    int h = 1;
    bool has_real_root = false;
    bool gcd_ok = false;
};

struct CompletelyReducibleReport {
    bool applicable = false;
    bool holds = false;
    std::vector<ReducibleBlock> blocks;
    std::vector<std::string> warnings;
    std::string reason;
};

CompletelyReducibleReport completely_reducible_criterion(const MatrixXr& a, int p);

struct StochasticRootReport {
    int h = 1;
    int p = 2;
    MatrixXc root;
    std::vector<double> row_sums;
    double min_entry = 0.0;
    double max_imag = 0.0;
    double max_row_sum_error = 0.0;
    bool stochastic = false;
    std::string reason;
};

/// Principal p-th root of a stochastic, irreducible, imprimitive matrix.
/// Throws PreconditionError on bad input and DomainError when an eigenvalue
/// lies on the negative real axis.
StochasticRootReport stochastic_principal_root_check(const MatrixXr& a, int p);

struct ClassificationReport {
    int h = 1;
    int p = 2;
    bool gcd_ok = false;
    bool p_even = false;
    int r1 = 0;
    int r2 = 0;
    int c = 0;
    int c_pairs = 0;
    bool derogatory = false;
    std::optional<std::int64_t> primary_roots;
    std::optional<std::int64_t> enn_primary_count;
    bool existence = false;
    std::string existence_reason;
    std::vector<RootCandidate> witnesses;
    std::vector<std::string> warnings;
};

ClassificationReport classify(const CyclicJordanForm& form, int p, std::size_t cap = 64,
                              const VerifyOptions& opts = {});

}  // namespace cycroots
