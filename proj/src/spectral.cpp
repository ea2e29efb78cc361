#include "cycroots/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "cycroots/structure.hpp"

namespace cycroots {

namespace {

Complex root_of_unity(int h, int k) {
    if (h <= 1 || k % h == 0) {
        return {1.0, 0.0};
    }
    return std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(h));
}

// Argument in [0, 2 pi) with values just below 2 pi folded to 0, so a
// positive real perturbed by rounding still counts as argument 0.
double folded_arg(Complex z) {
    const double t = arg_0_2pi(z);
    return t > kTwoPi - 1e-9 ? 0.0 : t;
}

// Member of z * Omega_h with the smallest folded argument.
Complex canonical_rotation(Complex z, int h) {
    Complex best = z;
    double best_arg = folded_arg(z);
    for (int k = 1; k < h; ++k) {
        const Complex w = z * root_of_unity(h, k);
        const double a = folded_arg(w);
        if (a < best_arg - 1e-12 || (std::abs(a - best_arg) <= 1e-12 && w.real() > best.real())) {
            best = w;
            best_arg = a;
        }
    }
    return best;
}

Complex snap_real(Complex z, double tol) {
    return is_real_value(z, tol) ? Complex{z.real(), 0.0} : z;
}

double min_singular_ratio(const MatrixXc& m) {
    Eigen::JacobiSVD<MatrixXc> svd(m);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) {
        return 0.0;
    }
    return s(s.size() - 1) / s(0);
}

MatrixXc jordan_assembly(const std::vector<JordanBlock>& blocks, Eigen::Index n) {
    MatrixXc j = MatrixXc::Zero(n, n);
    Eigen::Index off = 0;
    for (const auto& b : blocks) {
        for (int u = 0; u < b.size; ++u) {
            j(off + u, off + u) = b.eigenvalue;
            if (u + 1 < b.size) {
                j(off + u, off + u + 1) = 1.0;
            }
        }
        off += b.size;
    }
    return j;
}

std::vector<Eigen::Index> block_offsets(const std::vector<JordanBlock>& blocks) {
    std::vector<Eigen::Index> off;
    off.reserve(blocks.size());
    Eigen::Index acc = 0;
    for (const auto& b : blocks) {
        off.push_back(acc);
        acc += b.size;
    }
    return off;
}

// Rebuilds the form so blocks run family-major, followed by the zero blocks.
void reorder_family_major(CyclicJordanForm& form, const std::vector<JordanBlock>& blocks, const MatrixXc& Z,
                          std::vector<CyclicFamily> families, const std::vector<std::size_t>& zero_blocks) {
    const auto old_off = block_offsets(blocks);
    std::vector<std::size_t> order;
    for (auto& f : families) {
        for (auto& idx : f.block_index) {
            order.push_back(idx);
            idx = order.size() - 1;
        }
    }
    for (auto idx : zero_blocks) {
        form.zero_blocks.push_back(order.size());
        order.push_back(idx);
    }
    form.blocks.clear();
    form.Z.resize(Z.rows(), Z.cols());
    Eigen::Index col = 0;
    for (auto idx : order) {
        const auto& b = blocks[idx];
        form.blocks.push_back(b);
        form.Z.middleCols(col, b.size) = Z.middleCols(old_off[idx], b.size);
        col += b.size;
    }
    form.offsets = block_offsets(form.blocks);
    form.families = std::move(families);
}

}  // namespace

const char* to_string(FamilyLabel label) {
    switch (label) {
        case FamilyLabel::Plus:
            return "plus";
        case FamilyLabel::Minus:
            return "minus";
        case FamilyLabel::Complex:
            return "complex";
    }
    return "?";
}

MatrixXc CyclicJordanForm::jordan_matrix() const { return jordan_assembly(blocks, Z.rows()); }

double CyclicJordanForm::reconstruction_residual() const {
    return inf_norm(MatrixXc(Z * jordan_matrix() * Z_inv - source));
}

bool CyclicJordanForm::all_blocks_scalar() const {
    return std::all_of(blocks.begin(), blocks.end(), [](const JordanBlock& b) { return b.size == 1; });
}

bool CyclicJordanForm::nonsingular() const { return zero_blocks.empty(); }

double SpectrumMultiset::radius() const {
    double r = 0.0;
    for (auto z : values) {
        r = std::max(r, std::abs(z));
    }
    return r;
}

SpectrumMultiset SpectrumMultiset::conjugate() const {
    SpectrumMultiset out{values};
    for (auto& z : out.values) {
        z = std::conj(z);
    }
    return out;
}

SpectrumMultiset SpectrumMultiset::rotated(int h) const {
    SpectrumMultiset out{values};
    const Complex w = root_of_unity(h, 1);
    for (auto& z : out.values) {
        z *= w;
    }
    return out;
}

SpectrumMultiset spectrum_of(const MatrixXc& matrix) {
    require_square(matrix.rows(), matrix.cols(), "spectrum_of");
    Eigen::ComplexEigenSolver<MatrixXc> es(matrix, false);
    if (es.info() != Eigen::Success) {
        throw NumericalError("spectrum_of: eigensolver did not converge");
    }
    SpectrumMultiset s;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        s.values.push_back(es.eigenvalues()(i));
    }
    return s;
}

SpectrumMultiset spectrum_of(const MatrixXr& matrix) {
    auto s = spectrum_of(MatrixXc(matrix.cast<Complex>()));
    for (auto& z : s.values) {
        z = snap_real(z, 1e-10);
    }
    return s;
}

bool multiset_equal(const std::vector<Complex>& a, const std::vector<Complex>& b, double tol) {
    if (a.size() != b.size()) {
        return false;
    }
    double scale = 1.0;
    for (auto z : a) {
        scale = std::max(scale, std::abs(z));
    }
    for (auto z : b) {
        scale = std::max(scale, std::abs(z));
    }
    std::vector<bool> used(b.size(), false);
    for (auto z : a) {
        std::size_t best = b.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (!used[i]) {
                const double d = std::abs(z - b[i]);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
        }
        if (best == b.size() || best_d > tol * scale) {
            return false;
        }
        used[best] = true;
    }
    return true;
}

std::vector<CyclicFamily> group_into_families(const std::vector<JordanBlock>& blocks, int h, double tol) {
    if (h < 1) {
        throw DomainError("group_into_families: h must be positive");
    }
    for (const auto& b : blocks) {
        if (b.size < 1) {
            throw StructureError("group_into_families: block size must be at least 1");
        }
    }
    std::vector<CyclicFamily> out;
    std::vector<bool> used(blocks.size(), false);
    for (std::size_t start = 0; start < blocks.size(); ++start) {
        if (used[start]) {
            continue;
        }
        const auto& b = blocks[start];
        const Complex base = canonical_rotation(b.eigenvalue, h);
        const double scale = std::max(1.0, std::abs(base));
        CyclicFamily fam;
        fam.block_size = b.size;
        fam.h = h;
        std::vector<std::size_t> chosen;
        for (int k = 0; k < h; ++k) {
            const Complex target = base * root_of_unity(h, k);
            std::size_t best = blocks.size();
            double best_d = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                if (used[i] || blocks[i].size != b.size ||
                    std::find(chosen.begin(), chosen.end(), i) != chosen.end()) {
                    continue;
                }
                const double d = std::abs(blocks[i].eigenvalue - target);
                if (d < best_d) {
                    best_d = d;
                    best = i;
                }
            }
            if (best == blocks.size() || best_d > tol * scale) {
                throw StructureError("group_into_families: block J_" + std::to_string(b.size) + "(" +
                                     std::to_string(b.eigenvalue.real()) + (b.eigenvalue.imag() < 0 ? "" : "+") +
                                     std::to_string(b.eigenvalue.imag()) + "i) has no partner of the same size at " +
                                     "rotation w^" + std::to_string(k) + " (h = " + std::to_string(h) + ")");
            }
            chosen.push_back(best);
        }
        for (auto i : chosen) {
            used[i] = true;
            fam.members.push_back(blocks[i]);
            fam.block_index.push_back(i);
        }
        fam.base_eigenvalue = fam.members.front().eigenvalue;
        out.push_back(std::move(fam));
    }
    // Canonical order: decreasing modulus, then argument, then block size.
    std::stable_sort(out.begin(), out.end(), [](const CyclicFamily& a, const CyclicFamily& b) {
        const double ma = std::abs(a.base_eigenvalue);
        const double mb = std::abs(b.base_eigenvalue);
        if (std::abs(ma - mb) > 1e-9 * std::max(1.0, std::max(ma, mb))) {
            return ma > mb;
        }
        const double aa = folded_arg(a.base_eigenvalue);
        const double ab = folded_arg(b.base_eigenvalue);
        if (std::abs(aa - ab) > 1e-9) {
            return aa < ab;
        }
        return a.block_size < b.block_size;
    });
    return out;
}

FamilyLabel label_of(const CyclicFamily& family, double real_tol) {
    bool positive = false;
    for (const auto& m : family.members) {
        if (is_real_value(m.eigenvalue, real_tol)) {
            if (m.eigenvalue.real() < 0.0) {
                return FamilyLabel::Minus;
            }
            if (m.eigenvalue.real() > 0.0) {
                positive = true;
            }
        }
    }
    return positive ? FamilyLabel::Plus : FamilyLabel::Complex;
}

void partition_families(CyclicJordanForm& form) {
    const double ftol = form.tol.family;
    form.labels.clear();
    form.classes.clear();
    for (const auto& f : form.families) {
        form.labels.push_back(label_of(f, form.tol.real));
    }
    auto same_base = [&](Complex a, Complex b) { return std::abs(a - b) <= ftol * std::max(1.0, std::abs(a)); };
    for (std::size_t i = 0; i < form.families.size(); ++i) {
        bool placed = false;
        for (auto& cls : form.classes) {
            if (same_base(form.families[cls.families.front()].base_eigenvalue, form.families[i].base_eigenvalue)) {
                cls.families.push_back(i);
                placed = true;
                break;
            }
        }
        if (!placed) {
            FamilyClass cls;
            cls.families.push_back(i);
            cls.label = form.labels[i];
            form.classes.push_back(cls);
        }
    }
    for (auto& cls : form.classes) {
        const Complex target = canonical_rotation(std::conj(form.families[cls.families.front()].base_eigenvalue), form.h);
        for (std::size_t k = 0; k < form.classes.size(); ++k) {
            if (same_base(form.families[form.classes[k].families.front()].base_eigenvalue, target)) {
                cls.conjugate = k;
                break;
            }
        }
    }
    form.r1 = form.r2 = form.c = 0;
    form.complex_pairs = form.self_conjugate_complex = 0;
    form.derogatory = false;
    for (std::size_t k = 0; k < form.classes.size(); ++k) {
        const auto& cls = form.classes[k];
        form.derogatory = form.derogatory || cls.families.size() > 1;
        switch (cls.label) {
            case FamilyLabel::Plus:
                ++form.r1;
                break;
            case FamilyLabel::Minus:
                ++form.r2;
                break;
            case FamilyLabel::Complex:
                ++form.c;
                if (cls.conjugate && *cls.conjugate == k) {
                    ++form.self_conjugate_complex;
                } else if (cls.conjugate && *cls.conjugate > k) {
                    ++form.complex_pairs;
                }
                break;
        }
    }
}

std::optional<std::size_t> perron_family(const CyclicJordanForm& form) {
    double rho = 0.0;
    for (const auto& f : form.families) {
        rho = std::max(rho, std::abs(f.base_eigenvalue));
    }
    if (rho == 0.0) {
        return std::nullopt;
    }
    for (std::size_t i = 0; i < form.families.size(); ++i) {
        const auto& f = form.families[i];
        if (f.block_size == 1 && is_real_value(f.base_eigenvalue, form.tol.real) && f.base_eigenvalue.real() > 0.0 &&
            std::abs(f.base_eigenvalue.real() - rho) <= form.tol.family * rho) {
            return i;
        }
    }
    return std::nullopt;
}

CyclicJordanForm eigendecompose(const MatrixXc& matrix, const SpectralTolerances& tol, std::optional<int> h,
                                double zero_tol) {
    require_square(matrix.rows(), matrix.cols(), "eigendecompose");
    const Eigen::Index n = matrix.rows();
    if (n == 0) {
        throw ShapeError("eigendecompose: empty matrix");
    }
    if (min_singular_ratio(matrix) <= tol.singular) {
        throw SingularityError("eigendecompose: matrix is singular (smallest singular value below tolerance)");
    }
    Eigen::ComplexEigenSolver<MatrixXc> es(matrix, true);
    if (es.info() != Eigen::Success) {
        throw NumericalError("eigendecompose: eigensolver did not converge");
    }
    std::vector<JordanBlock> blocks;
    double rho = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        blocks.push_back({snap_real(es.eigenvalues()(i), tol.real), 1});
        rho = std::max(rho, std::abs(blocks.back().eigenvalue));
    }
    for (std::size_t a = 0; a < blocks.size(); ++a) {
        for (std::size_t b = a + 1; b < blocks.size(); ++b) {
            if (std::abs(blocks[a].eigenvalue - blocks[b].eigenvalue) <= tol.cluster * std::max(1.0, rho)) {
                throw NumericalError(
                    "eigendecompose: eigenvalues cluster within tolerance; the matrix may be defective or "
                    "derogatory, supply a Jordan pair instead");
            }
        }
    }
    int hh = 1;
    if (h) {
        if (*h < 1) {
            throw DomainError("eigendecompose: h must be positive");
        }
        hh = *h;
    } else {
        hh = cyclic_index(digraph_of(matrix, zero_tol)).value_or(1);
    }

    CyclicJordanForm form;
    form.tol = tol;
    form.h = hh;
    form.source = matrix;
    form.real_source = max_abs(MatrixXr(matrix.imag())) == 0.0;
    auto families = group_into_families(blocks, hh, tol.family);
    reorder_family_major(form, blocks, es.eigenvectors(), std::move(families), {});
    form.Z_inv = form.Z.partialPivLu().inverse();
    partition_families(form);

    const double recon_tol = tol.recon.value_or(1e-8 * static_cast<double>(n) * inf_norm(matrix));
    const double resid = form.reconstruction_residual();
    if (!(resid <= recon_tol)) {
        throw NumericalError("eigendecompose: reconstruction residual " + std::to_string(resid) +
                             " exceeds tolerance " + std::to_string(recon_tol));
    }
    return form;
}

CyclicJordanForm eigendecompose(const MatrixXr& matrix, const SpectralTolerances& tol, std::optional<int> h,
                                double zero_tol) {
    auto form = eigendecompose(MatrixXc(matrix.cast<Complex>()), tol, h, zero_tol);
    form.real_source = true;
    return form;
}

CyclicJordanForm from_jordan_pair(const MatrixXc& Z, const std::vector<JordanBlock>& blocks, int h,
                                  const SpectralTolerances& tol) {
    require_square(Z.rows(), Z.cols(), "from_jordan_pair");
    if (h < 1) {
        throw DomainError("from_jordan_pair: h must be positive");
    }
    Eigen::Index total = 0;
    for (const auto& b : blocks) {
        if (b.size < 1) {
            throw StructureError("from_jordan_pair: block size must be at least 1");
        }
        total += b.size;
    }
    if (total != Z.rows() || total == 0) {
        throw ShapeError("from_jordan_pair: block sizes sum to " + std::to_string(total) + ", Z is " +
                         std::to_string(Z.rows()) + "x" + std::to_string(Z.cols()));
    }
    if (min_singular_ratio(Z) <= tol.singular) {
        throw SingularityError("from_jordan_pair: Z is singular");
    }
    std::vector<JordanBlock> nonzero;
    std::vector<std::size_t> nonzero_idx;
    std::vector<std::size_t> zero_idx;
    double scale = 0.0;
    for (const auto& b : blocks) {
        scale = std::max(scale, std::abs(b.eigenvalue));
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (std::abs(blocks[i].eigenvalue) <= tol.singular * std::max(1.0, scale)) {
            zero_idx.push_back(i);
        } else {
            nonzero.push_back(blocks[i]);
            nonzero_idx.push_back(i);
        }
    }
    auto families = group_into_families(nonzero, h, tol.family);
    for (auto& f : families) {
        for (auto& idx : f.block_index) {
            idx = nonzero_idx[idx];
        }
    }
    std::vector<JordanBlock> exact = blocks;
    for (auto i : zero_idx) {
        exact[i].eigenvalue = 0.0;
    }

    CyclicJordanForm form;
    form.tol = tol;
    form.h = h;
    reorder_family_major(form, exact, Z, std::move(families), zero_idx);
    form.Z_inv = form.Z.partialPivLu().inverse();
    form.source = form.Z * form.jordan_matrix() * form.Z_inv;
    form.real_source = max_abs(MatrixXr(form.source.imag())) <= 1e-10 * std::max(1.0, max_abs(form.source));
    partition_families(form);
    return form;
}

FrobeniusTest is_self_conjugate_frobenius_set(const SpectrumMultiset& s, double tol) {
    const double rho = s.radius();
    if (s.values.empty() || rho <= tol) {
        return {};
    }
    std::vector<Complex> v;
    for (auto z : s.values) {
        v.push_back(z / rho);
    }
    std::vector<Complex> distinct;
    for (auto z : v) {
        if (std::abs(z) >= 1.0 - tol) {
            const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                          [&](Complex d) { return std::abs(d - z) <= tol; });
            if (!seen) {
                distinct.push_back(z);
            }
        }
    }
    const int h = static_cast<int>(distinct.size());
    for (int k = 0; k < h; ++k) {
        const Complex w = root_of_unity(h, k);
        if (std::none_of(distinct.begin(), distinct.end(), [&](Complex d) { return std::abs(d - w) <= tol; })) {
            return {};
        }
    }
    const SpectrumMultiset normalized{v};
    if (!multiset_equal(v, normalized.rotated(h).values, tol) || !multiset_equal(v, normalized.conjugate().values, tol)) {
        return {};
    }
    return {true, h};
}

namespace {

struct OpenSet {
    double radius;
    int m;
};

bool take(std::vector<Complex>& rest, Complex z, double tol) {
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (std::abs(rest[i] - z) <= tol) {
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
    }
    return false;
}

// Branches on how the largest remaining element is covered: absorbed by a
// set already opened at a larger radius (with its conjugate orbit), or as a
// peripheral element of a new set r * Omega_m.
std::optional<bool> frobenius_search(std::vector<Complex> rest, std::vector<OpenSet> open, double tol, long& budget) {
    if (--budget < 0) {
        return std::nullopt;
    }
    if (rest.empty()) {
        return true;
    }
    std::size_t top = 0;
    for (std::size_t i = 1; i < rest.size(); ++i) {
        const double a = std::abs(rest[i]);
        const double b = std::abs(rest[top]);
        if (a > b + tol || (std::abs(a - b) <= tol && folded_arg(rest[i]) < folded_arg(rest[top]))) {
            top = i;
        }
    }
    const Complex z = rest[top];
    const double r = std::abs(z);
    bool unknown = false;

    std::vector<int> ms;
    for (const auto& o : open) {
        if (o.radius > r + tol) {
            if (o.m == 1) {
                return true;
            }
            if (std::find(ms.begin(), ms.end(), o.m) == ms.end()) {
                ms.push_back(o.m);
            }
        }
    }
    for (int m : ms) {
        std::vector<Complex> orbit;
        for (int k = 0; k < m; ++k) {
            orbit.push_back(z * root_of_unity(m, k));
        }
        std::vector<Complex> conj_orbit;
        for (auto w : orbit) {
            conj_orbit.push_back(std::conj(w));
        }
        if (!multiset_equal(orbit, conj_orbit, tol)) {
            orbit.insert(orbit.end(), conj_orbit.begin(), conj_orbit.end());
        }
        auto next = rest;
        bool ok = true;
        for (auto w : orbit) {
            if (!take(next, w, tol)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            const auto res = frobenius_search(std::move(next), open, tol, budget);
            if (res && *res) {
                return true;
            }
            unknown = unknown || !res;
        }
    }

    const int level = static_cast<int>(
        std::count_if(rest.begin(), rest.end(), [&](Complex w) { return std::abs(std::abs(w) - r) <= tol; }));
    const double theta = folded_arg(z);
    for (int m = 1; m <= level; ++m) {
        const double turns = theta * m / kTwoPi;
        if (std::abs(turns - std::round(turns)) * kTwoPi > tol * std::max(1.0, static_cast<double>(m))) {
            continue;
        }
        auto next = rest;
        bool ok = true;
        for (int k = 0; k < m; ++k) {
            if (!take(next, r * root_of_unity(m, k), tol)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        auto opened = open;
        opened.push_back({r, m});
        const auto res = frobenius_search(std::move(next), std::move(opened), tol, budget);
        if (res && *res) {
            return true;
        }
        unknown = unknown || !res;
    }
    if (unknown) {
        return std::nullopt;
    }
    return false;
}

}  // namespace

std::optional<bool> is_union_of_self_conjugate_frobenius_sets(const SpectrumMultiset& s, double tol) {
    const double rho = s.radius();
    if (rho <= tol) {
        return false;
    }
    std::vector<Complex> v;
    for (auto z : s.values) {
        const Complex w = z / rho;
        if (std::abs(w) > tol) {
            v.push_back(w);
        }
    }
    if (!multiset_equal(v, SpectrumMultiset{v}.conjugate().values, tol)) {
        return false;
    }
    long budget = 200000;
    return frobenius_search(std::move(v), {}, tol, budget);
}

PerronVectors perron_vectors(const MatrixXr& a) {
    require_square(a.rows(), a.cols(), "perron_vectors");
    const Eigen::Index n = a.rows();
    if (n == 0) {
        throw ShapeError("perron_vectors: empty matrix");
    }
    const auto s = spectrum_of(a);
    PerronVectors pv;
    pv.rho = -std::numeric_limits<double>::infinity();
    for (auto z : s.values) {
        pv.rho = std::max(pv.rho, z.real());
    }
    auto null_vector = [&](const MatrixXr& m) {
        Eigen::JacobiSVD<MatrixXr> svd(m - pv.rho * MatrixXr::Identity(n, n), Eigen::ComputeFullV);
        VectorXr v = svd.matrixV().col(n - 1);
        if (v.sum() < 0.0) {
            v = -v;
        }
        return v;
    };
    pv.right = null_vector(a);
    pv.left = null_vector(a.transpose());
    const double d = pv.left.dot(pv.right);
    if (d != 0.0) {
        pv.left /= d;
    }
    return pv;
}

PerronFrobeniusReport verify_perron_frobenius(const MatrixXr& a, double tol) {
    require_square(a.rows(), a.cols(), "verify_perron_frobenius");
    if (a.size() == 0) {
        throw ShapeError("verify_perron_frobenius: empty matrix");
    }
    if (a.minCoeff() < 0.0) {
        throw PreconditionError("verify_perron_frobenius: matrix has negative entries");
    }
    const auto g = digraph_of(a);
    if (!is_strongly_connected(g)) {
        throw PreconditionError("verify_perron_frobenius: matrix is reducible");
    }
    PerronFrobeniusReport rep;
    rep.h = index_of_imprimitivity(g);
    const auto s = spectrum_of(a);
    const double rho = s.radius();
    rep.rho = rho;
    const double scale = std::max(1.0, rho);
    const auto pv = perron_vectors(a);
    rep.right = pv.right;
    rep.left = pv.left;

    rep.rho_positive_eigenvalue =
        rho > tol && std::any_of(s.values.begin(), s.values.end(), [&](Complex z) { return std::abs(z - rho) <= tol * scale; });
    auto positive = [&](const VectorXr& v) { return v.minCoeff() > tol * v.cwiseAbs().maxCoeff(); };
    rep.positive_eigenvectors = positive(pv.right) && positive(pv.left) && std::abs(pv.rho - rho) <= tol * scale;
    // Root-of-multiplicity perturbations scale like sqrt(eps); the simplicity
    // window is accordingly wider than tol.
    const double simple_window = std::sqrt(tol) * scale;
    rep.simple = std::count_if(s.values.begin(), s.values.end(),
                               [&](Complex z) { return std::abs(z - rho) <= simple_window; }) == 1;
    std::vector<Complex> peripheral;
    for (auto z : s.values) {
        if (std::abs(z) >= rho - tol * scale) {
            peripheral.push_back(z);
        }
    }
    std::vector<Complex> expected;
    for (int k = 0; k < rep.h; ++k) {
        expected.push_back(rho * root_of_unity(rep.h, k));
    }
    rep.peripheral_matches = multiset_equal(peripheral, expected, tol);
    rep.rotation_invariant = multiset_equal(s.values, s.rotated(rep.h).values, tol);

    if (!rep.rho_positive_eigenvalue) {
        rep.failed.push_back("a: spectral radius is not a positive eigenvalue");
    }
    if (!rep.positive_eigenvectors) {
        rep.failed.push_back("b: Perron eigenvectors are not strictly positive");
    }
    if (!rep.simple) {
        rep.failed.push_back("c: spectral radius is not a simple eigenvalue");
    }
    if (!rep.peripheral_matches) {
        rep.failed.push_back("d: peripheral spectrum differs from rho * Omega_h");
    }
    if (!rep.rotation_invariant) {
        rep.failed.push_back("e: spectrum is not invariant under rotation by w_h");
    }
    return rep;
}

}  // namespace cycroots
