#include "cycroots/rootgen.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cycroots {

Complex branch_value(Complex z, int p, std::int64_t j) {
    if (p < 1) {
        throw DomainError("branch_value: p must be positive");
    }
    if (j < 0 || j >= p) {
        throw DomainError("branch_value: branch index " + std::to_string(j) + " outside 0.." + std::to_string(p - 1));
    }
    if (z == Complex{0.0, 0.0}) {
        throw DomainError("branch_value: z = 0 has no branch");
    }
    const double theta = arg_0_2pi(z);
    return std::polar(std::pow(std::abs(z), 1.0 / p), (theta + kTwoPi * static_cast<double>(j)) / p);
}

MatrixXc branch_jordan_block(const JordanBlock& block, int p, std::int64_t j) {
    if (block.eigenvalue == Complex{0.0, 0.0}) {
        throw SingularityError("branch_jordan_block: zero eigenvalue");
    }
    const int r = block.size;
    const Complex f = branch_value(block.eigenvalue, p, j);
    const Complex inv = 1.0 / block.eigenvalue;
    // coeff[m] = binom(1/p, m) * f * lambda^(-m)
    std::vector<Complex> coeff(static_cast<std::size_t>(r));
    Complex c = f;
    const double a = 1.0 / p;
    for (int m = 0; m < r; ++m) {
        coeff[static_cast<std::size_t>(m)] = c;
        c *= (a - m) / (m + 1.0) * inv;
    }
    MatrixXc out = MatrixXc::Zero(r, r);
    for (int u = 0; u < r; ++u) {
        for (int m = 0; u + m < r; ++m) {
            out(u, u + m) = coeff[static_cast<std::size_t>(m)];
        }
    }
    return out;
}

MatrixXc branch_family(const CyclicFamily& family, int p, const std::vector<std::int64_t>& tuple) {
    if (tuple.size() != family.members.size()) {
        throw PreconditionError("branch_family: tuple length " + std::to_string(tuple.size()) + " differs from h = " +
                                std::to_string(family.members.size()));
    }
    const Eigen::Index r = family.block_size;
    const auto h = static_cast<Eigen::Index>(family.members.size());
    MatrixXc out = MatrixXc::Zero(r * h, r * h);
    for (Eigen::Index k = 0; k < h; ++k) {
        out.block(k * r, k * r, r, r) =
            branch_jordan_block(family.members[static_cast<std::size_t>(k)], p, tuple[static_cast<std::size_t>(k)]);
    }
    return out;
}

void BranchSelection::validate(const CyclicJordanForm& form) const {
    if (p < 2) {
        throw PreconditionError("BranchSelection: p must be at least 2");
    }
    if (per_family.size() != form.families.size()) {
        throw PreconditionError("BranchSelection: " + std::to_string(per_family.size()) + " tuples for " +
                                std::to_string(form.families.size()) + " families");
    }
    for (const auto& t : per_family) {
        if (t.size() != static_cast<std::size_t>(form.h)) {
            throw PreconditionError("BranchSelection: tuple length differs from h");
        }
        for (auto j : t) {
            if (j < 0 || j >= p) {
                throw PreconditionError("BranchSelection: branch index outside 0..p-1");
            }
        }
    }
}

bool BranchSelection::is_primary(const CyclicJordanForm& form) const {
    for (const auto& cls : form.classes) {
        for (auto f : cls.families) {
            if (per_family[f] != per_family[cls.families.front()]) {
                return false;
            }
        }
    }
    return true;
}

double default_root_tol(const CyclicJordanForm& form) {
    return 1e-8 * static_cast<double>(form.n()) * std::max(1.0, inf_norm(form.source));
}

std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t out = 1;
    for (std::int64_t i = 0; i < exp; ++i) {
        if (base != 0 && out > std::numeric_limits<std::int64_t>::max() / base) {
            throw SizeError("checked_pow: " + std::to_string(base) + "^" + std::to_string(exp) + " overflows");
        }
        out *= base;
    }
    return out;
}

PrimarySelectionEnumerator::PrimarySelectionEnumerator(const CyclicJordanForm& form, int p) : form_(&form), p_(p) {
    if (p < 2) {
        throw DomainError("enumerate_primary_selections: p must be at least 2");
    }
    if (!form.nonsingular()) {
        throw PreconditionError("enumerate_primary_selections: the form has zero eigenvalues");
    }
    digits_.assign(form.classes.size() * static_cast<std::size_t>(form.h), 0);
    try {
        total_ = checked_pow(p, static_cast<std::int64_t>(digits_.size()));
    } catch (const SizeError&) {
        total_ = std::nullopt;
    }
}

BranchSelection PrimarySelectionEnumerator::expand() const {
    BranchSelection sel;
    sel.p = p_;
    sel.per_family.resize(form_->families.size());
    const auto h = static_cast<std::size_t>(form_->h);
    for (std::size_t c = 0; c < form_->classes.size(); ++c) {
        std::vector<std::int64_t> tuple(digits_.begin() + static_cast<std::ptrdiff_t>(c * h),
                                        digits_.begin() + static_cast<std::ptrdiff_t>((c + 1) * h));
        for (auto f : form_->classes[c].families) {
            sel.per_family[f] = tuple;
        }
    }
    return sel;
}

bool PrimarySelectionEnumerator::next(BranchSelection& out) {
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
    } else {
        std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(digits_.size()) - 1;
        while (pos >= 0) {
            auto& d = digits_[static_cast<std::size_t>(pos)];
            if (++d < p_) {
                break;
            }
            d = 0;
            --pos;
        }
        if (pos < 0) {
            done_ = true;
            return false;
        }
    }
    out = expand();
    return true;
}

namespace {

MatrixXc matrix_power(const MatrixXc& x, int p) {
    MatrixXc out = x;
    for (int i = 1; i < p; ++i) {
        out = out * x;
    }
    return out;
}

MatrixXc branch_matrix(const CyclicJordanForm& form, const BranchSelection& sel) {
    if (!form.nonsingular()) {
        throw SingularityError("construct_root: the form has zero eigenvalues");
    }
    sel.validate(form);
    const Eigen::Index n = form.n();
    MatrixXc f = MatrixXc::Zero(n, n);
    const auto h = static_cast<std::size_t>(form.h);
    for (std::size_t fam = 0; fam < form.families.size(); ++fam) {
        for (std::size_t k = 0; k < h; ++k) {
            const auto b = form.families[fam].block_index[k];
            const auto& blk = form.blocks[b];
            f.block(form.offsets[b], form.offsets[b], blk.size, blk.size) =
                branch_jordan_block(blk, sel.p, sel.per_family[fam][k]);
        }
    }
    return f;
}

RootCandidate finish(const CyclicJordanForm& form, const BranchSelection& sel, MatrixXc x, const MatrixXc& f,
                     std::optional<double> root_tol) {
    const double tol = root_tol.value_or(default_root_tol(form));
    RootCandidate c;
    c.residual = inf_norm(MatrixXc(matrix_power(x, sel.p) - form.source));
    if (!(c.residual <= tol)) {
        throw NumericalError("construct_root: residual " + std::to_string(c.residual) + " exceeds " +
                             std::to_string(tol));
    }
    // Eigenvalues of X are the branch images on the diagonal of F. Defective
    // blocks perturb like eps^(1/r), hence the looser comparison there.
    int rmax = 1;
    for (const auto& b : form.blocks) {
        rmax = std::max(rmax, b.size);
    }
    std::vector<Complex> expected;
    for (Eigen::Index i = 0; i < f.rows(); ++i) {
        expected.push_back(f(i, i));
    }
    const auto got = spectrum_of(x).values;
    const double eig_tol = std::max(1e-6, std::pow(1e-13, 1.0 / rmax));
    if (!multiset_equal(got, expected, eig_tol)) {
        throw NumericalError("construct_root: eigenvalues of the root differ from the branch images");
    }
    c.is_real = max_abs(MatrixXr(x.imag())) <= tol;
    if (c.is_real) {
        x = x.real().cast<Complex>();
    }
    c.X = std::move(x);
    c.selection = sel;
    c.primary = sel.is_primary(form);
    return c;
}

}  // namespace

RootCandidate construct_root(const CyclicJordanForm& form, const BranchSelection& selection,
                             std::optional<double> root_tol) {
    const MatrixXc f = branch_matrix(form, selection);
    MatrixXc x = form.Z * f * form.Z_inv;
    return finish(form, selection, std::move(x), f, root_tol);
}

RootCandidate construct_derogatory_root(const CyclicJordanForm& form, const BranchSelection& selection,
                                        const MatrixXc& U, std::optional<double> root_tol) {
    if (!form.derogatory) {
        throw PreconditionError("construct_derogatory_root: the form is nonderogatory, so every root is primary");
    }
    selection.validate(form);
    if (selection.is_primary(form)) {
        throw PreconditionError(
            "construct_derogatory_root: the selection gives equal tuples to families with equal eigenvalues");
    }
    const Eigen::Index n = form.n();
    if (U.rows() != n || U.cols() != n) {
        throw ShapeError("construct_derogatory_root: U must be " + std::to_string(n) + "x" + std::to_string(n));
    }
    Eigen::JacobiSVD<MatrixXc> svd(U);
    const auto& s = svd.singularValues();
    if (s(0) == 0.0 || s(s.size() - 1) / s(0) <= form.tol.singular) {
        throw PreconditionError("construct_derogatory_root: U is singular");
    }
    const MatrixXc j = form.jordan_matrix();
    const double comm = inf_norm(MatrixXc(U * j - j * U));
    if (comm > 1e-10 * std::max(1.0, inf_norm(j)) * std::max(1.0, inf_norm(U))) {
        throw PreconditionError("construct_derogatory_root: U does not commute with J");
    }
    const MatrixXc f = branch_matrix(form, selection);
    MatrixXc x = form.Z * U * f * U.partialPivLu().inverse() * form.Z_inv;
    return finish(form, selection, std::move(x), f, root_tol);
}

BranchSelection principal_selection(const CyclicJordanForm& form, int p) {
    if (p < 2) {
        throw DomainError("principal_selection: p must be at least 2");
    }
    BranchSelection sel;
    sel.p = p;
    for (const auto& fam : form.families) {
        std::vector<std::int64_t> t;
        for (const auto& m : fam.members) {
            const Complex z = m.eigenvalue;
            if (is_real_value(z, form.tol.real) && z.real() < 0.0) {
                throw DomainError("principal root undefined: eigenvalue on the negative real axis");
            }
            t.push_back(z.imag() < 0.0 && !is_real_value(z, form.tol.real) ? p - 1 : 0);
        }
        sel.per_family.push_back(std::move(t));
    }
    return sel;
}

}  // namespace cycroots
