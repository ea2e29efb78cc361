#include "cycroots/verify.hpp"

#include <cmath>
#include <limits>

#include "cycroots/branches.hpp"

namespace cycroots {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::EventuallyNonnegative:
            return "eventually_nonnegative";
        case Verdict::NotEventuallyNonnegative:
            return "not_eventually_nonnegative";
        case Verdict::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

Characterization eventual_nonnegativity_characterization(const MatrixXr& x, double zero_tol) {
    Characterization out;
    require_square(x.rows(), x.cols(), "eventual_nonnegativity_characterization");
    if (x.size() == 0) {
        out.reason = "empty matrix";
        return out;
    }
    const auto g = digraph_of(x, relative_zero_tol(x, zero_tol));
    if (!is_strongly_connected(g)) {
        out.reason = "matrix is reducible";
        return out;
    }
    out.h = index_of_imprimitivity(g);
    if (out.h < 2) {
        out.reason = "cyclic index is 1";
        return out;
    }
    out.applicable = true;
    const auto s = spectrum_of(x);
    const double rho = s.radius();
    if (rho == 0.0) {
        out.reason = "spectral radius is zero";
        return out;
    }
    const double tol = 1e-8;
    const double window = 1e-5;
    int peripheral = 0;
    for (auto z : s.values) {
        peripheral += std::abs(z) / rho >= 1.0 - tol ? 1 : 0;
    }
    if (peripheral != out.h) {
        out.reason = "peripheral spectrum has " + std::to_string(peripheral) + " eigenvalues, expected " +
                     std::to_string(out.h);
        return out;
    }
    for (int k = 0; k < out.h; ++k) {
        const Complex target = rho * std::polar(1.0, kTwoPi * k / out.h);
        int hits = 0;
        for (auto z : s.values) {
            hits += std::abs(z - target) <= window * rho ? 1 : 0;
        }
        if (hits != 1) {
            out.reason = hits == 0 ? "peripheral spectrum is not rho * Omega_h" : "peripheral eigenvalue is not simple";
            return out;
        }
    }
    const auto pv = perron_vectors(x);
    auto positive = [](const VectorXr& v) { return v.minCoeff() > 1e-9 * v.cwiseAbs().maxCoeff(); };
    if (std::abs(pv.rho - rho) > window * rho || !positive(pv.right) || !positive(pv.left)) {
        out.reason = "Perron eigenvectors are not strictly positive";
        return out;
    }
    out.holds = true;
    out.reason = "peripheral spectrum is rho * Omega_h with positive Perron vectors";
    return out;
}

namespace {

struct PowerScan {
    std::optional<Violation> first;
    int last_violation = 0;  // 0 when no power had a negative entry
    bool nilpotent = false;
};

PowerScan scan_powers(const MatrixXr& x, int k_max, double neg_tol) {
    PowerScan scan;
    const Eigen::Index n = x.rows();
    MatrixXr pw = MatrixXr::Identity(n, n);
    double log_scale = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        pw = pw * x;
        const double s = max_abs(pw);
        if (s == 0.0 || !std::isfinite(s)) {
            scan.nilpotent = s == 0.0;
            break;
        }
        pw /= s;
        log_scale += std::log(s);
        Eigen::Index i = 0;
        Eigen::Index j = 0;
        const double m = pw.minCoeff(&i, &j);
        if (m < -neg_tol) {
            scan.last_violation = k;
            if (!scan.first) {
                const double value = m * std::exp(log_scale);
                scan.first = Violation{k, static_cast<int>(i), static_cast<int>(j), std::isfinite(value) ? value : m};
            }
        }
    }
    return scan;
}

bool numerically_nilpotent(const MatrixXr& x) {
    const Eigen::Index n = x.rows();
    const double scale = std::max(1.0, max_abs(x));
    MatrixXr pw = MatrixXr::Identity(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        pw = pw * x;
    }
    return max_abs(pw) <= 1e-12 * std::pow(scale, static_cast<double>(n));
}

}  // namespace

std::optional<int> power_index_estimate(const MatrixXr& x, int k_max, double neg_tol) {
    require_square(x.rows(), x.cols(), "power_index_estimate");
    if (k_max < 1) {
        throw DomainError("power_index_estimate: k_max must be at least 1");
    }
    const auto scan = scan_powers(x, k_max, neg_tol);
    if (scan.last_violation == 0) {
        return 0;
    }
    if (scan.last_violation >= k_max && !scan.nilpotent) {
        return std::nullopt;
    }
    return scan.last_violation + 1;
}

namespace {

// rho simple and strictly dominant with positive left and right eigenvectors.
bool strong_perron_frobenius(const MatrixXr& x) {
    const auto s = spectrum_of(x);
    const double rho = s.radius();
    if (rho == 0.0) {
        return false;
    }
    int near_rho = 0;
    for (auto z : s.values) {
        if (std::abs(z) >= rho * (1.0 - 1e-8)) {
            ++near_rho;
        }
    }
    if (near_rho != 1) {
        return false;
    }
    const auto pv = perron_vectors(x);
    auto positive = [](const VectorXr& v) { return v.minCoeff() > 1e-9 * v.cwiseAbs().maxCoeff(); };
    return std::abs(pv.rho - rho) <= 1e-5 * rho && positive(pv.right) && positive(pv.left);
}

}  // namespace

EnnVerdict power_verdict(const MatrixXr& x, const VerifyOptions& opts) {
    require_square(x.rows(), x.cols(), "power_verdict");
    if (opts.k_max < 1) {
        throw DomainError("power_verdict: k_max must be at least 1");
    }
    EnnVerdict v;
    v.k_max = opts.k_max;
    if (x.size() == 0) {
        v.verdict = Verdict::EventuallyNonnegative;
        v.power_index_estimate = 0;
        v.reason = "empty matrix";
        return v;
    }
    const auto scan = scan_powers(x, opts.k_max, opts.neg_tol);
    v.first_violation = scan.first;
    const bool tail_ok = scan.last_violation < opts.k_max || scan.nilpotent;
    if (tail_ok) {
        v.power_index_estimate = scan.last_violation == 0 ? 0 : scan.last_violation + 1;
    }

    if (scan.nilpotent || numerically_nilpotent(x)) {
        // X^n = 0, so only the first n powers can hold negative entries.
        const Eigen::Index n = x.rows();
        const double scale = std::max(1.0, max_abs(x));
        MatrixXr pw = MatrixXr::Identity(n, n);
        int last = 0;
        for (Eigen::Index k = 1; k <= n; ++k) {
            pw = pw * x;
            if (pw.minCoeff() < -1e-12 * std::pow(scale, static_cast<double>(k))) {
                last = static_cast<int>(k);
            }
        }
        v.verdict = Verdict::EventuallyNonnegative;
        v.power_index_estimate = last == 0 ? 0 : last + 1;
        v.reason = "nilpotent: powers vanish from k = n on";
        return v;
    }
    if (x.minCoeff() >= -opts.neg_tol * max_abs(x)) {
        v.verdict = Verdict::EventuallyNonnegative;
        v.power_index_estimate = 0;
        v.reason = "matrix is nonnegative";
        return v;
    }
    const auto frob = is_union_of_self_conjugate_frobenius_sets(spectrum_of(x));
    if (frob && !*frob) {
        v.verdict = Verdict::NotEventuallyNonnegative;
        v.reason = "spectrum is not a union of self-conjugate Frobenius sets";
        return v;
    }
    const auto ch = eventual_nonnegativity_characterization(x, opts.zero_tol);
    if (ch.applicable && !ch.holds) {
        v.verdict = Verdict::NotEventuallyNonnegative;
        v.reason = ch.reason;
        return v;
    }
    if (ch.applicable && ch.holds) {
        if (tail_ok) {
            v.verdict = Verdict::EventuallyNonnegative;
            v.reason = ch.reason + "; powers nonnegative from the estimated index to k_max";
        } else {
            v.verdict = Verdict::Inconclusive;
            v.reason = ch.reason + ", but powers up to k_max still carry negative entries";
        }
        return v;
    }
    if (tail_ok && strong_perron_frobenius(x)) {
        v.verdict = Verdict::EventuallyNonnegative;
        v.reason = "simple, strictly dominant Perron root with positive eigenvectors (eventually positive)";
        return v;
    }
    v.verdict = Verdict::Inconclusive;
    v.reason = tail_ok ? "powers nonnegative up to k_max but no structural certificate (" + ch.reason + ")"
                       : "negative entries persist up to k_max and no structural certificate (" + ch.reason + ")";
    return v;
}

EnnVerdict power_verdict(const MatrixXc& x, const VerifyOptions& opts) {
    if (max_abs(MatrixXr(x.imag())) > opts.imag_tol * std::max(1.0, max_abs(x))) {
        EnnVerdict v;
        v.k_max = opts.k_max;
        v.verdict = Verdict::NotEventuallyNonnegative;
        v.reason = "matrix has non-real entries";
        return v;
    }
    return power_verdict(MatrixXr(x.real()), opts);
}

double PeripheralSplit::additivity_defect(int k_max) const {
    const MatrixXc x = X1 + X2;
    MatrixXc xk = x;
    MatrixXc ak = X1;
    MatrixXc bk = X2;
    double worst = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        worst = std::max(worst, inf_norm(MatrixXc(xk - ak - bk)));
        xk = xk * x;
        ak = ak * X1;
        bk = bk * X2;
    }
    return worst;
}

namespace {

PeripheralSplit split_with(const CyclicJordanForm& form, const MatrixXc& x, const MatrixXc& f, std::size_t pf) {
    const auto& fam = form.families[pf];
    const Eigen::Index n = form.n();
    MatrixXc f1 = MatrixXc::Zero(n, n);
    std::vector<bool> in_perron(static_cast<std::size_t>(n), false);
    for (auto b : fam.block_index) {
        const auto off = form.offsets[b];
        f1(off, off) = f(off, off);
        in_perron[static_cast<std::size_t>(off)] = true;
    }
    PeripheralSplit s;
    s.X1 = form.Z * f1 * form.Z_inv;
    s.X2 = x - s.X1;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double a = std::abs(f(i, i));
        if (in_perron[static_cast<std::size_t>(i)]) {
            s.rho1 = std::max(s.rho1, a);
        } else {
            s.rho2 = std::max(s.rho2, a);
        }
    }
    s.orthogonality = std::max(inf_norm(MatrixXc(s.X1 * s.X2)), inf_norm(MatrixXc(s.X2 * s.X1)));
    const double zt = relative_zero_tol(x, 1e-9);
    s.gamma_contained = digraph_of(s.X2, zt).subgraph_of(digraph_of(s.X1, zt));
    return s;
}

std::size_t require_perron(const CyclicJordanForm& form) {
    if (form.h < 2) {
        throw PreconditionError("peripheral_split: the matrix is primitive (h = 1)");
    }
    const auto pf = perron_family(form);
    if (!pf) {
        throw PreconditionError("peripheral_split: no Perron family J(rho nu_h, 1)");
    }
    return *pf;
}

}  // namespace

PeripheralSplit peripheral_split(const CyclicJordanForm& form, const RootCandidate& root) {
    const auto pf = require_perron(form);
    root.selection.validate(form);
    MatrixXc f = MatrixXc::Zero(form.n(), form.n());
    for (std::size_t fam = 0; fam < form.families.size(); ++fam) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(form.h); ++k) {
            const auto b = form.families[fam].block_index[k];
            const auto& blk = form.blocks[b];
            f.block(form.offsets[b], form.offsets[b], blk.size, blk.size) =
                branch_jordan_block(blk, root.selection.p, root.selection.per_family[fam][k]);
        }
    }
    auto s = split_with(form, root.X, f, pf);
    if (gcd64(form.h, root.selection.p) == 1) {
        s.q = power_q(*unique_branch_tuple(form.h, root.selection.p)).raw;
    }
    return s;
}

PeripheralSplit peripheral_split(const CyclicJordanForm& form) {
    const auto pf = require_perron(form);
    auto s = split_with(form, form.source, form.jordan_matrix(), pf);
    s.q = 1;
    return s;
}

MatrixXr perron_projection(const MatrixXr& a, const OrderedPartition& partition) {
    require_square(a.rows(), a.cols(), "perron_projection");
    if (a.rows() != partition.ground_size()) {
        throw ShapeError("perron_projection: partition does not match the matrix");
    }
    if (a.minCoeff() < 0.0) {
        throw PreconditionError("perron_projection: matrix has negative entries");
    }
    if (!is_strongly_connected(digraph_of(a))) {
        throw PreconditionError("perron_projection: matrix is reducible");
    }
    const int h = partition.parts_count();
    if (h < 2 || !is_h_cyclic(a, partition)) {
        throw PreconditionError("perron_projection: matrix is not h-cyclic for the given partition");
    }
    const auto pv = perron_vectors(a);
    MatrixXr out = MatrixXr::Zero(a.rows(), a.cols());
    for (int l = 0; l < h; ++l) {
        for (int i : partition.part(l)) {
            for (int j : partition.part((l + 1) % h)) {
                out(i, j) = pv.rho * h * pv.right(i) * pv.left(j);
            }
        }
    }
    return out;
}

}  // namespace cycroots
