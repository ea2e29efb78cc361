#include "cycroots/classify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <Eigen/SVD>

#include "cycroots/branches.hpp"
#include "cycroots/structure.hpp"

namespace cycroots {

namespace {

void require_form(const CyclicJordanForm& form, bool allow_singular) {
    if (!form.real_source) {
        throw PreconditionError("matrix is not real");
    }
    const MatrixXr a = form.source.real();
    const double scale = max_abs(a);
    if (a.minCoeff() < -1e-12 * scale) {
        throw PreconditionError("matrix has negative entries");
    }
    if (!allow_singular && !form.nonsingular()) {
        throw PreconditionError("matrix is singular");
    }
    const auto g = digraph_of(a, 1e-9 * scale);
    if (!is_strongly_connected(g)) {
        throw PreconditionError("matrix is reducible");
    }
    const int h = index_of_imprimitivity(g);
    if (h < 2) {
        throw PreconditionError("matrix is primitive (cyclic index 1)");
    }
    if (form.h != h) {
        throw PreconditionError("form was built with h = " + std::to_string(form.h) + " but the cyclic index is " +
                                std::to_string(h));
    }
}

EnnCount count_impl(const CyclicJordanForm& form, int p) {
    if (p < 2) {
        throw DomainError("p must be at least 2");
    }
    EnnCount out;
    out.h = form.h;
    out.p = p;
    out.gcd_ok = gcd64(form.h, p) == 1;
    out.r1 = form.r1;
    out.r2 = form.r2;
    out.c = form.c;
    out.c_pairs = form.complex_pairs;
    out.derogatory = form.derogatory;
    try {
        if (!out.gcd_ok) {
            out.count = 0;
            out.rule = "gcd(h, p) > 1";
        } else if (p % 2 == 0 && out.r2 > 0) {
            out.count = 0;
            out.rule = "p even, r2 > 0";
        } else if (p % 2 == 0) {
            out.count = checked_pow(2, out.r1 - 1) * checked_pow(p, out.c_pairs);
            out.rule = "p even, r2 = 0: 2^(r1-1) * p^c";
        } else {
            out.count = checked_pow(p, out.c_pairs);
            out.rule = "p odd: p^c";
        }
    } catch (const SizeError&) {
        out.count = std::nullopt;
    }
    return out;
}

std::vector<Complex> class_images(const CyclicJordanForm& form, std::size_t cls, int p,
                                  const std::vector<std::int64_t>& tuple) {
    const auto& fam = form.families[form.classes[cls].families.front()];
    std::vector<Complex> img;
    for (std::size_t k = 0; k < fam.members.size(); ++k) {
        img.push_back(branch_value(fam.members[k].eigenvalue, p, tuple[k]));
    }
    return img;
}

std::vector<Complex> conj_all(std::vector<Complex> v) {
    for (auto& z : v) {
        z = std::conj(z);
    }
    return v;
}

// Admissible tuples per class. Dependent classes (second of a conjugate
// pair) have an empty option list and are resolved from their partner.
struct SelectionSpace {
    std::vector<std::vector<std::vector<std::int64_t>>> options;
    std::vector<bool> dependent;
    std::optional<std::int64_t> total;
    std::string diagnostic;
};

SelectionSpace build_space(const CyclicJordanForm& form, int p) {
    SelectionSpace sp;
    const auto tuple = unique_branch_tuple(form.h, p);
    if (!tuple) {
        sp.total = 0;
        sp.diagnostic = "gcd(h, p) > 1: no branch tuple maps Omega_h onto itself";
        return sp;
    }
    const auto pf = perron_family(form);
    if (!pf) {
        sp.total = 0;
        sp.diagnostic = "no Perron family J(rho nu_h, 1)";
        return sp;
    }
    const std::size_t nc = form.classes.size();
    sp.options.resize(nc);
    sp.dependent.assign(nc, false);
    std::int64_t total = 1;
    bool overflow = false;
    for (std::size_t k = 0; k < nc; ++k) {
        const auto& cls = form.classes[k];
        auto& opts = sp.options[k];
        const bool perron = std::find(cls.families.begin(), cls.families.end(), *pf) != cls.families.end();
        if (perron) {
            opts.push_back(tuple->j);
        } else if (cls.conjugate && *cls.conjugate == k) {
            for (std::int64_t i = 0; i < p; ++i) {
                auto t = shifted_tuple(*tuple, i);
                const auto img = class_images(form, k, p, t);
                if (multiset_equal(img, conj_all(img), 1e-8)) {
                    opts.push_back(std::move(t));
                }
            }
        } else if (cls.conjugate && *cls.conjugate > k) {
            for (std::int64_t i = 0; i < p; ++i) {
                opts.push_back(shifted_tuple(*tuple, i));
            }
        } else if (cls.conjugate) {
            sp.dependent[k] = true;
            continue;
        }
        if (opts.empty()) {
            sp.total = 0;
            sp.diagnostic = cls.label == FamilyLabel::Minus && p % 2 == 0
                                ? "a family meets the negative reals and p is even: the matrix does not have a real "
                                  "primary root"
                                : "a family admits no conjugation-consistent branch choice";
            return sp;
        }
        if (!overflow && total > std::numeric_limits<std::int64_t>::max() / static_cast<std::int64_t>(opts.size())) {
            overflow = true;
        }
        if (!overflow) {
            total *= static_cast<std::int64_t>(opts.size());
        }
    }
    if (!overflow) {
        sp.total = total;
    }
    return sp;
}

std::vector<std::int64_t> partner_tuple(const CyclicJordanForm& form, int p, std::size_t cls,
                                        const std::vector<std::int64_t>& partner) {
    const auto tuple = *unique_branch_tuple(form.h, p);
    const auto target = conj_all(class_images(form, *form.classes[cls].conjugate, p, partner));
    for (std::int64_t i = 0; i < p; ++i) {
        auto t = shifted_tuple(tuple, i);
        if (multiset_equal(class_images(form, cls, p, t), target, 1e-8)) {
            return t;
        }
    }
    throw NumericalError("no branch shift reproduces the conjugate images of the paired family");
}

// Calls visit(selection) for up to cap selections in lexicographic order.
template <typename Visit>
bool walk_space(const CyclicJordanForm& form, int p, const SelectionSpace& sp, std::size_t cap, Visit visit) {
    const std::size_t nc = form.classes.size();
    std::vector<std::size_t> digit(nc, 0);
    std::size_t emitted = 0;
    while (true) {
        if (emitted >= cap) {
            return true;
        }
        std::vector<std::vector<std::int64_t>> per_class(nc);
        for (std::size_t k = 0; k < nc; ++k) {
            if (!sp.dependent[k]) {
                per_class[k] = sp.options[k][digit[k]];
            }
        }
        for (std::size_t k = 0; k < nc; ++k) {
            if (sp.dependent[k]) {
                per_class[k] = partner_tuple(form, p, k, per_class[*form.classes[k].conjugate]);
            }
        }
        BranchSelection sel;
        sel.p = p;
        sel.per_family.resize(form.families.size());
        for (std::size_t k = 0; k < nc; ++k) {
            for (auto f : form.classes[k].families) {
                sel.per_family[f] = per_class[k];
            }
        }
        visit(sel);
        ++emitted;
        std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(nc) - 1;
        while (pos >= 0) {
            const auto kk = static_cast<std::size_t>(pos);
            if (!sp.dependent[kk] && ++digit[kk] < sp.options[kk].size()) {
                break;
            }
            digit[kk] = 0;
            --pos;
        }
        if (pos < 0) {
            return false;
        }
    }
}

// Escalates k_max while the verdict stays inconclusive.
EnnVerdict verify_candidate(const MatrixXc& x, const VerifyOptions& opts) {
    VerifyOptions o = opts;
    auto v = power_verdict(x, o);
    while (v.verdict == Verdict::Inconclusive && o.k_max < 20000) {
        o.k_max *= 10;
        v = power_verdict(x, o);
    }
    return v;
}

void accept_or_throw(const EnnVerdict& v) {
    if (v.verdict == Verdict::NotEventuallyNonnegative) {
        throw NumericalError("constructed root failed eventual nonnegativity verification: " + v.reason);
    }
}

MatrixXc family_branch_matrix(const CyclicJordanForm& form, const BranchSelection& sel) {
    MatrixXc f = MatrixXc::Zero(form.n(), form.n());
    for (std::size_t fam = 0; fam < form.families.size(); ++fam) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(form.h); ++k) {
            const auto b = form.families[fam].block_index[k];
            const auto& blk = form.blocks[b];
            f.block(form.offsets[b], form.offsets[b], blk.size, blk.size) =
                branch_jordan_block(blk, sel.p, sel.per_family[fam][k]);
        }
    }
    return f;
}

}  // namespace

void require_irreducible_imprimitive(const CyclicJordanForm& form) { require_form(form, false); }

EnnCount count_enn_primary_roots(const CyclicJordanForm& form, int p) {
    require_form(form, false);
    return count_impl(form, p);
}

EnnEnumeration enumerate_enn_roots(const CyclicJordanForm& form, int p, std::size_t cap, const VerifyOptions& opts) {
    require_form(form, false);
    if (p < 2) {
        throw DomainError("p must be at least 2");
    }
    EnnEnumeration out;
    const auto sp = build_space(form, p);
    out.total = sp.total;
    out.diagnostic = sp.diagnostic;
    if (sp.total && *sp.total == 0) {
        return out;
    }
    out.truncated = walk_space(form, p, sp, cap, [&](const BranchSelection& sel) {
        auto root = construct_root(form, sel);
        if (!root.is_real) {
            throw NumericalError("eventually nonnegative selection produced a non-real root");
        }
        auto v = verify_candidate(root.X, opts);
        accept_or_throw(v);
        out.roots.push_back(std::move(root));
        out.verdicts.push_back(std::move(v));
    });
    return out;
}

ExistenceReport enn_root_exists(const CyclicJordanForm& form, int p) {
    require_form(form, false);
    if (p < 2) {
        throw DomainError("p must be at least 2");
    }
    ExistenceReport r;
    if (gcd64(form.h, p) != 1) {
        r.reason = "gcd(h, p) > 1";
        return r;
    }
    if (p % 2 == 1) {
        r.exists = r.primary_exists = true;
        r.reason = "p odd and gcd(h, p) = 1";
        return r;
    }
    r.primary_exists = form.r2 == 0;
    if (r.primary_exists) {
        r.exists = true;
        r.reason = "p even, no family meets the negative reals, gcd(h, p) = 1";
        return r;
    }
    // A real root still exists when every negative-eigenvalue Jordan block
    // has an equal partner.
    bool paired = true;
    for (const auto& cls : form.classes) {
        if (cls.label != FamilyLabel::Minus) {
            continue;
        }
        std::map<int, int> by_size;
        for (auto f : cls.families) {
            ++by_size[form.families[f].block_size];
        }
        for (const auto& [size, count] : by_size) {
            paired = paired && count % 2 == 0;
        }
    }
    r.exists = paired;
    r.reason = paired ? "p even; negative-eigenvalue blocks pair up, so only nonprimary real roots exist"
                      : "p even and a negative eigenvalue has an unpaired Jordan block: no real p-th root";
    return r;
}

std::optional<std::vector<std::vector<int>>> nilpotent_root_grouping(const std::vector<int>& sizes, int p) {
    if (p < 2) {
        throw DomainError("p must be at least 2");
    }
    std::map<int, int, std::greater<>> count;
    for (int s : sizes) {
        if (s < 1) {
            throw DomainError("nilpotent block sizes must be positive");
        }
        ++count[s];
    }
    std::vector<std::vector<int>> groups;
    // The largest remaining block L fixes its group: p blocks of sizes L and
    // L-1, or, for L = 1, up to p blocks of size 1.
    auto rec = [&](auto&& self) -> bool {
        while (!count.empty() && count.begin()->second == 0) {
            count.erase(count.begin());
        }
        if (count.empty()) {
            return true;
        }
        const int big = count.begin()->first;
        if (big == 1) {
            int ones = count.begin()->second;
            const int saved = ones;
            while (ones > 0) {
                const int take = std::min(ones, p);
                groups.emplace_back(static_cast<std::size_t>(take), 1);
                ones -= take;
            }
            count.begin()->second = 0;
            (void)saved;
            return true;
        }
        const int have_big = count[big];
        const int have_small = count.count(big - 1) ? count[big - 1] : 0;
        for (int cb = std::min(p, have_big); cb >= 1; --cb) {
            const int need = p - cb;
            if (need > have_small) {
                continue;
            }
            count[big] -= cb;
            if (need > 0) {
                count[big - 1] -= need;
            }
            std::vector<int> g(static_cast<std::size_t>(cb), big);
            g.insert(g.end(), static_cast<std::size_t>(need), big - 1);
            groups.push_back(g);
            const auto snapshot = count;
            if (self(self)) {
                return true;
            }
            count = snapshot;
            groups.pop_back();
            count[big] += cb;
            if (need > 0) {
                count[big - 1] += need;
            }
        }
        return false;
    };
    if (!rec(rec)) {
        return std::nullopt;
    }
    return groups;
}

MatrixXr nilpotent_root(const std::vector<int>& sizes, int p) {
    if (p < 2) {
        throw DomainError("p must be at least 2");
    }
    const int m = std::accumulate(sizes.begin(), sizes.end(), 0);
    // Under J_m(0)^p the basis splits into residue chains r, r+p, r+2p, ...
    std::vector<int> chain_len;
    for (int r = 0; r < p && r < m; ++r) {
        chain_len.push_back((m - r + p - 1) / p);
    }
    {
        auto a = chain_len;
        auto b = sizes;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            throw StructureError("nilpotent_root: sizes are not the p-split of a single nilpotent block");
        }
    }
    std::vector<int> offset(sizes.size(), 0);
    for (std::size_t t = 1; t < sizes.size(); ++t) {
        offset[t] = offset[t - 1] + sizes[t - 1];
    }
    std::vector<int> coord(static_cast<std::size_t>(m), -1);
    std::vector<bool> used(sizes.size(), false);
    for (int r = 0; r < static_cast<int>(chain_len.size()); ++r) {
        std::size_t t = 0;
        while (used[t] || sizes[t] != chain_len[static_cast<std::size_t>(r)]) {
            ++t;
        }
        used[t] = true;
        for (int k = 0; r + k * p < m; ++k) {
            coord[static_cast<std::size_t>(r + k * p)] = offset[t] + k;
        }
    }
    MatrixXr x = MatrixXr::Zero(m, m);
    for (int i = 0; i + 1 < m; ++i) {
        x(coord[static_cast<std::size_t>(i)], coord[static_cast<std::size_t>(i + 1)]) = 1.0;
    }
    return x;
}

SingularReport classify_singular(const CyclicJordanForm& form, int p, std::size_t cap, const VerifyOptions& opts) {
    require_form(form, true);
    SingularReport rep;
    rep.nonsingular_count = count_impl(form, p);

    std::vector<std::size_t> zb = form.zero_blocks;
    for (auto b : zb) {
        rep.zero_block_sizes.push_back(form.blocks[b].size);
    }
    const auto n = form.n();
    const Eigen::Index n0 =
        std::accumulate(rep.zero_block_sizes.begin(), rep.zero_block_sizes.end(), Eigen::Index{0});
    const Eigen::Index base = n - n0;
    rep.X0 = MatrixXr::Zero(n0, n0);

    const auto grouping = nilpotent_root_grouping(rep.zero_block_sizes, p);
    if (!grouping) {
        rep.nilpotent_root_exists = false;
        rep.diagnostic = "the nilpotent part J_0 has no real p-th root, so no eventually nonnegative root exists";
        return rep;
    }
    rep.nilpotent_root_exists = true;
    std::vector<bool> taken(zb.size(), false);
    for (const auto& sizes : *grouping) {
        NilpotentGroup g;
        g.m = std::accumulate(sizes.begin(), sizes.end(), 0);
        std::vector<Eigen::Index> local_to_global;
        for (int s : sizes) {
            std::size_t t = 0;
            while (taken[t] || rep.zero_block_sizes[t] != s) {
                ++t;
            }
            taken[t] = true;
            g.blocks.push_back(zb[t]);
            for (int u = 0; u < s; ++u) {
                local_to_global.push_back(form.offsets[zb[t]] - base + u);
            }
        }
        const MatrixXr local = nilpotent_root(sizes, p);
        for (Eigen::Index i = 0; i < local.rows(); ++i) {
            for (Eigen::Index j = 0; j < local.cols(); ++j) {
                if (local(i, j) != 0.0) {
                    rep.X0(local_to_global[static_cast<std::size_t>(i)], local_to_global[static_cast<std::size_t>(j)]) =
                        local(i, j);
                }
            }
        }
        rep.groups.push_back(std::move(g));
    }

    const auto sp = build_space(form, p);
    if (sp.total && *sp.total == 0) {
        rep.diagnostic = sp.diagnostic;
        return rep;
    }
    const double tol = default_root_tol(form);
    walk_space(form, p, sp, cap, [&](const BranchSelection& sel) {
        MatrixXc f = family_branch_matrix(form, sel);
        if (n0 > 0) {
            f.block(base, base, n0, n0) = rep.X0.cast<Complex>();
        }
        RootCandidate c;
        c.selection = sel;
        c.X = form.Z * f * form.Z_inv;
        MatrixXc xp = c.X;
        for (int i = 1; i < p; ++i) {
            xp = xp * c.X;
        }
        c.residual = inf_norm(MatrixXc(xp - form.source));
        if (!(c.residual <= tol)) {
            throw NumericalError("classify_singular: residual " + std::to_string(c.residual) + " exceeds tolerance");
        }
        c.is_real = max_abs(MatrixXr(c.X.imag())) <= tol;
        if (c.is_real) {
            c.X = c.X.real().cast<Complex>();
        }
        accept_or_throw(verify_candidate(c.X, opts));
        rep.witnesses.push_back(std::move(c));
    });
    return rep;
}

Characterization check_eventual_nonnegativity_characterization(const MatrixXr& x) {
    return eventual_nonnegativity_characterization(x);
}

CompletelyReducibleReport completely_reducible_criterion(const MatrixXr& a, int p) {
    require_square(a.rows(), a.cols(), "completely_reducible_criterion");
    if (p < 2) {
        throw DomainError("p must be at least 2");
    }
    CompletelyReducibleReport rep;
    rep.warnings.push_back(
        "the criterion covers roots assembled block by block; a reducible matrix can have an eventually "
        "nonnegative root that is irreducible even when gcd(h_i, p) > 1 (the square of the 4-cycle is one)");
    const auto rs = reducible_structure(a);
    if (rs.components.size() < 2) {
        rep.reason = "matrix is irreducible; at least two diagonal blocks are required";
        return rep;
    }
    if (!rs.completely_reducible) {
        rep.reason = "matrix is reducible but not completely reducible";
        return rep;
    }
    Eigen::JacobiSVD<MatrixXr> svd(a);
    const auto& sv = svd.singularValues();
    if (sv(0) == 0.0 || sv(sv.size() - 1) / sv(0) <= 1e-12) {
        rep.reason = "matrix is singular";
        return rep;
    }
    const auto verdict = power_verdict(a);
    if (verdict.verdict != Verdict::EventuallyNonnegative) {
        rep.reason = "matrix is not shown to be eventually nonnegative: " + verdict.reason;
        return rep;
    }
    bool roots_ok = true;
    bool gcd_ok = true;
    for (std::size_t i = 0; i < rs.components.size(); ++i) {
        ReducibleBlock blk;
        blk.vertices = rs.components[i];
        const auto m = static_cast<Eigen::Index>(blk.vertices.size());
        MatrixXr sub(m, m);
        for (Eigen::Index r = 0; r < m; ++r) {
            for (Eigen::Index c = 0; c < m; ++c) {
                sub(r, c) = a(blk.vertices[static_cast<std::size_t>(r)], blk.vertices[static_cast<std::size_t>(c)]);
            }
        }
        blk.h = index_of_imprimitivity(digraph_of(sub));
        blk.gcd_ok = gcd64(blk.h, p) == 1;
        if (p % 2 == 1) {
            blk.has_real_root = true;
        } else {
            // Negative eigenvalues must come with even multiplicity.
            const auto s = spectrum_of(sub);
            const double scale = std::max(1.0, s.radius());
            std::vector<double> neg;
            for (auto z : s.values) {
                if (std::abs(z.imag()) <= 1e-9 * scale && z.real() < 0.0) {
                    neg.push_back(z.real());
                }
            }
            std::sort(neg.begin(), neg.end());
            blk.has_real_root = true;
            for (std::size_t u = 0; u < neg.size();) {
                std::size_t v = u;
                while (v < neg.size() && neg[v] - neg[u] <= 1e-6 * scale) {
                    ++v;
                }
                blk.has_real_root = blk.has_real_root && (v - u) % 2 == 0;
                u = v;
            }
        }
        roots_ok = roots_ok && blk.has_real_root;
        gcd_ok = gcd_ok && blk.gcd_ok;
        rep.blocks.push_back(std::move(blk));
    }
    if (!roots_ok) {
        rep.reason = "a diagonal block has no real p-th root, so the criterion does not apply";
        return rep;
    }
    rep.applicable = true;
    rep.holds = gcd_ok;
    rep.reason = gcd_ok ? "gcd(h_i, p) = 1 for every diagonal block" : "gcd(h_i, p) > 1 for some diagonal block";
    return rep;
}

StochasticRootReport stochastic_principal_root_check(const MatrixXr& a, int p) {
    require_square(a.rows(), a.cols(), "stochastic_principal_root_check");
    if (p < 2) {
        throw DomainError("p must be at least 2");
    }
    const auto n = a.rows();
    if (n == 0 || a.minCoeff() < 0.0) {
        throw PreconditionError("matrix is not nonnegative");
    }
    if ((a.rowwise().sum().array() - 1.0).abs().maxCoeff() > 1e-10 * static_cast<double>(n)) {
        throw PreconditionError("matrix is not stochastic (row sums differ from 1)");
    }
    const auto g = digraph_of(a);
    if (!is_strongly_connected(g)) {
        throw PreconditionError("matrix is reducible");
    }
    StochasticRootReport rep;
    rep.h = index_of_imprimitivity(g);
    rep.p = p;
    if (rep.h < 2) {
        throw PreconditionError("matrix is primitive (cyclic index 1)");
    }
    const auto form = eigendecompose(a);
    const auto root = construct_root(form, principal_selection(form, p));
    rep.root = root.X;
    const VectorXc sums = root.X.rowwise().sum();
    for (Eigen::Index i = 0; i < n; ++i) {
        rep.row_sums.push_back(sums(i).real());
        rep.max_row_sum_error = std::max(rep.max_row_sum_error, std::abs(sums(i) - 1.0));
    }
    rep.min_entry = root.X.real().minCoeff();
    rep.max_imag = max_abs(MatrixXr(root.X.imag()));
    rep.stochastic = rep.max_imag <= 1e-9 && rep.min_entry >= -1e-12 && rep.max_row_sum_error <= 1e-6;
    if (rep.stochastic) {
        rep.reason = "principal root is stochastic";
    } else if (rep.max_imag > 1e-9) {
        rep.reason = "principal root has non-real entries";
    } else if (rep.min_entry < -1e-12) {
        rep.reason = "principal root has negative entries";
    } else {
        rep.reason = "principal root has row sums different from 1";
    }
    return rep;
}

ClassificationReport classify(const CyclicJordanForm& form, int p, std::size_t cap, const VerifyOptions& opts) {
    require_form(form, false);
    ClassificationReport rep;
    const auto cnt = count_impl(form, p);
    rep.h = form.h;
    rep.p = p;
    rep.gcd_ok = cnt.gcd_ok;
    rep.p_even = p % 2 == 0;
    rep.r1 = cnt.r1;
    rep.r2 = cnt.r2;
    rep.c = cnt.c;
    rep.c_pairs = cnt.c_pairs;
    rep.derogatory = cnt.derogatory;
    rep.primary_roots = PrimarySelectionEnumerator(form, p).total();
    rep.enn_primary_count = cnt.count;
    const auto ex = enn_root_exists(form, p);
    rep.existence = ex.exists;
    rep.existence_reason = ex.reason;
    auto en = enumerate_enn_roots(form, p, cap, opts);
    rep.witnesses = std::move(en.roots);
    if (!en.diagnostic.empty()) {
        rep.warnings.push_back(en.diagnostic);
    }
    if (en.truncated) {
        rep.warnings.push_back("witness list truncated at " + std::to_string(cap));
    }
    if (form.derogatory) {
        rep.warnings.push_back(
            "derogatory input: counts cover primary roots over distinct eigenvalue sets; nonprimary roots are not "
            "counted");
    }
    return rep;
}

}  // namespace cycroots
