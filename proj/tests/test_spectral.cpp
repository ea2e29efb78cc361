#include <random>

#include "doctest.h"

#include "cycroots/spectral.hpp"
#include "cycroots/structure.hpp"
#include "fixtures.hpp"

using namespace cycroots;

namespace {

bool near(Complex a, Complex b, double tol = 1e-9) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("eigendecompose the 3-cyclic example") {
    const auto form = eigendecompose(fixtures::three_cyclic_a());
    CHECK(form.h == 3);
    REQUIRE(form.families.size() == 2);
    CHECK(near(form.families[0].base_eigenvalue, 1.0));
    CHECK(near(form.families[1].base_eigenvalue, 1.0 / 3.0));
    for (const auto& f : form.families) {
        CHECK(f.block_size == 1);
        REQUIRE(f.members.size() == 3);
        for (int k = 0; k < 3; ++k) {
            CHECK(near(f.members[k].eigenvalue, f.base_eigenvalue * fixtures::omega(3, k)));
        }
    }
    CHECK(form.r1 == 2);
    CHECK(form.r2 == 0);
    CHECK(form.c == 0);
    CHECK_FALSE(form.derogatory);
    CHECK(form.real_source);
    CHECK(form.reconstruction_residual() < 1e-12);
    const auto pf = perron_family(form);
    REQUIRE(pf);
    CHECK(*pf == 0);
}

TEST_CASE("eigendecompose small cases") {
    MatrixXr d(2, 2);
    d << 2, 0, 0, 3;
    const auto form = eigendecompose(d);
    CHECK(form.h == 1);
    CHECK(form.families.size() == 2);
    CHECK(form.r1 == 2);

    const auto cyc = eigendecompose(fixtures::cycle_permutation(4));
    CHECK(cyc.h == 4);
    REQUIRE(cyc.families.size() == 1);
    CHECK(near(cyc.families[0].base_eigenvalue, 1.0));
    CHECK(cyc.labels[0] == FamilyLabel::Minus);
}

TEST_CASE("eigendecompose guards") {
    MatrixXr sing(2, 2);
    sing << 1, 2, 2, 4;
    CHECK_THROWS_AS(eigendecompose(sing), SingularityError);
    MatrixXr defective(2, 2);
    defective << 1, 1, 0, 1;
    CHECK_THROWS_AS(eigendecompose(defective), NumericalError);
    CHECK_THROWS_AS(eigendecompose(MatrixXr(2, 3)), ShapeError);
    CHECK_THROWS_AS(eigendecompose(fixtures::two_by_two_cycles()), NumericalError);
}

TEST_CASE("reconstruction on random diagonalizable matrices") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 1; n <= 12; ++n) {
        MatrixXr m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                m(i, j) = u(rng);
            }
        }
        const auto form = eigendecompose(m);
        CHECK(form.reconstruction_residual() <= 1e-8 * n * inf_norm(m));
        CHECK(form.r1 + form.r2 + form.c == static_cast<int>(form.classes.size()));
        for (const auto& f : form.families) {
            CHECK(f.members.size() == static_cast<std::size_t>(form.h));
        }
    }
}

TEST_CASE("random h-cyclic matrices: families closed under rotation and conjugation") {
    std::mt19937_64 rng(5);
    for (int h = 2; h <= 5; ++h) {
        for (int m = 1; m <= 2; ++m) {
            for (int rep = 0; rep < 5; ++rep) {
                const MatrixXr a = fixtures::random_signed_cyclic(h, m, rng);
                const auto form = eigendecompose(a);
                CHECK(form.h == h);
                std::vector<Complex> all;
                for (const auto& f : form.families) {
                    std::vector<Complex> vals;
                    for (const auto& b : f.members) {
                        vals.push_back(b.eigenvalue);
                        all.push_back(b.eigenvalue);
                    }
                    std::vector<Complex> rot;
                    for (auto z : vals) {
                        rot.push_back(z * fixtures::omega(h));
                    }
                    CHECK(multiset_equal(vals, rot, 1e-8));
                    const double t = arg_0_2pi(f.base_eigenvalue);
                    CHECK((t < kTwoPi / h + 1e-9 || t > kTwoPi - 1e-9));
                }
                std::vector<Complex> conj;
                for (auto z : all) {
                    conj.push_back(std::conj(z));
                }
                CHECK(multiset_equal(all, conj, 1e-8));
                CHECK(form.r1 + form.r2 + form.c == static_cast<int>(form.classes.size()));
            }
        }
    }
}

TEST_CASE("nonnegative h-cyclic matrices: Perron family is J(rho nu_h, 1)") {
    std::mt19937_64 rng(9);
    for (int h = 2; h <= 5; ++h) {
        const MatrixXr a = fixtures::random_cyclic(h, 2, rng);
        const auto form = eigendecompose(a);
        const auto pf = perron_family(form);
        REQUIRE(pf);
        const auto pv = perron_vectors(a);
        CHECK(std::abs(form.families[*pf].base_eigenvalue - pv.rho) < 1e-9);
        CHECK(form.families[*pf].block_size == 1);
        CHECK(form.labels[*pf] == (h % 2 == 0 ? FamilyLabel::Minus : FamilyLabel::Plus));
        if (h % 2 == 1) {
            CHECK(form.r1 >= 1);
        }
    }
}

TEST_CASE("from_jordan_pair with the explicit eigenvectors") {
    const auto form = from_jordan_pair(fixtures::three_cyclic_z(), fixtures::three_cyclic_blocks(), 3);
    CHECK(form.real_source);
    CHECK((form.source.real() - fixtures::three_cyclic_a()).cwiseAbs().maxCoeff() < 1e-12);
    const auto num = eigendecompose(fixtures::three_cyclic_a());
    REQUIRE(form.families.size() == num.families.size());
    for (std::size_t f = 0; f < form.families.size(); ++f) {
        CHECK(near(form.families[f].base_eigenvalue, num.families[f].base_eigenvalue));
        CHECK(form.labels[f] == num.labels[f]);
    }
    CHECK(form.r1 == num.r1);
    CHECK(form.h == num.h);
}

TEST_CASE("from_jordan_pair with Jordan blocks") {
    std::vector<JordanBlock> blocks{{1.0, 2}, {-1.0, 2}};
    const auto form = from_jordan_pair(MatrixXc::Identity(4, 4), blocks, 2);
    REQUIRE(form.families.size() == 1);
    CHECK(form.families[0].block_size == 2);
    CHECK(near(form.families[0].base_eigenvalue, 1.0));

    const Complex w = fixtures::omega(3);
    CHECK_THROWS_AS(from_jordan_pair(MatrixXc::Identity(2, 2), {{1.0, 1}, {w, 1}}, 3), StructureError);
    CHECK_THROWS_AS(from_jordan_pair(MatrixXc::Identity(3, 3), {{1.0, 1}, {w, 1}}, 3), ShapeError);
    MatrixXc sing = MatrixXc::Zero(2, 2);
    CHECK_THROWS_AS(from_jordan_pair(sing, {{1.0, 1}, {-1.0, 1}}, 2), SingularityError);

    const auto with_zero = from_jordan_pair(MatrixXc::Identity(3, 3), {{0.0, 1}, {1.0, 1}, {-1.0, 1}}, 2);
    CHECK(with_zero.zero_blocks.size() == 1);
    CHECK(with_zero.families.size() == 1);
    CHECK_FALSE(with_zero.nonsingular());
}

TEST_CASE("group_into_families") {
    const auto fams = group_into_families(fixtures::three_cyclic_blocks(), 3);
    CHECK(fams.size() == 2);
    const auto singles = group_into_families({{2.0, 1}, {3.0, 1}}, 1);
    CHECK(singles.size() == 2);
    CHECK_THROWS_AS(group_into_families({{1.0, 1}, {-1.0, 2}}, 2), StructureError);
}

TEST_CASE("family labels") {
    CyclicFamily minus;
    minus.h = 1;
    minus.members = {{-2.0, 1}};
    minus.base_eigenvalue = -2.0;
    CHECK(label_of(minus) == FamilyLabel::Minus);

    const auto quarter = group_into_families({{Complex(0, 1), 1}, {-1.0, 1}, {Complex(0, -1), 1}, {1.0, 1}}, 4);
    REQUIRE(quarter.size() == 1);
    CHECK(label_of(quarter[0]) == FamilyLabel::Minus);

    const auto cplx = group_into_families({{Complex(1, 1), 1}, {Complex(-1, -1), 1}}, 2);
    CHECK(label_of(cplx[0]) == FamilyLabel::Complex);

    const auto plus = group_into_families({{2.0, 1}, {2.0 * fixtures::omega(3), 1}, {2.0 * fixtures::omega(3, 2), 1}}, 3);
    CHECK(label_of(plus[0]) == FamilyLabel::Plus);
}

TEST_CASE("conjugate pairs and self-conjugate complex classes") {
    // h = 2: lambda = 1 + i gives {1+i, -1-i}; its conjugate family is {1-i, -1+i}.
    std::vector<JordanBlock> blocks{{Complex(1, 1), 1}, {Complex(-1, -1), 1}, {Complex(1, -1), 1}, {Complex(-1, 1), 1}};
    auto form = from_jordan_pair(MatrixXc::Identity(4, 4), blocks, 2);
    CHECK(form.c == 2);
    CHECK(form.complex_pairs == 1);
    CHECK(form.self_conjugate_complex == 0);

    // h = 2: lambda = i gives {i, -i}, closed under conjugation.
    auto self = from_jordan_pair(MatrixXc::Identity(2, 2), {{Complex(0, 1), 1}, {Complex(0, -1), 1}}, 2);
    CHECK(self.c == 1);
    CHECK(self.self_conjugate_complex == 1);
    CHECK(self.complex_pairs == 0);
}

TEST_CASE("derogatory classes collapse") {
    std::vector<JordanBlock> blocks{{2.0, 1}, {-2.0, 1}, {2.0, 1}, {-2.0, 1}};
    const auto form = from_jordan_pair(MatrixXc::Identity(4, 4), blocks, 2);
    CHECK(form.families.size() == 2);
    CHECK(form.classes.size() == 1);
    CHECK(form.derogatory);
    CHECK(form.r2 == 1);
}

TEST_CASE("self-conjugate Frobenius sets") {
    SpectrumMultiset omega3{{1.0, fixtures::omega(3), fixtures::omega(3, 2)}};
    const auto t = is_self_conjugate_frobenius_set(omega3);
    CHECK(t.ok);
    CHECK(t.h == 3);

    SpectrumMultiset partial{{1.0, fixtures::omega(3)}};
    CHECK_FALSE(is_self_conjugate_frobenius_set(partial).ok);

    const auto b = spectrum_of(fixtures::two_by_two_cycles());
    const auto tb = is_self_conjugate_frobenius_set(b);
    CHECK(tb.ok);
    CHECK(tb.h == 2);

    SpectrumMultiset zero{{0.0, 0.0}};
    CHECK_FALSE(is_self_conjugate_frobenius_set(zero).ok);
}

TEST_CASE("unions of self-conjugate Frobenius sets") {
    CHECK(is_union_of_self_conjugate_frobenius_sets(spectrum_of(fixtures::three_cyclic_a())) == true);
    CHECK(is_union_of_self_conjugate_frobenius_sets(spectrum_of(fixtures::two_by_two_cycles())) == true);
    // A set with a single peripheral element absorbs everything of smaller modulus.
    CHECK(is_union_of_self_conjugate_frobenius_sets(SpectrumMultiset{{1.0, -0.5}}) == true);
    // Peripheral element without a positive real partner.
    CHECK(is_union_of_self_conjugate_frobenius_sets(SpectrumMultiset{{-1.0, 0.5}}) == false);
    // Omega_3 splits off and 0.5 forms a set of its own.
    SpectrumMultiset w3{{1.0, fixtures::omega(3), fixtures::omega(3, 2), 0.5}};
    CHECK(is_union_of_self_conjugate_frobenius_sets(w3) == true);
    // Omega_3 absorbs only whole orbits z * Omega_3, and -0.5 cannot start a set.
    SpectrumMultiset w3n{{1.0, fixtures::omega(3), fixtures::omega(3, 2), -0.5}};
    CHECK(is_union_of_self_conjugate_frobenius_sets(w3n) == false);
    SpectrumMultiset w3b{{1.0, fixtures::omega(3), fixtures::omega(3, 2), 0.5, 0.5 * fixtures::omega(3),
                          0.5 * fixtures::omega(3, 2)}};
    CHECK(is_union_of_self_conjugate_frobenius_sets(w3b) == true);
    // Not closed under conjugation.
    CHECK(is_union_of_self_conjugate_frobenius_sets(SpectrumMultiset{{1.0, Complex(0.2, 0.3)}}) == false);
    // Zeros are ignored.
    CHECK(is_union_of_self_conjugate_frobenius_sets(SpectrumMultiset{{1.0, -1.0, 0.0}}) == true);
}

TEST_CASE("Perron-Frobenius verification") {
    const auto rep = verify_perron_frobenius(fixtures::three_cyclic_a());
    CHECK(rep.all_pass());
    CHECK(rep.rho == doctest::Approx(1.0));
    CHECK(rep.h == 3);
    CHECK(rep.right.minCoeff() > 0.0);
    CHECK(rep.left.dot(rep.right) == doctest::Approx(1.0));

    const auto pos = verify_perron_frobenius(MatrixXr::Ones(2, 2));
    CHECK(pos.all_pass());
    CHECK(pos.h == 1);
    CHECK(pos.rho == doctest::Approx(2.0));

    MatrixXr red(2, 2);
    red << 0, 1, 0, 0;
    CHECK_THROWS_AS(verify_perron_frobenius(red), PreconditionError);
    MatrixXr neg(2, 2);
    neg << 1, -1, 1, 1;
    CHECK_THROWS_AS(verify_perron_frobenius(neg), PreconditionError);

    std::mt19937_64 rng(13);
    for (int h = 2; h <= 5; ++h) {
        const auto r = verify_perron_frobenius(fixtures::random_cyclic(h, 2, rng));
        CHECK(r.all_pass());
        CHECK(r.h == h);
    }
}
