#include <numeric>
#include <set>

#include "doctest.h"

#include "cycroots/branches.hpp"
#include "oracles.hpp"

using namespace cycroots;

TEST_CASE("roots of unity") {
    RootsOfUnity r(6);
    CHECK(r.values.size() == 6);
    CHECK(std::abs(std::pow(r.omega, 6) - 1.0) < 1e-12);
    for (int k = 1; k < 6; ++k) {
        CHECK(std::abs(std::pow(r.omega, k) - 1.0) > 1e-3);
    }
    CHECK(r.power(7) == r.power(1));
    CHECK(r.power(-1) == r.power(5));
    CHECK_THROWS_AS(RootsOfUnity(0), DomainError);
}

TEST_CASE("unique tuple examples") {
    const auto t32 = unique_branch_tuple(3, 2);
    REQUIRE(t32);
    CHECK(t32->j == std::vector<std::int64_t>{0, 1, 0});
    CHECK_FALSE(unique_branch_tuple(2, 2));
    const auto t23 = unique_branch_tuple(2, 3);
    REQUIRE(t23);
    CHECK(t23->j == std::vector<std::int64_t>{0, 1});
    CHECK_THROWS_AS(unique_branch_tuple(1, 3), DomainError);
}

TEST_CASE("unique tuple agrees with exhaustive search") {
    for (std::int64_t h = 2; h <= 30; ++h) {
        for (std::int64_t p = 2; p <= 30; ++p) {
            const auto t = unique_branch_tuple(h, p);
            CHECK(t.has_value() == (std::gcd(h, p) == 1));
            double total = std::pow(static_cast<double>(p), static_cast<double>(h));
            if (total <= 200000.0) {
                const auto survivors = tuples_mapping_onto_omega(h, p);
                if (t) {
                    REQUIRE(survivors.size() == 1);
                    CHECK(survivors.front() == t->j);
                } else {
                    CHECK(survivors.empty());
                }
            } else if (t) {
                // Spot check by direct evaluation.
                const RootsOfUnity nu(h);
                std::set<std::int64_t> seen;
                for (std::int64_t k = 0; k < h; ++k) {
                    const Complex f = oracles::branch(nu.values[static_cast<std::size_t>(k)], static_cast<int>(p),
                                                      static_cast<int>(t->j[static_cast<std::size_t>(k)]));
                    const auto m = exponent_set(*t)[static_cast<std::size_t>(k)];
                    CHECK(std::abs(f - nu.power(m)) < 1e-9);
                    seen.insert(m);
                }
                CHECK(seen.size() == static_cast<std::size_t>(h));
            }
        }
    }
}

TEST_CASE("brute force images") {
    CHECK(tuples_mapping_onto_omega(3, 2).size() == 1);
    CHECK(tuples_mapping_onto_omega(2, 2).empty());
    CHECK(tuples_mapping_onto_omega(4, 3).size() == 1);
    CHECK(brute_force_branch_images(3, 2).size() == 8);
    CHECK_THROWS_AS(brute_force_branch_images(20, 5), SizeError);
}

TEST_CASE("exponent set") {
    CHECK(exponent_set(*unique_branch_tuple(3, 2)) == std::vector<std::int64_t>{0, 2, 1});
    CHECK(exponent_set(*unique_branch_tuple(2, 3)) == std::vector<std::int64_t>{0, 1});
    for (std::int64_t h = 2; h <= 12; ++h) {
        for (std::int64_t p = 2; p <= 12; ++p) {
            const auto t = unique_branch_tuple(h, p);
            if (!t) {
                continue;
            }
            CHECK(t->j[0] == 0);
            auto e = exponent_set(*t);
            CHECK(e[0] == 0);
            std::sort(e.begin(), e.end());
            for (std::int64_t k = 0; k < h; ++k) {
                CHECK(e[static_cast<std::size_t>(k)] == k);
            }
        }
    }
    BranchTuple bad{3, 2, {0, 0, 0}};
    CHECK_THROWS_AS(exponent_set(bad), StructureError);
}

TEST_CASE("power exponent") {
    CHECK(power_q(*unique_branch_tuple(3, 2)).raw == 2);
    CHECK(power_q(*unique_branch_tuple(2, 3)).raw == 1);
    for (std::int64_t h = 2; h <= 15; ++h) {
        for (std::int64_t p = 2; p <= 15; ++p) {
            const auto t = unique_branch_tuple(h, p);
            if (!t) {
                continue;
            }
            const auto q = power_q(*t);
            CHECK(std::gcd(q.raw, h) == 1);
            CHECK(q.reduced == q.raw % h);
            const RootsOfUnity nu(h);
            for (std::int64_t k = 0; k < h; ++k) {
                const Complex f = oracles::branch(nu.values[static_cast<std::size_t>(k)], static_cast<int>(p),
                                                  static_cast<int>(t->j[static_cast<std::size_t>(k)]));
                CHECK(std::abs(f - nu.power(q.raw * k)) < 1e-12);
            }
        }
    }
}

TEST_CASE("exponents giving permutations of Omega_h number phi(h)") {
    for (std::int64_t h = 2; h <= 20; ++h) {
        std::int64_t phi = 0;
        std::int64_t perms = 0;
        const RootsOfUnity nu(h);
        for (std::int64_t q = 0; q < h; ++q) {
            phi += std::gcd(q, h) == 1 ? 1 : 0;
            std::set<std::int64_t> hit;
            for (std::int64_t k = 0; k < h; ++k) {
                hit.insert((q * k) % h);
            }
            perms += hit.size() == static_cast<std::size_t>(h) ? 1 : 0;
        }
        CHECK(perms == phi);
    }
}

TEST_CASE("shifted tuples") {
    const auto t = *unique_branch_tuple(3, 2);
    CHECK(shifted_tuple(t, 0) == t.j);
    CHECK(shifted_tuple(t, 1) == std::vector<std::int64_t>{1, 0, 1});
    CHECK_THROWS_AS(shifted_tuple(t, 2), DomainError);
    CHECK_THROWS_AS(shifted_tuple(t, -1), DomainError);

    const auto t5 = *unique_branch_tuple(4, 5);
    for (std::int64_t i = 0; i < 5; ++i) {
        for (std::int64_t i2 = 0; i2 < 5; ++i2) {
            CHECK(shifted_tuple(shifted_tuple(t5, i), 5, i2) == shifted_tuple(t5, (i + i2) % 5));
        }
    }
}

TEST_CASE("shift identity f_i(lambda) f_jk(w^k) = f_jk^(i)(lambda w^k)") {
    const Complex lambda = std::polar(1.0, kPi / 5.0);
    const Complex w = std::polar(1.0, kTwoPi / 3.0);
    const Complex lhs = oracles::branch(lambda, 2, 1) * oracles::branch(w, 2, 1);
    const Complex rhs = oracles::branch(lambda * w, 2, 0);
    CHECK(std::abs(lhs - rhs) < 1e-12);
    CHECK(shifted_tuple(*unique_branch_tuple(3, 2), 1)[1] == 0);
}
