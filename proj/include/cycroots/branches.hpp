#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cycroots/common.hpp"

namespace cycroots {

/// h-th roots of unity, nu_h = (1, w, ..., w^(h-1)) with w = exp(2*pi*i/h).
struct RootsOfUnity {
    std::int64_t h = 1;
    Complex omega{1.0, 0.0};
    std::vector<Complex> values;

    explicit RootsOfUnity(std::int64_t h);

    /// w^k for any integer k, reduced mod h first so congruent exponents
    /// give bit-identical values.
    Complex power(std::int64_t k) const;
};

/// A branch tuple j = (j_0, ..., j_{h-1}), j_k in {0, ..., p-1}, with
/// (k + h*j_k) divisible by p for every k.
struct BranchTuple {
    std::int64_t h = 0;
    std::int64_t p = 0;
    std::vector<std::int64_t> j;

    /// Throws StructureError if the divisibility invariant fails.
    void validate() const;
};

/// Exponent q of the permutation nu_h -> nu_h^q realised by the branch
/// tuple. `raw` is (1 + h*j_1)/p, `reduced` is raw mod h.
struct PowerExponent {
    std::int64_t raw = 0;
    std::int64_t reduced = 0;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m);

/// The unique tuple whose branch images of Omega_h are again Omega_h.
/// Present iff gcd(h, p) = 1; then j_k = (-k) * h^{-1} mod p.
std::optional<BranchTuple> unique_branch_tuple(std::int64_t h, std::int64_t p);

/// ((k + h*j_k)/p)_k, a permutation of 0..h-1.
std::vector<std::int64_t> exponent_set(const BranchTuple& t);

PowerExponent power_q(const BranchTuple& t);

/// (j_k + i) mod p for every k. Throws DomainError unless 0 <= i < p.
std::vector<std::int64_t> shifted_tuple(const BranchTuple& t, std::int64_t i);
std::vector<std::int64_t> shifted_tuple(const std::vector<std::int64_t>& j, std::int64_t p, std::int64_t i);

/// Test oracle: walks every tuple in {0..p-1}^h and reports its image
/// {f_{j_k}(w^k)} as exponents m with f = w^m, or -1 where the image is not
/// an h-th root of unity. Throws SizeError if p^h exceeds `guard`.
struct BranchImage {
    std::vector<std::int64_t> tuple;
    std::vector<std::int64_t> image_exponents;
    bool equals_omega_h = false;
};

void for_each_branch_image(std::int64_t h, std::int64_t p, const std::function<void(const BranchImage&)>& visit,
                           std::int64_t guard = 1'000'000);

std::vector<BranchImage> brute_force_branch_images(std::int64_t h, std::int64_t p, std::int64_t guard = 1'000'000);

/// Tuples from the exhaustive walk whose image set is exactly Omega_h.
std::vector<std::vector<std::int64_t>> tuples_mapping_onto_omega(std::int64_t h, std::int64_t p,
                                                                 std::int64_t guard = 1'000'000);

}  // namespace cycroots
