#include "cycroots/branches.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace cycroots {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

void require_hp(std::int64_t h, std::int64_t p, const char* what) {
    if (h < 2 || p < 2) {
        throw DomainError(std::string(what) + ": need h >= 2 and p >= 2");
    }
}

}  // namespace

RootsOfUnity::RootsOfUnity(std::int64_t order) : h(order) {
    if (order < 1) {
        throw DomainError("RootsOfUnity: order must be positive");
    }
    values.reserve(static_cast<std::size_t>(order));
    for (std::int64_t k = 0; k < order; ++k) {
        values.push_back(k == 0 ? Complex{1.0, 0.0}
                                : std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(order)));
    }
    omega = order == 1 ? Complex{1.0, 0.0} : values[1];
}

Complex RootsOfUnity::power(std::int64_t k) const { return values[static_cast<std::size_t>(mod_floor(k, h))]; }

void BranchTuple::validate() const {
    if (h < 2 || p < 2 || j.size() != static_cast<std::size_t>(h)) {
        throw StructureError("BranchTuple: need h, p >= 2 and h entries");
    }
    for (std::int64_t k = 0; k < h; ++k) {
        const auto jk = j[static_cast<std::size_t>(k)];
        if (jk < 0 || jk >= p) {
            throw StructureError("BranchTuple: branch index out of range");
        }
        const __int128 num = static_cast<__int128>(k) + static_cast<__int128>(h) * jk;
        if (num % p != 0) {
            throw StructureError("BranchTuple: (k + h*j_k) is not divisible by p at k = " + std::to_string(k));
        }
    }
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::optional<std::int64_t> mod_inverse(std::int64_t a, std::int64_t m) {
    // Extended Euclid on (a mod m, m).
    std::int64_t old_r = mod_floor(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        return std::nullopt;
    }
    return mod_floor(old_s, m);
}

std::optional<BranchTuple> unique_branch_tuple(std::int64_t h, std::int64_t p) {
    require_hp(h, p, "unique_branch_tuple");
    const auto inv = mod_inverse(h % p, p);
    if (!inv) {
        return std::nullopt;
    }
    BranchTuple t{h, p, {}};
    t.j.reserve(static_cast<std::size_t>(h));
    for (std::int64_t k = 0; k < h; ++k) {
        t.j.push_back(mul_mod(mod_floor(-k, p), *inv, p));
    }
    return t;
}

std::vector<std::int64_t> exponent_set(const BranchTuple& t) {
    t.validate();
    std::vector<std::int64_t> e;
    e.reserve(t.j.size());
    for (std::int64_t k = 0; k < t.h; ++k) {
        const __int128 num = static_cast<__int128>(k) + static_cast<__int128>(t.h) * t.j[static_cast<std::size_t>(k)];
        e.push_back(static_cast<std::int64_t>(num / t.p));
    }
    return e;
}

PowerExponent power_q(const BranchTuple& t) {
    t.validate();
    if (gcd64(t.h, t.p) != 1) {
        throw PreconditionError("power_q: gcd(h, p) must be 1");
    }
    const __int128 num = 1 + static_cast<__int128>(t.h) * t.j[1];
    const auto raw = static_cast<std::int64_t>(num / t.p);
    return {raw, mod_floor(raw, t.h)};
}

std::vector<std::int64_t> shifted_tuple(const std::vector<std::int64_t>& j, std::int64_t p, std::int64_t i) {
    if (i < 0 || i >= p) {
        throw DomainError("shifted_tuple: shift " + std::to_string(i) + " outside 0.." + std::to_string(p - 1));
    }
    std::vector<std::int64_t> out(j.size());
    std::transform(j.begin(), j.end(), out.begin(), [&](std::int64_t jk) { return (jk + i) % p; });
    return out;
}

std::vector<std::int64_t> shifted_tuple(const BranchTuple& t, std::int64_t i) { return shifted_tuple(t.j, t.p, i); }

void for_each_branch_image(std::int64_t h, std::int64_t p, const std::function<void(const BranchImage&)>& visit,
                           std::int64_t guard) {
    require_hp(h, p, "brute_force_branch_images");
    double total = 1.0;
    for (std::int64_t k = 0; k < h; ++k) {
        total *= static_cast<double>(p);
        if (total > static_cast<double>(guard)) {
            throw SizeError("brute_force_branch_images: p^h exceeds the guard of " + std::to_string(guard));
        }
    }
    const RootsOfUnity nu(h);
    const double dh = static_cast<double>(h);
    const double dp = static_cast<double>(p);

    BranchImage img;
    img.tuple.assign(static_cast<std::size_t>(h), 0);
    img.image_exponents.assign(static_cast<std::size_t>(h), -1);
    std::vector<bool> hit(static_cast<std::size_t>(h));
    while (true) {
        std::fill(hit.begin(), hit.end(), false);
        bool onto = true;
        for (std::int64_t k = 0; k < h; ++k) {
            // f_j(z) = |z|^(1/p) exp(i (theta + 2 pi j) / p), theta in [0, 2 pi).
            const Complex z = nu.values[static_cast<std::size_t>(k)];
            const double theta = arg_0_2pi(z);
            const double jk = static_cast<double>(img.tuple[static_cast<std::size_t>(k)]);
            const Complex f = std::polar(std::pow(std::abs(z), 1.0 / dp), (theta + kTwoPi * jk) / dp);
            auto m = static_cast<std::int64_t>(std::llround(arg_0_2pi(f) * dh / kTwoPi));
            m = mod_floor(m, h);
            const bool on_circle = std::abs(f - nu.values[static_cast<std::size_t>(m)]) < 1e-9;
            img.image_exponents[static_cast<std::size_t>(k)] = on_circle ? m : -1;
            if (!on_circle || hit[static_cast<std::size_t>(m)]) {
                onto = false;
            } else {
                hit[static_cast<std::size_t>(m)] = true;
            }
        }
        img.equals_omega_h = onto;
        visit(img);

        // Odometer increment, last position fastest.
        std::int64_t pos = h - 1;
        while (pos >= 0) {
            auto& digit = img.tuple[static_cast<std::size_t>(pos)];
            if (++digit < p) {
                break;
            }
            digit = 0;
            --pos;
        }
        if (pos < 0) {
            return;
        }
    }
}

std::vector<BranchImage> brute_force_branch_images(std::int64_t h, std::int64_t p, std::int64_t guard) {
    std::vector<BranchImage> out;
    for_each_branch_image(h, p, [&](const BranchImage& img) { out.push_back(img); }, guard);
    return out;
}

std::vector<std::vector<std::int64_t>> tuples_mapping_onto_omega(std::int64_t h, std::int64_t p,
                                                                 std::int64_t guard) {
    std::vector<std::vector<std::int64_t>> out;
    for_each_branch_image(
        h, p,
        [&](const BranchImage& img) {
            if (img.equals_omega_h) {
                out.push_back(img.tuple);
            }
        },
        guard);
    return out;
}

}  // namespace cycroots
