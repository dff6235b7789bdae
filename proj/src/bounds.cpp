#include "circulant/bounds.hpp"

#include <string>

#include "circulant/errors.hpp"

namespace circulant {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in bound arithmetic");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in bound arithmetic");
    return r;
}

}  // namespace

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // r * (n-k+i) is divisible by i because r already holds C(n-k+i-1, i-1).
        r = checked_mul(r, n - k + i) / i;
    }
    return r;
}

std::int64_t s_poly(int f, std::int64_t k) {
    if (f < 0 || k < 0) throw Error("s_poly: arguments must be nonnegative");
    std::int64_t total = 0;
    std::int64_t pow2 = 1;
    for (int i = 0; i <= f; ++i) {
        total = checked_add(total, checked_mul(pow2, checked_mul(binomial(f, i), binomial(k, i))));
        pow2 = checked_mul(pow2, 2);
    }
    return total;
}

std::int64_t mac_bound(int degree, std::int64_t diameter) {
    if (degree < 2) throw Error("mac_bound: degree must be at least 2");
    if (diameter < 0) throw Error("mac_bound: diameter must be nonnegative");
    if (diameter == 0) return 1;
    if (degree % 2 == 0) return s_poly(degree / 2, diameter);
    int f = (degree - 1) / 2;
    return checked_add(s_poly(f, diameter), s_poly(f, diameter - 1));
}

std::int64_t lmac(int degree, std::int64_t level) {
    if (level < 1) throw Error("lmac: level must be at least 1");
    return mac_bound(degree, level) - mac_bound(degree, level - 1);
}

std::int64_t lmac_closed(int degree, std::int64_t l) {
    if (degree < 2 || degree > 9)
        throw Error("lmac_closed: degree must be in 2..9, got " + std::to_string(degree));
    if (l < 2) throw Error("lmac_closed: level must be at least 2");
    switch (degree) {
        case 2: return 2;
        case 3: return 4;
        case 4: return 4 * l;
        case 5: return 8 * l - 4;
        case 6: return 4 * l * l + 2;
        case 7: return 8 * l * l - 8 * l + 8;
        case 8: return (8 * l * l * l + 16 * l) / 3;
        default: return (16 * l * l * l - 24 * l * l + 56 * l - 24) / 3;
    }
}

std::int64_t last_maximal_level(int degree, std::int64_t k) {
    if (degree < 2 || degree > 9)
        throw Error("last_maximal_level: degree must be in 2..9, got " + std::to_string(degree));
    if (k < 1) throw Error("last_maximal_level: diameter must be at least 1");
    switch (degree) {
        case 2:
        case 3:
        case 4: return k;
        case 5: return k - 1;
        case 6: return (2 * k + 1) / 3;
        case 7: return 2 * k / 3;
        case 8: return (k + 1) / 2;
        default: return k / 2;
    }
}

}  // namespace circulant
