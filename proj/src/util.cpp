#include "rootsector/util.hpp"

#include <array>
#include <stdexcept>

namespace rootsector {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is deterministic for all n < 2^64 (Sorenson-Webster).
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int64_t mod_inverse(int64_t a, int64_t n) {
    if (n < 1) throw std::invalid_argument("mod_inverse: modulus must be positive");
    int64_t r0 = n, r1 = ((a % n) + n) % n;
    int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        int64_t q = r0 / r1;
        int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw std::domain_error("mod_inverse: arguments are not coprime");
    return ((t0 % n) + n) % n;
}

uint64_t divisor_count(uint64_t n) {
    uint64_t count = 1;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        uint64_t e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        count *= e + 1;
    }
    if (n > 1) count *= 2;
    return count;
}

uint64_t euler_phi(uint64_t n) {
    uint64_t result = n;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace rootsector
