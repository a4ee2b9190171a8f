#pragma once
// Small numeric and integer helpers shared by every module.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <vector>

namespace rootsector {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

// Compensated (Kahan) accumulator. Partial sums must be merged in index
// order to keep parallel reductions deterministic.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct KahanC {
    Kahan re, im;
    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

// e(x) = exp(2*pi*i*x) with range reduction on x, so that huge rational
// arguments h*x/c keep full relative accuracy in the fractional part.
inline cplx unit_exp(double x) {
    double f = x - std::floor(x);
    double a = kTwoPi * f;
    return {std::cos(a), std::sin(a)};
}

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Inverse of a modulo n (extended Euclid). Requires gcd(a, n) = 1, n >= 1.
// Result is reduced into [0, n).
int64_t mod_inverse(int64_t a, int64_t n);

// Number of divisors tau(n), by trial division (desk-scale arguments).
uint64_t divisor_count(uint64_t n);

// Euler phi, trial division.
uint64_t euler_phi(uint64_t n);

}  // namespace rootsector
