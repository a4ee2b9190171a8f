#include "rootsector/specfun.hpp"

#include <cmath>
#include <numeric>

#include "rootsector/quadrature.hpp"

namespace rootsector::specfun {
namespace {

// Lanczos, g = 607/128, 15 coefficients (Boost/Godfrey set); good to ~1e-14
// on the right half plane.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

cplx log_gamma_core(cplx z) {
    // Re(z) >= 1/2 assumed
    cplx s = kLanczos[0];
    for (int k = 1; k < 15; ++k) s += kLanczos[k] / (z - 1.0 + double(k));
    cplx t = z - 0.5 + kLanczosG;
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(s);
}

bool near_nonpositive_int(cplx z) {
    if (std::abs(z.imag()) > 1e-14) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-14;
}

}  // namespace

cplx log_gamma(cplx z) {
    if (near_nonpositive_int(z)) throw GammaPole();
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection; any 2*pi*i branch offset cancels under exponentiation
    return std::log(kPi) - std::log(std::sin(kPi * z)) - log_gamma_core(1.0 - z);
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx whittaker_series(const WhittakerParams& p) {
    cplx it = p.it;
    cplx two_it = 2.0 * it;
    if (std::abs(two_it.imag()) < 1e-12 &&
        std::abs(two_it.real() - std::round(two_it.real())) < 1e-12)
        throw DegenerateParameters();

    auto branch = [&](cplx itb) {
        // sum_k Gamma(1/2-itb-m+k) Gamma(1-2itb) / (k! Gamma(1/2-itb-m) Gamma(1-2itb+k))
        //       * y^{1/2+k-itb}, prefactor Gamma(2itb)/Gamma(1/2+itb-m)
        cplx pref = std::exp(log_gamma(2.0 * itb) - log_gamma(0.5 + itb - p.m));
        cplx term = std::pow(cplx(p.y), 0.5 - itb);
        cplx sum = term;
        for (int k = 0; k < 10000; ++k) {
            term *= (0.5 - itb - p.m + double(k)) * p.y /
                    ((1.0 - 2.0 * itb + double(k)) * double(k + 1));
            sum += term;
            if (std::abs(term) < 1e-15 * std::abs(sum) && k > 3) break;
        }
        return pref * sum;
    };
    return std::exp(-p.y / 2.0) * (branch(it) + branch(-it));
}

cplx whittaker_mellin_barnes(const WhittakerParams& p, double sigma) {
    cplx it = p.it;
    // poles of Gamma(1/2 + s -+ it) start at s = -1/2 +- it
    double pole_max = std::max((-0.5 + it).real(), (-0.5 - it).real());
    if (sigma <= pole_max + 1e-12) throw ContourTooLow();

    double logy = std::log(p.y);
    auto integrand = [&](double r) {
        cplx s(sigma, r);
        cplx lg = log_gamma(0.5 + s - it) + log_gamma(0.5 + s + it) - log_gamma(1.0 + s - p.m);
        return std::exp(lg - s * logy);
    };
    // the Gamma pair decays like e^{-pi |r|}; truncate where that is < 1e-18
    double R = 45.0 + 2.0 * (std::abs(it) + std::abs(p.m) + sigma) + std::abs(logy);
    QuadOptions opt;
    opt.abs_tol = 1e-13;
    cplx integral = integrate_c(integrand, -R, R, opt) / (2.0 * kPi);
    return std::exp(p.y / 2.0) * integral;
}

cplx whittaker_mellin_barnes(const WhittakerParams& p) {
    return whittaker_mellin_barnes(p, std::max(2.0, p.m + 1.0));
}

double bessel_I0(double x) {
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= (x / 2.0) * (x / 2.0) / (double(k) * double(k));
        sum += term;
        if (term < 1e-15 * sum) break;
    }
    return sum;
}

KloostermanValue kloosterman(long long h, long long c) {
    KloostermanValue out;
    out.h = h;
    out.c = c;
    Kahan acc;
    if (c == 1) {
        acc.add(1.0);
    } else {
        for (long long x = 1; x < c; ++x) {
            if (std::gcd(x, c) != 1) continue;
            long long xbar = mod_inverse(x, c);
            long long hm = ((h % c) + c) % c;
            long long num = (long long)mulmod_u64((unsigned long long)hm,
                                                  (unsigned long long)((x + xbar) % c),
                                                  (unsigned long long)c);
            acc.add(std::cos(2.0 * kPi * double(num) / double(c)));
        }
    }
    out.value = acc.value();
    long long g = std::gcd(std::abs(h), c);
    out.weil_bound = std::sqrt(double(g)) * std::sqrt(double(c)) * double(divisor_count(c));
    return out;
}

double weight_shift_ratio(double t, long long n, long long m) {
    if (n == m) return 1.0;
    auto log_abs_pair = [&](double half_weight) {
        cplx a = log_gamma(cplx(0.5 + half_weight, t));
        cplx b = log_gamma(cplx(0.5 + half_weight, -t));
        return (a + b).real();
    };
    double num = log_abs_pair(std::abs(double(n)) / 2.0);
    double den = log_abs_pair(std::abs(double(m)) / 2.0);
    double r = 0.5 * (num - den);
    return (m >= 0) ? std::exp(r) : std::exp(-r);
}

GammaCD gamma_C(int k, double t, long long n) {
    cplx it(0.0, t);
    cplx C = 1.0;
    double D = 1.0;
    double w = double(std::abs(n) / 2) + 1.0;
    for (int j = 1; j <= k; ++j) {
        C *= (-it - double(n) / 2.0 + double(j) - 0.5) / (-2.0 * it + double(j));
        D *= 1.0 + w / double(j);
    }
    return {C, D, std::abs(C) <= D * (1.0 + 1e-12)};
}

}  // namespace rootsector::specfun
