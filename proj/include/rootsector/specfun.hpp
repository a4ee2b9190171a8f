#pragma once

#include <stdexcept>

#include "rootsector/util.hpp"

namespace rootsector::specfun {

struct GammaPole : std::runtime_error {
    GammaPole() : std::runtime_error("log_gamma pole at nonpositive integer") {}
};
struct DegenerateParameters : std::runtime_error {
    DegenerateParameters()
        : std::runtime_error("whittaker series degenerate: 2it is an integer") {}
};
struct ContourTooLow : std::runtime_error {
    ContourTooLow() : std::runtime_error("Mellin-Barnes contour abscissa below a pole") {}
};

// Principal-branch log Gamma, Lanczos + reflection; relative error <= 1e-12
// for |z| <= 100.
cplx log_gamma(cplx z);
cplx gamma_fn(cplx z);

// W_{m, it}(y). The type parameter is passed as it directly (real for
// tempered t purely imaginary, e.g. it = 1/2 for the discrete-series case).
struct WhittakerParams {
    double m = 0.0;
    cplx it{0.0, 1.0};  // the second Whittaker index
    double y = 1.0;
};

// Sum of the two conjugate power series; throws DegenerateParameters when
// 2it is an integer (the Gamma(±2it) prefactors blow up).
cplx whittaker_series(const WhittakerParams& p);

// Contour integral on Re(s) = sigma; sigma defaults to max(2, m+1).
cplx whittaker_mellin_barnes(const WhittakerParams& p, double sigma);
cplx whittaker_mellin_barnes(const WhittakerParams& p);

double bessel_I0(double x);

struct KloostermanValue {
    long long h = 0, c = 1;
    double value = 0.0;
    double weil_bound = 0.0;
};

// S(h,h;c) = sum over units x mod c of e((h x + h xbar)/c); exact inverses,
// compensated accumulation.
KloostermanValue kloosterman(long long h, long long c);

// |lambda_m(h)| / |lambda_n(h)| Gamma-quotient factor for pure weights n, m
// from one irreducible representation (n, m even, |n| <= |m|, nm >= 0).
double weight_shift_ratio(double t, long long n, long long m);

struct GammaCD {
    cplx C;
    double D;
    bool bounded;  // |C(k)| <= D(k)
};

// C(k) by the recursion C(k) = C(k-1) * (-it - n/2 + k - 1/2)/(-2it + k),
// D(k) = prod_{j<=k} (1 + (|n/2|+1)/j).
GammaCD gamma_C(int k, double t, long long n);

}  // namespace rootsector::specfun
