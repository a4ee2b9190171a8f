#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "rootsector/bump.hpp"
#include "rootsector/lattice.hpp"
#include "rootsector/util.hpp"

namespace rootsector::weyl {

struct EmptyInput : std::runtime_error {
    EmptyInput() : std::runtime_error("discrepancy of an empty sample") {}
};

struct WeylSumValue {
    cplx value{0.0, 0.0};
    long long terms = 0;
};

// Roots of X^2 + 1 = 0 (mod n) via the primitive-point parametrization,
// filtered by the angle of the generating point (mod pi/2).
std::vector<lattice::RootTriple> roots_of_modulus(long long n,
                                                  const lattice::SectorWindow& sector);

// rho_h(n) = sum' e(h nu / n) over sector-admissible roots.
WeylSumValue rho_h(long long n, long long h, const lattice::SectorWindow& sector);

// L_{d,h}(N) = sum_{d*n <= N} rho_h(d*n); all moduli in the progression.
cplx linear_sum(long long d, long long h, long long N, const lattice::SectorWindow& sector);

// The smooth lattice form: sum over primitive first-quadrant points with
// a^2+b^2 = 0 (mod d) of e(h abar b / n) F(4 pi h / n) G(angle).
cplx smooth_linear_sum(long long d, long long h, long long N,
                       const bump::RadialCutoff& F, const bump::AngularCutoff& G);

// B(M,P) = sum_m sum_p alpha_m beta_p rho_h(m p); beta must be supported on primes.
cplx bilinear_sum(const std::map<long long, double>& alpha,
                  const std::map<long long, double>& beta, long long h,
                  const lattice::SectorWindow& sector);

struct BoundarySetReport {
    long long radial_count = 0;   // (n, nu) pairs in the radial bands
    long long angular_count = 0;  // integer points in the angular bands
    long long total = 0;          // primitive points in the boundary set S(N)
    long long N = 0, d = 1;
    double Z = 0.0, Delta = 0.0;
    std::vector<long long> xi;  // xi(n) profile along vertical lines, alpha side
    long long xi_n_min = 0;
};

BoundarySetReport boundary_set(long long N, long long d, double Z, double Delta,
                               const lattice::SectorWindow& sector);

// Star discrepancy by the sorted-sample formula.
double discrepancy(std::vector<double> points);

struct ProfileRow {
    long long h;
    cplx sum;
    long long count;
    double normalized_abs;
};

std::vector<ProfileRow> weyl_sums_profile(long long N, long long h_max,
                                          const lattice::SectorWindow& sector);

}  // namespace rootsector::weyl
