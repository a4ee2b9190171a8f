#pragma once

#include <stdexcept>
#include <vector>

#include "rootsector/lattice.hpp"
#include "rootsector/util.hpp"

namespace rootsector::bump {

struct ScaleOutOfRange : std::runtime_error {
    ScaleOutOfRange() : std::runtime_error("radial scale Y = 4*pi*h/N must be < 1") {}
};

// Gevrey-type kernel psi_A(u) = exp(-A/(u(1-u))) on (0,1) and its derivatives.
// psi^(k)(u) = psi(u) * N_k(u) / (u(1-u))^(2k) with the polynomial recurrence
// N_{k+1} = A s' N_k + s^2 N_k' - 2k s s' N_k, s = u - u^2.
double psi_kernel(double A, double u);
double psi_kernel_deriv(double A, double u, int k);

// Normalized smooth step: 0 at u<=0, 1 at u>=1, monotone, built from psi_A.
class SmoothStep {
  public:
    explicit SmoothStep(double A);
    double operator()(double u) const;
    double deriv(double u, int k) const;  // k >= 1
    double A() const { return A_; }

  private:
    double A_;
    double norm_;  // integral of psi_A over (0,1)
};

// Radial cutoff F: support [Y/2, Y], plateau [5Y/8, 7Y/8], transitions Y/8.
class RadialCutoff {
  public:
    RadialCutoff(double Y, double A);
    double Y() const { return Y_; }
    double operator()(double y) const;
    double deriv(double y, int j) const;  // j <= 12
    // sup |F^(j)| * Y^j measured on a dense grid.
    double measured_sup(int j, int grid = 20000) const;

  private:
    double Y_, w_;  // w = Y/8 transition width
    SmoothStep step_;
};

// Angular cutoff G: pi/2-periodic flat top, 1 on [alpha+Z, beta-Z], supported
// in [alpha, beta] mod pi/2.
class AngularCutoff {
  public:
    explicit AngularCutoff(const lattice::SectorWindow& s, double A = 8.0);
    double alpha() const { return s_.alpha; }
    double beta() const { return s_.beta; }
    double Z() const { return s_.Z; }
    double operator()(double theta) const;  // any real theta
    double deriv(double theta, int j) const;
    // ||G^(j)||^2 = (1/2pi) int_0^{2pi} |G^(j)|^2, by adaptive quadrature.
    double norm_sq(int j) const;

  private:
    lattice::SectorWindow s_;
    SmoothStep step_;
};

RadialCutoff build_F(long long h, long long N);
AngularCutoff build_G(const lattice::SectorWindow& sector);

// Full-circle Fourier coefficients g_n = (1/2pi) int_0^{2pi} G(t) e^{-int} dt,
// n = 0..n_max (G real: g_{-n} = conj(g_n)).
std::vector<cplx> fourier_coeffs(const AngularCutoff& G, int n_max);

}  // namespace rootsector::bump
