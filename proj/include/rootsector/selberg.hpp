#pragma once

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rootsector/modular.hpp"
#include "rootsector/util.hpp"

namespace rootsector::selberg {

struct NoConvergence : std::runtime_error {
    NoConvergence() : std::runtime_error("quartic power-sum solver failed to converge") {}
};
struct PositivityUnattainable : std::runtime_error {
    PositivityUnattainable()
        : std::runtime_error("no positive calibration constant works on the grid") {}
};
struct FitIllConditioned : std::runtime_error {
    FitIllConditioned() : std::runtime_error("Puiseux least-squares fit is ill conditioned") {}
};

// Squares of the four positive roots of the power-sum system
// sum f^{2j} + 2.5^{2j} = 1 + 2^{2j} + ... + 5^{2j}, j = 1..4.
struct QuarticRoots {
    double a2, b2, c2, d2;
    std::array<double, 4> residuals;  // power-sum residuals
    std::array<double, 4> sorted_roots() const;
};

QuarticRoots solve_quartic_power_sums();

// Lorentzian scale factors: the plus set {a,b,c,d,2.5} and minus set {1..5}.
std::array<double, 5> plus_scales();
inline constexpr std::array<double, 5> kMinusScales{1.0, 2.0, 3.0, 4.0, 5.0};

// rho_X(t) = sum_plus 1/(t^2 + (fX)^2) - sum_minus 1/(t^2 + (fX)^2).
double rho_X(cplx t, double X);

inline constexpr double kX0 = 100.0;
inline double X_of(long long n) { return (double(std::abs(n)) + 2.0) * kX0; }

// Final test function; C is the calibrated positivity constant.
double rho(cplx t, long long n, double C);

// Fourier inversion g(u) = int rho(t) e^{-itu} dt.
double g_closed(double u, double X);  // signed sum of (pi/F) e^{-F|u|}
double fourier_invert_quadrature(const std::function<double(double)>& rho_t, double u);

// Q(x) = g(arccosh(x/2 + 1)); single-scale and combined closed forms.
double Q_single(double x, double F);       // (pi/F) w(x)^{-F}
double Q_of(double x, double X);           // signed 10-term combination
double Q_prime(double x, double X);        // derivative of the combination

// Half-integer Puiseux coefficients of the combined Q (orders 1/2 ... 9/2),
// by least-squares fitting on a shrinking grid; per-order single-term
// magnitudes are returned for relative comparison.
struct PuiseuxReport {
    std::array<double, 5> coeff;      // combined, orders x^{1/2} .. x^{9/2}
    std::array<double, 5> term_scale; // largest single-Lorentzian magnitude per order
};
PuiseuxReport puiseux_halfinteger_coeffs(double X);

// Phi_n(x) = -(1/pi) int Q'(x + r^2) B(r)^{n/2} dr, with the Hejhal point-pair
// argument x = |z-w|^2 / (y_z y_w).
double phi_of(long long n, double x, double X);

// Interpolation table for Phi_n on a log-spaced grid.
class PointPairTable {
  public:
    PointPairTable() = default;
    PointPairTable(long long n, double X);
    long long n() const { return n_; }
    double X() const { return X_; }
    double x_max() const { return x_max_; }
    double eval(double x) const;  // cubic interpolation, 0 beyond x_max
    std::string to_csv() const;

  private:
    long long n_ = 0;
    double X_ = kX0;
    double x_max_ = 0.0;
    std::vector<double> lx_, phi_;  // log-spaced abscissae (log x) and values
    double phi0_ = 0.0;
};

// Q_n(w) = int Phi_n(w + v^2) ((sqrt(w+4) + iv)/(sqrt(w+4) - iv))^{n/2} dv.
cplx Q_from_phi(const PointPairTable& tab, double w);

// Weight-n Selberg transform of the tabulated Phi_n evaluated at type t.
double forward_transform(const PointPairTable& tab, double t, int grid = 0);

// k_n ingredients at a pair of group elements.
struct PointPairValue {
    double k0;
    double tail;        // sum over 0 < |n| <= n_max of |c_n k_n|
    double x;           // the point-pair argument
};
PointPairValue point_pair_k(const modular::Mat2& g, const modular::Mat2& h,
                            const std::vector<PointPairTable>& tables, double C);

// Largest C <= 1 such that k_0 >= sum_{n != 0} |k_n| with weights
// C/(1200 (n^10 + 1)) across the sampled x-grid.
double calibrate_C(const std::vector<double>& x_grid,
                   const std::vector<PointPairTable>& tables);

// Tables for even n = 0, 2, ..., n_max (X = X_n per weight).
std::vector<PointPairTable> build_tables(long long n_max);

}  // namespace rootsector::selberg
