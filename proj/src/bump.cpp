#include "rootsector/bump.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "rootsector/quadrature.hpp"

namespace rootsector::bump {
namespace {

using Poly = std::vector<double>;  // coefficient vector, ascending powers

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r(p.size() + q.size() - 1, 0.0);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

Poly poly_axpy(double a, const Poly& p, Poly r) {
    if (r.size() < p.size()) r.resize(p.size(), 0.0);
    for (size_t i = 0; i < p.size(); ++i) r[i] += a * p[i];
    return r;
}

Poly poly_diff(const Poly& p) {
    if (p.size() <= 1) return {0.0};
    Poly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = double(i) * p[i];
    return r;
}

double poly_eval(const Poly& p, double u) {
    double v = 0.0;
    for (size_t i = p.size(); i-- > 0;) v = v * u + p[i];
    return v;
}

// N_k polynomials of the psi-derivative recurrence, cached per kernel slope A.
const std::vector<Poly>& n_polys(double A, int kmax) {
    static std::map<double, std::vector<Poly>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& tab = cache[A];
    const Poly s{0.0, 1.0, -1.0}, sp{1.0, -2.0};  // s = u - u^2, s'
    const Poly s2 = poly_mul(s, s), ssp = poly_mul(s, sp);
    if (tab.empty()) tab.push_back(Poly{1.0});
    while ((int)tab.size() <= kmax) {
        int k = (int)tab.size() - 1;
        const Poly& nk = tab.back();
        Poly next = poly_axpy(A, poly_mul(sp, nk), Poly{0.0});
        next = poly_axpy(1.0, poly_mul(s2, poly_diff(nk)), std::move(next));
        next = poly_axpy(-2.0 * k, poly_mul(ssp, nk), std::move(next));
        tab.push_back(std::move(next));
    }
    return tab;
}

// exp(A*(4 - 1/s(u))): psi_A rescaled so its maximum is 1; the common factor
// e^{4A} cancels against the normalization integral.
double psi_scaled(double A, double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    double s = u * (1.0 - u);
    return std::exp(A * (4.0 - 1.0 / s));
}

double psi_scaled_deriv(double A, double u, int k) {
    if (k == 0) return psi_scaled(A, u);
    if (u <= 0.0 || u >= 1.0) return 0.0;
    double p = psi_scaled(A, u);
    if (p == 0.0) return 0.0;
    double s = u * (1.0 - u);
    const auto& tab = n_polys(A, k);
    return p * poly_eval(tab[k], u) / std::pow(s, 2 * k);
}

}  // namespace

double psi_kernel(double A, double u) {
    return psi_scaled(A, u) * std::exp(-4.0 * A);
}

double psi_kernel_deriv(double A, double u, int k) {
    return psi_scaled_deriv(A, u, k) * std::exp(-4.0 * A);
}

SmoothStep::SmoothStep(double A) : A_(A) {
    norm_ = integrate([A](double u) { return psi_scaled(A, u); }, 0.0, 1.0);
}

double SmoothStep::operator()(double u) const {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double A = A_;
    // integrate the shorter half for stability near the endpoints
    if (u <= 0.5)
        return integrate([A](double v) { return psi_scaled(A, v); }, 0.0, u) / norm_;
    return 1.0 - integrate([A](double v) { return psi_scaled(A, v); }, u, 1.0) / norm_;
}

double SmoothStep::deriv(double u, int k) const {
    return psi_scaled_deriv(A_, u, k - 1) / norm_;
}

RadialCutoff::RadialCutoff(double Y, double A) : Y_(Y), w_(Y / 8.0), step_(A) {}

double RadialCutoff::operator()(double y) const {
    if (y <= Y_ / 2 || y >= Y_) return 0.0;
    if (y < 5 * Y_ / 8) return step_((y - Y_ / 2) / w_);
    if (y > 7 * Y_ / 8) return step_((Y_ - y) / w_);
    return 1.0;
}

double RadialCutoff::deriv(double y, int j) const {
    if (j == 0) return (*this)(y);
    if (y <= Y_ / 2 || y >= Y_) return 0.0;
    if (y < 5 * Y_ / 8) return step_.deriv((y - Y_ / 2) / w_, j) / std::pow(w_, j);
    if (y > 7 * Y_ / 8) {
        double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        return sgn * step_.deriv((Y_ - y) / w_, j) / std::pow(w_, j);
    }
    return 0.0;
}

double RadialCutoff::measured_sup(int j, int grid) const {
    double sup = 0.0;
    for (int i = 0; i <= grid; ++i) {
        double y = Y_ / 2 + (Y_ / 2) * double(i) / grid;
        sup = std::max(sup, std::abs(deriv(y, j)));
    }
    return sup * std::pow(Y_, j);
}

AngularCutoff::AngularCutoff(const lattice::SectorWindow& s, double A) : s_(s), step_(A) {}

static double reduce_quarter(double theta) {
    double r = std::fmod(theta, kPi / 2);
    if (r < 0) r += kPi / 2;
    return r;
}

double AngularCutoff::operator()(double theta) const {
    double r = reduce_quarter(theta);
    if (r < s_.alpha || r > s_.beta) return 0.0;
    if (r < s_.alpha + s_.Z) return step_((r - s_.alpha) / s_.Z);
    if (r > s_.beta - s_.Z) return step_((s_.beta - r) / s_.Z);
    return 1.0;
}

double AngularCutoff::deriv(double theta, int j) const {
    if (j == 0) return (*this)(theta);
    double r = reduce_quarter(theta);
    if (r <= s_.alpha || r >= s_.beta) return 0.0;
    if (r < s_.alpha + s_.Z) return step_.deriv((r - s_.alpha) / s_.Z, j) / std::pow(s_.Z, j);
    if (r > s_.beta - s_.Z) {
        double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        return sgn * step_.deriv((s_.beta - r) / s_.Z, j) / std::pow(s_.Z, j);
    }
    return 0.0;
}

double AngularCutoff::norm_sq(int j) const {
    if (j == 0) {
        double v = integrate([this](double t) {
            double g = (*this)(t);
            return g * g;
        }, s_.alpha, s_.beta);
        return 4.0 * v / (2.0 * kPi);  // four identical period cells per circle
    }
    auto sq = [this, j](double t) {
        double g = deriv(t, j);
        return g * g;
    };
    QuadOptions opt;
    opt.abs_tol = 1e-13 * std::pow(s_.Z, 1 - 2 * j);
    opt.rel_tol = 1e-11;  // high-order derivative norms grow far beyond the Z scaling
    double v = integrate(sq, s_.alpha, s_.alpha + s_.Z, opt) +
               integrate(sq, s_.beta - s_.Z, s_.beta, opt);
    return 4.0 * v / (2.0 * kPi);
}

RadialCutoff build_F(long long h, long long N) {
    double Y = 4.0 * kPi * double(h) / double(N);
    if (Y >= 1.0) throw ScaleOutOfRange();
    return RadialCutoff(Y, 0.25);
}

AngularCutoff build_G(const lattice::SectorWindow& sector) {
    return AngularCutoff(sector, 8.0);
}

namespace {

void fft_inplace(std::vector<cplx>& a) {
    size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = -2.0 * kPi / double(len);
        cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0);
            for (size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k], v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

}  // namespace

std::vector<cplx> fourier_coeffs(const AngularCutoff& G, int n_max) {
    // G is smooth and periodic, so the trapezoid rule converges spectrally;
    // at this sample count the aliasing error is far below 1e-12.
    size_t M = 1 << 16;
    while ((int)M < 16 * n_max) M <<= 1;
    std::vector<cplx> samples(M);
    for (size_t j = 0; j < M; ++j) samples[j] = G(2.0 * kPi * double(j) / double(M));
    fft_inplace(samples);
    std::vector<cplx> out(n_max + 1);
    for (int n = 0; n <= n_max; ++n) out[n] = samples[n] / double(M);
    return out;
}

}  // namespace rootsector::bump
