#include "rootsector/selberg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "rootsector/quadrature.hpp"

namespace rootsector::selberg {
namespace {

using ld = long double;

// power-sum targets with the fixed 2.5-root moved across
const ld kTargets[4] = {55.0L - 6.25L, 979.0L - 39.0625L, 20515.0L - 244.140625L,
                        462979.0L - 1525.87890625L};

const QuarticRoots& solved_roots() {
    static const QuarticRoots r = solve_quartic_power_sums();
    return r;
}

}  // namespace

std::array<double, 4> QuarticRoots::sorted_roots() const {
    return {std::sqrt(a2), std::sqrt(b2), std::sqrt(c2), std::sqrt(d2)};
}

QuarticRoots solve_quartic_power_sums() {
    ld s[4] = {0.5L, 7.0L, 16.0L, 25.0L};  // documented initial guess
    for (int iter = 0; iter < 200; ++iter) {
        ld F[4], J[4][4];
        ld maxres = 0;
        for (int j = 0; j < 4; ++j) {
            ld sum = 0;
            for (int i = 0; i < 4; ++i) {
                ld p = 1;
                for (int e = 0; e < j + 1; ++e) p *= s[i];
                sum += p;
                J[j][i] = ld(j + 1) * (p / s[i]);
            }
            F[j] = sum - kTargets[j];
            maxres = std::max(maxres, (ld)std::abs((double)F[j]));
        }
        if (maxres < 1e-13L) {
            QuarticRoots out;
            ld v[4] = {s[0], s[1], s[2], s[3]};
            std::sort(v, v + 4);
            out.a2 = (double)v[0];
            out.b2 = (double)v[1];
            out.c2 = (double)v[2];
            out.d2 = (double)v[3];
            for (int j = 0; j < 4; ++j) out.residuals[j] = (double)F[j];
            return out;
        }
        // Gaussian elimination with partial pivoting on the 4x4 Newton system
        int piv[4] = {0, 1, 2, 3};
        for (int col = 0; col < 4; ++col) {
            int best = col;
            for (int r = col + 1; r < 4; ++r)
                if (std::abs((double)J[r][col]) > std::abs((double)J[best][col])) best = r;
            std::swap(J[col], J[best]);
            std::swap(F[col], F[best]);
            (void)piv;
            for (int r = col + 1; r < 4; ++r) {
                ld f = J[r][col] / J[col][col];
                for (int cc = col; cc < 4; ++cc) J[r][cc] -= f * J[col][cc];
                F[r] -= f * F[col];
            }
        }
        ld dx[4];
        for (int r = 3; r >= 0; --r) {
            ld acc = F[r];
            for (int cc = r + 1; cc < 4; ++cc) acc -= J[r][cc] * dx[cc];
            dx[r] = acc / J[r][r];
        }
        for (int i = 0; i < 4; ++i) s[i] -= dx[i];
    }
    throw NoConvergence();
}

std::array<double, 5> plus_scales() {
    const auto& q = solved_roots();
    auto r = q.sorted_roots();
    return {r[0], r[1], r[2], r[3], 2.5};
}

double rho_X(cplx t, double X) {
    cplx t2 = t * t;
    cplx sum = 0.0;
    for (double f : plus_scales()) {
        cplx den = t2 + (f * X) * (f * X);
        if (std::abs(den) < 1e-12 * (f * X) * (f * X)) throw std::domain_error("rho_X pole");
        sum += 1.0 / den;
    }
    for (double f : kMinusScales) {
        cplx den = t2 + (f * X) * (f * X);
        if (std::abs(den) < 1e-12 * (f * X) * (f * X)) throw std::domain_error("rho_X pole");
        sum -= 1.0 / den;
    }
    return sum.real();
}

double rho(cplx t, long long n, double C) {
    if (n % 2 != 0) return 0.0;
    if (n == 0) return rho_X(t, kX0);
    double n10 = std::pow(double(std::abs(n)), 10);
    return C / 1200.0 / (n10 + 1.0) * rho_X(t, X_of(n));
}

double g_closed(double u, double X) {
    double au = std::abs(u), sum = 0.0;
    for (double f : plus_scales()) sum += kPi / (f * X) * std::exp(-f * X * au);
    for (double f : kMinusScales) sum -= kPi / (f * X) * std::exp(-f * X * au);
    return sum;
}

double fourier_invert_quadrature(const std::function<double(double)>& rho_t, double u) {
    // rho is even, so the transform reduces to a cosine integral; the combined
    // Lorentzian family decays like t^{-12}, making [0, 2e4] ample.
    QuadOptions opt;
    opt.abs_tol = 1e-14;
    auto f = [&](double t) { return rho_t(t) * std::cos(t * u); };
    double v = integrate(f, 0.0, 2000.0, opt) + integrate(f, 2000.0, 20000.0, opt);
    return 2.0 * v;
}

namespace {

ld w_of(ld x) { return 1.0L + x / 2.0L + std::sqrt(x * (x + 4.0L)) / 2.0L; }
ld w_prime(ld x) { return 0.5L + (x + 2.0L) / (2.0L * std::sqrt(x * (x + 4.0L))); }
constexpr ld kPiL = 3.14159265358979323846264338327950288L;

ld Q_single_l(ld x, ld F) { return kPiL / F * std::pow(w_of(x), -F); }

ld Q_of_l(ld x, double X) {
    ld sum = 0;
    for (double f : plus_scales()) sum += Q_single_l(x, (ld)f * (ld)X);
    for (double f : kMinusScales) sum -= Q_single_l(x, (ld)f * (ld)X);
    return sum;
}

ld Q_prime_l(ld x, double X) {
    // d/dx (pi/F) w^-F = -pi w^{-F-1} w'
    ld w = w_of(x), wp = w_prime(x);
    ld sum = 0;
    for (double f : plus_scales()) sum -= kPiL * std::pow(w, -(ld)f * (ld)X - 1.0L) * wp;
    for (double f : kMinusScales) sum += kPiL * std::pow(w, -(ld)f * (ld)X - 1.0L) * wp;
    return sum;
}

}  // namespace

double Q_single(double x, double F) { return (double)Q_single_l((ld)x, (ld)F); }
double Q_of(double x, double X) { return (double)Q_of_l((ld)x, X); }
double Q_prime(double x, double X) { return (double)Q_prime_l((ld)x, X); }

PuiseuxReport puiseux_halfinteger_coeffs(double X) {
    // The substitution s = sqrt(x) maps w to e^u with u = 2 asinh(s/2), and
    // w(-s) = 1/w(s). The odd part of Q in s therefore carries exactly the
    // half-integer orders, and equals -(pi/F) sinh(F u) per Lorentzian; fitting
    // that against an odd polynomial basis removes the large even-order
    // background that otherwise swamps the fit.
    const int kOrders = 8;  // basis s^1, s^3, ..., s^15
    const int rows = 240;
    // keep F*u <= 1 across the window so the omitted s^17 tail is negligible
    const ld s_lo = 2e-4L, s_hi = 2e-3L;

    using MatL = Eigen::Matrix<ld, Eigen::Dynamic, Eigen::Dynamic>;
    using VecL = Eigen::Matrix<ld, Eigen::Dynamic, 1>;

    auto fit = [&](const std::function<ld(ld)>& odd_fn) {
        MatL A(rows, kOrders);
        VecL b(rows);
        for (int r = 0; r < rows; ++r) {
            ld s = s_lo * std::pow(s_hi / s_lo, ld(r) / ld(rows - 1));
            ld s2 = s * s;
            ld p = s;
            for (int j = 0; j < kOrders; ++j) {
                A(r, j) = p;
                p *= s2;
            }
            b(r) = odd_fn(s);
        }
        VecL scale(kOrders);
        for (int j = 0; j < kOrders; ++j) {
            scale(j) = A.col(j).norm();
            A.col(j) /= scale(j);
        }
        Eigen::ColPivHouseholderQR<MatL> qr(A);
        if (qr.rank() < kOrders) throw FitIllConditioned();
        VecL c = qr.solve(b);
        for (int j = 0; j < kOrders; ++j) c(j) /= scale(j);
        return c;
    };

    auto odd_single = [](ld s, ld F) {
        ld u = 2.0L * std::asinh(s / 2.0L);  // log w(s^2), odd in s
        return -(kPiL / F) * std::sinh(F * u);
    };

    PuiseuxReport rep;
    VecL combined = fit([&](ld s) {
        ld sum = 0;
        for (double f : plus_scales()) sum += odd_single(s, (ld)f * (ld)X);
        for (double f : kMinusScales) sum -= odd_single(s, (ld)f * (ld)X);
        return sum;
    });
    for (int i = 0; i < 5; ++i) rep.coeff[i] = (double)combined(i);

    for (int i = 0; i < 5; ++i) rep.term_scale[i] = 0.0;
    auto note = [&](double F) {
        VecL single = fit([&](ld s) { return odd_single(s, (ld)F); });
        for (int i = 0; i < 5; ++i)
            rep.term_scale[i] = std::max(rep.term_scale[i], std::abs((double)single(i)));
    };
    for (double f : plus_scales()) note(f * X);
    for (double f : kMinusScales) note(f * X);
    return rep;
}

namespace {

// x beyond which |Q'| is below ~1e-18 of its x=0 scale
double support_end(double X) {
    double fmin = plus_scales()[0];
    double r = 50.0 / (fmin * X);
    return r * r;
}

}  // namespace

double phi_of(long long n, double x, double X) {
    double s_max = support_end(X);
    if (x >= s_max) return 0.0;
    double rmax = std::sqrt(s_max - x);
    long long half = n / 2;
    auto integrand = [&](double r) {
        double s = x + r * r;
        double qp = (double)Q_prime_l((ld)s, X);
        double root = std::sqrt(s + 4.0);
        double B = (root - r) / (root + r);
        double ph = (half == 0) ? 2.0
                                : std::pow(B, (double)half) + std::pow(B, -(double)half);
        return qp * ph;
    };
    QuadOptions opt;
    opt.abs_tol = 1e-11;
    return -integrate(integrand, 0.0, rmax, opt) / kPi;
}

PointPairTable::PointPairTable(long long n, double X) : n_(n), X_(X) {
    x_max_ = support_end(X);
    phi0_ = phi_of(n, 0.0, X);
    const int pts = 800;
    double x_min = x_max_ * 1e-9;
    lx_.resize(pts);
    phi_.resize(pts);
    for (int i = 0; i < pts; ++i) {
        double lx = std::log(x_min) + (std::log(x_max_) - std::log(x_min)) * double(i) / (pts - 1);
        lx_[i] = lx;
        phi_[i] = phi_of(n, std::exp(lx), X);
    }
}

double PointPairTable::eval(double x) const {
    if (x >= x_max_ || lx_.empty()) return 0.0;
    if (x <= 0.0) return phi0_;
    double lx = std::log(x);
    if (lx <= lx_.front()) {
        // linear blend toward the x = 0 value over the (tiny) first cell
        double t = x / std::exp(lx_.front());
        return phi0_ + t * (phi_.front() - phi0_);
    }
    double h = (lx_.back() - lx_.front()) / double(lx_.size() - 1);
    int i = (int)((lx - lx_.front()) / h);
    i = std::clamp(i, 1, (int)lx_.size() - 3);
    // cubic Lagrange on the 4-point stencil around the cell
    double t = (lx - lx_[i]) / h;  // in [0,1) within cell [i, i+1]
    double pm1 = phi_[i - 1], p0 = phi_[i], p1 = phi_[i + 1], p2 = phi_[i + 2];
    double a = (-t * (t - 1) * (t - 2)) / 6.0;
    double b = ((t + 1) * (t - 1) * (t - 2)) / 2.0;
    double c = (-(t + 1) * t * (t - 2)) / 2.0;
    double d = ((t + 1) * t * (t - 1)) / 6.0;
    return a * pm1 + b * p0 + c * p1 + d * p2;
}

std::string PointPairTable::to_csv() const {
    std::ostringstream os;
    os << "# schema=phi-table-v1\n";
    os << "n,u,phi\n";
    os.precision(17);
    os << n_ << ",0," << phi0_ << "\n";
    for (size_t i = 0; i < lx_.size(); ++i)
        os << n_ << "," << std::exp(lx_[i]) << "," << phi_[i] << "\n";
    return os.str();
}

cplx Q_from_phi(const PointPairTable& tab, double w) {
    if (w >= tab.x_max()) return 0.0;
    double vmax = std::sqrt(tab.x_max() - w);
    double root = std::sqrt(w + 4.0);
    long long half = tab.n() / 2;
    auto integrand = [&](double v) {
        cplx phase = std::pow(cplx(root, v) / cplx(root, -v), (double)half);
        return tab.eval(w + v * v) * phase;
    };
    QuadOptions opt;
    opt.abs_tol = 1e-10;
    return integrate_c(integrand, -vmax, vmax, opt);
}

double forward_transform(const PointPairTable& tab, double t, int grid) {
    double s_max = tab.x_max();
    double y_lo = (2.0 + s_max - std::sqrt(s_max * s_max + 4.0 * s_max)) / 2.0;
    double y_hi = (2.0 + s_max + std::sqrt(s_max * s_max + 4.0 * s_max)) / 2.0;
    long long n = tab.n();

    auto value_at = [&](int order) {
        const auto& gl = gauss_legendre(order);
        KahanC acc;
        for (int iy = 0; iy < order; ++iy) {
            double y = 0.5 * (y_lo + y_hi) + 0.5 * (y_hi - y_lo) * gl.node[iy];
            double wy = 0.5 * (y_hi - y_lo) * gl.weight[iy];
            double x2 = s_max * y - (y - 1.0) * (y - 1.0);
            if (x2 <= 0.0) continue;
            double xm = std::sqrt(x2);
            cplx ypow = std::pow(cplx(y), cplx(0.5, t)) / (y * y);
            for (int ix = 0; ix < order; ++ix) {
                double x = xm * gl.node[ix];
                double wx = xm * gl.weight[ix];
                double s = (x * x + (y - 1.0) * (y - 1.0)) / y;
                double ph = tab.eval(s);
                if (ph == 0.0) continue;
                // H_n(i, z) = i^n ((x + i(y+1)) / |x + i(y+1)|)^n
                double arg = double(n) * (kPi / 2.0 + std::atan2(y + 1.0, x));
                cplx Hn(std::cos(arg), std::sin(arg));
                acc.add(wy * wx * ph * Hn * ypow);
            }
        }
        return acc.value() / (2.0 * kPi);
    };

    if (grid > 0) return value_at(grid).real();
    cplx prev = value_at(96);
    for (int order : {192, 384}) {
        cplx cur = value_at(order);
        if (std::abs(cur - prev) <= 1e-5 * std::abs(cur)) return cur.real();
        prev = cur;
    }
    return prev.real();
}

PointPairValue point_pair_k(const modular::Mat2& g, const modular::Mat2& h,
                            const std::vector<PointPairTable>& tables, double C) {
    cplx z = modular::mobius(g, cplx(0, 1));
    cplx w = modular::mobius(h, cplx(0, 1));
    double x = std::norm(z - w) / (z.imag() * w.imag());
    PointPairValue out{0.0, 0.0, x};
    for (const auto& tab : tables) {
        if (tab.n() == 0) {
            out.k0 = tab.eval(x);
        } else {
            double n10 = std::pow(double(tab.n()), 10);
            double cn = C / 1200.0 / (n10 + 1.0);
            out.tail += 2.0 * cn * std::abs(tab.eval(x));  // weights +-n
        }
    }
    return out;
}

double calibrate_C(const std::vector<double>& x_grid,
                   const std::vector<PointPairTable>& tables) {
    const PointPairTable* zero = nullptr;
    for (const auto& t : tables)
        if (t.n() == 0) zero = &t;
    double C = 1.0;
    for (double x : x_grid) {
        double k0 = zero->eval(x);
        double s = 0.0;
        for (const auto& t : tables) {
            if (t.n() == 0) continue;
            double n10 = std::pow(double(t.n()), 10);
            s += 2.0 * std::abs(t.eval(x)) / (1200.0 * (n10 + 1.0));
        }
        if (s <= 0.0) {
            if (k0 < 0.0) throw PositivityUnattainable();
            continue;
        }
        if (k0 <= 0.0) throw PositivityUnattainable();
        C = std::min(C, k0 / s);
    }
    return C;
}

std::vector<PointPairTable> build_tables(long long n_max) {
    std::vector<PointPairTable> out;
    for (long long n = 0; n <= n_max; n += 2) out.emplace_back(n, X_of(n));
    return out;
}

}  // namespace rootsector::selberg
