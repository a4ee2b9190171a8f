#include "rootsector/poincare.hpp"

#include <cmath>
#include <numeric>

namespace rootsector::poincare {

namespace {

// Contribution of the coset with bottom row (c,d); rows (c,d) and (-c,-d)
// give the same value because G is pi/2-periodic, hence the factor 2.
cplx row_term(long long c, long long d, const modular::Mat2& g, long long h,
              const bump::RadialCutoff& F, const bump::AngularCutoff& G) {
    long long dm = (c == 0) ? 0 : ((d % c) + c) % c;
    long long a, b;
    if (c == 0) {
        a = 1;
        b = 0;
    } else if (c == 1) {
        a = 0;
        b = -1;
    } else {
        a = mod_inverse(dm, c);
        b = (a * d - 1) / c;
    }
    modular::Mat2 sigma{double(a), double(b), double(c), double(d)};
    modular::IwasawaCoords w = modular::iwasawa(sigma * g);
    double f = F(4.0 * kPi * std::abs(double(h)) * w.y);
    if (f == 0.0) return {0.0, 0.0};
    double gg = G(w.theta);
    if (gg == 0.0) return {0.0, 0.0};
    return 2.0 * unit_exp(double(h) * w.x) * f * gg;
}

}  // namespace

PoincareEval eval_P(const modular::Mat2& g, long long q, long long h,
                    const bump::RadialCutoff& F, const bump::AngularCutoff& G) {
    PoincareEval out;
    out.q = q;
    out.h = h;
    cplx z = modular::mobius(g, cplx(0, 1));
    double xg = z.real(), yg = z.imag();
    double Y = F.Y();
    // supp F = [Y/2, Y] forces |c z + d|^2 in [4 pi h yg / Y, 8 pi h yg / Y];
    // enumerate with a 2x safety margin on the box and assert the shell is empty.
    double s_hi = 8.0 * kPi * std::abs(double(h)) * yg / Y;
    double margin = 2.0;
    long long c_max = (long long)std::floor(std::sqrt(margin * s_hi) / yg) + 1;
    KahanC acc;

    // identity coset c = 0 (rows (0, +-1))
    {
        cplx t = row_term(0, 1, g, h, F, G);
        if (t != cplx(0.0, 0.0)) {
            acc.add(t);
            ++out.contributing_cosets;
        }
    }
    for (long long c = q; c <= c_max; c += q) {
        double rad = std::sqrt(margin * s_hi - c * c * yg * yg > 0
                                   ? margin * s_hi - c * c * yg * yg
                                   : 0.0);
        long long d_lo = (long long)std::floor(-double(c) * xg - rad) - 1;
        long long d_hi = (long long)std::ceil(-double(c) * xg + rad) + 1;
        for (long long d = d_lo; d <= d_hi; ++d) {
            if (std::gcd(c, std::llabs(d)) != 1) continue;
            cplx t = row_term(c, d, g, h, F, G);
            if (t != cplx(0.0, 0.0)) {
                acc.add(t);
                ++out.contributing_cosets;
            }
        }
    }
    out.value = acc.value();
    out.contributing_cosets *= 2;  // both sign classes contribute equally
    return out;
}

cplx smooth_linear_form(long long q, long long h, long long N,
                        const bump::RadialCutoff& F, const bump::AngularCutoff& G) {
    // representatives of Gamma_0(q) \ SL2(Z) from P^1(Z/q), keeping the
    // classes whose modulus c^2 + d^2 vanishes mod q
    std::vector<std::pair<long long, long long>> reps;
    if (q == 1) {
        reps.push_back({0, 1});
    } else {
        for (long long c = 0; c < q; ++c)
            for (long long d = 0; d < q; ++d) {
                if (std::gcd(std::gcd(c, d), q) != 1) continue;
                // canonical member of the unit-scaling class
                bool canonical = true;
                for (long long u = 1; u < q && canonical; ++u) {
                    if (std::gcd(u, q) != 1) continue;
                    long long cc = (c * u) % q, dd = (d * u) % q;
                    if (std::make_pair(cc, dd) < std::make_pair(c, d)) canonical = false;
                }
                if (canonical) reps.push_back({c, d});
            }
    }

    KahanC acc;
    for (auto [c, d] : reps) {
        if (((c * c + d * d) % q) != 0) continue;
        // lift to a coprime integer row and complete to SL2(Z); classes with
        // c = 0 survive the modulus filter only when q = 1
        long long C = c, D = d;
        if (C == 0 && D == 0) continue;
        if (C == 0 && q > 1) continue;
        while (std::gcd(C, std::llabs(D)) != 1) D += q;
        long long a, b;
        if (C == 0) {
            a = 1;
            b = 0;
        } else if (C == 1) {
            a = 0;
            b = -1;
        } else {
            long long dm = ((D % C) + C) % C;
            a = mod_inverse(dm, C);
            b = (a * D - 1) / C;
        }
        modular::Mat2 tau{double(a), double(b), double(C), double(D)};
        acc.add(eval_P(tau, q, h, F, G).value);
    }
    (void)N;
    return acc.value() / 4.0;
}

std::vector<BoundRow> bound_report(const std::vector<modular::Mat2>& tau_grid,
                                   long long q, long long h, long long N, double Z,
                                   double delta, const bump::RadialCutoff& F,
                                   const bump::AngularCutoff& G) {
    double n13 = std::cbrt(double(N));
    if (double(h) >= n13) throw HypothesisViolated();
    double Y = F.Y();
    double logY = std::log(Y);
    double rhs = double(h) * std::pow(Z, -19.0) * std::pow(Y, -1.0 - 2.0 * delta) *
                 (1.0 + std::sqrt(double(h)) * logY * logY * std::sqrt(Y + 1.0 / Y) /
                            double(q) * std::sqrt(double(std::gcd(h, q))) *
                            double(divisor_count((unsigned long long)(h * q))));
    std::vector<BoundRow> rows;
    int id = 0;
    for (const auto& tau : tau_grid) {
        double ap = std::abs(eval_P(tau, q, h, F, G).value);
        rows.push_back({id++, ap, rhs, ap / rhs});
    }
    return rows;
}

}  // namespace rootsector::poincare
