#include "rootsector/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rootsector::weyl {

std::vector<lattice::RootTriple> roots_of_modulus(long long n,
                                                  const lattice::SectorWindow& sector) {
    std::vector<lattice::RootTriple> out;
    for (long long a = 1; a * a <= n; ++a) {
        long long b2 = n - a * a;
        long long b = (long long)std::llround(std::sqrt((double)b2));
        while (b * b > b2) --b;
        while (b * b < b2) ++b;
        if (b * b != b2 || b < 1) continue;
        lattice::LatticePoint p{a, b};
        if (std::gcd(a, b) != 1) continue;
        if (!sector.contains(p.angle())) continue;
        out.push_back(lattice::root_of(p));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& s, const auto& t) { return s.nu < t.nu; });
    return out;
}

WeylSumValue rho_h(long long n, long long h, const lattice::SectorWindow& sector) {
    WeylSumValue v;
    KahanC acc;
    for (const auto& r : roots_of_modulus(n, sector)) {
        acc.add(unit_exp(double(h) * double(r.nu) / double(r.n)));
        ++v.terms;
    }
    v.value = acc.value();
    return v;
}

cplx linear_sum(long long d, long long h, long long N, const lattice::SectorWindow& sector) {
    KahanC acc;
    for (long long m = d; m <= N; m += d) {
        auto v = rho_h(m, h, sector);
        acc.add(v.value);
    }
    return acc.value();
}

cplx smooth_linear_sum(long long d, long long h, long long /*N*/,
                       const bump::RadialCutoff& F, const bump::AngularCutoff& G) {
    // F(4 pi h / n) is supported where n lies in [4 pi h / Y, 8 pi h / Y]
    double Y = F.Y();
    double ha = std::abs(double(h));
    long long n_lo = (long long)std::floor(4.0 * kPi * ha / Y);
    long long n_hi = (long long)std::ceil(8.0 * kPi * ha / Y) + 1;
    KahanC acc;
    for (long long n = std::max<long long>(2, n_lo); n <= n_hi; ++n) {
        if (n % d != 0) continue;
        double f = F(4.0 * kPi * ha / double(n));
        if (f == 0.0) continue;
        for (long long a = 1; a * a <= n; ++a) {
            long long b2 = n - a * a;
            long long b = (long long)std::llround(std::sqrt((double)b2));
            while (b * b > b2) --b;
            while (b * b < b2) ++b;
            if (b * b != b2 || b < 1) continue;
            if (std::gcd(a, b) != 1) continue;
            lattice::LatticePoint p{a, b};
            double g = G(p.angle());
            if (g == 0.0) continue;
            auto r = lattice::root_of(p);
            acc.add(unit_exp(double(h) * double(r.nu) / double(n)) * f * g);
        }
    }
    return acc.value();
}

cplx bilinear_sum(const std::map<long long, double>& alpha,
                  const std::map<long long, double>& beta, long long h,
                  const lattice::SectorWindow& sector) {
    for (const auto& [p, c] : beta)
        if (c != 0.0 && !is_prime_u64((unsigned long long)p))
            throw std::invalid_argument("beta must be supported on primes");
    KahanC acc;
    for (const auto& [m, am] : alpha)
        for (const auto& [p, bp] : beta) {
            if (am == 0.0 || bp == 0.0) continue;
            acc.add(am * bp * rho_h(m * p, h, sector).value);
        }
    return acc.value();
}

BoundarySetReport boundary_set(long long N, long long d, double Z, double Delta,
                               const lattice::SectorWindow& sector) {
    BoundarySetReport rep;
    rep.N = N;
    rep.d = d;
    rep.Z = Z;
    rep.Delta = Delta;
    double alpha = sector.alpha, beta = sector.beta;

    auto in_radial_band = [&](long long n) {
        if (Delta <= 0.0) return false;
        double x = double(n);
        return (double(N) <= x && x <= double(N) * (1.0 + Delta)) ||
               (2.0 * double(N) * (1.0 - Delta / 2.0) <= x && x <= 2.0 * double(N));
    };
    auto in_angular_band = [&](double ang) {
        if (Z <= 0.0) return false;
        return (alpha <= ang && ang <= alpha + Z) || (beta - Z <= ang && ang <= beta);
    };

    // radial part: (n, nu) pairs, n = 0 (d), n in the two Delta-bands
    lattice::SectorWindow full{0.0, kPi / 2, 0.0};
    for (long long n = d; n <= 2 * N; n += d) {
        if (!in_radial_band(n)) continue;
        rep.radial_count += (long long)roots_of_modulus(n, full).size();
    }

    // angular part: all positive integer points, N <= a^2+b^2 <= 2N, n = 0 (d)
    long long amax = (long long)std::sqrt(2.0 * double(N)) + 1;
    for (long long a = 1; a <= amax; ++a) {
        for (long long b = 1; a * a + b * b <= 2 * N; ++b) {
            long long n = a * a + b * b;
            if (n < N || n % d != 0) continue;
            if (in_angular_band(std::atan2(double(b), double(a)))) ++rep.angular_count;
        }
    }

    // the boundary set itself: primitive points, n = 0 (d), radial OR angular band
    for (long long a = 1; a <= amax; ++a) {
        for (long long b = 1; a * a + b * b <= 2 * N; ++b) {
            long long n = a * a + b * b;
            if (n % d != 0 || std::gcd(a, b) != 1) continue;
            double ang = std::atan2(double(b), double(a));
            bool radial = in_radial_band(n);
            bool angular = (N <= n && n <= 2 * N) && in_angular_band(ang);
            if (radial || angular) ++rep.total;
        }
    }

    // xi(n) profile along vertical lines of the alpha-side trapezoid
    if (Z > 0.0) {
        long long n_min = (long long)std::ceil(std::sqrt(double(N)) * std::cos(alpha + Z));
        long long n_max = (long long)std::floor(std::sqrt(2.0 * double(N)) * std::cos(alpha));
        rep.xi_n_min = n_min;
        for (long long n = n_min; n <= n_max; ++n) {
            long long count = 0;
            long long m_lo = (long long)std::ceil(double(n) * std::tan(alpha));
            long long m_hi = (long long)std::floor(double(n) * std::tan(alpha + Z));
            for (long long m = m_lo; m <= m_hi; ++m)
                if ((m * m + n * n) % d == 0) ++count;
            rep.xi.push_back(count);
        }
    }
    return rep;
}

double discrepancy(std::vector<double> pts) {
    if (pts.empty()) throw EmptyInput();
    std::sort(pts.begin(), pts.end());
    size_t n = pts.size();
    double dmax = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double up = double(i + 1) / double(n) - pts[i];
        double dn = pts[i] - double(i) / double(n);
        dmax = std::max({dmax, up, dn});
    }
    return dmax;
}

std::vector<ProfileRow> weyl_sums_profile(long long N, long long h_max,
                                          const lattice::SectorWindow& sector) {
    auto seq = lattice::sequence_Y(N, sector);
    std::vector<ProfileRow> rows;
    for (long long h = 0; h <= h_max; ++h) {
        KahanC acc;
        for (const auto& t : seq) acc.add(unit_exp(double(h) * t.normalized()));
        cplx s = acc.value();
        rows.push_back({h, s, (long long)seq.size(),
                        seq.empty() ? 0.0 : std::abs(s) / double(seq.size())});
    }
    return rows;
}

}  // namespace rootsector::weyl
