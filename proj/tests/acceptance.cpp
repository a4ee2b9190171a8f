// Acceptance harness: one pass/fail line per criterion, nonzero exit on any
// failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "rootsector/bump.hpp"
#include "rootsector/lattice.hpp"
#include "rootsector/modular.hpp"
#include "rootsector/poincare.hpp"
#include "rootsector/selberg.hpp"
#include "rootsector/specfun.hpp"
#include "rootsector/weyl.hpp"

using namespace rootsector;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %-22s %s\n", pass ? "PASS" : "FAIL", name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

double now_s() {
    using clk = std::chrono::steady_clock;
    static const auto t0 = clk::now();
    return std::chrono::duration<double>(clk::now() - t0).count();
}

void criterion_numerics() {
    double t0 = now_s();
    long long total = lattice::count_admissible_primes(10000);
    long long sector = lattice::count_sector_primes(10000, {0.0, 0.5235987756, 0.01});
    double dt = now_s() - t0;
    report("numerics", total == 610 && sector == 403 && dt < 5.0,
           "primes " + std::to_string(total) + ", sector " + std::to_string(sector) +
               ", " + num(dt) + " s");
}

void criterion_sequence() {
    auto seq = lattice::sequence_Y(13);
    const long long want[5][2] = {{1, 2}, {2, 5}, {3, 5}, {5, 13}, {8, 13}};
    bool ok = seq.size() == 5;
    for (size_t i = 0; ok && i < 5; ++i)
        ok = seq[i].nu == want[i][0] && seq[i].n == want[i][1];
    report("sequence-prefix", ok,
           ok ? "1/2, 2/5, 3/5, 5/13, 8/13" : "prefix mismatch");
}

void criterion_quartic() {
    auto q = selberg::solve_quartic_power_sums();
    // reference roots of the exact elementary-symmetric quartic
    // y^4 - (195/4) y^3 + (11493/16) y^2 - (201955/64) y + 346581/256;
    // the three largest agree with the published 4-decimal displays
    bool roots_ok = std::abs(q.a2 - 0.4797321) <= 5e-5 &&
                    std::abs(q.b2 - 6.8717467) <= 5e-5 &&
                    std::abs(q.c2 - 16.4821718) <= 5e-5 &&
                    std::abs(q.d2 - 24.9163494) <= 5e-5;
    bool res_ok = true;
    for (double r : q.residuals) res_ok = res_ok && std::abs(r) <= 1e-10;
    report("quartic", roots_ok && res_ok,
           "a2 " + num(q.a2) + ", d2 " + num(q.d2) +
               (res_ok ? ", residuals <= 1e-10" : ", residual too large"));
}

void criterion_roundtrip() {
    double t0 = now_s();
    double worst = 0.0;
    for (long long n : {0LL, 2LL, 4LL}) {
        selberg::PointPairTable tab(n, selberg::X_of(n));
        for (double t : {0.0, 1.0, 2.0}) {
            double got = selberg::forward_transform(tab, t);
            double want = selberg::rho_X({t, 0.0}, selberg::X_of(n));
            worst = std::max(worst, std::abs(got - want) / std::abs(want));
        }
    }
    double dt = now_s() - t0;
    report("selberg-roundtrip", worst <= 1e-3 && dt < 120.0,
           "worst rel " + num(worst) + ", " + num(dt) + " s");
}

void criterion_puiseux() {
    auto rep = selberg::puiseux_halfinteger_coeffs(selberg::kX0);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i)
        worst = std::max(worst, std::abs(rep.coeff[i]) / rep.term_scale[i]);
    report("puiseux", worst <= 1e-6, "worst rel coefficient " + num(worst));
}

void criterion_positivity() {
    auto t40 = selberg::build_tables(40);
    std::vector<double> grid;
    for (int i = 0; i < 100; ++i)  // strictly inside the common support
        grid.push_back(t40[0].x_max() * std::pow(10.0, -6.0 + 6.0 * i / 100.0));
    double C = selberg::calibrate_C(grid, t40);
    auto margin_tail = [&](const std::vector<selberg::PointPairTable>& tabs, double x) {
        double tail = 0.0;
        for (size_t j = 1; j < tabs.size(); ++j) {
            double n = double(tabs[j].n());
            tail += 2.0 * C / (1200.0 * (std::pow(n, 10.0) + 1.0)) *
                    std::abs(tabs[j].eval(x));
        }
        return tail;
    };
    double min_margin = 1e300;
    for (double x : grid)
        min_margin = std::min(min_margin, t40[0].eval(x) - margin_tail(t40, x));

    auto t80 = selberg::build_tables(80);
    double sens = 0.0;
    for (double x : grid) {
        double a = margin_tail(t40, x), b = margin_tail(t80, x);
        double scale = std::max(std::abs(t40[0].eval(x)), 1e-300);
        sens = std::max(sens, std::abs(a - b) / scale);
    }
    report("positivity", min_margin > 0.0 && sens < 1e-6,
           "min margin " + num(min_margin) + ", truncation sensitivity " +
               num(sens));
}

void criterion_weil() {
    long long violations = 0;
    for (long long c = 1; c <= 500; ++c)
        for (long long h = 1; h <= 20; ++h) {
            auto k = specfun::kloosterman(h, c);
            if (std::abs(k.value) > k.weil_bound + 1e-9) ++violations;
        }
    report("weil", violations == 0, std::to_string(violations) + " violations");
}

void criterion_gamma() {
    double worst = 0.0;
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
        double l1 = std::norm(specfun::gamma_fn({0.5, t}));
        double r1 = kPi / std::cosh(kPi * t);
        double l2 = std::norm(specfun::gamma_fn({0.0, 2.0 * t}));
        double r2 = kPi / (2.0 * t * std::sinh(2.0 * kPi * t));
        worst = std::max({worst, std::abs(l1 - r1) / r1, std::abs(l2 - r2) / r2});
    }
    report("gamma-identities", worst <= 1e-10, "worst rel " + num(worst));
}

void criterion_whittaker() {
    double worst = 0.0;
    for (double m : {0.0, 1.0, 2.0})
        for (double t : {0.5, 1.5, 3.0})
            for (double y : {0.1, 1.0, 5.0}) {
                specfun::WhittakerParams p{m, cplx(0.0, t), y};
                cplx a = specfun::whittaker_series(p);
                cplx b = specfun::whittaker_mellin_barnes(p);
                worst = std::max(worst, std::abs(a - b) / std::abs(a));
            }
    cplx w = specfun::whittaker_mellin_barnes({1.0, cplx(0.5, 0.0), 1.0});
    double deg = std::abs(w - cplx(std::exp(-0.5), 0.0)) / std::exp(-0.5);
    report("whittaker", worst <= 1e-8 && deg <= 1e-8,
           "grid worst " + num(worst) + ", degenerate rel " +
               num(deg));
}

void criterion_bijection() {
    auto r = modular::verify_bijection(1000);
    report("bijection", r.mismatches.empty(),
           "checked " + std::to_string(r.checked) + ", mismatches " +
               std::to_string(r.mismatches.size()));
}

void criterion_dual() {
    double worst = 0.0;
    lattice::SectorWindow sec{0.0, kPi / 2, 0.05};
    for (long long q : {1LL, 2LL, 5LL})
        for (long long h : {1LL, 2LL})
            for (long long N : {50LL, 200LL}) {
                auto F = bump::build_F(h, N);
                auto G = bump::build_G(sec);
                cplx a = poincare::smooth_linear_form(q, h, N, F, G);
                cplx b = weyl::smooth_linear_sum(q, h, N, F, G);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
            }
    report("dual-evaluation", worst <= 1e-9, "worst rel " + num(worst));
}

void criterion_gamma_cd() {
    bool ok = true;
    for (double t : {1.0, 5.0})
        for (long long n : {0LL, 10LL, -10LL}) {
            auto c0 = specfun::gamma_C(0, t, n);
            if (std::abs(c0.C - cplx(1.0, 0.0)) > 1e-14) ok = false;
            for (int k = 1; k <= 200; ++k) {
                auto g = specfun::gamma_C(k, t, n);
                if (!g.bounded) ok = false;
            }
        }
    report("gamma-cd", ok, ok ? "|C(k)| <= D(k), C(0) = 1" : "bound violated");
}

}  // namespace

int main() {
    criterion_numerics();
    criterion_sequence();
    criterion_quartic();
    criterion_roundtrip();
    criterion_puiseux();
    criterion_positivity();
    criterion_weil();
    criterion_gamma();
    criterion_whittaker();
    criterion_bijection();
    criterion_dual();
    criterion_gamma_cd();
    std::printf("%d failure(s)\n", failures);
    return failures == 0 ? 0 : 1;
}
