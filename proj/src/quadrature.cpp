#include "rootsector/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <mutex>

namespace rootsector {
namespace {

// Kronrod-15 abscissae on [0,1] side (symmetric) with the embedded Gauss-7
// weights. Standard QUADPACK constants.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <typename T>
struct PanelResult {
    T value;
    double err;
};

template <typename T, typename F>
PanelResult<T> gk15(const F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    T resg{}, resk{};
    double resk_abs = 0.0;
    std::array<T, 15> fv;
    for (int j = 0; j < 7; ++j) {
        fv[j] = f(c - h * kXgk[j]);
        fv[14 - j] = f(c + h * kXgk[j]);
    }
    fv[7] = f(c);
    for (int j = 0; j < 7; ++j) {
        T s = fv[j] + fv[14 - j];
        resk += kWgk[j] * s;
        resk_abs += kWgk[j] * (std::abs(fv[j]) + std::abs(fv[14 - j]));
        if (j % 2 == 1) resg += kWg[j / 2] * s;
    }
    resk += kWgk[7] * fv[7];
    resk_abs += kWgk[7] * std::abs(fv[7]);
    resg += kWg[3] * fv[7];
    double err = std::abs(resk - resg) * h;
    // QUADPACK-style sharpening of the raw difference.
    double scale = resk_abs * h;
    if (scale > 0 && err > 0) {
        double r = std::pow(200.0 * err / scale, 1.5);
        if (r < 1.0) err = scale * r;
    }
    return {resk * h, err};
}

template <typename T, typename F>
T adaptive(const F& f, double a, double b, const QuadOptions& opt) {
    struct Panel {
        double a, b, err;
        T value;
    };
    auto first = gk15<T>(f, a, b);
    std::vector<Panel> panels{{a, b, first.err, first.value}};
    for (int iter = 0; iter < opt.max_panels; ++iter) {
        double total_err = 0.0;
        size_t worst = 0;
        for (size_t i = 0; i < panels.size(); ++i) {
            total_err += panels[i].err;
            if (panels[i].err > panels[worst].err) worst = i;
        }
        T sum{};
        for (const auto& p : panels) sum += p.value;
        if (total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(sum))) return sum;
        Panel p = panels[worst];
        double mid = 0.5 * (p.a + p.b);
        auto left = gk15<T>(f, p.a, mid);
        auto right = gk15<T>(f, mid, p.b);
        panels[worst] = {p.a, mid, left.err, left.value};
        panels.push_back({mid, p.b, right.err, right.value});
    }
    throw QuadratureNonConverged("adaptive quadrature: panel budget exhausted");
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt) {
    if (a == b) return 0.0;
    return adaptive<double>(f, a, b, opt);
}

cplx integrate_c(const std::function<cplx(double)>& f, double a, double b,
                 const QuadOptions& opt) {
    if (a == b) return cplx{0.0, 0.0};
    return adaptive<cplx>(f, a, b, opt);
}

const GaussLegendre& gauss_legendre(int order) {
    static std::map<int, GaussLegendre> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;

    GaussLegendre gl;
    gl.node.resize(order);
    gl.weight.resize(order);
    for (int i = 0; i < order; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (order + 0.5));
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (x * p1 - p0) / (x * x - 1.0);
        gl.node[order - 1 - i] = x;
        gl.weight[order - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return cache.emplace(order, std::move(gl)).first->second;
}

}  // namespace rootsector
