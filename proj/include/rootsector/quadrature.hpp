#pragma once
// Adaptive Gauss-Kronrod (G7/K15) quadrature and Gauss-Legendre node tables.

#include <functional>
#include <stdexcept>
#include <vector>

#include "rootsector/util.hpp"

namespace rootsector {

struct QuadratureNonConverged : std::runtime_error {
    explicit QuadratureNonConverged(const std::string& what) : std::runtime_error(what) {}
};

struct QuadOptions {
    double abs_tol = 1e-13;
    double rel_tol = 0.0;  // converged when err <= max(abs_tol, rel_tol * |value|)
    int max_panels = 1 << 14;
};

// Adaptive bisection on [a, b] driven by the K15-G7 error estimate.
// Throws QuadratureNonConverged when the panel budget runs out.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

cplx integrate_c(const std::function<cplx(double)>& f, double a, double b,
                 const QuadOptions& opt = {});

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by
// Newton iteration on the Legendre recurrence and cached.
struct GaussLegendre {
    std::vector<double> node;
    std::vector<double> weight;
};
const GaussLegendre& gauss_legendre(int order);

}  // namespace rootsector
