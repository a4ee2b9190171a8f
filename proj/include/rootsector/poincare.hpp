#pragma once

#include <stdexcept>
#include <vector>

#include "rootsector/bump.hpp"
#include "rootsector/modular.hpp"
#include "rootsector/util.hpp"

namespace rootsector::poincare {

struct HypothesisViolated : std::runtime_error {
    HypothesisViolated() : std::runtime_error("bound requires h < N^(1/3)") {}
};

struct PoincareEval {
    cplx value{0.0, 0.0};
    long long contributing_cosets = 0;
    long long q = 1, h = 1;
};

// P(g) = sum over Gamma_inf \ Gamma_0(q) of e(h x(sigma g)) F(4 pi h y(sigma g))
// G(theta(sigma g)); Gamma_inf is the unipotent translation group, so cosets
// are bottom rows (c,d) with q | c, gcd(c,d) = 1, including both signs.
PoincareEval eval_P(const modular::Mat2& g, long long q, long long h,
                    const bump::RadialCutoff& F, const bump::AngularCutoff& G);

// L*_{h,q}(N) = (1/4) sum over tau in Gamma_0(q) \ SL2(Z) with modulus = 0 (q)
// of P(tau).
cplx smooth_linear_form(long long q, long long h, long long N,
                        const bump::RadialCutoff& F, const bump::AngularCutoff& G);

struct BoundRow {
    int tau_id;
    double absP;
    double rhs;
    double ratio;
};

std::vector<BoundRow> bound_report(const std::vector<modular::Mat2>& tau_grid,
                                   long long q, long long h, long long N, double Z,
                                   double delta, const bump::RadialCutoff& F,
                                   const bump::AngularCutoff& G);

}  // namespace rootsector::poincare
