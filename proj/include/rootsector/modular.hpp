#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rootsector/lattice.hpp"
#include "rootsector/util.hpp"

namespace rootsector::modular {

struct ModulusOne : std::runtime_error {
    ModulusOne() : std::runtime_error("degenerate modulus c^2 + d^2 = 1") {}
};

// Integer determinant-1 matrix [[a,b],[c,d]].
struct Mat2i {
    long long a = 1, b = 0, c = 0, d = 1;

    long long det() const { return a * d - b * c; }
    Mat2i operator*(const Mat2i& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2i&) const = default;
};

// Real determinant-1 matrix.
struct Mat2 {
    double a = 1, b = 0, c = 0, d = 1;

    Mat2() = default;
    Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}
    Mat2(const Mat2i& m) : a(double(m.a)), b(double(m.b)), c(double(m.c)), d(double(m.d)) {}

    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
};

struct IwasawaCoords {
    double x = 0.0;
    double y = 1.0;
    double theta = 0.0;  // in [0, 2*pi)
};

cplx mobius(const Mat2& sigma, cplx z);

// (ac + bd mod c^2+d^2, c^2+d^2); throws ModulusOne when c^2+d^2 = 1.
std::pair<long long, long long> root_pair_of_matrix(const Mat2i& sigma);

// g = n(x) a(y) k(theta) with n(x) = [[1,x],[0,1]], a(y) = [[sqrt y, 0],[0, 1/sqrt y]],
// k(theta) = [[cos, -sin],[sin, cos]].
IwasawaCoords iwasawa(const Mat2& g);
Mat2 from_iwasawa(double x, double y, double theta);

// One representative per coset of Gamma_inf \ Gamma_0(q) with 0 < c <= c_max
// (q | c, gcd(c,d) = 1, 0 <= d < c), plus the identity coset.
std::vector<Mat2i> enumerate_cosets(long long q, long long c_max);

struct BijectionReport {
    long long checked = 0;
    long long matched = 0;
    struct Mismatch {
        long long nu, n;
        double angle;
        std::string side;  // which enumeration produced the unmatched triple
    };
    std::vector<Mismatch> mismatches;
    std::string to_json() const;
};

BijectionReport verify_bijection(long long N);

}  // namespace rootsector::modular
