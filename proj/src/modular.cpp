#include "rootsector/modular.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace rootsector::modular {

cplx mobius(const Mat2& s, cplx z) {
    return (s.a * z + s.b) / (s.c * z + s.d);
}

std::pair<long long, long long> root_pair_of_matrix(const Mat2i& s) {
    long long n = s.c * s.c + s.d * s.d;
    if (n == 1) throw ModulusOne();
    long long r = ((s.a * s.c + s.b * s.d) % n + n) % n;
    return {r, n};
}

IwasawaCoords iwasawa(const Mat2& g) {
    IwasawaCoords w;
    double den = g.c * g.c + g.d * g.d;
    w.y = 1.0 / den;
    w.x = (g.a * g.c + g.b * g.d) / den;
    w.theta = std::atan2(g.c, g.d);
    if (w.theta < 0) w.theta += 2.0 * kPi;
    return w;
}

Mat2 from_iwasawa(double x, double y, double theta) {
    double r = std::sqrt(y);
    Mat2 n{1, x, 0, 1}, a{r, 0, 0, 1 / r},
        k{std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta)};
    return n * (a * k);
}

// Complete a coprime bottom row (c,d) with c >= 1 to a determinant-1 matrix.
static Mat2i complete_row(long long c, long long d) {
    long long dm = ((d % c) + c) % c;
    long long a = (c == 1) ? 0 : mod_inverse(dm, c);
    long long b = (a * d - 1) / c;
    return {a, b, c, d};
}

std::vector<Mat2i> enumerate_cosets(long long q, long long c_max) {
    std::vector<Mat2i> out;
    out.push_back(Mat2i{});  // identity coset
    for (long long c = q; c <= c_max; c += q) {
        for (long long d = 0; d < c; ++d) {
            if (std::gcd(c, d) != 1) continue;
            out.push_back(complete_row(c, d));
        }
    }
    return out;
}

std::string BijectionReport::to_json() const {
    std::ostringstream os;
    os << "{\"checked\": " << checked << ", \"matched\": " << matched
       << ", \"mismatches\": [";
    for (size_t i = 0; i < mismatches.size(); ++i) {
        const auto& m = mismatches[i];
        if (i) os << ", ";
        os << "{\"nu\": " << m.nu << ", \"n\": " << m.n << ", \"angle\": " << m.angle
           << ", \"side\": \"" << m.side << "\"}";
    }
    os << "]}";
    return os.str();
}

BijectionReport verify_bijection(long long N) {
    // Lattice side: primitive first-quadrant points with 2 <= a^2+b^2 <= N.
    std::map<std::pair<long long, long long>, double> lattice_side;
    for (const auto& p : lattice::enumerate_primitive(N)) {
        if (p.modulus() < 2) continue;
        auto t = lattice::root_of(p);
        lattice_side[{t.n, t.nu}] = t.angle;
    }

    // Coset side: canonical double-coset representatives of
    // Gamma_inf \ SL2(Z) / Stab(i) are the bottom rows (c,d) with c,d >= 1,
    // gcd(c,d) = 1 (the 4-element Stab(i) orbit of a row meets the open first
    // quadrant exactly once).
    std::map<std::pair<long long, long long>, double> coset_side;
    long long cmax = (long long)std::sqrt((double)N) + 1;
    for (long long c = 1; c <= cmax; ++c) {
        for (long long d = 1; c * c + d * d <= N; ++d) {
            if (std::gcd(c, d) != 1) continue;
            Mat2i m = complete_row(c, d);
            auto [nu, n] = root_pair_of_matrix(m);
            IwasawaCoords w = iwasawa(Mat2(m));
            double ang = std::fmod(w.theta, kPi / 2);
            coset_side[{n, nu}] = ang;
        }
    }

    BijectionReport rep;
    rep.checked = (long long)lattice_side.size();
    for (const auto& [key, ang] : lattice_side) {
        auto it = coset_side.find(key);
        if (it != coset_side.end() && std::abs(it->second - ang) < 1e-9) {
            ++rep.matched;
        } else {
            rep.mismatches.push_back({key.second, key.first, ang, "lattice"});
        }
    }
    for (const auto& [key, ang] : coset_side) {
        if (!lattice_side.count(key))
            rep.mismatches.push_back({key.second, key.first, ang, "coset"});
    }
    return rep;
}

}  // namespace rootsector::modular
