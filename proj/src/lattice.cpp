#include "rootsector/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rootsector::lattice {

double LatticePoint::angle() const {
    return std::atan2(double(b), double(a));
}

std::vector<LatticePoint> enumerate_primitive(
    long long radius_sq_max, const std::optional<SectorWindow>& sector) {
    std::vector<LatticePoint> out;
    if (radius_sq_max < 1) return out;
    long long amax = (long long)std::sqrt((double)radius_sq_max) + 2;
    for (long long a = 0; a <= amax; ++a) {
        if (a * a > radius_sq_max) break;
        for (long long b = 0;; ++b) {
            long long n = a * a + b * b;
            if (n > radius_sq_max) break;
            if (a == 0 && b == 0) continue;
            if (std::gcd(a, b) != 1) continue;
            LatticePoint p{a, b};
            if (sector && !sector->contains(p.angle())) continue;
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(), [](const LatticePoint& p, const LatticePoint& q) {
        if (p.modulus() != q.modulus()) return p.modulus() < q.modulus();
        return std::pair(p.a, p.b) < std::pair(q.a, q.b);
    });
    return out;
}

RootTriple root_of(const LatticePoint& p) {
    long long n = p.modulus();
    RootTriple t;
    t.n = n;
    t.angle = p.angle();
    if (n == 1) {
        t.nu = 0;
        t.modulus_one = true;
        return t;
    }
    // gcd(a, n) = 1 for primitive points with n > 1, so the inverse exists.
    long long abar = mod_inverse(((p.a % n) + n) % n, n);
    t.nu = (long long)mulmod_u64((unsigned long long)abar, (unsigned long long)(((p.b % n) + n) % n),
                                 (unsigned long long)n);
    return t;
}

std::vector<RootTriple> sequence_Y(long long N, const std::optional<SectorWindow>& sector) {
    std::vector<RootTriple> out;
    for (const auto& p : enumerate_primitive(N, sector)) {
        long long n = p.modulus();
        if (n < 2 || !is_prime_u64((unsigned long long)n)) continue;
        out.push_back(root_of(p));
    }
    std::sort(out.begin(), out.end(), [](const RootTriple& s, const RootTriple& t) {
        if (s.n != t.n) return s.n < t.n;
        return s.nu < t.nu;
    });
    return out;
}

long long count_admissible_primes(long long N) {
    long long count = 0;
    for (long long p = 2; p <= N; ++p)
        if ((p == 2 || p % 4 == 1) && is_prime_u64((unsigned long long)p)) ++count;
    return count;
}

long long count_sector_primes(long long N, const SectorWindow& sector) {
    auto triples = sequence_Y(N, sector);
    long long count = 0;
    long long last = 0;
    for (const auto& t : triples) {
        if (t.n != last) ++count;
        last = t.n;
    }
    return count;
}

}  // namespace rootsector::lattice
