#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "rootsector/util.hpp"

namespace rootsector::lattice {

// Primitive first-quadrant lattice point.
struct LatticePoint {
    long long a = 0;
    long long b = 0;

    long long modulus() const { return a * a + b * b; }
    double angle() const;  // arctan(b/a), with (0,1) -> pi/2

    bool operator==(const LatticePoint&) const = default;
};

// (root, modulus, angle) triple; nu solves X^2 + 1 = 0 (mod n).
struct RootTriple {
    long long nu = 0;
    long long n = 1;
    double angle = 0.0;
    bool modulus_one = false;  // degenerate n = 1 flag

    double normalized() const { return double(nu) / double(n); }
};

// Angular window [alpha, beta] in [0, pi/2] with smoothing width Z.
struct SectorWindow {
    double alpha = 0.0;
    double beta = 0.0;
    double Z = 0.0;

    bool contains(double angle) const { return alpha <= angle && angle <= beta; }
};

std::vector<LatticePoint> enumerate_primitive(
    long long radius_sq_max,
    const std::optional<SectorWindow>& sector = std::nullopt);

RootTriple root_of(const LatticePoint& p);

// All triples to prime moduli p <= N (p = 2 or p = 1 mod 4), ordered by
// (modulus, normalized root).
std::vector<RootTriple> sequence_Y(
    long long N, const std::optional<SectorWindow>& sector = std::nullopt);

inline bool is_prime(unsigned long long n) { return is_prime_u64(n); }

// Counting helpers for the sector statistics: total admissible primes <= N,
// and how many of them have a representing point inside the sector.
long long count_admissible_primes(long long N);
long long count_sector_primes(long long N, const SectorWindow& sector);

}  // namespace rootsector::lattice
