#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "ringroad/zmod.hpp"

namespace ringroad {

/// Which case of the minimum-genus formula fired.  The two residue-3 cases
/// partition as in the supporting case analysis: prime n is grouped with the
/// prime-power case (both evaluate to floor(n(n-1)/4)).
enum class LcBranch {
    Even,                 // n(n-2)/4
    Mod3SplitCoprime,     // n = 3 (mod 4), p1 != n, p1^2 does not divide n
    Mod3PrimePower,       // n = 3 (mod 4), p1^2 | n or n prime
    Mod1Div3,             // n = 1 (mod 4), 3 | n, 9 does not divide n
    FloorDefault,         // remaining n = 1 (mod 4)
};

std::string to_string(LcBranch b);

std::int64_t smallest_prime_divisor(std::int64_t n);

struct LcValue {
    std::int64_t genus = 0;
    LcBranch branch = LcBranch::FloorDefault;
};

/// Minimum genus of a cyclically symmetric K_{n,n} embedding with a
/// Hamiltonian face.  Domain n >= 3.
LcValue l_c(std::int64_t n);

/// Minimum genus with 3-dimensional n-fold rotational symmetry fixing the
/// Hamiltonian face.  Domain n >= 2.  The formula value; at n = 4 the
/// attainable minimum is 4 (see l_c_star_attainable).
std::int64_t l_c_star(std::int64_t n);

/// Attainable minimum for the 3-dimensional model: l_c_star(n) except 4 at n=4.
std::int64_t l_c_star_attainable(std::int64_t n);

/// Fixed-point-free variant of the 3-dimensional bound.  Domain n >= 2.
std::int64_t l_c_star_tilde(std::int64_t n);

/// Excess a base face of size k and net voltage h contributes to the derived
/// embedding: n*k - 4n/|h|.
std::int64_t face_excess(std::int64_t size, Zn voltage);

/// Divisibility check on the realized excess of an odd-n derived embedding:
/// 6n-8-ex = 0 (mod 8) for n = 1 (mod 4), 6n-12-ex = 0 (mod 8) for n = 3 (mod 4).
bool excess_residue_ok(std::int64_t n, std::int64_t excess);

/// For composite n = 3 (mod 4): (p1, n/p1) when p1^2 does not divide n,
/// otherwise (p1, n).  Guarantees gcd(n/p, n/q) = 1.
std::pair<std::int64_t, std::int64_t> choose_pq(std::int64_t n);

/// Smallest nonnegative g1 of order p with g2 = -1 - g1 of order q.
/// Requires p, q | n and gcd(n/p, n/q) = 1.
std::pair<std::int64_t, std::int64_t> solve_g1g2(std::int64_t n, std::int64_t p, std::int64_t q);

struct BoundsReport {
    std::int64_t n = 0;
    std::int64_t l_c = 0;
    LcBranch branch_l_c = LcBranch::FloorDefault;
    std::int64_t l_c_star = 0;
    std::int64_t l_c_star_attainable = 0;
    std::int64_t l_c_star_tilde = 0;
    bool n4_exception = false;
    std::int64_t p1 = 0;
    std::optional<std::pair<std::int64_t, std::int64_t>> pq;
    std::optional<std::pair<std::int64_t, std::int64_t>> g1g2;
};

/// Evaluates every bound at n.  Domain n >= 2; the l_c field at n = 2 is the
/// even-branch formula value 0 (the row is reported, the l_c operation
/// itself starts at 3).
BoundsReport bounds_report(std::int64_t n);

}  // namespace ringroad
