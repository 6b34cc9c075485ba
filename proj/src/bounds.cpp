#include "ringroad/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace ringroad {

std::string to_string(LcBranch b) {
    switch (b) {
        case LcBranch::Even: return "even";
        case LcBranch::Mod3SplitCoprime: return "3mod4-split";
        case LcBranch::Mod3PrimePower: return "3mod4-prime-power";
        case LcBranch::Mod1Div3: return "1mod4-div3";
        case LcBranch::FloorDefault: return "floor";
    }
    return "?";
}

std::int64_t smallest_prime_divisor(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_divisor: n must be >= 2");
    for (std::int64_t p = 2; p * p <= n; ++p)
        if (n % p == 0) return p;
    return n;
}

namespace {

LcValue l_c_formula(std::int64_t n) {
    if (n % 2 == 0) return {n * (n - 2) / 4, LcBranch::Even};
    const std::int64_t p1 = smallest_prime_divisor(n);
    const std::int64_t floor_q = n * (n - 1) / 4;  // exact floor: n odd
    if (n % 4 == 3) {
        if (p1 != n && n % (p1 * p1) != 0)
            return {floor_q + 1 - (n / p1 + p1) / 2, LcBranch::Mod3SplitCoprime};
        return {floor_q + 1 - (n / p1 + 1) / 2, LcBranch::Mod3PrimePower};
    }
    if (n % 3 == 0 && n % 9 != 0) return {n * (n - 1) / 4 - 1, LcBranch::Mod1Div3};
    return {floor_q, LcBranch::FloorDefault};
}

}  // namespace

LcValue l_c(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("l_c: n must be >= 3");
    return l_c_formula(n);
}

std::int64_t l_c_star(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("l_c_star: n must be >= 2");
    switch (n % 4) {
        case 0: return n * n / 4 - 1;
        case 1: return n * (n - 1) / 4;
        case 2: return n * (n - 2) / 4;
        default: return n * (n + 1) / 4 - 1;
    }
}

std::int64_t l_c_star_attainable(std::int64_t n) {
    return n == 4 ? 4 : l_c_star(n);
}

std::int64_t l_c_star_tilde(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("l_c_star_tilde: n must be >= 2");
    switch (n % 4) {
        case 0: return (n - 2) * (n - 2) / 4;
        case 1: return n * (n - 1) / 4;
        case 2: return n * (n - 2) / 4;
        default: return (n * n - 3 * n + 4) / 4;
    }
}

std::int64_t face_excess(std::int64_t size, Zn voltage) {
    if (size < 2 || size % 2 != 0)
        throw std::invalid_argument("face_excess: size must be even and >= 2");
    const std::int64_t n = voltage.modulus;
    return n * size - 4 * n / zn_order(voltage);
}

bool excess_residue_ok(std::int64_t n, std::int64_t excess) {
    if (n % 2 == 0) return true;
    const std::int64_t lhs = n % 4 == 1 ? 6 * n - 8 - excess : 6 * n - 12 - excess;
    return mod_reduce(lhs, 8) == 0;
}

std::pair<std::int64_t, std::int64_t> choose_pq(std::int64_t n) {
    if (n % 4 != 3) throw std::invalid_argument("choose_pq: n must be 3 (mod 4)");
    const std::int64_t p1 = smallest_prime_divisor(n);
    if (p1 == n) throw std::invalid_argument("choose_pq: n must be composite");
    if (n % (p1 * p1) != 0) return {p1, n / p1};
    return {p1, n};
}

std::pair<std::int64_t, std::int64_t> solve_g1g2(std::int64_t n, std::int64_t p, std::int64_t q) {
    if (p < 1 || q < 1 || n % p != 0 || n % q != 0)
        throw std::invalid_argument("solve_g1g2: p and q must divide n");
    if (std::gcd(n / p, n / q) != 1)
        throw std::invalid_argument("solve_g1g2: n/p and n/q must be coprime");
    for (std::int64_t g1 = 0; g1 < n; ++g1) {
        if (zn_order(zn(g1, n)) != p) continue;
        const std::int64_t g2 = mod_reduce(-1 - g1, n);
        if (zn_order(zn(g2, n)) == q) return {g1, g2};
    }
    throw std::runtime_error("solve_g1g2: no solution (violated precondition)");
}

BoundsReport bounds_report(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("bounds_report: n must be >= 2");
    BoundsReport r;
    r.n = n;
    const LcValue lc = n == 2 ? LcValue{0, LcBranch::Even} : l_c(n);
    r.l_c = lc.genus;
    r.branch_l_c = lc.branch;
    r.l_c_star = l_c_star(n);
    r.l_c_star_attainable = l_c_star_attainable(n);
    r.l_c_star_tilde = l_c_star_tilde(n);
    r.n4_exception = n == 4;
    r.p1 = smallest_prime_divisor(n);
    const bool odd3_composite = n % 4 == 3 && r.p1 != n;
    const bool odd1_div3 = n % 4 == 1 && n % 3 == 0 && n % 9 != 0;
    if (odd3_composite)
        r.pq = choose_pq(n);
    else if (odd1_div3)
        r.pq = std::pair<std::int64_t, std::int64_t>{3, n / 3};
    if (r.pq) r.g1g2 = solve_g1g2(n, r.pq->first, r.pq->second);
    return r;
}

}  // namespace ringroad
