#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace ringroad {

/// A residue in Z_n, carrying its modulus.
struct Zn {
    std::int64_t value = 0;
    std::int64_t modulus = 1;

    bool operator==(const Zn&) const = default;
};

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t n) {
    std::int64_t r = v % n;
    return r < 0 ? r + n : r;
}

inline Zn zn(std::int64_t v, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("zn: modulus must be >= 1");
    return Zn{mod_reduce(v, n), n};
}

inline Zn zn_add(Zn a, Zn b) {
    if (a.modulus != b.modulus) throw std::invalid_argument("zn_add: modulus mismatch");
    return zn(a.value + b.value, a.modulus);
}

inline Zn zn_neg(Zn a) { return zn(-a.value, a.modulus); }

inline Zn zn_sub(Zn a, Zn b) { return zn_add(a, zn_neg(b)); }

/// Order of x in the additive group Z_n: n / gcd(x, n).  The order of 0 is 1.
inline std::int64_t zn_order(Zn x) {
    return x.modulus / std::gcd(x.value, x.modulus);
}

}  // namespace ringroad
