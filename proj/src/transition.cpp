#include "ringroad/transition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ringroad/bounds.hpp"

namespace ringroad {

namespace {

bool is_permutation_of_zn(const std::vector<int>& seq, std::int64_t n) {
    if (static_cast<std::int64_t>(seq.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : seq) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> successor_array(const std::vector<int>& cycle) {
    std::vector<int> succ(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) succ[cycle[i]] = cycle[(i + 1) % cycle.size()];
    return succ;
}

}  // namespace

void validate_transition_graph(const TransitionGraph& tg) {
    if (tg.n < 1) throw std::invalid_argument("transition graph: n must be >= 1");
    if (!is_permutation_of_zn(tg.solid, tg.n) || !is_permutation_of_zn(tg.dotted, tg.n))
        throw std::invalid_argument("transition graph: cycles must each visit Z_n exactly once");
}

std::vector<AlternatingCycle> alternating_cycles(const TransitionGraph& tg) {
    validate_transition_graph(tg);
    const int n = static_cast<int>(tg.n);
    const std::vector<int> solid_succ = successor_array(tg.solid);
    const std::vector<int> dotted_succ = successor_array(tg.dotted);
    std::vector<char> solid_used(n, 0);
    std::vector<AlternatingCycle> cycles;
    for (int start = 0; start < n; ++start) {
        if (solid_used[start]) continue;
        AlternatingCycle c;
        std::int64_t net = 0;
        int u = start;
        do {
            solid_used[u] = 1;
            c.vertices.push_back(u);
            net -= u;
            const int v = solid_succ[u];
            c.vertices.push_back(v);
            net += v;
            u = dotted_succ[v];
        } while (u != start);
        c.net = zn(net, tg.n);
        cycles.push_back(std::move(c));
    }
    return cycles;
}

std::vector<std::pair<int, std::int64_t>> cycle_profile(const TransitionGraph& tg) {
    std::vector<std::pair<int, std::int64_t>> profile;
    for (const AlternatingCycle& c : alternating_cycles(tg))
        profile.emplace_back(c.length(), zn_order(c.net));
    std::sort(profile.begin(), profile.end());
    return profile;
}

VoltageGraph tg_to_voltage(const TransitionGraph& tg) {
    validate_transition_graph(tg);
    VoltageGraph vg;
    vg.base = dipole_embedding(tg.dotted, tg.solid);
    vg.modulus = tg.n;
    vg.alpha.resize(tg.n);
    std::iota(vg.alpha.begin(), vg.alpha.end(), 0);
    return vg;
}

std::int64_t tg_derived_genus(const TransitionGraph& tg) {
    const std::int64_t n = tg.n;
    std::int64_t faces = 0;
    for (const AlternatingCycle& c : alternating_cycles(tg)) faces += n / zn_order(c.net);
    const std::int64_t defect = 2 - 2 * n + n * n - faces;
    if (defect % 2 != 0) throw std::logic_error("tg_derived_genus: odd Euler defect");
    return defect / 2;
}

TransitionGraph construct_even(std::int64_t n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("construct_even: n must be even, >= 2");
    TransitionGraph tg;
    tg.n = n;
    if (n == 2) {
        tg.solid = {1, 0};
        tg.dotted = {0, 1};
        return tg;
    }
    const int h = static_cast<int>(n / 2);
    // Solid: (n/2, n/2-1, ..., 1, n/2+1, n/2+2, ..., n-1, 0).
    for (int x = h; x >= 1; --x) tg.solid.push_back(x);
    for (int x = h + 1; x < n; ++x) tg.solid.push_back(x);
    tg.solid.push_back(0);
    // Dotted: 1, then even values alternating +x, -x up to n/2, then 0, -1,
    // then odd values alternating; which run takes n/2 depends on n mod 4.
    tg.dotted.push_back(1);
    for (int x = 2; x <= h; x += 2) {
        tg.dotted.push_back(x);
        if (x == h) break;
        tg.dotted.push_back(static_cast<int>(n) - x);
        if (x == h - 1) break;  // unreachable for even x; kept for symmetry with the odd run
    }
    tg.dotted.push_back(0);
    tg.dotted.push_back(static_cast<int>(n) - 1);
    for (int x = 3; x <= h; x += 2) {
        tg.dotted.push_back(x);
        if (x == h) break;
        tg.dotted.push_back(static_cast<int>(n) - x);
        if (x == h - 1) break;
    }
    validate_transition_graph(tg);
    return tg;
}

TransitionGraph construct_odd(std::int64_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("construct_odd: n must be odd, >= 3");
    TransitionGraph tg;
    tg.n = n;
    const int N = static_cast<int>(n);
    if (n % 4 == 3) {
        // Solid: (0, 1, ..., (n-1)/2, n-1, n-2, ..., (n+1)/2).
        for (int x = 0; x <= (N - 1) / 2; ++x) tg.solid.push_back(x);
        for (int x = N - 1; x >= (N + 1) / 2; --x) tg.solid.push_back(x);
        // Dotted: (0, (n+1)/2, 2, (n+1)/2+2, ..., n-1,
        //          (n-1)/2, n-2, (n-1)/2-2, n-4, ..., 1).
        for (int x = 0; x <= (N - 3) / 2; x += 2) {
            tg.dotted.push_back(x);
            tg.dotted.push_back((N + 1) / 2 + x);
        }
        const int m = (N - 3) / 4;
        for (int j = 0; j < m; ++j) {
            tg.dotted.push_back((N - 1) / 2 - 2 * j);
            tg.dotted.push_back(N - 2 - 2 * j);
        }
        tg.dotted.push_back(1);
    } else {
        // n = 1 (mod 4), n >= 5.
        // Solid: ((n-1)/2, ..., 1, (n+1)/2, ..., n-1, 0).
        for (int x = (N - 1) / 2; x >= 1; --x) tg.solid.push_back(x);
        for (int x = (N + 1) / 2; x <= N - 1; ++x) tg.solid.push_back(x);
        tg.solid.push_back(0);
        // Dotted: ((n+1)/2, 0, n-1, (n-1)/2-2, n-3, ..., (n+1)/2+1,
        //          1, (n+1)/2+2, 3, (n+1)/2+4, ..., (n-1)/2-1, (n-1)/2).
        tg.dotted.push_back((N + 1) / 2);
        tg.dotted.push_back(0);
        const int m = (N - 5) / 4;
        for (int j = 0; j <= m; ++j) {
            tg.dotted.push_back(N - 1 - 2 * j);
            if (j < m) tg.dotted.push_back((N - 1) / 2 - 2 - 2 * j);
        }
        for (int j = 0; j <= m; ++j) {
            tg.dotted.push_back(1 + 2 * j);
            if (j < m) tg.dotted.push_back((N + 1) / 2 + 2 + 2 * j);
        }
        tg.dotted.push_back((N - 1) / 2);
    }
    validate_transition_graph(tg);
    return tg;
}

bool abcde_feasible(std::int64_t n, std::int64_t g1, std::int64_t g2, const AbcdeSolution& s) {
    if (mod_reduce(s.a + s.b - g1, n) != 0) return false;
    if (mod_reduce(s.c + s.d - g2, n) != 0) return false;
    if (mod_reduce(s.b + s.c - s.e, n) != 0) return false;
    std::vector<std::int64_t> vals;
    for (std::int64_t x : {s.a, s.b, s.c, s.d, s.e}) {
        vals.push_back(mod_reduce(x, n));
        vals.push_back(mod_reduce(-x, n));
    }
    for (std::int64_t v : vals)
        if (v == 0 || v == 1 || v == n - 1) return false;
    std::sort(vals.begin(), vals.end());
    return std::adjacent_find(vals.begin(), vals.end()) == vals.end();
}

AbcdeSolution solve_abcde(std::int64_t n, std::int64_t g1, std::int64_t g2) {
    if (mod_reduce(g1 + g2 + 1, n) != 0)
        throw std::invalid_argument("solve_abcde: g1 + g2 + 1 must be 0 mod n");
    for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t c = 0; c < n; ++c) {
            AbcdeSolution s{mod_reduce(g1 - b, n), b, c, mod_reduce(g2 - c, n),
                            mod_reduce(b + c, n)};
            if (abcde_feasible(n, g1, g2, s)) return s;
        }
    throw std::runtime_error("solve_abcde: no feasible solution for n = " + std::to_string(n));
}

namespace {

// Shared assembly for the g1/g2 family.  Builds the slot sequence
// v_0..v_t with v_0 = 0, v_1 = 1, (a, b) at slots (2, 3), (c, d) at (4, 5),
// e at slot t, and the remaining pair representatives ascending.  When
// swap_slot >= 0, slots (swap_slot, swap_slot+1) hold the given pair and the
// dotted edges at that slot are swapped to (v_{m+1}, v_m), (-v_{m+1}, -v_m).
TransitionGraph assemble_g1g2(std::int64_t n, const AbcdeSolution& s, int swap_slot,
                              std::int64_t swap_lo, std::int64_t swap_hi) {
    const int t = static_cast<int>((n - 1) / 2);
    const int k = 2, l = 4;
    if (t < 6 + (swap_slot >= 0 ? 2 : 0))
        throw std::invalid_argument("g1g2 assembly: n too small for the slot layout");
    std::vector<std::int64_t> v(t + 1, -1);
    std::vector<char> pair_used(n, 0);
    auto use = [&](std::int64_t x) {
        pair_used[mod_reduce(x, n)] = 1;
        pair_used[mod_reduce(-x, n)] = 1;
    };
    v[0] = 0;
    v[1] = 1;
    use(1);
    v[2] = s.a;
    use(s.a);
    v[3] = s.b;
    use(s.b);
    v[4] = s.c;
    use(s.c);
    v[5] = s.d;
    use(s.d);
    v[t] = s.e;
    use(s.e);
    int next_slot = 6;
    if (swap_slot >= 0) {
        if (swap_slot != 6) throw std::logic_error("g1g2 assembly: swap slot must be 6");
        if (pair_used[mod_reduce(swap_lo, n)] || pair_used[mod_reduce(swap_hi, n)])
            throw std::logic_error("g1g2 assembly: swap pair collides with a placed value");
        v[6] = swap_lo;
        use(swap_lo);
        v[7] = swap_hi;
        use(swap_hi);
        next_slot = 8;
    }
    for (std::int64_t r = 2; r <= (n - 1) / 2 && next_slot < t; ++r) {
        if (pair_used[r]) continue;
        v[next_slot++] = r;
        use(r);
    }
    if (next_slot != t) throw std::logic_error("g1g2 assembly: slot fill failed");

    const int N = static_cast<int>(n);
    std::vector<int> solid_succ(N, -1), dotted_succ(N, -1);
    auto add = [&](std::vector<int>& succ, std::int64_t from, std::int64_t to, const char* kind) {
        const int f = static_cast<int>(mod_reduce(from, n));
        const int g = static_cast<int>(mod_reduce(to, n));
        if (succ[f] != -1)
            throw std::logic_error(std::string("g1g2 assembly: duplicate ") + kind + " edge");
        succ[f] = g;
    };
    auto solid = [&](std::int64_t a, std::int64_t b) { add(solid_succ, a, b, "solid"); };
    auto dotted = [&](std::int64_t a, std::int64_t b) { add(dotted_succ, a, b, "dotted"); };

    // Solid paths P1..P4 and the two closing solid edges of each 4-cycle A1, A2.
    for (int i = 0; i < k; ++i) solid(v[i], v[i + 1]);
    for (int i = 1; i < k; ++i) solid(-v[i], -v[i + 1]);
    solid(-v[k], v[k + 1]);
    for (int i = k + 1; i < l; ++i) solid(v[i], v[i + 1]);
    for (int i = k + 1; i < l; ++i) solid(-v[i], -v[i + 1]);
    solid(-v[l], v[l + 1]);
    for (int i = l + 1; i < t; ++i) solid(v[i], v[i + 1]);
    for (int i = l + 1; i < t; ++i) solid(-v[i], -v[i + 1]);
    solid(v[l], -v[k + 1]);   // A1
    solid(-v[t], v[0]);       // A1
    solid(v[t], -v[l + 1]);   // A2
    solid(v[k], -v[1]);       // A2

    // Dotted: three 2-cycle closers, the generic 4-cycle pairs, and A1/A2.
    dotted(v[1], v[0]);
    dotted(v[k + 1], -v[k]);
    dotted(v[l + 1], -v[l]);
    for (int i = 1; i < t; ++i) {
        if (i == k || i == l) continue;
        if (i == swap_slot) {
            dotted(v[i + 1], v[i]);
            dotted(-v[i + 1], -v[i]);
        } else {
            dotted(v[i + 1], -v[i]);
            dotted(-v[i + 1], v[i]);
        }
    }
    dotted(-v[k + 1], -v[t]);  // A1
    dotted(v[0], v[l]);        // A1
    dotted(-v[l + 1], v[k]);   // A2
    dotted(-v[1], v[t]);       // A2

    auto read_cycle = [&](const std::vector<int>& succ, const char* kind) {
        std::vector<int> cycle;
        int u = 0;
        do {
            if (u < 0 || succ[u] == -1)
                throw std::logic_error(std::string("g1g2 assembly: ") + kind +
                                       " edges do not close");
            cycle.push_back(u);
            u = succ[u];
        } while (u != 0 && static_cast<std::int64_t>(cycle.size()) <= n);
        if (static_cast<std::int64_t>(cycle.size()) != n)
            throw std::logic_error(std::string("g1g2 assembly: ") + kind +
                                   " cycle is not Hamiltonian");
        return cycle;
    };
    TransitionGraph tg;
    tg.n = n;
    tg.solid = read_cycle(solid_succ, "solid");
    tg.dotted = read_cycle(dotted_succ, "dotted");
    validate_transition_graph(tg);
    return tg;
}

}  // namespace

TransitionGraph construct_g1g2(std::int64_t n, std::int64_t g1, std::int64_t g2,
                               const AbcdeSolution& s) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("construct_g1g2: n must be odd");
    if (mod_reduce(g1, n) == 0 || mod_reduce(g2, n) == 0)
        throw std::invalid_argument("construct_g1g2: g1, g2 must be nonzero");
    if (mod_reduce(g1 + g2 + 1, n) != 0)
        throw std::invalid_argument("construct_g1g2: g1 + g2 + 1 must be 0 mod n");
    if (!abcde_feasible(n, g1, g2, s))
        throw std::invalid_argument("construct_g1g2: infeasible a,b,c,d,e");
    return assemble_g1g2(n, s, -1, 0, 0);
}

TransitionGraph construct_g1g2(std::int64_t n, std::int64_t g1, std::int64_t g2) {
    return construct_g1g2(n, g1, g2, solve_abcde(n, g1, g2));
}

TransitionGraph construct_1mod4_div3(std::int64_t n) {
    if (n % 4 != 1 || n % 3 != 0 || (n / 3) % 3 == 0 || n < 21)
        throw std::invalid_argument("construct_1mod4_div3: need n = 1 (mod 4), 3 | n, 9 not | n, n >= 21");
    if (n == 21) return fixture_n21();
    const std::int64_t third = n / 3;
    auto [g1, g2] = solve_g1g2(n, 3, third);
    const AbcdeSolution s = solve_abcde(n, g1, g2);
    // f such that f and f + n/3 are fresh representatives and -f != f + n/3.
    std::vector<char> blocked(n, 0);
    for (std::int64_t x : {std::int64_t{0}, std::int64_t{1}, s.a, s.b, s.c, s.d, s.e}) {
        blocked[mod_reduce(x, n)] = 1;
        blocked[mod_reduce(-x, n)] = 1;
    }
    std::int64_t f = -1;
    for (std::int64_t cand = 2; cand < n; ++cand) {
        if (blocked[cand] || blocked[mod_reduce(cand + third, n)]) continue;
        if (mod_reduce(2 * cand + third, n) == 0) continue;  // -f = f + n/3
        f = cand;
        break;
    }
    if (f < 0) throw std::runtime_error("construct_1mod4_div3: no admissible f");
    return assemble_g1g2(n, s, 6, f, mod_reduce(f + third, n));
}

TransitionGraph fixture_n15() {
    TransitionGraph tg;
    tg.n = 15;
    tg.solid = {0, 1, 2, 14, 13, 3, 4, 12, 11, 5, 6, 7, 10, 9, 8};
    tg.dotted = {7, 9, 5, 11, 3, 13, 1, 0, 4, 12, 8, 6, 10, 2, 14};
    return tg;
}

TransitionGraph fixture_n21() {
    TransitionGraph tg;
    tg.n = 21;
    tg.solid = {0, 1, 5, 20, 16, 9, 7, 6, 8, 12, 14, 15, 13, 19, 3, 10, 17, 2, 18, 11, 4};
    tg.dotted = {4, 10, 3, 2, 5, 20, 17, 11, 18, 19, 13, 6, 14, 9, 16, 1, 0, 8, 15, 7, 12};
    return tg;
}

TransitionGraph construct_optimal_tg(std::int64_t n) {
    if (n < 3) throw std::invalid_argument("construct_optimal_tg: n must be >= 3");
    if (n % 2 == 0) return construct_even(n);
    if (n == 15) return fixture_n15();
    const std::int64_t p1 = smallest_prime_divisor(n);
    if (n % 4 == 3 && p1 != n) {
        auto [p, q] = choose_pq(n);
        auto [g1, g2] = solve_g1g2(n, p, q);
        return construct_g1g2(n, g1, g2);
    }
    if (n % 4 == 1 && n % 3 == 0 && (n / 3) % 3 != 0) return construct_1mod4_div3(n);
    return construct_odd(n);
}

VoltageGraph construct_optimal_symmetric(std::int64_t n) {
    return tg_to_voltage(construct_optimal_tg(n));
}

}  // namespace ringroad
