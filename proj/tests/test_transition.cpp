#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <numeric>
#include <random>

#include "ringroad/bounds.hpp"
#include "ringroad/transition.hpp"

using namespace ringroad;

namespace {

std::map<std::pair<int, std::int64_t>, int> profile_multiset(const TransitionGraph& tg) {
    std::map<std::pair<int, std::int64_t>, int> m;
    for (const auto& p : cycle_profile(tg)) ++m[p];
    return m;
}

// The three short cycles of a generated graph, keyed by net transition.
std::multiset<std::int64_t> two_cycle_nets(const TransitionGraph& tg) {
    std::multiset<std::int64_t> nets;
    for (const AlternatingCycle& c : alternating_cycles(tg))
        if (c.length() == 2) nets.insert(c.net.value);
    return nets;
}

TransitionGraph random_tg(int n, std::mt19937& rng) {
    std::vector<int> s(n), d(n);
    std::iota(s.begin(), s.end(), 0);
    std::iota(d.begin(), d.end(), 0);
    std::shuffle(s.begin(), s.end(), rng);
    std::shuffle(d.begin(), d.end(), rng);
    return TransitionGraph{n, s, d};
}

}  // namespace

TEST_CASE("alternating cycles of the n = 3 graph") {
    const TransitionGraph tg{3, {0, 1, 2}, {0, 2, 1}};
    const std::vector<AlternatingCycle> cycles = alternating_cycles(tg);
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0].vertices == std::vector<int>{0, 1});
    CHECK(cycles[1].vertices == std::vector<int>{1, 2});
    CHECK(cycles[2].vertices == std::vector<int>{2, 0});
    for (const AlternatingCycle& c : cycles) CHECK(c.net.value == 1);
}

TEST_CASE("odd construction, n = 3 (mod 4): three short cycles of full order") {
    for (std::int64_t n : {7, 11, 19}) {
        const TransitionGraph tg = construct_odd(n);
        const std::vector<AlternatingCycle> cycles = alternating_cycles(tg);
        std::vector<std::vector<int>> twos;
        for (const AlternatingCycle& c : cycles) {
            if (c.length() == 2) {
                twos.push_back(c.vertices);
                CHECK(zn_order(c.net) == n);
            } else {
                CHECK(c.length() == 4);
                CHECK(c.net.value == 0);
            }
        }
        const int h = static_cast<int>(n);
        REQUIRE(twos.size() == 3);
        CHECK(std::count(twos.begin(), twos.end(), std::vector<int>{0, 1}) == 1);
        CHECK(std::count(twos.begin(), twos.end(), std::vector<int>{(h + 1) / 2, 0}) == 1);
        CHECK(std::count(twos.begin(), twos.end(), std::vector<int>{(h - 1) / 2, h - 1}) == 1);
        // Nets by the alternating-sum rule: 1 and (n-1)/2 twice.  The two
        // halved values are negatives of each other as written, and the sum
        // over all cycles vanishes.
        const auto nets = two_cycle_nets(tg);
        CHECK(nets == std::multiset<std::int64_t>{1, (n - 1) / 2, (n - 1) / 2});
    }
}

TEST_CASE("odd construction, n = 1 (mod 4): two short cycles and a zero-net 6-walk") {
    for (std::int64_t n : {5, 9, 13, 17}) {
        const TransitionGraph tg = construct_odd(n);
        const int h = static_cast<int>(n);
        int twos = 0, sixes = 0, fours = 0;
        for (const AlternatingCycle& c : alternating_cycles(tg)) {
            if (c.length() == 2) {
                ++twos;
                CHECK(zn_order(c.net) == n);
                const bool wrap = c.vertices == std::vector<int>{h - 1, 0};
                const bool middle = c.vertices == std::vector<int>{(h - 1) / 2, (h - 1) / 2 - 1};
                CHECK((wrap || middle));
            } else if (c.length() == 6) {
                ++sixes;
                CHECK(c.net.value == 0);
            } else {
                ++fours;
                CHECK(c.length() == 4);
                CHECK(c.net.value == 0);
            }
        }
        CHECK(twos == 2);
        CHECK(sixes == 1);
        CHECK(fours == (n - 5) / 2);
    }
}

TEST_CASE("even construction") {
    SUBCASE("n = 4 literal cycles") {
        const TransitionGraph tg = construct_even(4);
        CHECK(tg.solid == std::vector<int>{2, 1, 3, 0});
        CHECK(tg.dotted == std::vector<int>{1, 2, 0, 3});
        CHECK(tg_derived_genus(tg) == 2);
    }
    SUBCASE("derived genus and the two short cycles") {
        for (std::int64_t n : {2, 6, 8, 10, 12}) {
            const TransitionGraph tg = construct_even(n);
            CHECK(tg_derived_genus(tg) == n * (n - 2) / 4);
            int short_full_order = 0;
            for (const AlternatingCycle& c : alternating_cycles(tg))
                if (c.length() == 2 && zn_order(c.net) == n) ++short_full_order;
            CHECK(short_full_order == 2);
            const EmbeddedGraph derived = derive_embedding(tg_to_voltage(tg));
            CHECK(hamiltonian_faces(derived).size() == 2);
            CHECK(is_simple_complete_bipartite(derived.graph, static_cast<int>(n)));
        }
    }
    SUBCASE("domain") { CHECK_THROWS_AS(construct_even(5), std::invalid_argument); }
}

TEST_CASE("odd construction derived data") {
    CHECK_THROWS_AS(construct_odd(6), std::invalid_argument);
    const TransitionGraph t3 = construct_odd(3);
    CHECK(t3.solid == std::vector<int>{0, 1, 2});
    CHECK(t3.dotted == std::vector<int>{0, 2, 1});
    struct Expect {
        std::int64_t n, genus;
        std::size_t ham;
    };
    for (const Expect& e : {Expect{3, 1, 3}, Expect{5, 5, 2}, Expect{7, 10, 3}, Expect{9, 18, 2}}) {
        const EmbeddedGraph derived = derive_embedding(tg_to_voltage(construct_odd(e.n)));
        CHECK(euler_genus(derived) == e.genus);
        CHECK(hamiltonian_faces(derived).size() == e.ham);
    }
    // n = 9 face census: 2 Hamiltonian + 9 hexagonal + 18 quadrilateral
    std::map<int, int> sizes;
    for (const Face& f : trace_faces(derive_embedding(tg_to_voltage(construct_odd(9)))))
        ++sizes[f.size()];
    CHECK(sizes == std::map<int, int>{{4, 18}, {6, 9}, {18, 2}});
}

TEST_CASE("abcde solving") {
    SUBCASE("the n = 15 parameterization is feasible and assembles verbatim") {
        const AbcdeSolution reference{2, 3, 4, 5, 7};  // a = (g1-1)/2, b = a+1, c = (g2-1)/2, d = c+1
        CHECK(abcde_feasible(15, 5, 9, reference));
        const TransitionGraph tg = construct_g1g2(15, 5, 9, reference);
        CHECK(tg.solid == fixture_n15().solid);
        // compare dotted as cyclic sequences anchored at 0
        std::vector<int> fd = fixture_n15().dotted;
        std::rotate(fd.begin(), std::find(fd.begin(), fd.end(), 0), fd.end());
        CHECK(tg.dotted == fd);
    }
    SUBCASE("deterministic scan satisfies the constraint set") {
        for (std::int64_t n : {15, 27, 35}) {
            auto [p, q] = choose_pq(n);
            auto [g1, g2] = solve_g1g2(n, p, q);
            const AbcdeSolution s = solve_abcde(n, g1, g2);
            CHECK(abcde_feasible(n, g1, g2, s));
            const AbcdeSolution again = solve_abcde(n, g1, g2);
            CHECK(s.b == again.b);
            CHECK(s.c == again.c);
        }
    }
}

TEST_CASE("g1/g2 construction") {
    SUBCASE("n = 15 matches the stored graph structurally") {
        const TransitionGraph tg = construct_g1g2(15, 5, 9);
        CHECK(tg_derived_genus(tg) == 49);
        CHECK(two_cycle_nets(tg) == std::multiset<std::int64_t>{1, 5, 9});
        CHECK(profile_multiset(tg) == profile_multiset(fixture_n15()));
    }
    SUBCASE("exactly three short cycles, everything else quadrilateral") {
        for (std::int64_t n : {27, 35, 39}) {
            auto [p, q] = choose_pq(n);
            auto [g1, g2] = solve_g1g2(n, p, q);
            const TransitionGraph tg = construct_g1g2(n, g1, g2);
            int twos = 0;
            for (const AlternatingCycle& c : alternating_cycles(tg)) {
                if (c.length() == 2)
                    ++twos;
                else {
                    CHECK(c.length() == 4);
                    CHECK(c.net.value == 0);
                }
            }
            CHECK(twos == 3);
            CHECK(two_cycle_nets(tg) == std::multiset<std::int64_t>{1, g1, g2});
        }
    }
    SUBCASE("derived genus across the composite residue-3 family") {
        CHECK(tg_derived_genus(construct_g1g2(27, solve_g1g2(27, 3, 27).first,
                                              solve_g1g2(27, 3, 27).second)) == 171);
        CHECK(tg_derived_genus(construct_g1g2(35, solve_g1g2(35, 5, 7).first,
                                              solve_g1g2(35, 5, 7).second)) == 292);
    }
}

TEST_CASE("residue 1 mod 4 with a single factor of 3") {
    SUBCASE("n = 21 stored graph") {
        const TransitionGraph tg = construct_1mod4_div3(21);
        CHECK(tg_derived_genus(tg) == 104);
        CHECK(tg.solid == fixture_n21().solid);
    }
    SUBCASE("surgery cases") {
        CHECK(tg_derived_genus(construct_1mod4_div3(33)) == 263);
        CHECK(tg_derived_genus(construct_1mod4_div3(57)) == 57 * 56 / 4 - 1);
    }
    SUBCASE("five short cycles with the expected net orders") {
        for (std::int64_t n : {21, 33, 57}) {
            const TransitionGraph tg = construct_1mod4_div3(n);
            std::multiset<std::int64_t> orders;
            for (const AlternatingCycle& c : alternating_cycles(tg)) {
                if (c.length() == 2)
                    orders.insert(zn_order(c.net));
                else {
                    CHECK(c.length() == 4);
                    CHECK(c.net.value == 0);
                }
            }
            CHECK(orders == std::multiset<std::int64_t>{3, 3, 3, n / 3, n});
        }
    }
    SUBCASE("domain") {
        CHECK_THROWS_AS(construct_1mod4_div3(17), std::invalid_argument);  // 3 does not divide
        CHECK_THROWS_AS(construct_1mod4_div3(45), std::invalid_argument);  // 9 divides
    }
}

TEST_CASE("optimal dispatcher hits the bound with a short-face Hamiltonian witness") {
    for (std::int64_t n = 3; n <= 64; ++n) {
        const VoltageGraph vg = construct_optimal_symmetric(n);
        CHECK(derived_genus_from_base(vg) == l_c(n).genus);
        CHECK(is_bijective_voltage(vg));
        bool short_face_full_order = false;
        for (const Face& f : trace_faces(vg.base))
            if (f.size() == 2 && zn_order(net_voltage(f, vg)) == n) short_face_full_order = true;
        CHECK(short_face_full_order);
    }
    CHECK(derived_genus_from_base(construct_optimal_symmetric(13)) == 39);
    CHECK(derived_genus_from_base(construct_optimal_symmetric(15)) == 49);
}

TEST_CASE("cycle partition and genus equality on random transition graphs") {
    std::mt19937 rng(4242);
    for (int n = 2; n <= 9; ++n) {
        for (int trial = 0; trial < 150; ++trial) {
            const TransitionGraph tg = random_tg(n, rng);
            std::int64_t len = 0, nets = 0;
            for (const AlternatingCycle& c : alternating_cycles(tg)) {
                len += c.length();
                nets += c.net.value;
            }
            CHECK(len == 2 * n);
            CHECK(nets % n == 0);
            CHECK(tg_derived_genus(tg) == euler_genus(derive_embedding(tg_to_voltage(tg))));
        }
    }
}
