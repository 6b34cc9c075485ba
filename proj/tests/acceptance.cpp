// Acceptance suite: runs each shipped guarantee at its stated tolerance and
// prints one pass/fail line per criterion.  Exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ringroad/bounds.hpp"
#include "ringroad/cut_system.hpp"
#include "ringroad/search.hpp"
#include "ringroad/serialize.hpp"
#include "ringroad/transition.hpp"

using namespace ringroad;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int id, const std::string& name, bool ok, const std::string& detail) {
    std::printf("criterion %d (%s): %s%s%s\n", id, name.c_str(), ok ? "PASS" : "FAIL",
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

// 1. Brute-force concordance: exhaustive minima with the Hamiltonian filter
//    equal the closed form for n = 3..8.  Exact.
void criterion1() {
    Timer timer;
    const std::map<int, std::int64_t> expected{{3, 1}, {4, 2}, {5, 5}, {6, 6}, {7, 10}, {8, 12}};
    bool ok = true;
    std::ostringstream detail;
    for (const auto& [n, want] : expected) {
        SearchOptions opts;
        opts.jobs = 1;
        const SearchResult r = enumerate_min_genus(n, opts);
        const bool good = r.min_genus == want && r.min_genus == l_c(n).genus &&
                          derived_genus_from_base(r.witness) == want &&
                          derived_has_hamiltonian_face(r.witness);
        if (!good) ok = false;
        detail << "n=" << n << ":" << r.min_genus << (good ? "" : "!") << " ";
    }
    detail << "[" << static_cast<int>(timer.seconds()) << "s]";
    report(1, "exhaustive search concordance n=3..8", ok, detail.str());
}

// 2. Construction optimality: for 3 <= n <= 200 the dispatcher emits a simple
//    K_{n,n} with a Hamiltonian face generated by a base 2-face and genus
//    exactly l_c(n).  Exact; budget 10 s.
void criterion2() {
    Timer timer;
    bool ok = true;
    std::string first_bad;
    for (std::int64_t n = 3; n <= 200; ++n) {
        const VoltageGraph vg = construct_optimal_symmetric(n);
        const EmbeddedGraph derived = derive_embedding(vg);
        const std::vector<Face> faces = trace_faces(derived);
        bool good = euler_genus(derived, faces) == l_c(n).genus;
        good = good && is_simple_complete_bipartite(derived.graph, static_cast<int>(n));
        bool short_face_ham = false;
        for (const Face& f : trace_faces(vg.base))
            if (f.size() == 2 && f.boundary.size() == 2 &&
                zn_order(net_voltage(f, vg)) == vg.modulus)
                short_face_ham = true;
        bool any_ham = false;
        for (const Face& f : faces)
            if (is_hamiltonian_face(derived, f)) any_ham = true;
        good = good && short_face_ham && any_ham;
        if (!good && first_bad.empty()) first_bad = "n=" + std::to_string(n);
        ok = ok && good;
    }
    const double secs = timer.seconds();
    std::ostringstream detail;
    detail << "spot n=15:" << derived_genus_from_base(construct_optimal_symmetric(15))
           << " n=21:" << derived_genus_from_base(construct_optimal_symmetric(21)) << " "
           << first_bad << "[" << secs << "s]";
    report(2, "construction optimality 3<=n<=200", ok && secs < 10.0, detail.str());
}

// 3. Spatial model: for 2 <= n <= 100, n != 4, the cut system validates, has
//    bijective voltage and branched-cover genus exactly l_c_star(n); n = 4 is
//    certified impossible below 4 and the stored witness has genus 4.
//    Exact; budget 60 s.
void criterion3() {
    Timer timer;
    bool ok = true;
    std::string first_bad;
    for (std::int64_t n = 2; n <= 100; ++n) {
        bool good = true;
        if (n == 4) {
            const N4Report r = verify_n4_exception();
            good = r.impossible_below_4 && r.witness.rh == 4 &&
                   cut_voltage_bijective(r.witness.cs);
        } else {
            const Construct3d c = construct_3d(n);
            try {
                validate_cut_system(c.cs);
            } catch (const std::exception&) {
                good = false;
            }
            good = good && cut_voltage_bijective(c.cs) && c.rh == l_c_star(n);
            const VoltageGraph vg{c.cs.base, c.cs.modulus, cut_voltage(c.cs)};
            good = good && is_simple_complete_bipartite(derive_graph(vg), static_cast<int>(n)) &&
                   derived_has_hamiltonian_face(vg);
        }
        if (!good && first_bad.empty()) first_bad = "n=" + std::to_string(n);
        ok = ok && good;
    }
    const double secs = timer.seconds();
    report(3, "3-dimensional construction optimality 2<=n<=100", ok && secs < 60.0,
           first_bad + "[" + std::to_string(secs).substr(0, 4) + "s]");
}

// 4. Stored fixtures match the generators' structural claims: identical
//    alternating-cycle profiles, and the 6-point block with its permutation
//    and genus.  Exact profile match.
void criterion4() {
    bool ok = true;
    std::ostringstream detail;

    const TransitionGraph f15 = fixture_n15();
    const TransitionGraph g15 = construct_g1g2(15, 5, 9);
    ok = ok && tg_derived_genus(f15) == 49;
    ok = ok && cycle_profile(f15) == cycle_profile(g15);
    detail << "n=15 genus " << tg_derived_genus(f15) << "; ";

    const TransitionGraph f21 = fixture_n21();
    ok = ok && tg_derived_genus(f21) == 104;
    std::multiset<std::pair<int, std::int64_t>> profile21;
    for (const auto& p : cycle_profile(f21)) profile21.insert(p);
    // five short faces of orders {21, 3, 3, 3, 7}, eight zero-net 4-cycles
    std::multiset<std::pair<int, std::int64_t>> want21{
        {2, 21}, {2, 3}, {2, 3}, {2, 3}, {2, 7},
        {4, 1},  {4, 1}, {4, 1}, {4, 1}, {4, 1}, {4, 1}, {4, 1}, {4, 1}};
    ok = ok && profile21 == want21;
    detail << "n=21 genus " << tg_derived_genus(f21) << "; ";

    const RingBlock b6 = ring_block(6);
    ok = ok && b6.pi == std::vector<int>{1, 4, 3, 2, 5} && b6.genus == 1;
    detail << "block pi=(1,4,3,2,5) genus " << b6.genus;
    report(4, "stored fixtures verify against the generators", ok, detail.str());
}

// 5. Property suites on 1000 random instances per n <= 9: face-trace closure,
//    even parity, Euler integrality, the two conservation identities, the
//    alternating-cycle genus equality and the aggregate excess identity.
//    Zero violations.
void criterion5() {
    Timer timer;
    std::mt19937 rng(1234321);
    std::uint64_t violations = 0, checked = 0;
    for (int n = 2; n <= 9; ++n) {
        std::vector<int> base(n);
        std::iota(base.begin(), base.end(), 0);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<int> w = base, b = base;
            std::shuffle(w.begin(), w.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            // random bijective voltages over the random embedded dipole
            VoltageGraph vg;
            vg.base = dipole_embedding(w, b);
            vg.modulus = n;
            vg.alpha.assign(base.begin(), base.end());
            std::shuffle(vg.alpha.begin(), vg.alpha.end(), rng);
            ++checked;

            const std::vector<Face> faces = trace_faces(vg.base);
            std::int64_t sizes = 0, nets = 0, excess = 0;
            bool good = true;
            for (const Face& f : faces) {
                sizes += f.size();
                good = good && f.size() % 2 == 0;
                nets += net_voltage(f, vg).value;
                excess += face_excess(f.size(), net_voltage(f, vg));
            }
            good = good && sizes == 2 * n && nets % n == 0;

            const EmbeddedGraph derived = derive_embedding(vg);
            const std::vector<Face> dfaces = trace_faces(derived);
            std::int64_t dsizes = 0;
            for (const Face& f : dfaces) dsizes += f.size();
            good = good && dsizes == 2 * static_cast<std::int64_t>(n) * n;
            const std::int64_t g = euler_genus(derived, dfaces);
            good = good && derived_genus_from_base(vg) == g;
            good = good &&
                   excess == 8 * g - 2 * static_cast<std::int64_t>(n) * n + 8 * n - 8;

            // transition-graph route: same genus from the alternating cycles
            TransitionGraph tg;
            tg.n = n;
            tg.solid = b;
            tg.dotted = w;
            good = good &&
                   tg_derived_genus(tg) == euler_genus(derive_embedding(tg_to_voltage(tg)));
            if (!good) ++violations;
        }
    }
    std::ostringstream detail;
    detail << checked << " instances, " << violations << " violations ["
           << static_cast<int>(timer.seconds()) << "s]";
    report(5, "randomized property suites", violations == 0, detail.str());
}

// 6. Bounds table: 2 <= n <= 1000 with L_C <= L_C* everywhere plus the
//    closed-form anchor values.  Budget 1 s.
void criterion6() {
    Timer timer;
    bool ok = true;
    for (std::int64_t n = 2; n <= 1000; ++n) {
        const BoundsReport r = bounds_report(n);
        ok = ok && r.l_c <= r.l_c_star;
        ok = ok && r.l_c_star_tilde <= r.l_c_star;
    }
    struct Anchor {
        std::int64_t n, lc;
    };
    for (const Anchor& a : {Anchor{6, 6}, {15, 49}, {27, 171}, {21, 104}, {7, 10}, {3, 1},
                            {5, 5}, {9, 18}, {13, 39}, {33, 263}, {35, 292}, {57, 797}})
        ok = ok && l_c(a.n).genus == a.lc;
    ok = ok && l_c_star(6) == 6 && l_c_star(7) == 13 && l_c_star(8) == 15 && l_c_star(3) == 2 &&
         l_c_star(4) == 3 && l_c_star_attainable(4) == 4;
    ok = ok && l_c_star_tilde(4) == 1 && l_c_star_tilde(5) == 5 && l_c_star_tilde(8) == 9;
    const double secs = timer.seconds();
    report(6, "bounds table 2<=n<=1000", ok && secs < 1.0,
           "[" + std::to_string(secs).substr(0, 5) + "s]");
}

// CLI-facing invariant: construct -> serialize -> parse -> verify round trip.
void round_trips() {
    bool ok = true;
    for (std::int64_t n = 3; n <= 100; ++n) {
        const nlohmann::json j = construction_file(construct_optimal_tg(n));
        const nlohmann::json reparsed = nlohmann::json::parse(j.dump());
        if (!verify_file(reparsed).ok) ok = false;
    }
    for (std::int64_t n : {2, 3, 4, 7, 8, 9, 10, 25, 50}) {
        const nlohmann::json j = construction3d_file(construct_3d(n));
        if (!verify_file(nlohmann::json::parse(j.dump())).ok) ok = false;
    }
    report(7, "construct/serialize/verify round trips", ok, "");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    round_trips();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
