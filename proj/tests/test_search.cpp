#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <numeric>
#include <random>

#include "ringroad/bounds.hpp"
#include "ringroad/search.hpp"

using namespace ringroad;

TEST_CASE("small exhaustive minima match the closed form") {
    for (int n : {3, 4, 5, 6}) {
        SearchResult r = enumerate_min_genus(n);
        CHECK(r.min_genus == l_c(n).genus);
        // witness checks out through the generic machinery
        CHECK(derived_genus_from_base(r.witness) == r.min_genus);
        CHECK(derived_has_hamiltonian_face(r.witness));
        CHECK(is_bijective_voltage(r.witness));
    }
}

TEST_CASE("reduction on and off agree") {
    for (int n : {3, 4, 5, 6}) {
        SearchOptions off;
        off.symmetry_reduction = false;
        const SearchResult with = enumerate_min_genus(n);
        const SearchResult without = enumerate_min_genus(n, off);
        CHECK(with.min_genus == without.min_genus);
        CHECK(with.counted <= without.counted);
    }
    SearchOptions off;
    off.symmetry_reduction = false;
    CHECK(enumerate_min_genus(5, off).counted == 576);
    CHECK(enumerate_min_genus(6, off).counted == 14400);
}

TEST_CASE("dropping the Hamiltonian filter can only lower the minimum") {
    for (int n : {4, 5, 6}) {
        SearchOptions free_opts;
        free_opts.require_ham = false;
        CHECK(enumerate_min_genus(n, free_opts).min_genus <= enumerate_min_genus(n).min_genus);
    }
}

TEST_CASE("domain limits") {
    CHECK_THROWS_AS(enumerate_min_genus(2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_min_genus(10), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_min_genus(9), std::invalid_argument);  // needs allow_big
}

TEST_CASE("canonical reduction") {
    const int n = 5;
    RotationPair p{{0, 2, 4, 1, 3}, {0, 3, 1, 4, 2}};
    const RotationPair c = canonical_reduce(p, n);
    SUBCASE("idempotent") { CHECK(canonical_reduce(c, n) == c); }
    SUBCASE("doubling the labels lands in the same class") {
        auto doubled = [&](const std::vector<int>& s) {
            std::vector<int> out;
            for (int x : s) out.push_back(2 * x % n);
            std::rotate(out.begin(), std::find(out.begin(), out.end(), 0), out.end());
            return out;
        };
        RotationPair q{doubled(p.white), doubled(p.black)};
        CHECK(canonical_reduce(q, n) == c);
    }
    SUBCASE("class members evaluate identically") {
        CHECK(evaluate_pair(p, n).genus == evaluate_pair(c, n).genus);
        CHECK(evaluate_pair(p, n).has_hamiltonian == evaluate_pair(c, n).has_hamiltonian);
    }
}

TEST_CASE("pair evaluation agrees with the generic machinery") {
    std::mt19937 rng(99);
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> base(n);
        std::iota(base.begin(), base.end(), 0);
        for (int trial = 0; trial < 100; ++trial) {
            RotationPair p{base, base};
            std::shuffle(p.white.begin() + 1, p.white.end(), rng);
            std::shuffle(p.black.begin() + 1, p.black.end(), rng);
            const PairEvaluation ev = evaluate_pair(p, n);
            const VoltageGraph vg = pair_to_voltage(p, n);
            CHECK(ev.genus == derived_genus_from_base(vg));
            CHECK(ev.has_hamiltonian == derived_has_hamiltonian_face(vg));
        }
    }
}

TEST_CASE("histograms over canonical classes") {
    const auto h3 = histogram(3, false);
    std::uint64_t mass = 0;
    for (const auto& [g, c] : h3) mass += c;
    CHECK(mass == enumerate_min_genus(3).counted);

    const auto h4 = histogram(4, true);
    REQUIRE(!h4.empty());
    CHECK(h4.begin()->first == 2);

    const auto h5 = histogram(5, true);
    CHECK(h5.begin()->first == 5);
}

TEST_CASE("determinism and checkpointing") {
    const SearchResult a = enumerate_min_genus(5);
    const SearchResult b = enumerate_min_genus(5);
    CHECK(a.witness.base.rotations.order[0] == b.witness.base.rotations.order[0]);
    CHECK(a.witness.base.rotations.order[1] == b.witness.base.rotations.order[1]);

    const std::string path = "search5.checkpoint.json";
    std::filesystem::remove(path);
    SearchOptions opts;
    opts.checkpoint_path = path;
    const SearchResult first = enumerate_min_genus(5, opts);
    CHECK(std::filesystem::exists(path));
    const SearchResult resumed = enumerate_min_genus(5, opts);  // resumes a finished run
    CHECK(resumed.min_genus == first.min_genus);
    CHECK(resumed.counted == first.counted);
    std::filesystem::remove(path);
}

TEST_CASE("two worker threads give the same answer") {
    SearchOptions opts;
    opts.jobs = 2;
    const SearchResult threaded = enumerate_min_genus(6, opts);
    const SearchResult serial = enumerate_min_genus(6);
    CHECK(threaded.min_genus == serial.min_genus);
    CHECK(threaded.counted == serial.counted);
    CHECK(threaded.witness.base.rotations.order[1] == serial.witness.base.rotations.order[1]);
}
