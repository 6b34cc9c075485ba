#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ringroad/voltage.hpp"
#include "ringroad/zmod.hpp"

namespace ringroad {

/// Two superimposed directed Hamiltonian cycles on Z_n: a compact encoding of
/// an embedded voltage dipole with alpha(e_i) = i.  solid/dotted hold the
/// cycles as vertex sequences.
struct TransitionGraph {
    std::int64_t n = 0;
    std::vector<int> solid;
    std::vector<int> dotted;
};

/// Closed walk alternating solid/dotted edges, starting with a solid edge.
/// A vertex may appear twice (once entered by a solid edge, once by a dotted
/// one).  net = -v_1 + v_2 - v_3 ... + v_k (mod n).
struct AlternatingCycle {
    std::vector<int> vertices;
    Zn net;

    int length() const { return static_cast<int>(vertices.size()); }
};

void validate_transition_graph(const TransitionGraph& tg);

/// Decomposes all 2n edges into alternating cycles.  Each cycle starts at its
/// smallest solid-tail vertex; cycles are listed by that start ascending.
std::vector<AlternatingCycle> alternating_cycles(const TransitionGraph& tg);

/// (length, order of net) pairs, sorted.  Two transition graphs with equal
/// profiles yield derived embeddings with identical face-size statistics.
std::vector<std::pair<int, std::int64_t>> cycle_profile(const TransitionGraph& tg);

/// Embedded voltage dipole for the transition graph: alpha(e_i) = i, the
/// solid cycle gives the cyclic edge order at the black vertex and the dotted
/// cycle the order at the white vertex.
VoltageGraph tg_to_voltage(const TransitionGraph& tg);

/// Genus of the derived embedding, computed from the alternating cycles.
std::int64_t tg_derived_genus(const TransitionGraph& tg);

/// Even n: derived K_{n,n} of genus n(n-2)/4 with two Hamiltonian faces.
TransitionGraph construct_even(std::int64_t n);

/// Odd n: derived K_{n,n} of genus floor(n(n-1)/4) with a Hamiltonian face
/// (three of them when n = 3 mod 4, two when n = 1 mod 4).
TransitionGraph construct_odd(std::int64_t n);

struct AbcdeSolution {
    std::int64_t a = 0, b = 0, c = 0, d = 0, e = 0;
};

/// True iff a,b,c,d,e and their negations are ten distinct residues avoiding
/// {0, 1, -1}, with a = g1-b, d = g2-c, e = b+c.
bool abcde_feasible(std::int64_t n, std::int64_t g1, std::int64_t g2, const AbcdeSolution& s);

/// Deterministic solution of a = g1-b, d = g2-c, e = b+c under the
/// distinctness restriction: lexicographically smallest feasible (b, c).
/// Throws std::runtime_error when no (b, c) works.
AbcdeSolution solve_abcde(std::int64_t n, std::int64_t g1, std::int64_t g2);

/// Transition graph with exactly three alternating 2-cycles of net
/// transitions 1, g1, g2 and every other cycle of length 4 and net 0.
/// Requires g1 + g2 + 1 = 0 (mod n), g1, g2 != 0, n odd.
TransitionGraph construct_g1g2(std::int64_t n, std::int64_t g1, std::int64_t g2);
TransitionGraph construct_g1g2(std::int64_t n, std::int64_t g1, std::int64_t g2,
                               const AbcdeSolution& s);

/// n = 1 (mod 4) with 3 | n, 9 does not divide n: the g1/g2 construction with
/// an extra dotted-edge swap that trades one 4-cycle for 2-cycles of net
/// n/3 and -n/3.  Derived genus n(n-1)/4 - 1.
TransitionGraph construct_1mod4_div3(std::int64_t n);

/// Reference data for n = 15 and n = 21 (stored verbatim, reduced mod n).
TransitionGraph fixture_n15();
TransitionGraph fixture_n21();

/// Dispatcher over all residue classes: derived embedding is a simple
/// K_{n,n} of genus l_c(n) with a Hamiltonian face generated by a base
/// 2-face.  Total for n >= 3.
TransitionGraph construct_optimal_tg(std::int64_t n);
VoltageGraph construct_optimal_symmetric(std::int64_t n);

}  // namespace ringroad
