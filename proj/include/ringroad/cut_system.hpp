#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ringroad/embedding.hpp"
#include "ringroad/voltage.hpp"

namespace ringroad {

/// A cut curve on the base surface, modelled by its crossing signature only:
/// arcs end at two (not necessarily distinct) faces of the base embedding,
/// loops have no endpoints.
struct CutCurve {
    enum class Kind { Arc, Loop };
    Kind kind = Kind::Arc;
    int endpoint_faces[2] = {-1, -1};  // face indices into trace_faces(base); arcs only
};

/// Crossing-signature model of a family of pairwise disjoint cut curves on an
/// embedded dipole: crossings[c][e] is the net signed crossing count of edge
/// e with curve c.
struct CutSystem {
    EmbeddedGraph base;
    std::int64_t modulus = 1;
    std::vector<CutCurve> curves;
    std::vector<std::vector<std::int64_t>> crossings;  // [curve][edge]
};

int arc_count(const CutSystem& cs);

/// Consistency rules: for each base 2-face with edges (x, y) and curve c,
/// the crossing difference |cr[c][x] - cr[c][y]| must be 0 when c has no
/// endpoint in the face and 1 when it has exactly one.  Throws
/// std::runtime_error naming the violated rule.  Only these rules are
/// checkable for user-supplied systems; generators emit exact crossing data.
void validate_cut_system(const CutSystem& cs);

/// Riemann-Hurwitz genus of the symmetric surface: n*g + (n-1)(t-1).
/// Throws std::domain_error when the result would be negative (t = 0, g = 0).
std::int64_t rh_genus(std::int64_t base_genus, std::int64_t n, std::int64_t arcs);

/// Voltage induced by the cuts: alpha(e) = sum_c crossings[c][e] mod n.
/// Validates first.
std::vector<std::int64_t> cut_voltage(const CutSystem& cs);

bool cut_voltage_bijective(const CutSystem& cs);

/// Counting obstruction of the lower-bound argument evaluated on a concrete
/// system: a genus-g dipole embedding has at least n - 4g 2-faces, and each
/// 2-face must contain a cut-arc endpoint when the voltage is bijective.
struct ObstructionReport {
    std::int64_t two_faces = 0;        // k, counted from the base embedding
    std::int64_t k_lower = 0;          // n - 4g
    std::int64_t endpoint_budget = 0;  // 2t
    bool k_bound_holds = false;        // k >= n - 4g
    bool budget_sufficient = false;    // 2t >= k
    bool obstruction_certified = false;
    std::string note;
};

ObstructionReport validate_lower_bound_obstruction(const CutSystem& cs);

/// Pure arithmetic form: true when 2t < n - 4g, which certifies that no
/// genus-g, t-arc system on D_n has bijective voltage.
bool counting_obstructs(std::int64_t n, std::int64_t g, std::int64_t t);

/// Ring-road block data: permutations placing the lane groups on the block
/// boundary and the per-point rotations, plus the block genus.
struct RingBlock {
    int n = 0;
    std::vector<int> pi;        // pi[i-1] = value at boundary position i
    std::vector<int> pi_prime;  // pi - 1 elementwise
    std::map<std::string, std::vector<std::string>> rotations;
    std::int64_t genus = 0;
};

/// n >= 5, n mod 4 in {1, 2}.
RingBlock ring_block(std::int64_t n);

/// Closed quotient embedding of D_n assembled from the ring block, with the
/// single cut arc crossing edge e_k exactly k times.  n = 2 (mod 4), n >= 6.
CutSystem base_m1(std::int64_t n);

struct Construct3d {
    CutSystem cs;
    std::int64_t base_genus = 0;
    std::int64_t arcs = 0;
    std::int64_t rh = 0;
    bool n4_exception = false;
};

/// Cut system whose symmetric surface attains l_c_star(n) (n != 4), with
/// bijective voltage and a Hamiltonian derived face.  n = 4 returns the
/// genus-4 witness with the exception flag set.
Construct3d construct_3d(std::int64_t n);

/// Finite verification of the n = 4 exception: no planar D_4 with two cut
/// arcs admits a bijective voltage mod 4, and a stored genus-4 witness
/// verifies.  Impossibility below genus 4 follows with the counting
/// obstruction and Riemann-Hurwitz integrality, which the report also checks.
struct N4Report {
    bool impossible_below_4 = false;
    std::int64_t planar_pairs = 0;       // rotation pairs of D_4 with genus 0
    std::int64_t rotation_pairs = 0;     // all rotation pairs examined
    std::int64_t patterns_checked = 0;   // crossing patterns enumerated
    std::vector<std::string> case_notes; // one line per attempted genus 0..3
    Construct3d witness;
};

N4Report verify_n4_exception();

}  // namespace ringroad
