#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ringroad/embedding.hpp"
#include "ringroad/zmod.hpp"

namespace ringroad {

/// Voltage assignment over Z_n on a base embedded dipole.  alpha is indexed
/// by edge id.  The machinery only needs a finite cyclic group, and Z_n is
/// the only group implemented.
struct VoltageGraph {
    EmbeddedGraph base;
    std::int64_t modulus = 1;
    std::vector<std::int64_t> alpha;
};

void validate_voltage_graph(const VoltageGraph& vg);

/// True iff alpha is a bijection onto Z_n (requires m = n edges).
bool is_bijective_voltage(const VoltageGraph& vg);

/// Derived graph: white fibre w_a has id a, black fibre b_a has id n + a.
/// Base edge e with voltage g lifts to edges (w_a, b_{a+g}) for each a;
/// the lift of base edge i at fibre a has id i*n + a.
Multigraph derive_graph(const VoltageGraph& vg);

/// Derived embedding: each fibre vertex repeats the base cyclic order of
/// edge labels, taking at b_c the lift of e incident to b_c (fibre c - alpha(e)).
EmbeddedGraph derive_embedding(const VoltageGraph& vg);

/// Signed sum of voltages along the face's boundary darts.
Zn net_voltage(const Face& face, const VoltageGraph& vg);

/// A base face of size k and net voltage g generates n/|g| derived faces of
/// size k|g|.  Returns (count, size).
std::pair<std::int64_t, std::int64_t> derived_face_profile(const Face& face,
                                                           const VoltageGraph& vg);

/// Sum of n/|g_i| over base faces; equals the derived embedding's face count.
std::int64_t total_derived_faces(const VoltageGraph& vg);

/// Genus of the derived embedding computed from base face data alone:
/// (2 - 2n + n*m - total_derived_faces) / 2 for a base dipole D_m.
std::int64_t derived_genus_from_base(const VoltageGraph& vg);

/// Whether some base face generates Hamiltonian faces in the derived
/// embedding, i.e. has size*|net| = 2n and its fibre walk closes into a
/// cycle through every derived vertex exactly once.
bool derived_has_hamiltonian_face(const VoltageGraph& vg);

/// Same test for a single base face.
bool face_generates_hamiltonian(const Face& face, const VoltageGraph& vg);

}  // namespace ringroad
