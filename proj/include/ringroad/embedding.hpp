#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ringroad {

/// Directed 2-coloured multigraph.  Every edge runs white -> black.
/// White vertices have ids 0..white_count-1, black vertices
/// white_count..white_count+black_count-1.  Edge ids are dense 0..E-1.
struct MultiEdge {
    int id = 0;
    int tail = 0;  // white vertex id
    int head = 0;  // black vertex id
};

struct Multigraph {
    int white_count = 0;
    int black_count = 0;
    std::vector<MultiEdge> edges;

    int vertex_count() const { return white_count + black_count; }
    bool is_white(int v) const { return v < white_count; }
};

/// One end of an edge: the tail (white) side or the head (black) side.
struct EdgeEnd {
    int edge = 0;
    bool at_head = false;

    bool operator==(const EdgeEnd&) const = default;
};

/// Cyclic order of incident edge-ends around each vertex.  Stored with an
/// arbitrary distinguished start; comparisons are up to cyclic shift.
struct RotationSystem {
    std::vector<std::vector<EdgeEnd>> order;  // indexed by vertex id
};

struct EmbeddedGraph {
    Multigraph graph;
    RotationSystem rotations;
};

/// A dart is a directed traversal of an edge: dir = +1 tail->head, -1 head->tail.
struct Dart {
    int edge = 0;
    int dir = +1;

    bool operator==(const Dart&) const = default;
};

/// Face of a 2-cell embedding, as the cyclic sequence of darts of its
/// boundary walk.
struct Face {
    std::vector<Dart> boundary;

    int size() const { return static_cast<int>(boundary.size()); }
};

/// Throws std::invalid_argument when the structure is malformed
/// (non-dense ids, edges not white->black, disconnected graph).
void validate_multigraph(const Multigraph& g);

/// Throws std::invalid_argument when some vertex rotation does not list
/// exactly the incident edge-ends, each once.
void validate_embedding(const EmbeddedGraph& emb);

/// Face tracing: along a dart arriving at a vertex, the next boundary dart
/// leaves through the successor of the arrival end in that vertex's rotation.
/// Every dart lies on exactly one face; the sum of face sizes is 2E.
std::vector<Face> trace_faces(const EmbeddedGraph& emb);

/// g = (2 - V + E - F) / 2.  Throws std::logic_error if the Euler defect is
/// odd (that would indicate a face-tracing bug, not bad input).
std::int64_t euler_genus(const EmbeddedGraph& emb);
std::int64_t euler_genus(const EmbeddedGraph& emb, const std::vector<Face>& faces);

/// The vertex each boundary dart leaves from, in walk order.
std::vector<int> face_corner_vertices(const EmbeddedGraph& emb, const Face& face);

/// Whether the face boundary is a cycle through every vertex exactly once.
bool is_hamiltonian_face(const EmbeddedGraph& emb, const Face& face);

/// Faces whose boundary walk visits every vertex exactly once.
std::vector<Face> hamiltonian_faces(const EmbeddedGraph& emb);

/// True iff g is K_{n,n}: n white, n black, exactly one edge per pair.
bool is_simple_complete_bipartite(const Multigraph& g, int n);

/// Dipole D_m: one white vertex (id 0), one black (id 1), m parallel edges.
Multigraph make_dipole(int m);

/// Embedded dipole from the cyclic edge orders at the white and black vertex.
EmbeddedGraph dipole_embedding(const std::vector<int>& white_order,
                               const std::vector<int>& black_order);

}  // namespace ringroad
