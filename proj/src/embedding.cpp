#include "ringroad/embedding.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace ringroad {

void validate_multigraph(const Multigraph& g) {
    if (g.white_count < 1 || g.black_count < 1)
        throw std::invalid_argument("multigraph: needs at least one vertex of each colour");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const MultiEdge& e = g.edges[i];
        if (e.id != static_cast<int>(i))
            throw std::invalid_argument("multigraph: edge ids must be dense 0..E-1");
        if (e.tail < 0 || e.tail >= g.white_count)
            throw std::invalid_argument("multigraph: edge tail is not a white vertex");
        if (e.head < g.white_count || e.head >= g.vertex_count())
            throw std::invalid_argument("multigraph: edge head is not a black vertex");
    }
    if (g.edges.empty()) throw std::invalid_argument("multigraph: no edges");
    // connectivity
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const MultiEdge& e : g.edges) {
        adj[e.tail].push_back(e.head);
        adj[e.head].push_back(e.tail);
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw std::invalid_argument("multigraph: not connected");
}

void validate_embedding(const EmbeddedGraph& emb) {
    validate_multigraph(emb.graph);
    const Multigraph& g = emb.graph;
    if (static_cast<int>(emb.rotations.order.size()) != g.vertex_count())
        throw std::invalid_argument("embedding: rotation missing for some vertex");
    std::vector<std::multiset<std::pair<int, bool>>> incident(g.vertex_count());
    for (const MultiEdge& e : g.edges) {
        incident[e.tail].insert({e.id, false});
        incident[e.head].insert({e.id, true});
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::multiset<std::pair<int, bool>> listed;
        for (const EdgeEnd& end : emb.rotations.order[v]) listed.insert({end.edge, end.at_head});
        if (listed != incident[v])
            throw std::invalid_argument("embedding: rotation at vertex " + std::to_string(v) +
                                        " does not list its incident edge-ends exactly once");
    }
}

namespace {

// Darts are indexed 2*edge for tail->head, 2*edge+1 for head->tail.
// next_dart[d] continues the boundary walk of the face containing d.
std::vector<int> next_dart_table(const EmbeddedGraph& emb) {
    const Multigraph& g = emb.graph;
    std::vector<int> next(2 * g.edges.size(), -1);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = emb.rotations.order[v];
        const int deg = static_cast<int>(rot.size());
        for (int i = 0; i < deg; ++i) {
            const EdgeEnd& arrive = rot[i];
            const EdgeEnd& leave = rot[(i + 1) % deg];
            // Dart arriving at v through `arrive`:
            int in = arrive.at_head ? 2 * arrive.edge : 2 * arrive.edge + 1;
            // Dart leaving v through `leave`:
            int out = leave.at_head ? 2 * leave.edge + 1 : 2 * leave.edge;
            next[in] = out;
        }
    }
    return next;
}

}  // namespace

std::vector<Face> trace_faces(const EmbeddedGraph& emb) {
    validate_embedding(emb);
    std::vector<int> next = next_dart_table(emb);
    std::vector<char> used(next.size(), 0);
    std::vector<Face> faces;
    for (std::size_t start = 0; start < next.size(); ++start) {
        if (used[start]) continue;
        Face f;
        std::size_t d = start;
        do {
            used[d] = 1;
            f.boundary.push_back(Dart{static_cast<int>(d / 2), d % 2 == 0 ? +1 : -1});
            d = static_cast<std::size_t>(next[d]);
        } while (d != start);
        faces.push_back(std::move(f));
    }
    return faces;
}

std::int64_t euler_genus(const EmbeddedGraph& emb, const std::vector<Face>& faces) {
    const std::int64_t v = emb.graph.vertex_count();
    const std::int64_t e = static_cast<std::int64_t>(emb.graph.edges.size());
    const std::int64_t f = static_cast<std::int64_t>(faces.size());
    const std::int64_t defect = 2 - v + e - f;
    if (defect % 2 != 0) throw std::logic_error("euler_genus: odd Euler defect");
    if (defect < 0) throw std::logic_error("euler_genus: negative genus");
    return defect / 2;
}

std::int64_t euler_genus(const EmbeddedGraph& emb) {
    return euler_genus(emb, trace_faces(emb));
}

std::vector<int> face_corner_vertices(const EmbeddedGraph& emb, const Face& face) {
    std::vector<int> verts;
    verts.reserve(face.boundary.size());
    for (const Dart& d : face.boundary) {
        const MultiEdge& e = emb.graph.edges[d.edge];
        verts.push_back(d.dir > 0 ? e.tail : e.head);
    }
    return verts;
}

bool is_hamiltonian_face(const EmbeddedGraph& emb, const Face& face) {
    if (face.size() != emb.graph.vertex_count()) return false;
    std::vector<int> verts = face_corner_vertices(emb, face);
    std::sort(verts.begin(), verts.end());
    return std::adjacent_find(verts.begin(), verts.end()) == verts.end();
}

std::vector<Face> hamiltonian_faces(const EmbeddedGraph& emb) {
    std::vector<Face> result;
    for (Face& f : trace_faces(emb))
        if (is_hamiltonian_face(emb, f)) result.push_back(std::move(f));
    return result;
}

bool is_simple_complete_bipartite(const Multigraph& g, int n) {
    if (g.white_count != n || g.black_count != n) return false;
    if (static_cast<std::int64_t>(g.edges.size()) != static_cast<std::int64_t>(n) * n) return false;
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    for (const MultiEdge& e : g.edges) {
        std::size_t slot = static_cast<std::size_t>(e.tail) * n + (e.head - n);
        if (seen[slot]) return false;
        seen[slot] = 1;
    }
    return true;
}

Multigraph make_dipole(int m) {
    if (m < 1) throw std::invalid_argument("make_dipole: need at least one edge");
    Multigraph g;
    g.white_count = 1;
    g.black_count = 1;
    for (int i = 0; i < m; ++i) g.edges.push_back(MultiEdge{i, 0, 1});
    return g;
}

EmbeddedGraph dipole_embedding(const std::vector<int>& white_order,
                               const std::vector<int>& black_order) {
    if (white_order.size() != black_order.size())
        throw std::invalid_argument("dipole_embedding: order lengths differ");
    EmbeddedGraph emb;
    emb.graph = make_dipole(static_cast<int>(white_order.size()));
    emb.rotations.order.resize(2);
    for (int e : white_order) emb.rotations.order[0].push_back(EdgeEnd{e, false});
    for (int e : black_order) emb.rotations.order[1].push_back(EdgeEnd{e, true});
    return emb;
}

}  // namespace ringroad
